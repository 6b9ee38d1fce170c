// Copyright 2026 The quditconv developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "quditconv/encoder.hpp"
#include "quditconv/errors.hpp"
#include "test_helpers.hpp"

using qconv::CodeParams;
using qconv::FpMatrix;
using qconv::FpVec;
using qconv::PauliOp;
using qconv::PrimeField;
using qconv::SymplecticEncoder;

namespace {

std::vector<std::vector<int>> to_ints(const FpMatrix& a) {
    std::vector<std::vector<int>> out(a.rows(), std::vector<int>(a.cols()));
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) {
            out[i][j] = a.at(i, j);
        }
    }
    return out;
}

// E^T Omega E == Omega recomputed with plain ints.
bool symplectic_by_oracle(const FpMatrix& e) {
    int p = static_cast<int>(e.field().modulus());
    size_t n = e.rows() / 2;
    std::vector<std::vector<int>> omega(2 * n, std::vector<int>(2 * n, 0));
    for (size_t i = 0; i < n; ++i) {
        omega[i][n + i] = p - 1;
        omega[n + i][i] = 1;
    }
    auto et = to_ints(e);
    std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
    for (size_t i = 0; i < 2 * n; ++i) {
        for (size_t j = 0; j < 2 * n; ++j) {
            t[i][j] = et[j][i];
        }
    }
    auto prod = testoracle::mat_mul(testoracle::mat_mul(t, omega, p), et, p);
    return prod == omega;
}

PauliOp random_pauli(uint32_t p, size_t n, std::mt19937_64& rng) {
    PauliOp out = PauliOp::identity(p, n);
    for (size_t i = 0; i < n; ++i) {
        out.x[i] = static_cast<uint8_t>(rng() % p);
        out.z[i] = static_cast<uint8_t>(rng() % p);
    }
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("encoder");

TEST_CASE("code params validation and accessors") {
    CodeParams cp(3, 2, 2, 1);
    CHECK(cp.qudits() == 4);
    CHECK(cp.dim() == 8);
    CHECK(cp.ancilla_count() == 1);
    CHECK_FALSE(cp.is_degenerate());
    CHECK(CodeParams(2, 1, 1, 1).is_degenerate());

    CHECK_THROWS_AS(CodeParams(2, 0, 1, 1), qconv::ValidationError);
    CHECK_THROWS_AS(CodeParams(2, 1, 0, 0), qconv::ValidationError);
    CHECK_THROWS_AS(CodeParams(2, 1, 1, 2), qconv::ValidationError);
    CHECK_THROWS_AS(CodeParams(4, 1, 1, 1), qconv::NotPrimeError);
}

TEST_CASE("symplectic form layout") {
    PrimeField f3(3);
    CHECK(qconv::symplectic_form(f3, 1) == FpMatrix::from_rows(f3, {{0, 2}, {1, 0}}));
    PrimeField f2(2);
    CHECK(qconv::symplectic_form(f2, 2) ==
          FpMatrix::from_rows(f2, {{0, 0, 1, 0},
                                   {0, 0, 0, 1},
                                   {1, 0, 0, 0},
                                   {0, 1, 0, 0}}));
}

TEST_CASE("symplectic product equals the commutation exponent") {
    std::mt19937_64 rng(41);
    for (uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int t = 0; t < 40; ++t) {
            size_t n = 1 + rng() % 3;
            PauliOp a = random_pauli(p, n, rng);
            PauliOp b = random_pauli(p, n, rng);
            FpVec u = qconv::pauli_to_vec(a);
            FpVec v = qconv::pauli_to_vec(b);
            uint8_t direct = qconv::symplectic_product(f, u, v);
            CHECK(direct == qconv::commutation_exponent(a, b));
            // u^T Omega v computed through the explicit form matrix.
            FpMatrix omega = qconv::symplectic_form(f, n);
            FpVec ov = omega.mul_vec(v);
            uint8_t through_form = 0;
            for (size_t i = 0; i < u.size(); ++i) {
                through_form = f.add(through_form, f.mul(u[i], ov[i]));
            }
            CHECK(direct == through_form);
        }
    }
    PrimeField f3(3);
    CHECK_THROWS_AS(qconv::symplectic_product(f3, FpVec{1}, FpVec{1}),
                    qconv::DimensionMismatchError);
}

TEST_CASE("pauli packing round-trip") {
    PauliOp a(5, FpVec{1, 0, 3}, FpVec{2, 4, 0});
    FpVec v = qconv::pauli_to_vec(a);
    CHECK(v == FpVec{1, 0, 3, 2, 4, 0});
    CHECK(qconv::vec_to_pauli(v, 5) == a);
    CHECK_THROWS_AS(qconv::vec_to_pauli(FpVec{1, 2, 3}, 5),
                    qconv::DimensionMismatchError);
}

TEST_CASE("encoder constructor checks shape and modulus") {
    PrimeField f2(2);
    CHECK_THROWS_AS(SymplecticEncoder(CodeParams(2, 1, 1, 1), FpMatrix(f2, 2, 2)),
                    qconv::DimensionMismatchError);
    CHECK_THROWS_AS(SymplecticEncoder(CodeParams(3, 1, 1, 1),
                                      FpMatrix::identity(f2, 4)),
                    qconv::ValidationError);
    CHECK(SymplecticEncoder::identity(CodeParams(3, 1, 2, 1)).validate());
}

TEST_CASE("validate agrees with the recomputed form condition") {
    SymplecticEncoder base = testhelp::accumulator_p2();
    REQUIRE(base.validate());
    // Flip every entry in turn; validate() must track the recomputed check.
    for (size_t i = 0; i < 4; ++i) {
        for (size_t j = 0; j < 4; ++j) {
            FpMatrix mutated = base.matrix();
            mutated.set(i, j, static_cast<uint8_t>(1 - mutated.at(i, j)));
            SymplecticEncoder cand(base.params(), mutated);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(cand.validate() == symplectic_by_oracle(mutated));
        }
    }

    std::mt19937_64 rng(77);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int t = 0; t < 20; ++t) {
            SymplecticEncoder enc =
                qconv::random_encoder(CodeParams(p, 1, 2, 1), rng(), 12);
            CHECK(enc.validate());
            CHECK(symplectic_by_oracle(enc.matrix()));
        }
    }
}

TEST_CASE("require_valid throws on a broken matrix") {
    SymplecticEncoder base = testhelp::accumulator_p3();
    base.require_valid();
    FpMatrix mutated = base.matrix();
    mutated.set(0, 1, 1);
    SymplecticEncoder bad(base.params(), mutated);
    CHECK_FALSE(bad.validate());
    CHECK_THROWS_AS(bad.require_valid(), qconv::InvalidEncoderError);
}

TEST_CASE("apply acts by the matrix") {
    SymplecticEncoder acc = testhelp::accumulator_p2();
    // x' = A x with A = [[1,0],[1,1]]: X on the memory wire picks up an X
    // on the frame wire.
    PauliOp xm(2, FpVec{1, 0}, FpVec{0, 0});
    CHECK(qconv::pauli_to_string(acc.apply(xm)) == "X1 . X1");
    // z' = A^-T z: Z on the frame wire spreads to the memory wire.
    PauliOp zf(2, FpVec{0, 0}, FpVec{0, 1});
    CHECK(qconv::pauli_to_string(acc.apply(zf)) == "Z1 . Z1");

    SymplecticEncoder id = SymplecticEncoder::identity(CodeParams(3, 1, 2, 1));
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
        PauliOp r = random_pauli(3, 3, rng);
        CHECK(id.apply(r) == r);
    }
    CHECK_THROWS_AS(acc.apply(PauliOp::identity(2, 3)),
                    qconv::DimensionMismatchError);
    CHECK_THROWS_AS(acc.apply(PauliOp::identity(3, 2)),
                    qconv::DimensionMismatchError);
}

TEST_CASE("apply_frame splits wires and fixes the transition") {
    SymplecticEncoder id = SymplecticEncoder::identity(CodeParams(3, 1, 2, 1));
    PauliOp mem = qconv::index_to_pauli(5, 1, 3);
    PauliOp anc(3, FpVec{0}, FpVec{0});
    PauliOp log = qconv::index_to_pauli(7, 1, 3);
    qconv::EncoderTriple triple = id.apply_frame(mem, anc, log);
    CHECK(qconv::pauli_to_string(triple.physical_out) == "X2Z1 . I");
    CHECK(qconv::pauli_to_index(triple.memory_out) == 7);
    CHECK(triple.memory_in == mem);
    CHECK(triple.logical_in == log);

    PauliOp anc_x(3, FpVec{1}, FpVec{0});
    CHECK_THROWS_AS(id.apply_frame(mem, anc_x, log), qconv::ValidationError);
    CHECK_THROWS_AS(id.apply_frame(PauliOp::identity(3, 2), anc, log),
                    qconv::DimensionMismatchError);
}

TEST_CASE("inverse undoes apply") {
    std::mt19937_64 rng(55);
    for (uint32_t p : {2u, 3u, 5u}) {
        SymplecticEncoder enc = qconv::random_encoder(CodeParams(p, 2, 2, 1), rng(), 18);
        SymplecticEncoder inv = enc.inverse();
        CHECK(inv.validate());
        for (int t = 0; t < 20; ++t) {
            PauliOp r = random_pauli(p, 4, rng);
            CHECK(inv.apply(enc.apply(r)) == r);
            CHECK(enc.apply(inv.apply(r)) == r);
        }
    }
}

TEST_CASE("elementary generator menu") {
    for (uint32_t p : {2u, 3u, 5u}) {
        for (size_t N : {1u, 2u, 3u}) {
            PrimeField f(p);
            std::vector<FpMatrix> menu = qconv::elementary_symplectic_generators(f, N);
            CHECK(menu.size() == N * (2 * p - 1) + N * (N - 1));
            for (const FpMatrix& g : menu) {
                CHECK(symplectic_by_oracle(g));
            }
        }
    }
    // First entry is the single-qudit Fourier: (x, z) -> (-z, x).
    PrimeField f3(3);
    std::vector<FpMatrix> menu = qconv::elementary_symplectic_generators(f3, 1);
    CHECK(menu[0] == FpMatrix::from_rows(f3, {{0, 2}, {1, 0}}));
}

TEST_CASE("random encoders are valid and reproducible") {
    for (uint32_t p : {2u, 3u, 5u}) {
        CodeParams cp(p, 1, 2, 1);
        SymplecticEncoder a = qconv::random_encoder(cp, 12345, 20);
        SymplecticEncoder b = qconv::random_encoder(cp, 12345, 20);
        CHECK(a.validate());
        CHECK(a.matrix() == b.matrix());
        CHECK(a.seed == 12345);
        SymplecticEncoder c = qconv::random_encoder(cp, 12346, 20);
        // Different seed, different walk; collisions are possible in
        // principle but not for these fixed seeds.
        CHECK(a.matrix() != c.matrix());
    }
    CHECK_THROWS_AS(qconv::random_encoder(CodeParams(2, 1, 1, 1), 1, 0),
                    qconv::ValidationError);
}

TEST_CASE("serialize round-trips") {
    SymplecticEncoder enc = testhelp::accumulator_p3();
    enc.label = "acc3";
    enc.seed = 99;
    SymplecticEncoder back = qconv::deserialize(qconv::serialize(enc));
    CHECK(back.params() == enc.params());
    CHECK(back.matrix() == enc.matrix());
    CHECK(back.label == enc.label);
    CHECK(back.seed == enc.seed);

    SymplecticEncoder plain = testhelp::accumulator_p2();
    SymplecticEncoder back2 = qconv::deserialize(qconv::serialize(plain));
    CHECK_FALSE(back2.label.has_value());
    CHECK_FALSE(back2.seed.has_value());
    CHECK(back2.matrix() == plain.matrix());
}

TEST_CASE("serialized text layout") {
    SymplecticEncoder enc = testhelp::accumulator_p2();
    CHECK(qconv::serialize(enc) ==
          "p: 2\n"
          "m: 1\n"
          "n: 1\n"
          "k: 1\n"
          "matrix:\n"
          "  1 0 0 0\n"
          "  1 1 0 0\n"
          "  0 0 1 1\n"
          "  0 0 0 1\n");
}

TEST_CASE("fixture files parse to the expected encoders") {
    SymplecticEncoder p2 = qconv::deserialize(testhelp::read_fixture("p2_accumulator.enc"));
    CHECK(p2.matrix() == testhelp::accumulator_p2().matrix());
    CHECK(p2.label == "memory accumulator over F_2");

    SymplecticEncoder p3 = qconv::deserialize(testhelp::read_fixture("p3_accumulator.enc"));
    CHECK(p3.matrix() == testhelp::accumulator_p3().matrix());

    SymplecticEncoder id3 = qconv::deserialize(testhelp::read_fixture("p3_identity_121.enc"));
    CHECK(id3.params() == qconv::CodeParams(3, 1, 2, 1));
    CHECK(id3.matrix() == FpMatrix::identity(PrimeField(3), 6));
}

TEST_CASE("deserialize rejects malformed documents") {
    CHECK_THROWS_AS(qconv::deserialize(testhelp::read_fixture("bad_missing_field.enc")),
                    qconv::ParseError);
    CHECK_THROWS_AS(qconv::deserialize(testhelp::read_fixture("bad_nonprime.enc")),
                    qconv::ParseError);
    CHECK_THROWS_WITH_AS(
        qconv::deserialize(testhelp::read_fixture("bad_nonsymplectic.enc")),
        doctest::Contains("Omega"), qconv::ValidationError);

    std::string base = qconv::serialize(testhelp::accumulator_p2());
    {
        std::string text = base;
        text.replace(text.find("1 0 0 0"), 7, "1 0 0 2");
        CHECK_THROWS_AS(qconv::deserialize(text), qconv::ParseError);
    }
    {
        std::string text = base;
        text.replace(text.find("1 0 0 0"), 7, "1 0 0");
        CHECK_THROWS_AS(qconv::deserialize(text), qconv::ParseError);
    }
    {
        std::string text = base;
        text.replace(text.find("1 0 0 0"), 7, "1 0 0 x");
        CHECK_THROWS_AS(qconv::deserialize(text), qconv::ParseError);
    }
    {
        // Drop the last matrix row.
        std::string text = base.substr(0, base.rfind("  0 0 0 1"));
        CHECK_THROWS_AS(qconv::deserialize(text), qconv::ParseError);
    }
}

TEST_SUITE_END();
