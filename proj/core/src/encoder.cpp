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

#include "quditconv/encoder.hpp"

#include <random>
#include <sstream>

#include "kv_format.hpp"
#include "quditconv/errors.hpp"

namespace qconv {

CodeParams::CodeParams(uint32_t p_, size_t m_, size_t n_, size_t k_)
    : p(p_), m(m_), n(n_), k(k_) {
    (void)PrimeField{p};
    if (m < 1) {
        throw ValidationError("memory count m must be >= 1");
    }
    if (n < 1) {
        throw ValidationError("frame size n must be >= 1");
    }
    if (k > n) {
        throw ValidationError("logical count k = " + std::to_string(k) +
                              " exceeds frame size n = " + std::to_string(n));
    }
}

FpMatrix symplectic_form(PrimeField field, size_t n_qudits) {
    FpMatrix omega(field, 2 * n_qudits, 2 * n_qudits);
    uint8_t minus_one = field.neg(1);
    for (size_t i = 0; i < n_qudits; ++i) {
        omega.set(i, n_qudits + i, minus_one);
        omega.set(n_qudits + i, i, 1);
    }
    return omega;
}

uint8_t symplectic_product(const PrimeField& field, const FpVec& u, const FpVec& v) {
    if (u.size() != v.size() || u.size() % 2 != 0) {
        throw DimensionMismatchError("symplectic product needs equal even lengths");
    }
    size_t n = u.size() / 2;
    uint8_t acc = 0;
    for (size_t i = 0; i < n; ++i) {
        acc = field.add(acc, field.mul(u[n + i], v[i]));
        acc = field.sub(acc, field.mul(u[i], v[n + i]));
    }
    return acc;
}

FpVec pauli_to_vec(const PauliOp& P) {
    FpVec v;
    v.reserve(2 * P.n());
    v.insert(v.end(), P.x.begin(), P.x.end());
    v.insert(v.end(), P.z.begin(), P.z.end());
    return v;
}

PauliOp vec_to_pauli(const FpVec& v, uint32_t p) {
    if (v.size() % 2 != 0) {
        throw DimensionMismatchError("symplectic vector has odd length");
    }
    size_t n = v.size() / 2;
    return PauliOp(p, FpVec(v.begin(), v.begin() + n), FpVec(v.begin() + n, v.end()));
}

SymplecticEncoder::SymplecticEncoder(CodeParams params, FpMatrix matrix)
    : params_(params), matrix_(std::move(matrix)) {
    if (matrix_.rows() != params_.dim() || matrix_.cols() != params_.dim()) {
        throw DimensionMismatchError(
            "encoder matrix must be " + std::to_string(params_.dim()) + "x" +
            std::to_string(params_.dim()) + ", got " + std::to_string(matrix_.rows()) +
            "x" + std::to_string(matrix_.cols()));
    }
    if (matrix_.field().modulus() != params_.p) {
        throw ValidationError("encoder matrix modulus differs from params.p");
    }
}

SymplecticEncoder SymplecticEncoder::identity(const CodeParams& params) {
    return SymplecticEncoder(params,
                             FpMatrix::identity(PrimeField(params.p), params.dim()));
}

bool SymplecticEncoder::validate() const {
    FpMatrix omega = symplectic_form(matrix_.field(), params_.qudits());
    return matrix_.transpose().mul(omega).mul(matrix_) == omega;
}

void SymplecticEncoder::require_valid() const {
    if (!validate()) {
        throw InvalidEncoderError("matrix does not preserve the symplectic form mod " +
                                  std::to_string(params_.p));
    }
}

PauliOp SymplecticEncoder::apply(const PauliOp& input) const {
    if (input.p != params_.p || input.n() != params_.qudits()) {
        throw DimensionMismatchError("encoder input must act on " +
                                     std::to_string(params_.qudits()) + " qudits mod " +
                                     std::to_string(params_.p));
    }
    return vec_to_pauli(matrix_.mul_vec(pauli_to_vec(input)), params_.p);
}

EncoderTriple SymplecticEncoder::apply_frame(const PauliOp& memory_in,
                                             const PauliOp& ancilla_in,
                                             const PauliOp& logical_in) const {
    size_t a = params_.ancilla_count();
    if (memory_in.n() != params_.m || ancilla_in.n() != a ||
        logical_in.n() != params_.k) {
        throw DimensionMismatchError("frame inputs must be (m, n-k, k) qudits");
    }
    if (!ancilla_in.is_z_type()) {
        throw ValidationError("ancilla input must be Z-type");
    }
    size_t q = params_.qudits();
    PauliOp input = PauliOp::identity(params_.p, q);
    for (size_t i = 0; i < params_.m; ++i) {
        input.x[i] = memory_in.x[i];
        input.z[i] = memory_in.z[i];
    }
    for (size_t i = 0; i < a; ++i) {
        input.z[params_.m + i] = ancilla_in.z[i];
    }
    for (size_t i = 0; i < params_.k; ++i) {
        input.x[params_.m + a + i] = logical_in.x[i];
        input.z[params_.m + a + i] = logical_in.z[i];
    }
    PauliOp output = apply(input);
    EncoderTriple triple;
    triple.memory_in = memory_in;
    triple.ancilla_in = ancilla_in;
    triple.logical_in = logical_in;
    triple.physical_out = PauliOp(params_.p, FpVec(output.x.begin(), output.x.begin() + params_.n),
                                  FpVec(output.z.begin(), output.z.begin() + params_.n));
    triple.memory_out = PauliOp(params_.p, FpVec(output.x.begin() + params_.n, output.x.end()),
                                FpVec(output.z.begin() + params_.n, output.z.end()));
    return triple;
}

SymplecticEncoder SymplecticEncoder::inverse() const {
    require_valid();
    SymplecticEncoder out(params_, matrix_.inverse());
    out.label = label;
    return out;
}

// Column-action convention throughout: a gate matrix G sends the input
// coordinate vector v to G v.
std::vector<FpMatrix> elementary_symplectic_generators(PrimeField field,
                                                       size_t n_qudits) {
    std::vector<FpMatrix> menu;
    size_t N = n_qudits;
    uint32_t p = field.modulus();
    for (size_t i = 0; i < N; ++i) {
        FpMatrix f = FpMatrix::identity(field, 2 * N);
        f.set(i, i, 0);
        f.set(i, N + i, field.neg(1));
        f.set(N + i, i, 1);
        f.set(N + i, N + i, 0);
        menu.push_back(f);
    }
    for (size_t i = 0; i < N; ++i) {
        for (uint32_t c = 1; c < p; ++c) {
            FpMatrix g = FpMatrix::identity(field, 2 * N);
            g.set(i, i, static_cast<uint8_t>(c));
            g.set(N + i, N + i, field.inverse(static_cast<uint8_t>(c)));
            menu.push_back(g);
        }
    }
    for (size_t i = 0; i < N; ++i) {
        for (uint32_t c = 1; c < p; ++c) {
            FpMatrix g = FpMatrix::identity(field, 2 * N);
            g.set(N + i, i, static_cast<uint8_t>(c));
            menu.push_back(g);
        }
    }
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = 0; j < N; ++j) {
            if (i == j) {
                continue;
            }
            FpMatrix g = FpMatrix::identity(field, 2 * N);
            g.set(j, i, 1);
            g.set(N + i, N + j, field.neg(1));
            menu.push_back(g);
        }
    }
    return menu;
}

SymplecticEncoder random_encoder(const CodeParams& params, uint64_t seed,
                                 uint32_t gate_count) {
    if (gate_count < 1) {
        throw ValidationError("gate_count must be >= 1");
    }
    PrimeField field(params.p);
    std::vector<FpMatrix> menu = elementary_symplectic_generators(field, params.qudits());
    FpMatrix acc = FpMatrix::identity(field, params.dim());
    std::mt19937_64 rng(seed);
    for (uint32_t g = 0; g < gate_count; ++g) {
        const FpMatrix& gate = menu[static_cast<size_t>(rng() % menu.size())];
        acc = gate.mul(acc);
    }
    SymplecticEncoder out(params, std::move(acc));
    out.seed = seed;
    return out;
}

std::string serialize(const SymplecticEncoder& E) {
    std::ostringstream out;
    const CodeParams& cp = E.params();
    out << "p: " << cp.p << '\n';
    out << "m: " << cp.m << '\n';
    out << "n: " << cp.n << '\n';
    out << "k: " << cp.k << '\n';
    if (E.label) {
        out << "label: " << *E.label << '\n';
    }
    if (E.seed) {
        out << "seed: " << *E.seed << '\n';
    }
    out << "matrix:\n";
    out << kv::indent(E.matrix().to_string());
    out << '\n';
    return out.str();
}

namespace {

uint64_t parse_u64_field(const kv::Field& f) {
    if (f.value.empty()) {
        throw ParseError("line " + std::to_string(f.line) + ": field '" + f.key +
                         "' needs an integer value");
    }
    uint64_t v = 0;
    for (char ch : f.value) {
        if (ch < '0' || ch > '9') {
            throw ParseError("line " + std::to_string(f.line) + ": field '" + f.key +
                             "' is not a non-negative integer: '" + f.value + "'");
        }
        v = v * 10 + static_cast<uint64_t>(ch - '0');
    }
    return v;
}

}  // namespace

SymplecticEncoder deserialize(const std::string& text) {
    std::vector<kv::Field> fields = kv::parse(text);
    const kv::Field* fp = nullptr;
    const kv::Field* fm = nullptr;
    const kv::Field* fn = nullptr;
    const kv::Field* fk = nullptr;
    const kv::Field* fmatrix = nullptr;
    const kv::Field* flabel = nullptr;
    const kv::Field* fseed = nullptr;
    for (const kv::Field& f : fields) {
        if (f.key == "p") {
            fp = &f;
        } else if (f.key == "m") {
            fm = &f;
        } else if (f.key == "n") {
            fn = &f;
        } else if (f.key == "k") {
            fk = &f;
        } else if (f.key == "matrix") {
            fmatrix = &f;
        } else if (f.key == "label") {
            flabel = &f;
        } else if (f.key == "seed") {
            fseed = &f;
        }
    }
    for (auto [ptr, name] : {std::pair{fp, "p"}, {fm, "m"}, {fn, "n"}, {fk, "k"},
                             {fmatrix, "matrix"}}) {
        if (ptr == nullptr) {
            throw ParseError(std::string("missing required field '") + name + "'");
        }
    }
    uint64_t p = parse_u64_field(*fp);
    if (!is_prime(static_cast<uint32_t>(p)) || p > PrimeField::kMaxModulus) {
        throw ParseError("line " + std::to_string(fp->line) + ": p = " +
                         std::to_string(p) + " is not a supported prime");
    }
    CodeParams params(static_cast<uint32_t>(p), parse_u64_field(*fm),
                      parse_u64_field(*fn), parse_u64_field(*fk));
    PrimeField field(params.p);

    size_t dim = params.dim();
    FpMatrix matrix(field, dim, dim);
    std::istringstream rows(fmatrix->block);
    std::string row_line;
    size_t r = 0;
    while (std::getline(rows, row_line)) {
        if (row_line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        if (r >= dim) {
            throw ParseError("matrix block has more than " + std::to_string(dim) +
                             " rows");
        }
        std::istringstream cells(row_line);
        long long cell = 0;
        size_t c = 0;
        while (cells >> cell) {
            if (c >= dim) {
                throw ParseError("matrix row " + std::to_string(r) + " has more than " +
                                 std::to_string(dim) + " entries");
            }
            if (cell < 0 || cell >= static_cast<long long>(params.p)) {
                throw ParseError("matrix entry (" + std::to_string(r) + ", " +
                                 std::to_string(c) + ") = " + std::to_string(cell) +
                                 " out of [0, p)");
            }
            matrix.set(r, c, static_cast<uint8_t>(cell));
            ++c;
        }
        if (!cells.eof()) {
            throw ParseError("matrix row " + std::to_string(r) + " has a non-integer cell");
        }
        if (c != dim) {
            throw ParseError("matrix row " + std::to_string(r) + " has " +
                             std::to_string(c) + " entries, expected " +
                             std::to_string(dim));
        }
        ++r;
    }
    if (r != dim) {
        throw ParseError("matrix block has " + std::to_string(r) + " rows, expected " +
                         std::to_string(dim));
    }

    SymplecticEncoder out(params, std::move(matrix));
    if (flabel != nullptr) {
        out.label = flabel->value;
    }
    if (fseed != nullptr) {
        out.seed = parse_u64_field(*fseed);
    }
    if (!out.validate()) {
        throw ValidationError("matrix does not satisfy E^T Omega E = Omega mod " +
                              std::to_string(params.p));
    }
    return out;
}

}  // namespace qconv
