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

#ifndef QUDITCONV_FP_HPP
#define QUDITCONV_FP_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "quditconv/errors.hpp"

namespace qconv {

bool is_prime(uint32_t v);

/// Exact arithmetic in the prime field F_p.
///
/// Residues are plain uint8_t values in [0, p); the field object carries the
/// modulus so values stay a single byte. p is restricted to small primes
/// (2..13) so that p^{2m} state spaces stay enumerable.
class PrimeField {
  public:
    static constexpr uint32_t kMaxModulus = 13;

    explicit PrimeField(uint32_t modulus);

    uint32_t modulus() const { return p_; }

    uint8_t add(uint8_t a, uint8_t b) const {
        uint32_t s = uint32_t{a} + b;
        return static_cast<uint8_t>(s >= p_ ? s - p_ : s);
    }
    uint8_t sub(uint8_t a, uint8_t b) const {
        return static_cast<uint8_t>(a >= b ? a - b : a + p_ - b);
    }
    uint8_t neg(uint8_t a) const { return a == 0 ? 0 : static_cast<uint8_t>(p_ - a); }
    uint8_t mul(uint8_t a, uint8_t b) const {
        return static_cast<uint8_t>((uint32_t{a} * b) % p_);
    }

    /// Multiplicative inverse; throws ZeroInverseError for a = 0.
    uint8_t inverse(uint8_t a) const;

    /// Reduce an arbitrary signed integer into [0, p).
    uint8_t reduce(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) {
            r += p_;
        }
        return static_cast<uint8_t>(r);
    }

    bool operator==(const PrimeField& other) const { return p_ == other.p_; }
    bool operator!=(const PrimeField& other) const { return p_ != other.p_; }

  private:
    uint32_t p_;
};

/// Row of residues; used for symplectic vectors and matrix rows.
using FpVec = std::vector<uint8_t>;

/// Dense matrix over F_p. Sizes in this artifact never exceed a few dozen
/// rows, so no sparse machinery.
class FpMatrix {
  public:
    FpMatrix(PrimeField field, size_t rows, size_t cols);

    static FpMatrix identity(PrimeField field, size_t n);

    /// Builds from row-major integer data, reducing each entry mod p.
    static FpMatrix from_rows(PrimeField field,
                              const std::vector<std::vector<int64_t>>& rows);

    const PrimeField& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint8_t at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint8_t v) { entries_[r * cols_ + c] = v; }

    const FpVec& entries() const { return entries_; }

    FpMatrix mul(const FpMatrix& rhs) const;
    FpVec mul_vec(const FpVec& v) const;
    FpMatrix transpose() const;
    FpMatrix add(const FpMatrix& rhs) const;

    size_t rank() const;

    /// Basis of {v : A v = 0}, in reduced echelon form with deterministic
    /// lowest-index pivoting; basis vectors ordered by free column.
    std::vector<FpVec> nullspace() const;

    /// Throws SingularMatrixError when rank-deficient.
    FpMatrix inverse() const;

    bool operator==(const FpMatrix& other) const;
    bool operator!=(const FpMatrix& other) const { return !(*this == other); }

    std::string to_string() const;

  private:
    PrimeField field_;
    size_t rows_;
    size_t cols_;
    FpVec entries_;
};

}  // namespace qconv

#endif
