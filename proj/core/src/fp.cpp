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

#include "quditconv/fp.hpp"

#include <sstream>

namespace qconv {

bool is_prime(uint32_t v) {
    if (v < 2) {
        return false;
    }
    for (uint32_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeField::PrimeField(uint32_t modulus) : p_(modulus) {
    if (!is_prime(modulus)) {
        throw NotPrimeError("modulus " + std::to_string(modulus) + " is not prime");
    }
    if (modulus > kMaxModulus) {
        throw NotPrimeError("modulus " + std::to_string(modulus) + " exceeds the cap " +
                            std::to_string(kMaxModulus));
    }
}

uint8_t PrimeField::inverse(uint8_t a) const {
    if (a == 0) {
        throw ZeroInverseError("0 has no inverse mod " + std::to_string(p_));
    }
    // Fermat: a^(p-2) mod p. p <= 13 so plain repeated squaring on uint32.
    uint32_t result = 1;
    uint32_t base = a % p_;
    uint32_t e = p_ - 2;
    while (e > 0) {
        if (e & 1) {
            result = (result * base) % p_;
        }
        base = (base * base) % p_;
        e >>= 1;
    }
    return static_cast<uint8_t>(result);
}

FpMatrix::FpMatrix(PrimeField field, size_t rows, size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(PrimeField field, size_t n) {
    FpMatrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) {
        m.set(i, i, 1);
    }
    return m;
}

FpMatrix FpMatrix::from_rows(PrimeField field,
                             const std::vector<std::vector<int64_t>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    FpMatrix m(field, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw DimensionMismatchError("ragged row " + std::to_string(i) +
                                         " in matrix literal");
        }
        for (size_t j = 0; j < c; ++j) {
            m.set(i, j, field.reduce(rows[i][j]));
        }
    }
    return m;
}

FpMatrix FpMatrix::mul(const FpMatrix& rhs) const {
    if (field_ != rhs.field_) {
        throw DimensionMismatchError("matrix product across different moduli");
    }
    if (cols_ != rhs.rows_) {
        throw DimensionMismatchError("matrix product " + std::to_string(rows_) + "x" +
                                     std::to_string(cols_) + " times " +
                                     std::to_string(rhs.rows_) + "x" +
                                     std::to_string(rhs.cols_));
    }
    FpMatrix out(field_, rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < rhs.cols_; ++j) {
            uint32_t acc = 0;
            for (size_t l = 0; l < cols_; ++l) {
                acc += uint32_t{at(i, l)} * rhs.at(l, j);
            }
            out.set(i, j, static_cast<uint8_t>(acc % field_.modulus()));
        }
    }
    return out;
}

FpVec FpMatrix::mul_vec(const FpVec& v) const {
    if (v.size() != cols_) {
        throw DimensionMismatchError("matrix-vector product: " + std::to_string(cols_) +
                                     " columns vs vector length " +
                                     std::to_string(v.size()));
    }
    FpVec out(rows_, 0);
    for (size_t i = 0; i < rows_; ++i) {
        uint32_t acc = 0;
        for (size_t j = 0; j < cols_; ++j) {
            acc += uint32_t{at(i, j)} * v[j];
        }
        out[i] = static_cast<uint8_t>(acc % field_.modulus());
    }
    return out;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix out(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            out.set(j, i, at(i, j));
        }
    }
    return out;
}

FpMatrix FpMatrix::add(const FpMatrix& rhs) const {
    if (field_ != rhs.field_ || rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionMismatchError("matrix sum shape mismatch");
    }
    FpMatrix out(field_, rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) {
        out.entries_[i] = field_.add(entries_[i], rhs.entries_[i]);
    }
    return out;
}

namespace {

// In-place reduced row echelon form with lowest-index pivoting; returns the
// pivot column of each pivot row.
std::vector<size_t> rref(FpMatrix& m) {
    const PrimeField& f = m.field();
    std::vector<size_t> pivot_cols;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col) == 0) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != row) {
            for (size_t j = 0; j < m.cols(); ++j) {
                uint8_t tmp = m.at(row, j);
                m.set(row, j, m.at(pivot, j));
                m.set(pivot, j, tmp);
            }
        }
        uint8_t inv = f.inverse(m.at(row, col));
        for (size_t j = 0; j < m.cols(); ++j) {
            m.set(row, j, f.mul(m.at(row, j), inv));
        }
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0) {
                continue;
            }
            uint8_t factor = m.at(i, col);
            for (size_t j = 0; j < m.cols(); ++j) {
                m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(row, j))));
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

size_t FpMatrix::rank() const {
    FpMatrix copy = *this;
    return rref(copy).size();
}

std::vector<FpVec> FpMatrix::nullspace() const {
    FpMatrix copy = *this;
    std::vector<size_t> pivot_cols = rref(copy);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<FpVec> basis;
    for (size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        FpVec v(cols_, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivot_cols.size(); ++r) {
            v[pivot_cols[r]] = field_.neg(copy.at(r, free));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

FpMatrix FpMatrix::inverse() const {
    if (rows_ != cols_) {
        throw SingularMatrixError("inverse of non-square matrix");
    }
    // Gauss-Jordan on [A | I].
    FpMatrix aug(field_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            aug.set(i, j, at(i, j));
        }
        aug.set(i, cols_ + i, 1);
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != rows_ || pivots.back() >= cols_) {
        throw SingularMatrixError("matrix is singular mod " +
                                  std::to_string(field_.modulus()));
    }
    FpMatrix out(field_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            out.set(i, j, aug.at(i, cols_ + j));
        }
    }
    return out;
}

bool FpMatrix::operator==(const FpMatrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ &&
           entries_ == other.entries_;
}

std::string FpMatrix::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            if (j > 0) {
                out << ' ';
            }
            out << int{at(i, j)};
        }
        if (i + 1 < rows_) {
            out << '\n';
        }
    }
    return out.str();
}

}  // namespace qconv
