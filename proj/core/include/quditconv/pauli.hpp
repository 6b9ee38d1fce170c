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

#ifndef QUDITCONV_PAULI_HPP
#define QUDITCONV_PAULI_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "quditconv/fp.hpp"

namespace qconv {

/// Phaseless generalized Pauli on n qudits: the operator prod_i X_i^{x_i}
/// Z_i^{z_i} modulo global phase, stored as the exponent pair (x | z) in
/// F_p^{2n}. The identity is x = z = 0.
struct PauliOp {
    uint32_t p = 2;
    FpVec x;
    FpVec z;

    PauliOp() = default;
    PauliOp(uint32_t p_, FpVec x_, FpVec z_);

    static PauliOp identity(uint32_t p, size_t n);

    size_t n() const { return x.size(); }
    bool is_identity() const;

    /// True iff the X-part vanishes (products of Z powers only).
    bool is_z_type() const;

    /// Number of qudit sites with a non-identity factor.
    size_t weight() const;

    bool operator==(const PauliOp& other) const {
        return p == other.p && x == other.x && z == other.z;
    }
    bool operator!=(const PauliOp& other) const { return !(*this == other); }
};

/// Exponent c with P Q = omega^c Q P, omega = exp(2*pi*i/p):
/// c(P,Q) = sum_i (z_{P,i} x_{Q,i} - x_{P,i} z_{Q,i}) mod p.
uint8_t commutation_exponent(const PauliOp& P, const PauliOp& Q);

/// Phaseless product: exponent vectors add mod p.
PauliOp compose(const PauliOp& P, const PauliOp& Q);

/// Inverse under compose (exponent negation).
PauliOp pauli_inverse(const PauliOp& P);

/// Bijection onto [0, p^{2n}): i = sum_j x_j p^j + sum_j z_j p^{n+j}.
uint64_t pauli_to_index(const PauliOp& P);
PauliOp index_to_pauli(uint64_t i, size_t n, uint32_t p);

/// Renders per-qudit factors joined by " . ", e.g. "X1Z2 . I . Z1".
std::string pauli_to_string(const PauliOp& P);

/// Parses the pauli_to_string format; throws ParseError on malformed text.
PauliOp pauli_parse(const std::string& text, uint32_t p);

/// Dense complex matrix, row-major. Test oracle plumbing only.
struct ComplexMatrix {
    size_t dim = 0;
    std::vector<std::complex<double>> entries;

    ComplexMatrix() = default;
    explicit ComplexMatrix(size_t d) : dim(d), entries(d * d) {}

    std::complex<double>& at(size_t r, size_t c) { return entries[r * dim + c]; }
    const std::complex<double>& at(size_t r, size_t c) const {
        return entries[r * dim + c];
    }

    ComplexMatrix mul(const ComplexMatrix& rhs) const;
    ComplexMatrix scale(std::complex<double> s) const;
    bool approx_equal(const ComplexMatrix& other, double tol) const;
};

/// Explicit p^n x p^n matrix of P as a tensor product of X^{x_i} Z^{z_i}
/// blocks, with X|j> = |j+1 mod p> and Z|j> = omega^j |j>. Guarded to
/// n <= 4, p <= 5; throws ScaleGuardError beyond that. Test oracle only.
ComplexMatrix pauli_matrix_oracle(const PauliOp& P);

}  // namespace qconv

#endif
