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

#ifndef QUDITCONV_ENCODER_HPP
#define QUDITCONV_ENCODER_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "quditconv/fp.hpp"
#include "quditconv/pauli.hpp"

namespace qconv {

/// Frame parameters: m memory qudits, n physical qudits per frame of which
/// n-k are ancilla and k are logical.
struct CodeParams {
    uint32_t p = 2;
    size_t m = 1;
    size_t n = 1;
    size_t k = 1;

    CodeParams() = default;
    CodeParams(uint32_t p_, size_t m_, size_t n_, size_t k_);

    size_t qudits() const { return m + n; }

    /// Symplectic dimension 2(m+n).
    size_t dim() const { return 2 * (m + n); }

    size_t ancilla_count() const { return n - k; }

    /// n = k means no stabilizer qudits; allowed for smoke tests but real
    /// codes have at least one ancilla.
    bool is_degenerate() const { return n == k; }

    bool operator==(const CodeParams& other) const {
        return p == other.p && m == other.m && n == other.n && k == other.k;
    }
    bool operator!=(const CodeParams& other) const { return !(*this == other); }
};

/// The symplectic form Omega = [[0, -I], [I, 0]] on F_p^{2N} in the
/// (x_1..x_N | z_1..z_N) coordinate layout, so u^T Omega v = c(u, v).
FpMatrix symplectic_form(PrimeField field, size_t n_qudits);

/// c(u, v) = z_u . x_v - x_u . z_v mod p for packed symplectic vectors.
uint8_t symplectic_product(const PrimeField& field, const FpVec& u, const FpVec& v);

/// Packs a Pauli into its symplectic coordinate vector [x | z] and back.
FpVec pauli_to_vec(const PauliOp& P);
PauliOp vec_to_pauli(const FpVec& v, uint32_t p);

/// One frame transition: inputs in wire order [memory | ancilla | logical],
/// outputs in wire order [physical | memory].
struct EncoderTriple {
    PauliOp memory_in;
    PauliOp ancilla_in;
    PauliOp logical_in;
    PauliOp physical_out;
    PauliOp memory_out;
};

/// A convolutional encoder frame map as a symplectic matrix E over F_p,
/// shape 2(m+n) x 2(m+n), acting on column vectors: v_out = E v_in.
///
/// Input wires are ordered [memory_1..memory_m, ancilla_1..ancilla_{n-k},
/// logical_1..logical_k]; output wires [physical_1..physical_n,
/// memory_1..memory_m]. A valid E satisfies E^T Omega E = Omega, which is
/// exactly conservation of the commutation phase.
class SymplecticEncoder {
  public:
    SymplecticEncoder(CodeParams params, FpMatrix matrix);

    static SymplecticEncoder identity(const CodeParams& params);

    const CodeParams& params() const { return params_; }
    const FpMatrix& matrix() const { return matrix_; }
    const PrimeField& field() const { return matrix_.field(); }

    /// True iff E^T Omega E = Omega mod p.
    bool validate() const;

    /// Throws InvalidEncoderError unless validate() holds.
    void require_valid() const;

    /// Image of a Pauli on all m+n wires under conjugation by the encoder.
    PauliOp apply(const PauliOp& input) const;

    /// Splits one frame: (M, S, L) -> (P, M'). S must be Z-type.
    EncoderTriple apply_frame(const PauliOp& memory_in, const PauliOp& ancilla_in,
                              const PauliOp& logical_in) const;

    SymplecticEncoder inverse() const;

    std::optional<std::string> label;
    std::optional<uint64_t> seed;

  private:
    CodeParams params_;
    FpMatrix matrix_;
};

/// The elementary symplectic generators on n_qudits wires: per-qudit
/// Fourier, multiplications by c in [1, p), shears by c in [1, p), and SUM
/// over all ordered qudit pairs, in that fixed order.
std::vector<FpMatrix> elementary_symplectic_generators(PrimeField field,
                                                       size_t n_qudits);

/// Product of gate_count elementary symplectic generators (single-qudit
/// Fourier, multiplication, shear; two-qudit SUM both directions), drawn
/// deterministically from the seed. Always passes validate().
SymplecticEncoder random_encoder(const CodeParams& params, uint64_t seed,
                                 uint32_t gate_count);

/// Text round-trip in the key/value encoder file format.
std::string serialize(const SymplecticEncoder& E);
SymplecticEncoder deserialize(const std::string& text);

}  // namespace qconv

#endif
