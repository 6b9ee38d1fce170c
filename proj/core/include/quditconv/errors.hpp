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

#ifndef QUDITCONV_ERRORS_HPP
#define QUDITCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qconv {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested modulus is not a supported prime.
struct NotPrimeError : Error {
    using Error::Error;
};

/// Multiplicative inverse of zero was requested (caller bug).
struct ZeroInverseError : Error {
    using Error::Error;
};

/// Operand shapes (or moduli) do not conform.
struct DimensionMismatchError : Error {
    using Error::Error;
};

/// Matrix inversion was attempted on a rank-deficient matrix.
struct SingularMatrixError : Error {
    using Error::Error;
};

/// A packed index is outside its valid range.
struct IndexOutOfRangeError : Error {
    using Error::Error;
};

/// An operation would exceed the configured desk-scale limits.
struct ScaleGuardError : Error {
    using Error::Error;
};

/// An encoder matrix does not preserve the symplectic form.
struct InvalidEncoderError : Error {
    using Error::Error;
};

/// Malformed text input; message carries line/field diagnostics.
struct ParseError : Error {
    using Error::Error;
};

/// Well-formed input that violates a semantic constraint.
struct ValidationError : Error {
    using Error::Error;
};

/// A path or cycle handed to an oracle is not realizable by the encoder.
struct InvalidSequenceError : Error {
    using Error::Error;
};

}  // namespace qconv

#endif
