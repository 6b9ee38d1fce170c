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

#include "quditconv/pauli.hpp"

#include <cmath>
#include <sstream>

#include "quditconv/errors.hpp"

namespace qconv {

PauliOp::PauliOp(uint32_t p_, FpVec x_, FpVec z_)
    : p(p_), x(std::move(x_)), z(std::move(z_)) {
    if (x.size() != z.size()) {
        throw DimensionMismatchError("Pauli exponent vectors differ in length: " +
                                     std::to_string(x.size()) + " vs " +
                                     std::to_string(z.size()));
    }
    (void)PrimeField{p};
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] >= p || z[i] >= p) {
            throw IndexOutOfRangeError("Pauli exponent out of [0, p) at site " +
                                       std::to_string(i));
        }
    }
}

PauliOp PauliOp::identity(uint32_t p, size_t n) {
    return PauliOp(p, FpVec(n, 0), FpVec(n, 0));
}

bool PauliOp::is_identity() const {
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0 || z[i] != 0) {
            return false;
        }
    }
    return true;
}

bool PauliOp::is_z_type() const {
    for (uint8_t xi : x) {
        if (xi != 0) {
            return false;
        }
    }
    return true;
}

size_t PauliOp::weight() const {
    size_t w = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] != 0 || z[i] != 0) {
            ++w;
        }
    }
    return w;
}

uint8_t commutation_exponent(const PauliOp& P, const PauliOp& Q) {
    if (P.p != Q.p || P.n() != Q.n()) {
        throw DimensionMismatchError("commutator of Paulis with different shape");
    }
    PrimeField field(P.p);
    uint8_t acc = 0;
    for (size_t i = 0; i < P.n(); ++i) {
        acc = field.add(acc, field.mul(P.z[i], Q.x[i]));
        acc = field.sub(acc, field.mul(P.x[i], Q.z[i]));
    }
    return acc;
}

PauliOp compose(const PauliOp& P, const PauliOp& Q) {
    if (P.p != Q.p || P.n() != Q.n()) {
        throw DimensionMismatchError("composition of Paulis with different shape");
    }
    PrimeField field(P.p);
    PauliOp out = P;
    for (size_t i = 0; i < P.n(); ++i) {
        out.x[i] = field.add(P.x[i], Q.x[i]);
        out.z[i] = field.add(P.z[i], Q.z[i]);
    }
    return out;
}

PauliOp pauli_inverse(const PauliOp& P) {
    PrimeField field(P.p);
    PauliOp out = P;
    for (size_t i = 0; i < P.n(); ++i) {
        out.x[i] = field.neg(P.x[i]);
        out.z[i] = field.neg(P.z[i]);
    }
    return out;
}

uint64_t pauli_to_index(const PauliOp& P) {
    uint64_t index = 0;
    uint64_t scale = 1;
    for (size_t j = 0; j < P.n(); ++j) {
        index += P.x[j] * scale;
        scale *= P.p;
    }
    for (size_t j = 0; j < P.n(); ++j) {
        index += P.z[j] * scale;
        scale *= P.p;
    }
    return index;
}

PauliOp index_to_pauli(uint64_t i, size_t n, uint32_t p) {
    uint64_t space = 1;
    for (size_t j = 0; j < 2 * n; ++j) {
        space *= p;
    }
    if (i >= space) {
        throw IndexOutOfRangeError("Pauli index " + std::to_string(i) +
                                   " out of [0, p^(2n)) = [0, " + std::to_string(space) +
                                   ")");
    }
    PauliOp out = PauliOp::identity(p, n);
    for (size_t j = 0; j < n; ++j) {
        out.x[j] = static_cast<uint8_t>(i % p);
        i /= p;
    }
    for (size_t j = 0; j < n; ++j) {
        out.z[j] = static_cast<uint8_t>(i % p);
        i /= p;
    }
    return out;
}

std::string pauli_to_string(const PauliOp& P) {
    std::ostringstream out;
    for (size_t i = 0; i < P.n(); ++i) {
        if (i > 0) {
            out << " . ";
        }
        if (P.x[i] == 0 && P.z[i] == 0) {
            out << 'I';
            continue;
        }
        if (P.x[i] != 0) {
            out << 'X' << int{P.x[i]};
        }
        if (P.z[i] != 0) {
            out << 'Z' << int{P.z[i]};
        }
    }
    if (P.n() == 0) {
        out << "(empty)";
    }
    return out.str();
}

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

PauliOp pauli_parse(const std::string& text, uint32_t p) {
    std::vector<std::string> factors;
    std::string cur;
    for (char ch : text) {
        if (ch == '.') {
            factors.push_back(strip(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    factors.push_back(strip(cur));
    if (factors.size() == 1 && factors[0] == "(empty)") {
        return PauliOp::identity(p, 0);
    }
    FpVec x(factors.size(), 0);
    FpVec z(factors.size(), 0);
    for (size_t i = 0; i < factors.size(); ++i) {
        const std::string& f = factors[i];
        if (f == "I") {
            continue;
        }
        size_t pos = 0;
        bool seen_x = false;
        bool seen_z = false;
        while (pos < f.size()) {
            char axis = f[pos];
            if (axis != 'X' && axis != 'Z') {
                throw ParseError("Pauli factor '" + f + "': expected X or Z at position " +
                                 std::to_string(pos));
            }
            ++pos;
            size_t start = pos;
            while (pos < f.size() && std::isdigit(static_cast<unsigned char>(f[pos]))) {
                ++pos;
            }
            if (start == pos) {
                throw ParseError("Pauli factor '" + f + "': missing exponent after " +
                                 std::string(1, axis));
            }
            unsigned long e = std::stoul(f.substr(start, pos - start));
            if (e == 0 || e >= p) {
                throw ParseError("Pauli factor '" + f + "': exponent " +
                                 std::to_string(e) + " out of [1, p)");
            }
            if (axis == 'X') {
                if (seen_x || seen_z) {
                    throw ParseError("Pauli factor '" + f + "': X must come once, before Z");
                }
                seen_x = true;
                x[i] = static_cast<uint8_t>(e);
            } else {
                if (seen_z) {
                    throw ParseError("Pauli factor '" + f + "': duplicate Z");
                }
                seen_z = true;
                z[i] = static_cast<uint8_t>(e);
            }
        }
    }
    return PauliOp(p, std::move(x), std::move(z));
}

ComplexMatrix ComplexMatrix::mul(const ComplexMatrix& rhs) const {
    ComplexMatrix out(dim);
    for (size_t i = 0; i < dim; ++i) {
        for (size_t l = 0; l < dim; ++l) {
            std::complex<double> a = at(i, l);
            if (a == std::complex<double>{}) {
                continue;
            }
            for (size_t j = 0; j < dim; ++j) {
                out.at(i, j) += a * rhs.at(l, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::scale(std::complex<double> s) const {
    ComplexMatrix out = *this;
    for (auto& e : out.entries) {
        e *= s;
    }
    return out;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
    if (dim != other.dim) {
        return false;
    }
    for (size_t i = 0; i < entries.size(); ++i) {
        if (std::abs(entries[i] - other.entries[i]) > tol) {
            return false;
        }
    }
    return true;
}

ComplexMatrix pauli_matrix_oracle(const PauliOp& P) {
    if (P.n() > 4 || P.p > 5) {
        throw ScaleGuardError("matrix oracle limited to n <= 4 and p <= 5; got n = " +
                              std::to_string(P.n()) + ", p = " + std::to_string(P.p));
    }
    const double two_pi = 6.283185307179586476925286766559;
    size_t dim = 1;
    for (size_t i = 0; i < P.n(); ++i) {
        dim *= P.p;
    }
    ComplexMatrix out(dim);
    // Entry (r, c): decompose both indices in base p; each site contributes
    // X^{x_i} Z^{z_i}, i.e. r_i = c_i + x_i mod p with phase omega^{z_i c_i}.
    for (size_t c = 0; c < dim; ++c) {
        size_t rest = c;
        size_t r = 0;
        size_t scale = 1;
        double phase = 0.0;
        for (size_t site = 0; site < P.n(); ++site) {
            size_t ci = rest % P.p;
            rest /= P.p;
            size_t ri = (ci + P.x[site]) % P.p;
            phase += two_pi * double(P.z[site]) * double(ci) / double(P.p);
            r += ri * scale;
            scale *= P.p;
        }
        out.at(r, c) = std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return out;
}

}  // namespace qconv
