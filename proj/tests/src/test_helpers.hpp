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

#ifndef QUDITCONV_TESTS_HELPERS_HPP
#define QUDITCONV_TESTS_HELPERS_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "quditconv/encoder.hpp"

namespace testhelp {

inline qconv::SymplecticEncoder make_encoder(
    uint32_t p, size_t m, size_t n, size_t k,
    const std::vector<std::vector<int64_t>>& rows) {
    qconv::PrimeField field(p);
    return qconv::SymplecticEncoder(qconv::CodeParams(p, m, n, k),
                                    qconv::FpMatrix::from_rows(field, rows));
}

/// Memory-accumulator frame at p = 2: P = M, M' = M + L (x parts), with the
/// symplectically forced z action. Catastrophic: Z-memory vertices carry
/// zero-physical self-loops with logical label Z.
inline qconv::SymplecticEncoder accumulator_p2() {
    return make_encoder(2, 1, 1, 1,
                        {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}});
}

/// Same construction over F_3.
inline qconv::SymplecticEncoder accumulator_p3() {
    return make_encoder(3, 1, 1, 1,
                        {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 2}, {0, 0, 0, 1}});
}

/// Report text with volatile timing lines removed, for determinism
/// comparisons.
inline std::string strip_timing(const std::string& report) {
    std::istringstream in(report);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("seconds:", 0) == 0) {
            continue;
        }
        out << line << '\n';
    }
    return out.str();
}

inline std::string fixture_path(const std::string& name) {
    return std::string(QUDITCONV_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string read_fixture(const std::string& name) {
    return read_file(fixture_path(name));
}

}  // namespace testhelp

#endif
