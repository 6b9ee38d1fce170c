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

#include "kv_format.hpp"

#include <sstream>

#include "quditconv/errors.hpp"

namespace qconv {
namespace kv {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) {
        lines.push_back(cur);
    }
    return lines;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<Field> parse(const std::string& text) {
    std::vector<Field> fields;
    std::vector<std::string> lines = split_lines(text);
    size_t i = 0;
    while (i < lines.size()) {
        const std::string& line = lines[i];
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') {
            ++i;
            continue;
        }
        if (line.rfind("  ", 0) == 0) {
            throw ParseError("line " + std::to_string(i + 1) +
                             ": indented line outside any block field");
        }
        size_t colon = line.find(':');
        if (colon == std::string::npos) {
            throw ParseError("line " + std::to_string(i + 1) +
                             ": expected 'key: value' or 'key:'");
        }
        Field f;
        f.key = trim(line.substr(0, colon));
        f.value = trim(line.substr(colon + 1));
        f.line = i + 1;
        if (f.key.empty()) {
            throw ParseError("line " + std::to_string(i + 1) + ": empty key");
        }
        ++i;
        if (f.value.empty()) {
            std::ostringstream body;
            bool first = true;
            while (i < lines.size() && lines[i].rfind("  ", 0) == 0) {
                if (!first) {
                    body << '\n';
                }
                body << lines[i].substr(2);
                first = false;
                ++i;
            }
            f.block = body.str();
        }
        fields.push_back(std::move(f));
    }
    return fields;
}

std::string indent(const std::string& text) {
    std::ostringstream out;
    bool at_line_start = true;
    for (char ch : text) {
        if (at_line_start && ch != '\n') {
            out << "  ";
        }
        out << ch;
        at_line_start = (ch == '\n');
    }
    return out.str();
}

}  // namespace kv
}  // namespace qconv
