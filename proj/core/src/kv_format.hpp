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

// Internal helpers for the key/value document family shared by the encoder
// file format and the report format. Not installed.

#ifndef QUDITCONV_SRC_KV_FORMAT_HPP
#define QUDITCONV_SRC_KV_FORMAT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qconv {
namespace kv {

struct Field {
    std::string key;
    std::string value;
    std::string block;
    size_t line = 0;
};

// Parses "key: value" scalar lines and "key:" block fields whose bodies are
// the following two-space-indented lines (dedented in Field::block). Blank
// lines and '#' comments are skipped at top level. Throws ParseError with a
// line diagnostic on stray indentation or missing separators.
std::vector<Field> parse(const std::string& text);

// Indents every line of text by two spaces (for embedding blocks).
std::string indent(const std::string& text);

}  // namespace kv
}  // namespace qconv

#endif
