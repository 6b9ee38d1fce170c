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

#ifndef QUDITCONV_REPORT_HPP
#define QUDITCONV_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quditconv/analysis.hpp"
#include "quditconv/state_diagram.hpp"

namespace qconv {

/// Writes the key/value report document format: scalar lines "key: value"
/// and block fields "key:" followed by two-space-indented lines. Shares the
/// format family of the encoder file so embedded encoders parse directly.
class ReportWriter {
  public:
    void kv(const std::string& key, const std::string& value);
    void kv(const std::string& key, const char* value);
    void kv(const std::string& key, uint64_t value);
    void kv(const std::string& key, int64_t value);
    void kv(const std::string& key, bool value);

    /// Emits "key:" then every line of text indented by two spaces.
    void block(const std::string& key, const std::string& text);

    void blank();

    const std::string& str() const { return out_; }

  private:
    std::string out_;
};

/// One parsed field: either a scalar value or a dedented block body.
struct ReportField {
    std::string key;
    std::string value;
    std::string block;
    size_t line = 0;
};

/// Parses a report (or encoder) document into its fields, in order.
/// Throws ParseError with a line diagnostic on malformed input.
std::vector<ReportField> parse_report(const std::string& text);

std::optional<std::string> report_value(const std::vector<ReportField>& fields,
                                        const std::string& key);

/// All block bodies recorded under the given key, in order.
std::vector<std::string> report_blocks(const std::vector<ReportField>& fields,
                                       const std::string& key);

std::string render_vertex(const StateDiagram& diagram, Vertex v);
std::string render_vertex_list(const std::vector<Vertex>& vs);
std::string render_edge(const StateDiagram& diagram, const Edge& e);
std::string render_cycle(const StateDiagram& diagram, const Cycle& c);
std::string render_standard_path(const StateDiagram& diagram, const StandardPath& path);
std::string render_counterexample(const StateDiagram& diagram,
                                  const RecursiveCounterexample& counterexample);
std::string render_subgroup(const StateDiagram& diagram, const SubgroupDescriptor& s);

/// Full analyze-report body for one encoder: flags, witnesses, subgroups,
/// criterion records, budgets, and the encoder itself as an embedded block.
std::string classification_report(const StateDiagram& diagram, const Classification& c);

}  // namespace qconv

#endif
