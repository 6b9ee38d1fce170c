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

#include "quditconv/report.hpp"

#include <sstream>

#include "kv_format.hpp"
#include "quditconv/version.hpp"

namespace qconv {

namespace {

std::string strip_trailing_newlines(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) {
        s.pop_back();
    }
    return s;
}

}  // namespace

void ReportWriter::kv(const std::string& key, const std::string& value) {
    out_ += key;
    out_ += ": ";
    out_ += value;
    out_ += '\n';
}

void ReportWriter::kv(const std::string& key, const char* value) {
    kv(key, std::string(value));
}

void ReportWriter::kv(const std::string& key, uint64_t value) {
    kv(key, std::to_string(value));
}

void ReportWriter::kv(const std::string& key, int64_t value) {
    kv(key, std::to_string(value));
}

void ReportWriter::kv(const std::string& key, bool value) {
    kv(key, value ? std::string("true") : std::string("false"));
}

void ReportWriter::block(const std::string& key, const std::string& text) {
    out_ += key;
    out_ += ":\n";
    std::string body = strip_trailing_newlines(text);
    if (!body.empty()) {
        out_ += kv::indent(body);
        out_ += '\n';
    }
}

void ReportWriter::blank() {
    out_ += '\n';
}

std::vector<ReportField> parse_report(const std::string& text) {
    std::vector<ReportField> out;
    for (const kv::Field& f : kv::parse(text)) {
        out.push_back(ReportField{f.key, f.value, f.block, f.line});
    }
    return out;
}

std::optional<std::string> report_value(const std::vector<ReportField>& fields,
                                        const std::string& key) {
    for (const ReportField& f : fields) {
        if (f.key == key) {
            return f.value;
        }
    }
    return std::nullopt;
}

std::vector<std::string> report_blocks(const std::vector<ReportField>& fields,
                                       const std::string& key) {
    std::vector<std::string> out;
    for (const ReportField& f : fields) {
        if (f.key == key) {
            out.push_back(f.block);
        }
    }
    return out;
}

std::string render_vertex(const StateDiagram& diagram, Vertex v) {
    return "v" + std::to_string(v) + "=" + pauli_to_string(diagram.vertex_pauli(v));
}

std::string render_vertex_list(const std::vector<Vertex>& vs) {
    std::ostringstream out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) {
            out << ' ';
        }
        out << vs[i];
    }
    return out.str();
}

std::string render_edge(const StateDiagram& diagram, const Edge& e) {
    std::ostringstream out;
    out << '[' << render_vertex(diagram, e.from) << "] -(S=" << pauli_to_string(e.ancilla)
        << ", L=" << pauli_to_string(e.logical) << ", P=" << pauli_to_string(e.physical)
        << ")-> [" << render_vertex(diagram, e.to) << ']';
    return out.str();
}

std::string render_cycle(const StateDiagram& diagram, const Cycle& c) {
    std::ostringstream out;
    out << "length: " << c.length();
    for (const Edge& e : c.edges) {
        out << '\n' << render_edge(diagram, e);
    }
    return out.str();
}

std::string render_standard_path(const StateDiagram& diagram, const StandardPath& path) {
    std::ostringstream out;
    out << "time: " << path.time();
    for (const Edge& e : path.edges) {
        out << '\n' << render_edge(diagram, e);
    }
    return out.str();
}

std::string render_counterexample(const StateDiagram& diagram,
                                  const RecursiveCounterexample& counterexample) {
    std::ostringstream out;
    out << "first_edge: " << render_edge(diagram, counterexample.first_edge);
    out << "\ntail_length: " << counterexample.tail.size();
    for (const Edge& e : counterexample.tail) {
        out << '\n' << render_edge(diagram, e);
    }
    out << "\nloop:\n" << render_cycle(diagram, counterexample.loop);
    return out.str();
}

std::string render_subgroup(const StateDiagram& diagram, const SubgroupDescriptor& s) {
    std::ostringstream out;
    out << "order: " << s.members.size();
    out << "\nmembers: " << render_vertex_list(s.members);
    out << "\ngenerators:";
    if (s.generators.empty()) {
        out << " (none)";
    }
    for (Vertex g : s.generators) {
        out << "\n  " << render_vertex(diagram, g);
    }
    out << "\nclosure_verified: " << (s.closure_verified ? "true" : "false");
    return out.str();
}

std::string classification_report(const StateDiagram& diagram, const Classification& c) {
    const CodeParams& cp = diagram.encoder().params();
    ReportWriter w;
    w.kv("tool", std::string("quditconv ") + kVersion);
    w.kv("kind", "classification");
    w.kv("p", uint64_t{cp.p});
    w.kv("m", uint64_t{cp.m});
    w.kv("n", uint64_t{cp.n});
    w.kv("k", uint64_t{cp.k});
    w.kv("degenerate", cp.is_degenerate());
    w.kv("vertices", diagram.vertex_count());
    w.kv("edges_per_vertex", diagram.edges_per_vertex());
    w.kv("max_len", uint64_t{c.budgets.resolved_max_len(cp)});
    w.kv("repetition_budget", c.budgets.resolved_repetition(cp));
    w.kv("enum_budget", c.budgets.enum_budget);
    w.kv("catastrophic", c.catastrophic);
    w.kv("recursive", c.recursive);
    w.kv("criterion_met", c.criterion.criterion_met);
    w.kv("criterion_complete", c.criterion.complete);
    w.kv("criterion_records", uint64_t{c.criterion.records.size()});
    w.block("encoder", serialize(diagram.encoder()));
    if (c.catastrophic_witness) {
        w.block("catastrophic_witness", render_cycle(diagram, *c.catastrophic_witness));
    }
    if (c.recursive_counterexample) {
        w.block("recursive_counterexample",
                render_counterexample(diagram, *c.recursive_counterexample));
    }
    w.block("finite_memory_group", render_subgroup(diagram, c.finite_memory));
    w.block("zero_cycle_group", render_subgroup(diagram, c.zero_cycle));

    // Record sample: every nonzero-sum record, then leading records up to a
    // fixed cap, so reports stay diffable.
    const size_t kSample = 20;
    std::ostringstream records;
    size_t rendered = 0;
    for (size_t i = 0; i < c.criterion.records.size(); ++i) {
        const CriterionRecord& r = c.criterion.records[i];
        if (r.sum == 0 && rendered >= kSample) {
            continue;
        }
        if (rendered > 0) {
            records << '\n';
        }
        records << "record " << i << ": sum=" << int{r.sum}
                << " doubled=" << int{r.doubled_sum}
                << " f_path=" << render_vertex_list(r.f_path)
                << " p_cycle=" << render_vertex_list(r.p_cycle);
        ++rendered;
    }
    if (rendered > 0) {
        w.block("criterion_sample", records.str());
    }
    return w.str();
}

}  // namespace qconv
