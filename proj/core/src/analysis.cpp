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

#include "quditconv/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_set>

#include "quditconv/errors.hpp"

namespace qconv {

namespace {

constexpr uint64_t kNoVertex = std::numeric_limits<uint64_t>::max();

uint64_t capped_pow(uint64_t base, size_t exp, uint64_t cap) {
    uint64_t result = 1;
    for (size_t i = 0; i < exp; ++i) {
        if (result > cap / base) {
            return cap;
        }
        result *= base;
    }
    return result;
}

bool passes_raw(const EdgeFilter& filter, size_t physical_weight,
                size_t logical_weight) {
    if (filter.require_zero_physical && physical_weight != 0) {
        return false;
    }
    if (filter.require_identity_logical && logical_weight != 0) {
        return false;
    }
    return true;
}

// Memory-vertex arithmetic: vertices are base-p digit strings of length 2m,
// and composition of memory Paulis is digitwise addition.
Vertex vertex_compose(Vertex a, Vertex b, size_t m, uint32_t p) {
    Vertex out = 0;
    uint64_t scale = 1;
    for (size_t j = 0; j < 2 * m; ++j) {
        uint64_t da = a % p;
        uint64_t db = b % p;
        a /= p;
        b /= p;
        out += ((da + db) % p) * scale;
        scale *= p;
    }
    return out;
}

Vertex vertex_scale(Vertex a, uint32_t c, size_t m, uint32_t p) {
    Vertex out = 0;
    uint64_t scale = 1;
    for (size_t j = 0; j < 2 * m; ++j) {
        uint64_t da = a % p;
        a /= p;
        out += ((da * c) % p) * scale;
        scale *= p;
    }
    return out;
}

// Commutation exponent between two memory vertices.
uint8_t vertex_commutator(Vertex a, Vertex b, size_t m, const PrimeField& field) {
    uint32_t p = field.modulus();
    FpVec da(2 * m, 0);
    FpVec db(2 * m, 0);
    for (size_t j = 0; j < 2 * m; ++j) {
        da[j] = static_cast<uint8_t>(a % p);
        db[j] = static_cast<uint8_t>(b % p);
        a /= p;
        b /= p;
    }
    uint8_t acc = 0;
    for (size_t j = 0; j < m; ++j) {
        acc = field.add(acc, field.mul(da[m + j], db[j]));
        acc = field.sub(acc, field.mul(da[j], db[m + j]));
    }
    return acc;
}

SubgroupDescriptor make_descriptor(std::vector<Vertex> members, size_t m, uint32_t p) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    SubgroupDescriptor out;
    std::unordered_set<Vertex> span;
    span.insert(0);
    for (Vertex v : members) {
        if (span.count(v) != 0) {
            continue;
        }
        out.generators.push_back(v);
        std::vector<Vertex> snapshot(span.begin(), span.end());
        for (Vertex s : snapshot) {
            for (uint32_t c = 1; c < p; ++c) {
                span.insert(vertex_compose(s, vertex_scale(v, c, m, p), m, p));
            }
        }
    }
    bool closed = span.size() == members.size();
    if (closed) {
        for (Vertex v : members) {
            if (span.count(v) == 0) {
                closed = false;
                break;
            }
        }
    }
    out.members = std::move(members);
    out.closure_verified = closed;
    return out;
}

// Vertex-level reverse adjacency of the filtered subgraph.
std::vector<std::vector<Vertex>> reverse_adjacency(const StateDiagram& g,
                                                   const EdgeFilter& filter) {
    std::vector<std::vector<Vertex>> rev(static_cast<size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        g.for_each_edge_raw(v, [&](uint64_t, Vertex to, size_t pw, size_t lw) {
            if (passes_raw(filter, pw, lw)) {
                rev[to].push_back(v);
            }
        });
    }
    for (auto& list : rev) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return rev;
}

std::vector<uint8_t> backward_reachable(const std::vector<std::vector<Vertex>>& rev,
                                        const std::vector<uint8_t>& targets) {
    std::vector<uint8_t> mask(rev.size(), 0);
    std::deque<Vertex> queue;
    for (Vertex v = 0; v < rev.size(); ++v) {
        if (targets[v]) {
            mask[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex u : rev[v]) {
            if (!mask[u]) {
                mask[u] = 1;
                queue.push_back(u);
            }
        }
    }
    return mask;
}

// Least-sl_index filtered edge from a to b, if any.
std::optional<Edge> first_edge_between(const StateDiagram& g, const EdgeFilter& filter,
                                       Vertex a, Vertex b) {
    uint64_t found = kNoVertex;
    g.for_each_edge_raw(a, [&](uint64_t sl, Vertex to, size_t pw, size_t lw) {
        if (found == kNoVertex && to == b && passes_raw(filter, pw, lw)) {
            found = sl;
        }
    });
    if (found == kNoVertex) {
        return std::nullopt;
    }
    return g.edge(a, found);
}

// Shortest filtered path from `from` to the target set, as explicit edges.
// Deterministic: BFS visits vertices ascending within each layer and keeps
// the least-sl parent edge.
std::optional<std::vector<Edge>> bfs_path(const StateDiagram& g, const EdgeFilter& filter,
                                          Vertex from,
                                          const std::vector<uint8_t>& target) {
    size_t V = static_cast<size_t>(g.vertex_count());
    std::vector<Vertex> parent(V, kNoVertex);
    std::vector<uint64_t> parent_sl(V, 0);
    std::vector<uint8_t> seen(V, 0);
    std::deque<Vertex> queue;
    seen[from] = 1;
    queue.push_back(from);
    Vertex hit = target[from] ? from : kNoVertex;
    while (hit == kNoVertex && !queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        std::vector<std::pair<Vertex, uint64_t>> nexts;
        g.for_each_edge_raw(v, [&](uint64_t sl, Vertex to, size_t pw, size_t lw) {
            if (!passes_raw(filter, pw, lw) || seen[to]) {
                return;
            }
            for (auto& [t, s] : nexts) {
                if (t == to) {
                    return;
                }
            }
            nexts.emplace_back(to, sl);
        });
        std::sort(nexts.begin(), nexts.end());
        for (auto& [to, sl] : nexts) {
            if (seen[to]) {
                continue;
            }
            seen[to] = 1;
            parent[to] = v;
            parent_sl[to] = sl;
            if (target[to] && hit == kNoVertex) {
                hit = to;
            }
            queue.push_back(to);
        }
    }
    if (hit == kNoVertex) {
        return std::nullopt;
    }
    std::vector<Edge> edges;
    Vertex cur = hit;
    while (cur != from) {
        edges.push_back(g.edge(parent[cur], parent_sl[cur]));
        cur = parent[cur];
    }
    std::reverse(edges.begin(), edges.end());
    return edges;
}

void rotate_to_least(Cycle& cycle) {
    if (cycle.vertices.empty()) {
        return;
    }
    size_t best = 0;
    for (size_t i = 1; i < cycle.vertices.size(); ++i) {
        if (cycle.vertices[i] < cycle.vertices[best]) {
            best = i;
        }
    }
    std::rotate(cycle.vertices.begin(), cycle.vertices.begin() + best,
                cycle.vertices.end());
    std::rotate(cycle.edges.begin(), cycle.edges.begin() + best, cycle.edges.end());
}

// A zero-physical identity-logical cycle through v, assuming one exists.
std::optional<Cycle> cycle_through(const StateDiagram& g, const EdgeFilter& filter,
                                   Vertex v) {
    std::optional<Edge> self = first_edge_between(g, filter, v, v);
    if (self) {
        Cycle c;
        c.vertices = {v};
        c.edges = {*self};
        return c;
    }
    // Try each outgoing filtered edge v -> u, then a filtered path u -> v.
    std::vector<std::pair<uint64_t, Vertex>> outs;
    g.for_each_edge_raw(v, [&](uint64_t sl, Vertex to, size_t pw, size_t lw) {
        if (to != v && passes_raw(filter, pw, lw)) {
            for (auto& [s, t] : outs) {
                if (t == to) {
                    return;
                }
            }
            outs.emplace_back(sl, to);
        }
    });
    std::vector<uint8_t> target(static_cast<size_t>(g.vertex_count()), 0);
    target[v] = 1;
    for (auto& [sl, u] : outs) {
        std::optional<std::vector<Edge>> back = bfs_path(g, filter, u, target);
        if (!back) {
            continue;
        }
        Cycle c;
        c.vertices.push_back(v);
        c.edges.push_back(g.edge(v, sl));
        for (const Edge& e : *back) {
            c.vertices.push_back(e.from);
            c.edges.push_back(e);
        }
        // bfs_path ends at v, so vertices currently lists v once at the
        // start and each intermediate once.
        rotate_to_least(c);
        return c;
    }
    return std::nullopt;
}

}  // namespace

size_t AnalysisBudgets::resolved_max_len(const CodeParams& params) const {
    if (max_len != 0) {
        return max_len;
    }
    return static_cast<size_t>(
        capped_pow(params.p, 2 * params.m, StateDiagram::kMaxVertices));
}

uint64_t AnalysisBudgets::resolved_repetition(const CodeParams& params) const {
    return repetition_budget != 0 ? repetition_budget : params.p;
}

bool SubgroupDescriptor::contains(Vertex v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

std::pair<bool, std::optional<Cycle>> is_catastrophic(const StateDiagram& diagram,
                                                      const AnalysisBudgets& budgets) {
    (void)budgets;
    EdgeFilter zp = EdgeFilter::zero_physical();
    std::vector<Vertex> comp = diagram.scc(zp);

    Vertex bad_v = kNoVertex;
    uint64_t bad_sl = 0;
    for (Vertex v = 0; v < diagram.vertex_count() && bad_v == kNoVertex; ++v) {
        diagram.for_each_edge_raw(v, [&](uint64_t sl, Vertex to, size_t pw, size_t lw) {
            if (bad_v == kNoVertex && pw == 0 && lw >= 1 && comp[v] == comp[to]) {
                bad_v = v;
                bad_sl = sl;
            }
        });
    }
    if (bad_v == kNoVertex) {
        return {false, std::nullopt};
    }

    Edge witness_edge = diagram.edge(bad_v, bad_sl);
    Cycle cycle;
    if (witness_edge.to == bad_v) {
        cycle.vertices = {bad_v};
        cycle.edges = {witness_edge};
    } else {
        std::vector<uint8_t> target(static_cast<size_t>(diagram.vertex_count()), 0);
        target[bad_v] = 1;
        // comp[v] == comp[to] guarantees the return path exists.
        std::vector<Edge> back =
            bfs_path(diagram, zp, witness_edge.to, target).value();
        cycle.vertices.push_back(bad_v);
        cycle.edges.push_back(witness_edge);
        for (const Edge& e : back) {
            cycle.vertices.push_back(e.from);
            cycle.edges.push_back(e);
        }
        rotate_to_least(cycle);
    }
    return {true, std::move(cycle)};
}

std::pair<bool, std::optional<RecursiveCounterexample>> is_recursive(
    const StateDiagram& diagram, const AnalysisBudgets& budgets) {
    (void)budgets;
    EdgeFilter zp = EdgeFilter::zero_physical();
    EdgeFilter il = EdgeFilter::identity_logical();
    EdgeFilter zpil = EdgeFilter::zero_physical_identity_logical();

    std::vector<uint8_t> v_loop = diagram.loop_vertex_mask(zp);
    std::vector<uint8_t> w_loop = diagram.loop_vertex_mask(zpil);
    std::vector<Vertex> comp = diagram.scc(zp);

    // Vertices that can reach a zero-physical identity-logical loop along
    // identity-logical edges.
    std::vector<std::vector<Vertex>> rev = reverse_adjacency(diagram, il);
    std::vector<uint8_t> can_reach_w = backward_reachable(rev, w_loop);

    Vertex bad_v = kNoVertex;
    uint64_t bad_sl = 0;
    for (Vertex v = 0; v < diagram.vertex_count() && bad_v == kNoVertex; ++v) {
        if (!v_loop[v]) {
            continue;
        }
        diagram.for_each_edge_raw(v, [&](uint64_t sl, Vertex to, size_t pw, size_t lw) {
            if (bad_v != kNoVertex || lw != 1) {
                return;
            }
            // Edges lying on zero-physical cycles are not admissible first
            // edges; the cycle they ride is the loop the path starts on.
            if (pw == 0 && comp[v] == comp[to]) {
                return;
            }
            if (can_reach_w[to]) {
                bad_v = v;
                bad_sl = sl;
            }
        });
    }
    if (bad_v == kNoVertex) {
        return {true, std::nullopt};
    }

    RecursiveCounterexample ce;
    ce.first_edge = diagram.edge(bad_v, bad_sl);
    ce.tail = bfs_path(diagram, il, ce.first_edge.to, w_loop).value();
    Vertex loop_vertex = ce.tail.empty() ? ce.first_edge.to : ce.tail.back().to;
    ce.loop = cycle_through(diagram, zpil, loop_vertex).value();
    return {false, std::move(ce)};
}

SubgroupDescriptor finite_memory_group(const StateDiagram& diagram,
                                       const AnalysisBudgets& budgets) {
    (void)budgets;
    EdgeFilter il = EdgeFilter::identity_logical();
    std::vector<std::vector<Vertex>> rev = reverse_adjacency(diagram, il);
    std::vector<uint8_t> identity_only(static_cast<size_t>(diagram.vertex_count()), 0);
    identity_only[0] = 1;
    std::vector<uint8_t> mask = backward_reachable(rev, identity_only);
    std::vector<Vertex> members;
    for (Vertex v = 0; v < diagram.vertex_count(); ++v) {
        if (mask[v]) {
            members.push_back(v);
        }
    }
    return make_descriptor(std::move(members), diagram.encoder().params().m,
                           diagram.encoder().params().p);
}

SubgroupDescriptor zero_cycle_group(const StateDiagram& diagram,
                                    const AnalysisBudgets& budgets) {
    (void)budgets;
    std::vector<Vertex> members = diagram.loop_vertices(EdgeFilter::zero_physical());
    return make_descriptor(std::move(members), diagram.encoder().params().m,
                           diagram.encoder().params().p);
}

SubgroupDescriptor centralizer(const SubgroupDescriptor& S, size_t m, uint32_t p) {
    if (S.members.empty()) {
        throw ValidationError("centralizer of an empty set");
    }
    PrimeField field(p);
    const std::vector<Vertex>& gens = S.generators.empty() ? S.members : S.generators;

    // Row per generator g: v commutes with g iff [z_g | -x_g] . v = 0.
    FpMatrix rows(field, gens.size(), 2 * m);
    for (size_t r = 0; r < gens.size(); ++r) {
        Vertex g = gens[r];
        FpVec dg(2 * m, 0);
        for (size_t j = 0; j < 2 * m; ++j) {
            dg[j] = static_cast<uint8_t>(g % p);
            g /= p;
        }
        for (size_t j = 0; j < m; ++j) {
            rows.set(r, j, dg[m + j]);
            rows.set(r, m + j, field.neg(dg[j]));
        }
    }
    std::vector<FpVec> basis = rows.nullspace();

    // Expand the nullspace span into explicit vertex ids.
    std::vector<Vertex> basis_ids;
    for (const FpVec& b : basis) {
        Vertex id = 0;
        uint64_t scale = 1;
        for (size_t j = 0; j < 2 * m; ++j) {
            id += b[j] * scale;
            scale *= p;
        }
        basis_ids.push_back(id);
    }
    std::vector<Vertex> members = {0};
    for (Vertex b : basis_ids) {
        std::vector<Vertex> snapshot = members;
        for (uint32_t c = 1; c < p; ++c) {
            Vertex scaled = vertex_scale(b, c, m, p);
            for (Vertex s : snapshot) {
                members.push_back(vertex_compose(s, scaled, m, p));
            }
        }
    }
    return make_descriptor(std::move(members), m, p);
}

CriterionScan criterion_scan(const StateDiagram& diagram, const AnalysisBudgets& budgets) {
    const CodeParams& cp = diagram.encoder().params();
    PrimeField field(cp.p);
    size_t max_len = budgets.resolved_max_len(cp);
    uint64_t repetition = budgets.resolved_repetition(cp);

    PathEnumeration paths = diagram.enumerate_finite_standard_paths(max_len,
                                                                    budgets.enum_budget);
    CycleEnumeration cycles = diagram.enumerate_simple_cycles(
        EdgeFilter::zero_physical(), max_len, budgets.enum_budget);

    CriterionScan scan;
    scan.complete = paths.complete && cycles.complete;
    for (const StandardPath& path : paths.paths) {
        for (const Cycle& cycle : cycles.cycles) {
            // Base sum over the simple cycle; a q-fold traversal scales it.
            uint8_t base = 0;
            for (size_t j = 1; j < path.memory_sequence.size(); ++j) {
                for (Vertex mk : cycle.vertices) {
                    base = field.add(base, vertex_commutator(path.memory_sequence[j], mk,
                                                             cp.m, field));
                }
            }
            for (uint64_t q = 1; q <= repetition; ++q) {
                if (scan.records.size() >= budgets.enum_budget) {
                    scan.complete = false;
                    break;
                }
                CriterionRecord rec;
                rec.f_path = path.memory_sequence;
                rec.p_cycle.reserve(cycle.vertices.size() * q);
                for (uint64_t rep = 0; rep < q; ++rep) {
                    rec.p_cycle.insert(rec.p_cycle.end(), cycle.vertices.begin(),
                                       cycle.vertices.end());
                }
                rec.sum = field.reduce(static_cast<int64_t>(base) *
                                       static_cast<int64_t>(q % cp.p));
                rec.doubled_sum = field.add(rec.sum, rec.sum);
                if (rec.sum != 0) {
                    scan.criterion_met = true;
                }
                scan.records.push_back(std::move(rec));
            }
            if (!scan.complete) {
                break;
            }
        }
        if (!scan.complete) {
            break;
        }
    }
    return scan;
}

uint8_t phase_oracle(const StateDiagram& diagram, const std::vector<Vertex>& f_path,
                     const std::vector<Vertex>& p_cycle) {
    const CodeParams& cp = diagram.encoder().params();
    PrimeField field(cp.p);
    if (f_path.empty() || p_cycle.empty()) {
        throw InvalidSequenceError("phase oracle needs nonempty sequences");
    }
    for (Vertex v : f_path) {
        if (v == 0) {
            throw InvalidSequenceError("finite standard path states must be non-identity");
        }
        if (v >= diagram.vertex_count()) {
            throw InvalidSequenceError("path state out of range");
        }
    }
    EdgeFilter il = EdgeFilter::identity_logical();
    EdgeFilter zp = EdgeFilter::zero_physical();
    for (size_t i = 0; i + 1 < f_path.size(); ++i) {
        if (!first_edge_between(diagram, il, f_path[i], f_path[i + 1])) {
            throw InvalidSequenceError("no identity-logical edge between path states " +
                                       std::to_string(i) + " and " + std::to_string(i + 1));
        }
    }
    if (!first_edge_between(diagram, il, f_path.back(), 0)) {
        throw InvalidSequenceError("path does not terminate on the identity memory");
    }
    for (size_t i = 0; i < p_cycle.size(); ++i) {
        Vertex a = p_cycle[i];
        Vertex b = p_cycle[(i + 1) % p_cycle.size()];
        if (a >= diagram.vertex_count() || !first_edge_between(diagram, zp, a, b)) {
            throw InvalidSequenceError("no zero-physical edge closing cycle step " +
                                       std::to_string(i));
        }
    }

    // Appearance bookkeeping: m_0 shows up on the input side only, each
    // intermediary state on both sides, the terminal identity on the output
    // side only (where its commutators vanish).
    std::vector<std::pair<Vertex, uint32_t>> appearances;
    appearances.emplace_back(f_path[0], 1);
    for (size_t j = 1; j < f_path.size(); ++j) {
        appearances.emplace_back(f_path[j], 2);
    }
    appearances.emplace_back(0, 1);

    uint8_t total = 0;
    for (auto& [state, count] : appearances) {
        for (Vertex mk : p_cycle) {
            uint8_t c = vertex_commutator(state, mk, cp.m, field);
            for (uint32_t rep = 0; rep < count; ++rep) {
                total = field.add(total, c);
            }
        }
    }
    return total;
}

PrecipitationRecord precipitation_orbit(const StateDiagram& diagram, size_t ancilla_index,
                                        uint8_t exponent, size_t max_steps) {
    const CodeParams& cp = diagram.encoder().params();
    PrimeField field(cp.p);
    size_t a = cp.ancilla_count();
    if (ancilla_index < 1 || ancilla_index > a) {
        throw ValidationError("ancilla index " + std::to_string(ancilla_index) +
                              " out of [1, " + std::to_string(a) + "]");
    }
    if (exponent >= cp.p) {
        throw ValidationError("exponent out of [0, p)");
    }

    PrecipitationRecord record;
    record.trajectory.push_back(0);
    if (exponent == 0) {
        record.reached_identity = true;
        record.steps_to_identity = 0;
        return record;
    }

    // Injected offset b: the memory part of the encoder image of Z_i^a on
    // the ancilla, entering alongside the linear memory propagation.
    PauliOp anc = PauliOp::identity(cp.p, a);
    anc.z[ancilla_index - 1] = exponent;
    EncoderTriple inj = diagram.encoder().apply_frame(
        PauliOp::identity(cp.p, cp.m), anc, PauliOp::identity(cp.p, cp.k));
    Vertex b = pauli_to_index(inj.memory_out);

    auto step = [&](Vertex mem) {
        EncoderTriple t = diagram.encoder().apply_frame(
            index_to_pauli(mem, cp.m, cp.p), PauliOp::identity(cp.p, a),
            PauliOp::identity(cp.p, cp.k));
        return pauli_to_index(t.memory_out);
    };

    // Pure orbit with the single time-0 injection, watching for a repeat.
    std::vector<int64_t> seen_at(static_cast<size_t>(diagram.vertex_count()), -1);
    record.injection_times.push_back(0);
    Vertex cur = b;
    record.trajectory.push_back(cur);
    size_t t = 1;
    while (true) {
        if (cur == 0) {
            record.reached_identity = true;
            record.steps_to_identity = t;
            return record;
        }
        if (seen_at[cur] >= 0) {
            record.loop_entry = static_cast<size_t>(seen_at[cur]);
            record.loop_length = t - static_cast<size_t>(seen_at[cur]);
            break;
        }
        seen_at[cur] = static_cast<int64_t>(t);
        if (t >= max_steps) {
            return record;
        }
        cur = step(cur);
        record.trajectory.push_back(cur);
        ++t;
    }

    // Reinjection schedule: further injections at times l, 2l, ...,
    // (p-1) l accumulate p copies of the looping tail, which cancel.
    size_t l = record.loop_length;
    record.trajectory.assign(1, 0);
    cur = 0;
    for (size_t time = 0; time < max_steps; ++time) {
        bool scheduled = time % l == 0 && time / l < cp.p && time <= (cp.p - 1) * l;
        Vertex next = step(cur);
        if (scheduled) {
            next = vertex_compose(next, b, cp.m, cp.p);
            if (time != 0) {
                record.injection_times.push_back(time);
            }
        }
        cur = next;
        record.trajectory.push_back(cur);
        if (cur == 0 && time + 1 > (cp.p - 1) * l) {
            record.reached_identity = true;
            record.steps_to_identity = time + 1;
            return record;
        }
    }
    return record;
}

CorollaryReport verify_corollary_p0_equals_centralizer(const StateDiagram& diagram,
                                                       const AnalysisBudgets& budgets) {
    const CodeParams& cp = diagram.encoder().params();
    CorollaryReport report;
    report.zero_cycle = zero_cycle_group(diagram, budgets);
    report.finite_memory = finite_memory_group(diagram, budgets);
    report.centralizer_of_finite = centralizer(report.finite_memory, cp.m, cp.p);
    report.equal = report.zero_cycle.members == report.centralizer_of_finite.members;
    report.criterion_met = criterion_scan(diagram, budgets).criterion_met;
    std::set_difference(report.zero_cycle.members.begin(), report.zero_cycle.members.end(),
                        report.centralizer_of_finite.members.begin(),
                        report.centralizer_of_finite.members.end(),
                        std::back_inserter(report.in_zero_cycle_only));
    std::set_difference(report.centralizer_of_finite.members.begin(),
                        report.centralizer_of_finite.members.end(),
                        report.zero_cycle.members.begin(), report.zero_cycle.members.end(),
                        std::back_inserter(report.in_centralizer_only));
    return report;
}

Classification classify(const StateDiagram& diagram, const AnalysisBudgets& budgets) {
    Classification out;
    out.budgets = budgets;
    auto [cat, cat_witness] = is_catastrophic(diagram, budgets);
    out.catastrophic = cat;
    out.catastrophic_witness = std::move(cat_witness);
    auto [rec, rec_counter] = is_recursive(diagram, budgets);
    out.recursive = rec;
    out.recursive_counterexample = std::move(rec_counter);
    out.finite_memory = finite_memory_group(diagram, budgets);
    out.zero_cycle = zero_cycle_group(diagram, budgets);
    out.criterion = criterion_scan(diagram, budgets);
    return out;
}

}  // namespace qconv
