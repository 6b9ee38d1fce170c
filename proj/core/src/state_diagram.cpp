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

#include "quditconv/state_diagram.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "quditconv/errors.hpp"

namespace qconv {

namespace {

uint64_t checked_pow(uint64_t base, size_t exp) {
    uint64_t result = 1;
    for (size_t i = 0; i < exp; ++i) {
        if (result > (uint64_t{1} << 62) / base) {
            throw ScaleGuardError("state space p^e overflows the working range");
        }
        result *= base;
    }
    return result;
}

bool raw_pass(const EdgeFilter& filter, size_t physical_weight, size_t logical_weight) {
    if (filter.require_zero_physical && physical_weight != 0) {
        return false;
    }
    if (filter.require_identity_logical && logical_weight != 0) {
        return false;
    }
    return true;
}

}  // namespace

bool EdgeFilter::passes(const Edge& e) const {
    if (require_zero_physical && e.physical.weight() != 0) {
        return false;
    }
    if (require_identity_logical && !e.logical.is_identity()) {
        return false;
    }
    if (extra && !extra(e)) {
        return false;
    }
    return true;
}

EdgeFilter EdgeFilter::none() {
    return EdgeFilter{};
}

EdgeFilter EdgeFilter::zero_physical() {
    EdgeFilter f;
    f.require_zero_physical = true;
    return f;
}

EdgeFilter EdgeFilter::identity_logical() {
    EdgeFilter f;
    f.require_identity_logical = true;
    return f;
}

EdgeFilter EdgeFilter::zero_physical_identity_logical() {
    EdgeFilter f;
    f.require_zero_physical = true;
    f.require_identity_logical = true;
    return f;
}

EdgeFilter EdgeFilter::reject_all() {
    EdgeFilter f;
    f.extra = [](const Edge&) { return false; };
    return f;
}

StateDiagram::StateDiagram(SymplecticEncoder encoder) : encoder_(std::move(encoder)) {
    encoder_.require_valid();
    const CodeParams& cp = encoder_.params();
    vertex_count_ = checked_pow(cp.p, 2 * cp.m);
    edges_per_vertex_ = checked_pow(cp.p, cp.ancilla_count() + 2 * cp.k);

    PrimeField field(cp.p);
    size_t q = cp.qudits();
    size_t a = cp.ancilla_count();
    uint64_t logical_space = checked_pow(cp.p, 2 * cp.k);

    // Encoder columns hit by the memory input coordinates: x-part columns
    // 0..m-1, z-part columns q..q+m-1.
    mem_columns_.assign(2 * cp.m, FpVec(2 * q, 0));
    for (size_t j = 0; j < cp.m; ++j) {
        for (size_t r = 0; r < 2 * q; ++r) {
            mem_columns_[j][r] = encoder_.matrix().at(r, j);
            mem_columns_[cp.m + j][r] = encoder_.matrix().at(r, q + j);
        }
    }

    sl_image_.reserve(edges_per_vertex_);
    sl_logical_weight_.reserve(edges_per_vertex_);
    for (uint64_t sl = 0; sl < edges_per_vertex_; ++sl) {
        uint64_t s_idx = sl / logical_space;
        uint64_t l_idx = sl % logical_space;
        FpVec input(2 * q, 0);
        uint64_t s_rest = s_idx;
        for (size_t i = 0; i < a; ++i) {
            input[q + cp.m + i] = static_cast<uint8_t>(s_rest % cp.p);
            s_rest /= cp.p;
        }
        PauliOp logical = index_to_pauli(l_idx, cp.k, cp.p);
        for (size_t i = 0; i < cp.k; ++i) {
            input[cp.m + a + i] = logical.x[i];
            input[q + cp.m + a + i] = logical.z[i];
        }
        sl_image_.push_back(encoder_.matrix().mul_vec(input));
        sl_logical_weight_.push_back(static_cast<uint16_t>(logical.weight()));
    }
}

void StateDiagram::check_scale() const {
    if (vertex_count_ > kMaxVertices) {
        throw ScaleGuardError("state diagram has " + std::to_string(vertex_count_) +
                              " vertices, beyond the " + std::to_string(kMaxVertices) +
                              " guard");
    }
}

PauliOp StateDiagram::vertex_pauli(Vertex v) const {
    return index_to_pauli(v, encoder_.params().m, encoder_.params().p);
}

FpVec StateDiagram::memory_image(Vertex v) const {
    const CodeParams& cp = encoder_.params();
    size_t q = cp.qudits();
    FpVec out(2 * q, 0);
    uint64_t rest = v;
    for (size_t j = 0; j < 2 * cp.m && rest != 0; ++j) {
        uint8_t digit = static_cast<uint8_t>(rest % cp.p);
        rest /= cp.p;
        if (digit == 0) {
            continue;
        }
        const FpVec& col = mem_columns_[j];
        for (size_t r = 0; r < 2 * q; ++r) {
            out[r] = static_cast<uint8_t>((out[r] + digit * col[r]) % cp.p);
        }
    }
    return out;
}

namespace {

// Splits an encoder output vector into (to-vertex, physical weight) in the
// output wire roles [physical_1..physical_n, memory_1..memory_m].
struct OutputView {
    uint32_t p;
    size_t n;
    size_t m;
    size_t q;

    explicit OutputView(const CodeParams& cp)
        : p(cp.p), n(cp.n), m(cp.m), q(cp.qudits()) {}

    Vertex to_vertex(const FpVec& out) const {
        Vertex v = 0;
        uint64_t scale = 1;
        for (size_t j = 0; j < m; ++j) {
            v += out[n + j] * scale;
            scale *= p;
        }
        for (size_t j = 0; j < m; ++j) {
            v += out[q + n + j] * scale;
            scale *= p;
        }
        return v;
    }

    size_t physical_weight(const FpVec& out) const {
        size_t w = 0;
        for (size_t j = 0; j < n; ++j) {
            if (out[j] != 0 || out[q + j] != 0) {
                ++w;
            }
        }
        return w;
    }
};

}  // namespace

// Core edge sweep shared by all the graph algorithms. Adds each (S, L)
// image onto the memory image of v and hands the caller the raw facts.
template <typename Fn>
static void raw_edges(const CodeParams& cp, const std::vector<FpVec>& sl_image,
                      const std::vector<uint16_t>& sl_logical_weight,
                      const FpVec& mem_img, Fn&& fn) {
    OutputView view(cp);
    size_t dim = 2 * cp.qudits();
    FpVec out(dim, 0);
    for (uint64_t sl = 0; sl < sl_image.size(); ++sl) {
        const FpVec& offset = sl_image[sl];
        uint32_t acc = 0;
        for (size_t r = 0; r < dim; ++r) {
            acc = uint32_t{mem_img[r]} + offset[r];
            out[r] = static_cast<uint8_t>(acc >= cp.p ? acc - cp.p : acc);
        }
        fn(sl, view.to_vertex(out), view.physical_weight(out),
           size_t{sl_logical_weight[sl]});
    }
}

void StateDiagram::for_each_edge_raw(
    Vertex v, const std::function<void(uint64_t, Vertex, size_t, size_t)>& fn) const {
    FpVec mem_img = memory_image(v);
    raw_edges(encoder_.params(), sl_image_, sl_logical_weight_, mem_img,
              [&](uint64_t sl, Vertex to, size_t pw, size_t lw) { fn(sl, to, pw, lw); });
}

Edge StateDiagram::edge(Vertex v, uint64_t sl_index) const {
    if (v >= vertex_count_ || sl_index >= edges_per_vertex_) {
        throw IndexOutOfRangeError("edge request (" + std::to_string(v) + ", " +
                                   std::to_string(sl_index) + ") out of range");
    }
    const CodeParams& cp = encoder_.params();
    uint64_t logical_space = 1;
    for (size_t i = 0; i < 2 * cp.k; ++i) {
        logical_space *= cp.p;
    }
    uint64_t s_idx = sl_index / logical_space;
    uint64_t l_idx = sl_index % logical_space;

    PauliOp ancilla = PauliOp::identity(cp.p, cp.ancilla_count());
    uint64_t s_rest = s_idx;
    for (size_t i = 0; i < cp.ancilla_count(); ++i) {
        ancilla.z[i] = static_cast<uint8_t>(s_rest % cp.p);
        s_rest /= cp.p;
    }
    PauliOp logical = index_to_pauli(l_idx, cp.k, cp.p);

    EncoderTriple triple = encoder_.apply_frame(vertex_pauli(v), ancilla, logical);
    Edge e;
    e.from = v;
    e.to = pauli_to_index(triple.memory_out);
    e.sl_index = sl_index;
    e.ancilla = std::move(triple.ancilla_in);
    e.logical = std::move(triple.logical_in);
    e.physical = std::move(triple.physical_out);
    return e;
}

std::vector<Edge> StateDiagram::edges_from(Vertex v, const EdgeFilter& filter) const {
    std::vector<Edge> edges;
    for (uint64_t sl = 0; sl < edges_per_vertex_; ++sl) {
        Edge e = edge(v, sl);
        if (filter.passes(e)) {
            edges.push_back(std::move(e));
        }
    }
    return edges;
}

namespace {

constexpr uint32_t kUnvisited = std::numeric_limits<uint32_t>::max();

}  // namespace

std::vector<Vertex> StateDiagram::scc(const EdgeFilter& filter) const {
    check_scale();
    size_t V = static_cast<size_t>(vertex_count_);
    std::vector<uint32_t> index(V, kUnvisited);
    std::vector<uint32_t> low(V, 0);
    std::vector<uint8_t> on_stack(V, 0);
    std::vector<Vertex> comp(V, 0);
    std::vector<Vertex> tarjan_stack;
    uint32_t next_index = 0;

    // Iterative Tarjan. Each frame keeps the filtered successor list so the
    // expensive edge sweep runs once per vertex.
    struct Frame {
        Vertex v;
        std::vector<Vertex> succ;
        size_t next = 0;
    };

    auto successors = [&](Vertex v) {
        std::vector<Vertex> succ;
        if (!filter.extra) {
            FpVec mem_img = memory_image(v);
            raw_edges(encoder_.params(), sl_image_, sl_logical_weight_, mem_img,
                      [&](uint64_t, Vertex to, size_t pw, size_t lw) {
                          if (raw_pass(filter, pw, lw)) {
                              succ.push_back(to);
                          }
                      });
        } else {
            for (uint64_t sl = 0; sl < edges_per_vertex_; ++sl) {
                Edge e = edge(v, sl);
                if (filter.passes(e)) {
                    succ.push_back(e.to);
                }
            }
        }
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        return succ;
    };

    std::vector<Frame> frames;
    for (Vertex root = 0; root < vertex_count_; ++root) {
        if (index[root] != kUnvisited) {
            continue;
        }
        frames.push_back(Frame{root, successors(root), 0});
        index[root] = low[root] = next_index++;
        tarjan_stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            bool descended = false;
            while (f.next < f.succ.size()) {
                Vertex w = f.succ[f.next];
                ++f.next;
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = next_index++;
                    tarjan_stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back(Frame{w, successors(w), 0});
                    descended = true;
                    break;
                }
                if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            }
            if (descended) {
                continue;
            }
            Vertex v = f.v;
            if (low[v] == index[v]) {
                Vertex least = v;
                size_t first = tarjan_stack.size();
                while (true) {
                    --first;
                    least = std::min(least, tarjan_stack[first]);
                    if (tarjan_stack[first] == v) {
                        break;
                    }
                }
                for (size_t i = first; i < tarjan_stack.size(); ++i) {
                    comp[tarjan_stack[i]] = least;
                    on_stack[tarjan_stack[i]] = 0;
                }
                tarjan_stack.resize(first);
            }
            frames.pop_back();
            if (!frames.empty()) {
                low[frames.back().v] = std::min(low[frames.back().v], low[v]);
            }
        }
    }
    return comp;
}

std::vector<uint8_t> StateDiagram::loop_vertex_mask(const EdgeFilter& filter) const {
    check_scale();
    std::vector<Vertex> comp = scc(filter);
    size_t V = static_cast<size_t>(vertex_count_);
    std::vector<uint32_t> comp_size(V, 0);
    for (Vertex v = 0; v < vertex_count_; ++v) {
        ++comp_size[comp[v]];
    }
    std::vector<uint8_t> mask(V, 0);
    for (Vertex v = 0; v < vertex_count_; ++v) {
        if (comp_size[comp[v]] >= 2) {
            mask[v] = 1;
            continue;
        }
        // Singleton component: on a cycle iff it has a self-loop.
        bool self_loop = false;
        if (!filter.extra) {
            FpVec mem_img = memory_image(v);
            raw_edges(encoder_.params(), sl_image_, sl_logical_weight_, mem_img,
                      [&](uint64_t, Vertex to, size_t pw, size_t lw) {
                          if (to == v && raw_pass(filter, pw, lw)) {
                              self_loop = true;
                          }
                      });
        } else {
            for (uint64_t sl = 0; sl < edges_per_vertex_ && !self_loop; ++sl) {
                Edge e = edge(v, sl);
                self_loop = e.to == v && filter.passes(e);
            }
        }
        mask[v] = self_loop ? 1 : 0;
    }
    return mask;
}

std::vector<Vertex> StateDiagram::loop_vertices(const EdgeFilter& filter) const {
    std::vector<uint8_t> mask = loop_vertex_mask(filter);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count_; ++v) {
        if (mask[v]) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<uint8_t> StateDiagram::reachable_mask(const EdgeFilter& filter,
                                                  const std::vector<Vertex>& start) const {
    check_scale();
    size_t V = static_cast<size_t>(vertex_count_);
    std::vector<uint8_t> mask(V, 0);
    std::deque<Vertex> queue;
    for (Vertex v : start) {
        if (v >= vertex_count_) {
            throw IndexOutOfRangeError("start vertex " + std::to_string(v) +
                                       " out of range");
        }
        if (!mask[v]) {
            mask[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        auto visit = [&](Vertex to) {
            if (!mask[to]) {
                mask[to] = 1;
                queue.push_back(to);
            }
        };
        if (!filter.extra) {
            FpVec mem_img = memory_image(v);
            raw_edges(encoder_.params(), sl_image_, sl_logical_weight_, mem_img,
                      [&](uint64_t, Vertex to, size_t pw, size_t lw) {
                          if (raw_pass(filter, pw, lw)) {
                              visit(to);
                          }
                      });
        } else {
            for (uint64_t sl = 0; sl < edges_per_vertex_; ++sl) {
                Edge e = edge(v, sl);
                if (filter.passes(e)) {
                    visit(e.to);
                }
            }
        }
    }
    return mask;
}

std::vector<Vertex> StateDiagram::reachable(const EdgeFilter& filter,
                                            const std::vector<Vertex>& start) const {
    std::vector<uint8_t> mask = reachable_mask(filter, start);
    std::vector<Vertex> out;
    for (Vertex v = 0; v < vertex_count_; ++v) {
        if (mask[v]) {
            out.push_back(v);
        }
    }
    return out;
}

namespace {

// Vertex-level successor table: for each reachable target, the least
// sl_index edge that passes the filter.
struct SuccEdge {
    Vertex to;
    uint64_t sl_index;
};

}  // namespace

// Deterministic vertex-level adjacency: targets ascending, each with its
// least qualifying sl_index.
static std::vector<SuccEdge> vertex_successors(const StateDiagram& g, Vertex v,
                                               const EdgeFilter& filter) {
    std::vector<SuccEdge> succ;
    if (!filter.extra) {
        g.for_each_edge_raw(v, [&](uint64_t sl, Vertex to, size_t pw, size_t lw) {
            if (!raw_pass(filter, pw, lw)) {
                return;
            }
            for (const SuccEdge& s : succ) {
                if (s.to == to) {
                    return;
                }
            }
            succ.push_back(SuccEdge{to, sl});
        });
    } else {
        for (uint64_t sl = 0; sl < g.edges_per_vertex(); ++sl) {
            Edge e = g.edge(v, sl);
            if (!filter.passes(e)) {
                continue;
            }
            bool seen = false;
            for (const SuccEdge& s : succ) {
                if (s.to == e.to) {
                    seen = true;
                    break;
                }
            }
            if (!seen) {
                succ.push_back(SuccEdge{e.to, sl});
            }
        }
    }
    std::sort(succ.begin(), succ.end(),
              [](const SuccEdge& a, const SuccEdge& b) { return a.to < b.to; });
    return succ;
}

static std::vector<std::vector<SuccEdge>> vertex_adjacency(const StateDiagram& g,
                                                           const EdgeFilter& filter) {
    std::vector<std::vector<SuccEdge>> adj(static_cast<size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        adj[v] = vertex_successors(g, v, filter);
    }
    return adj;
}

// True when some edge path from `from` reaches `target` using only
// unblocked vertices >= floor as interior points. `target` itself may be
// blocked; only a direct edge into it counts. The enumeration DFS consults
// this before descending so it never wanders a subtree that cannot emit
// another cycle or path; dense diagrams otherwise stall on dead ends.
static bool can_reach(const std::vector<std::vector<SuccEdge>>& adj, Vertex from,
                      Vertex target, Vertex floor, const std::vector<uint8_t>& blocked,
                      std::vector<uint8_t>& seen) {
    if (from == target) {
        return true;
    }
    std::fill(seen.begin(), seen.end(), 0);
    std::vector<Vertex> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (const SuccEdge& s : adj[u]) {
            if (s.to == target) {
                return true;
            }
            if (s.to < floor || blocked[s.to] || seen[s.to]) {
                continue;
            }
            seen[s.to] = 1;
            stack.push_back(s.to);
        }
    }
    return false;
}

CycleEnumeration StateDiagram::enumerate_simple_cycles(const EdgeFilter& filter,
                                                       size_t max_len,
                                                       uint64_t budget) const {
    check_scale();
    if (max_len < 1) {
        throw ValidationError("cycle enumeration needs max_len >= 1");
    }
    CycleEnumeration result;

    // Depth-first search rooted at each vertex r in turn, restricted to
    // vertices >= r, so every cycle is found exactly once and already in
    // its least rotation (r is the unique minimum of a simple cycle).
    std::vector<std::vector<SuccEdge>> adj = vertex_adjacency(*this, filter);
    std::vector<uint8_t> on_path(static_cast<size_t>(vertex_count_), 0);
    std::vector<uint8_t> seen(static_cast<size_t>(vertex_count_), 0);
    std::vector<Vertex> path;
    std::vector<uint64_t> path_sl;

    struct Frame {
        Vertex v = 0;
        size_t next = 0;
    };

    for (Vertex root = 0; root < vertex_count_; ++root) {
        std::vector<Frame> frames{Frame{root, 0}};
        path.assign(1, root);
        path_sl.clear();
        on_path[root] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next >= adj[f.v].size()) {
                on_path[path.back()] = 0;
                path.pop_back();
                if (!path_sl.empty()) {
                    path_sl.pop_back();
                }
                frames.pop_back();
                continue;
            }
            const SuccEdge& s = adj[f.v][f.next];
            ++f.next;
            if (s.to == root) {
                if (result.cycles.size() >= budget) {
                    result.complete = false;
                    break;
                }
                Cycle cycle;
                cycle.vertices = path;
                for (size_t i = 0; i + 1 < path.size(); ++i) {
                    cycle.edges.push_back(edge(path[i], path_sl[i]));
                }
                cycle.edges.push_back(edge(path.back(), s.sl_index));
                result.cycles.push_back(std::move(cycle));
                continue;
            }
            if (s.to < root || on_path[s.to] || path.size() >= max_len ||
                !can_reach(adj, s.to, root, root, on_path, seen)) {
                continue;
            }
            path.push_back(s.to);
            path_sl.push_back(s.sl_index);
            on_path[s.to] = 1;
            frames.push_back(Frame{s.to, 0});
        }
        for (Vertex v : path) {
            on_path[v] = 0;
        }
        if (!result.complete) {
            break;
        }
    }
    return result;
}

PathEnumeration StateDiagram::enumerate_finite_standard_paths(size_t max_len,
                                                              uint64_t budget) const {
    check_scale();
    PathEnumeration result;
    if (max_len < 1) {
        return result;
    }
    EdgeFilter filter = EdgeFilter::identity_logical();
    const Vertex identity = 0;

    std::vector<std::vector<SuccEdge>> adj = vertex_adjacency(*this, filter);
    std::vector<uint8_t> on_path(static_cast<size_t>(vertex_count_), 0);
    std::vector<uint8_t> seen(static_cast<size_t>(vertex_count_), 0);
    std::vector<Vertex> path;
    std::vector<uint64_t> path_sl;

    struct Frame {
        Vertex v = 0;
        size_t next = 0;
    };

    for (Vertex start = 1; start < vertex_count_ && result.complete; ++start) {
        std::vector<Frame> frames{Frame{start, 0}};
        path.assign(1, start);
        path_sl.clear();
        on_path[start] = 1;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next >= adj[f.v].size()) {
                on_path[path.back()] = 0;
                path.pop_back();
                if (!path_sl.empty()) {
                    path_sl.pop_back();
                }
                frames.pop_back();
                continue;
            }
            const SuccEdge& s = adj[f.v][f.next];
            ++f.next;
            if (s.to == identity) {
                if (result.paths.size() >= budget) {
                    result.complete = false;
                    break;
                }
                StandardPath sp;
                sp.memory_sequence = path;
                for (size_t i = 0; i + 1 < path.size(); ++i) {
                    sp.edges.push_back(edge(path[i], path_sl[i]));
                }
                sp.edges.push_back(edge(path.back(), s.sl_index));
                result.paths.push_back(std::move(sp));
                continue;
            }
            if (on_path[s.to] || path.size() >= max_len ||
                !can_reach(adj, s.to, identity, 0, on_path, seen)) {
                continue;
            }
            path.push_back(s.to);
            path_sl.push_back(s.sl_index);
            on_path[s.to] = 1;
            frames.push_back(Frame{s.to, 0});
        }
        for (Vertex v : path) {
            on_path[v] = 0;
        }
    }
    return result;
}

}  // namespace qconv
