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

#ifndef QUDITCONV_STATE_DIAGRAM_HPP
#define QUDITCONV_STATE_DIAGRAM_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "quditconv/encoder.hpp"
#include "quditconv/pauli.hpp"

namespace qconv {

/// Vertex id: pauli_to_index of an m-qudit memory Pauli, in [0, p^{2m}).
using Vertex = uint64_t;

/// One state-diagram transition. sl_index is the lexicographic rank of the
/// (ancilla, logical) input pair and fixes a deterministic edge order.
struct Edge {
    Vertex from = 0;
    Vertex to = 0;
    uint64_t sl_index = 0;
    PauliOp ancilla;
    PauliOp logical;
    PauliOp physical;
};

/// Pure edge predicate. The two flags cover the subgraphs the analyses use;
/// extra supports ad-hoc predicates (tests use it to build edgeless graphs).
struct EdgeFilter {
    bool require_zero_physical = false;
    bool require_identity_logical = false;
    std::function<bool(const Edge&)> extra;

    bool passes(const Edge& e) const;

    static EdgeFilter none();
    static EdgeFilter zero_physical();
    static EdgeFilter identity_logical();
    static EdgeFilter zero_physical_identity_logical();
    static EdgeFilter reject_all();
};

/// Simple cycle, stored in its lexicographically least rotation. Edge i
/// runs vertices[i] -> vertices[(i+1) % len]. Parallel transitions between
/// the same vertex pair are represented by the least qualifying sl_index.
struct Cycle {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    size_t length() const { return vertices.size(); }
};

struct CycleEnumeration {
    std::vector<Cycle> cycles;
    /// False when the enumeration budget cut the stream short.
    bool complete = true;
};

/// Finite standard path: memory states [M_0 .. M_{t-1}], none the identity,
/// M_0 != identity, followed by one terminating step onto the identity
/// memory. edges holds the t transitions including the terminal one; every
/// edge has identity logical input.
struct StandardPath {
    std::vector<Vertex> memory_sequence;
    std::vector<Edge> edges;

    size_t time() const { return memory_sequence.size(); }
};

struct PathEnumeration {
    std::vector<StandardPath> paths;
    bool complete = true;
};

/// Implicit directed multigraph on the p^{2m} memory Paulis of an encoder.
/// Vertices are memory states; each vertex has p^{(n-k)+2k} outgoing edges,
/// one per Z-type ancilla input S and logical input L, in lexicographic
/// (S, L) order. Edges are computed on demand from the encoder matrix.
class StateDiagram {
  public:
    /// Graph algorithms refuse instances beyond this many vertices.
    static constexpr uint64_t kMaxVertices = 1000000;

    /// Default cap on enumerated cycles or paths per call.
    static constexpr uint64_t kDefaultEnumBudget = 200000;

    explicit StateDiagram(SymplecticEncoder encoder);

    const SymplecticEncoder& encoder() const { return encoder_; }

    uint64_t vertex_count() const { return vertex_count_; }
    uint64_t edges_per_vertex() const { return edges_per_vertex_; }

    PauliOp vertex_pauli(Vertex v) const;

    /// The edge from v with the given (S, L) rank.
    Edge edge(Vertex v, uint64_t sl_index) const;

    /// All outgoing edges of v that pass the filter, in sl_index order.
    std::vector<Edge> edges_from(Vertex v, const EdgeFilter& filter) const;

    /// Strongly connected components of the filtered subgraph. Entry v is
    /// the component id of vertex v; ids equal the smallest member vertex.
    std::vector<Vertex> scc(const EdgeFilter& filter) const;

    /// Vertices lying on at least one cycle of the filtered subgraph
    /// (self-loops included), ascending.
    std::vector<Vertex> loop_vertices(const EdgeFilter& filter) const;

    /// Same set as a 0/1 mask indexed by vertex id.
    std::vector<uint8_t> loop_vertex_mask(const EdgeFilter& filter) const;

    /// Vertices reachable from start via >= 0 filtered edges, ascending.
    std::vector<Vertex> reachable(const EdgeFilter& filter,
                                  const std::vector<Vertex>& start) const;

    std::vector<uint8_t> reachable_mask(const EdgeFilter& filter,
                                        const std::vector<Vertex>& start) const;

    /// All simple cycles of length <= max_len in the filtered subgraph,
    /// one per vertex rotation class.
    CycleEnumeration enumerate_simple_cycles(const EdgeFilter& filter, size_t max_len,
                                             uint64_t budget = kDefaultEnumBudget) const;

    /// All finite standard paths with t <= max_len, as defined above.
    PathEnumeration enumerate_finite_standard_paths(
        size_t max_len, uint64_t budget = kDefaultEnumBudget) const;

    /// Internal fast iteration: calls fn(sl_index, to, physical_weight,
    /// logical_weight) for every outgoing edge of v without materializing
    /// Pauli labels. Filters with an extra predicate fall back to edge().
    void for_each_edge_raw(
        Vertex v,
        const std::function<void(uint64_t, Vertex, size_t, size_t)>& fn) const;

  private:
    void check_scale() const;
    FpVec memory_image(Vertex v) const;

    SymplecticEncoder encoder_;
    uint64_t vertex_count_ = 0;
    uint64_t edges_per_vertex_ = 0;

    // Per (S, L) rank: encoder image of the input embedding, the logical
    // weight, and whether the logical input is the identity.
    std::vector<FpVec> sl_image_;
    std::vector<uint16_t> sl_logical_weight_;

    // Columns of E that multiply the memory input coordinates.
    std::vector<FpVec> mem_columns_;
};

}  // namespace qconv

#endif
