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

#ifndef QUDITCONV_ANALYSIS_HPP
#define QUDITCONV_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "quditconv/state_diagram.hpp"

namespace qconv {

/// Enumeration limits shared by the analyses. Zero-valued fields resolve to
/// the per-encoder defaults: max_len = p^{2m}, repetition_budget = p.
struct AnalysisBudgets {
    size_t max_len = 0;
    uint64_t repetition_budget = 0;
    uint64_t enum_budget = StateDiagram::kDefaultEnumBudget;

    size_t resolved_max_len(const CodeParams& params) const;
    uint64_t resolved_repetition(const CodeParams& params) const;
};

/// A subgroup of the memory Pauli group, listed explicitly. Memory Paulis
/// compose by exponent addition, so subgroups are F_p-subspaces and the
/// generators form a basis found by greedy closure.
struct SubgroupDescriptor {
    std::vector<Vertex> members;
    std::vector<Vertex> generators;
    /// True when pairwise compositions of members all landed in the set.
    bool closure_verified = false;

    bool contains(Vertex v) const;
};

/// Path demonstrating non-recursiveness: a weight-one-logical first edge
/// leaving a zero-physical loop vertex, an identity-logical tail, and the
/// zero-physical identity-logical loop the tail reaches.
struct RecursiveCounterexample {
    Edge first_edge;
    std::vector<Edge> tail;
    Cycle loop;
};

/// One (finite standard path, zero-physical cycle) pair with its commutator
/// sum. f_path holds [m_0 .. m_{t-1}] (terminal identity omitted); p_cycle
/// holds the r cycle states. sum = sum_{j in [1,t-1], k in [1,r]}
/// c(m_j^F, m_k^P) mod p.
struct CriterionRecord {
    std::vector<Vertex> f_path;
    std::vector<Vertex> p_cycle;
    uint8_t sum = 0;
    uint8_t doubled_sum = 0;
};

struct CriterionScan {
    std::vector<CriterionRecord> records;
    /// True iff some record has sum != 0 mod p.
    bool criterion_met = false;
    /// False when an enumeration budget truncated the scan.
    bool complete = true;
};

/// Trace of one stabilizer precipitation run: inject Z_i^a on ancilla wire
/// i at the scheduled times, propagate with identity inputs otherwise, and
/// watch for the identity memory.
struct PrecipitationRecord {
    std::vector<Vertex> trajectory;
    std::vector<size_t> injection_times;
    bool reached_identity = false;
    size_t steps_to_identity = 0;
    /// Pure-orbit loop structure found before reinjection.
    size_t loop_entry = 0;
    size_t loop_length = 0;
};

struct CorollaryReport {
    bool equal = false;
    SubgroupDescriptor zero_cycle;
    SubgroupDescriptor finite_memory;
    SubgroupDescriptor centralizer_of_finite;
    bool criterion_met = false;
    std::vector<Vertex> in_zero_cycle_only;
    std::vector<Vertex> in_centralizer_only;
};

struct Classification {
    bool catastrophic = false;
    bool recursive = false;
    std::optional<Cycle> catastrophic_witness;
    std::optional<RecursiveCounterexample> recursive_counterexample;
    SubgroupDescriptor finite_memory;
    SubgroupDescriptor zero_cycle;
    CriterionScan criterion;
    AnalysisBudgets budgets;
};

/// True iff some edge with zero physical weight and nonzero logical weight
/// has both endpoints in one SCC of the zero-physical subgraph; the witness
/// is a concrete zero-physical cycle through such an edge.
std::pair<bool, std::optional<Cycle>> is_catastrophic(const StateDiagram& diagram,
                                                      const AnalysisBudgets& budgets = {});

/// False iff some weight-one-logical edge leaving a zero-physical loop
/// vertex can reach, via identity-logical edges, a vertex on a zero-physical
/// identity-logical loop. The returned counterexample exhibits the path.
std::pair<bool, std::optional<RecursiveCounterexample>> is_recursive(
    const StateDiagram& diagram, const AnalysisBudgets& budgets = {});

/// F0: memory states from which the identity vertex is reachable along
/// identity-logical edges (the identity itself included).
SubgroupDescriptor finite_memory_group(const StateDiagram& diagram,
                                       const AnalysisBudgets& budgets = {});

/// P0: memory states on some zero-physical cycle.
SubgroupDescriptor zero_cycle_group(const StateDiagram& diagram,
                                    const AnalysisBudgets& budgets = {});

/// All m-qudit memory Paulis with commutation exponent 0 against every
/// generator of S; computed from the nullspace of the stacked symplectic
/// products, then expanded to an explicit member set.
SubgroupDescriptor centralizer(const SubgroupDescriptor& S, size_t m, uint32_t p);

/// Enumerates (finite standard path, zero-physical cycle) pairs, where the
/// cycles are the simple ones plus their q-fold repetitions up to the
/// repetition budget, and records each pair's criterion sum.
CriterionScan criterion_scan(const StateDiagram& diagram,
                             const AnalysisBudgets& budgets = {});

/// Total commutation phase by appearance bookkeeping: every intermediary
/// F-path state counts twice against each cycle state, m_0 once, the
/// terminal identity once. Validates both sequences against the diagram and
/// throws InvalidSequenceError on mismatch. Equals 2 * criterion sum mod p.
uint8_t phase_oracle(const StateDiagram& diagram, const std::vector<Vertex>& f_path,
                     const std::vector<Vertex>& p_cycle);

/// Runs the reinjection schedule for Z_i^a on ancilla wire i (1-based):
/// finds the pure orbit's loop, injects at times 0, l, 2l, ..., (p-1)l, and
/// propagates until the memory precipitates to the identity or max_steps
/// elapse.
PrecipitationRecord precipitation_orbit(const StateDiagram& diagram, size_t ancilla_index,
                                        uint8_t exponent, size_t max_steps);

/// Compares P0 with C(F0) as explicit sets and reports the difference
/// together with the encoder's criterion summary.
CorollaryReport verify_corollary_p0_equals_centralizer(
    const StateDiagram& diagram, const AnalysisBudgets& budgets = {});

/// Full bundle: classification flags, witnesses, subgroups, criterion scan.
Classification classify(const StateDiagram& diagram, const AnalysisBudgets& budgets = {});

}  // namespace qconv

#endif
