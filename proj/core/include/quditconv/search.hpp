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

#ifndef QUDITCONV_SEARCH_HPP
#define QUDITCONV_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "quditconv/analysis.hpp"
#include "quditconv/encoder.hpp"

namespace qconv {

enum class SearchMode { exhaustive, sampled };

enum class SearchTarget { recursive_noncatastrophic, catastrophic, recursive };

struct SearchConfig {
    CodeParams params;
    SearchMode mode = SearchMode::sampled;
    uint64_t sample_count = 0;
    uint64_t seed = 0;
    uint32_t gate_count = 20;
    SearchTarget target = SearchTarget::recursive_noncatastrophic;
    AnalysisBudgets budgets;
    uint32_t worker_count = 1;

    /// Exhaustive mode refuses groups larger than this.
    uint64_t exhaustive_cap = 2000000;

    /// At most this many target matches are kept (lowest indices first);
    /// the tally counters always cover every candidate.
    uint64_t max_witnesses = 1000;
};

struct SearchWitness {
    /// Position in the deterministic candidate stream.
    uint64_t index = 0;
    SymplecticEncoder encoder;
    bool catastrophic = false;
    bool recursive = false;
};

struct SearchResult {
    uint64_t examined = 0;
    uint64_t catastrophic_count = 0;
    uint64_t recursive_count = 0;
    uint64_t recursive_noncatastrophic_count = 0;
    uint64_t inconclusive = 0;
    std::vector<SearchWitness> witnesses;
    double seconds = 0.0;
};

std::string to_string(SearchTarget t);
std::string to_string(SearchMode m);

/// |Sp(2N, p)| = p^{N^2} * prod_{i=1..N} (p^{2i} - 1).
uint64_t symplectic_group_order(uint32_t p, size_t n_qudits);

/// Every element of Sp(2N, p) as a matrix, by breadth-first closure over
/// the elementary generators; deterministic order (sorted packed keys).
/// Throws ScaleGuardError if the group exceeds cap.
std::vector<FpMatrix> enumerate_symplectic_group(PrimeField field, size_t n_qudits,
                                                 uint64_t cap);

/// Per-candidate seed stream: distinct, fixed by (master seed, index), and
/// independent of worker layout.
uint64_t derive_seed(uint64_t master, uint64_t index);

/// Enumerates or samples encoders per config, classifies each with the
/// catastrophic/recursive deciders, and collects target matches. Output is
/// a pure function of the config; worker_count only affects wall time.
SearchResult run_search(const SearchConfig& config);

/// Report document for a finished search; embeds every witness encoder so
/// the report re-verifies standalone.
std::string search_report(const SearchConfig& config, const SearchResult& result);

}  // namespace qconv

#endif
