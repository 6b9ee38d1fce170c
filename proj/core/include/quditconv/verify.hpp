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

#ifndef QUDITCONV_VERIFY_HPP
#define QUDITCONV_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qconv {

/// Outcome of one property suite. Every violation carries enough detail
/// (parameters and reproducing seed) to rerun the failing instance.
struct SuiteResult {
    std::string name;
    uint64_t checks = 0;
    uint64_t violations = 0;
    std::vector<std::string> violation_details;
    double seconds = 0.0;

    bool passed() const { return violations == 0; }
};

/// Commutation law: symplectic c(P,Q) against the dense-matrix oracle on
/// random one- and two-qudit pairs. Primes above the oracle guard are
/// skipped.
SuiteResult suite_commutation(const std::vector<uint32_t>& primes, uint64_t trials,
                              uint64_t seed);

/// Conservation of commutations: random valid encoders, random input pairs,
/// input commutator = output commutator.
SuiteResult suite_conservation(const std::vector<uint32_t>& primes, uint64_t trials,
                               uint64_t seed);

/// Phase bookkeeping: on enumerated (path, cycle) pairs of random encoders,
/// phase_oracle = doubled criterion sum; at p = 2 every doubled sum is 0.
SuiteResult suite_semicomm(const std::vector<uint32_t>& primes, uint64_t trials,
                           uint64_t seed);

/// Precipitation: every stabilizer-initialized orbit reaches the identity
/// memory within the reinjection bound.
SuiteResult suite_precipitation(const std::vector<uint32_t>& primes, uint64_t trials,
                                uint64_t seed);

/// Centralizer and corollary: nullspace centralizer equals brute-force
/// membership scan; at p = 2 the zero-cycle group equals C(F0).
SuiteResult suite_centralizer(const std::vector<uint32_t>& primes, uint64_t trials,
                              uint64_t seed);

/// Qubit no-go: exhaustive (2,1,1,1) enumeration (the enumerator must count
/// 720 elements) plus sampled (2,1,2,1) trials; no encoder may classify as
/// recursive and not catastrophic.
SuiteResult suite_qubit_no_go(uint64_t trials, uint64_t seed);

/// Registry entry point used by the CLI; name is one of commutation,
/// conservation, semicomm, precipitation, centralizer, qubit-no-go.
/// Throws ValidationError for unknown names.
SuiteResult run_suite(const std::string& name, const std::vector<uint32_t>& primes,
                      uint64_t trials, uint64_t seed);

std::vector<std::string> suite_names();

/// Report document for a suite run.
std::string suite_report(const SuiteResult& result, const std::vector<uint32_t>& primes,
                         uint64_t trials, uint64_t seed);

}  // namespace qconv

#endif
