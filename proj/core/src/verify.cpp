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

#include "quditconv/verify.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "quditconv/analysis.hpp"
#include "quditconv/errors.hpp"
#include "quditconv/report.hpp"
#include "quditconv/search.hpp"
#include "quditconv/version.hpp"

namespace qconv {

namespace {

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

PauliOp random_pauli(std::mt19937_64& rng, uint32_t p, size_t n) {
    PauliOp out = PauliOp::identity(p, n);
    for (size_t i = 0; i < n; ++i) {
        out.x[i] = static_cast<uint8_t>(rng() % p);
        out.z[i] = static_cast<uint8_t>(rng() % p);
    }
    return out;
}

// Small frame shapes the suites rotate through.
CodeParams suite_shape(uint32_t p, uint64_t t) {
    switch (t % 3) {
        case 0:
            return CodeParams(p, 1, 1, 1);
        case 1:
            return CodeParams(p, 1, 2, 1);
        default:
            return CodeParams(p, 2, 2, 1);
    }
}

// Shapes with at least one ancilla wire.
CodeParams ancilla_shape(uint32_t p, uint64_t t) {
    switch (t % 3) {
        case 0:
            return CodeParams(p, 1, 1, 0);
        case 1:
            return CodeParams(p, 1, 2, 1);
        default:
            return CodeParams(p, 2, 2, 1);
    }
}

uint32_t gates_for(uint64_t t) {
    return static_cast<uint32_t>(10 + t % 15);
}

void record_violation(SuiteResult& result, const std::string& detail) {
    ++result.violations;
    if (result.violation_details.size() < 50) {
        result.violation_details.push_back(detail);
    }
}

}  // namespace

SuiteResult suite_commutation(const std::vector<uint32_t>& primes, uint64_t trials,
                              uint64_t seed) {
    Timer timer;
    SuiteResult result;
    result.name = "commutation";
    const std::complex<double> i_unit(0.0, 1.0);
    for (uint32_t p : primes) {
        if (p > 5) {
            continue;
        }
        std::mt19937_64 rng(derive_seed(seed, p));
        for (uint64_t t = 0; t < trials; ++t) {
            size_t n = 1 + (t % 2);
            PauliOp P = random_pauli(rng, p, n);
            PauliOp Q = random_pauli(rng, p, n);
            uint8_t c = commutation_exponent(P, Q);
            ComplexMatrix mp = pauli_matrix_oracle(P);
            ComplexMatrix mq = pauli_matrix_oracle(Q);
            double angle = 2.0 * 3.14159265358979323846 * double(c) / double(p);
            ComplexMatrix lhs = mp.mul(mq);
            ComplexMatrix rhs =
                mq.mul(mp).scale(std::exp(i_unit * angle));
            ++result.checks;
            if (!lhs.approx_equal(rhs, 1e-9)) {
                record_violation(result, "commutation mismatch p=" + std::to_string(p) +
                                             " n=" + std::to_string(n) + " trial=" +
                                             std::to_string(t) + " seed=" +
                                             std::to_string(seed));
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult suite_conservation(const std::vector<uint32_t>& primes, uint64_t trials,
                               uint64_t seed) {
    Timer timer;
    SuiteResult result;
    result.name = "conservation";
    for (uint32_t p : primes) {
        for (uint64_t t = 0; t < trials; ++t) {
            CodeParams params = suite_shape(p, t);
            uint64_t enc_seed = derive_seed(seed, (uint64_t{p} << 32) | t);
            SymplecticEncoder enc = random_encoder(params, enc_seed, gates_for(t));
            if (!enc.validate()) {
                record_violation(result, "random encoder failed validate p=" +
                                             std::to_string(p) + " trial=" +
                                             std::to_string(t) + " enc_seed=" +
                                             std::to_string(enc_seed));
                continue;
            }
            std::mt19937_64 rng(derive_seed(enc_seed, 1));
            for (int pair = 0; pair < 50; ++pair) {
                PauliOp a = random_pauli(rng, p, params.qudits());
                PauliOp b = random_pauli(rng, p, params.qudits());
                ++result.checks;
                if (commutation_exponent(a, b) !=
                    commutation_exponent(enc.apply(a), enc.apply(b))) {
                    record_violation(result, "commutator not conserved p=" +
                                                 std::to_string(p) + " trial=" +
                                                 std::to_string(t) + " pair=" +
                                                 std::to_string(pair) + " enc_seed=" +
                                                 std::to_string(enc_seed));
                }
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult suite_semicomm(const std::vector<uint32_t>& primes, uint64_t trials,
                           uint64_t seed) {
    Timer timer;
    SuiteResult result;
    result.name = "semicomm";
    for (uint32_t p : primes) {
        PrimeField field(p);
        for (uint64_t t = 0; t < trials; ++t) {
            CodeParams params = suite_shape(p, t);
            uint64_t enc_seed = derive_seed(seed, (uint64_t{p} << 32) | t);
            SymplecticEncoder enc = random_encoder(params, enc_seed, gates_for(t));
            StateDiagram diagram(std::move(enc));
            AnalysisBudgets budgets;
            budgets.enum_budget = 2000;
            CriterionScan scan = criterion_scan(diagram, budgets);
            size_t oracle_calls = 0;
            for (const CriterionRecord& rec : scan.records) {
                ++result.checks;
                if (field.add(rec.sum, rec.sum) != rec.doubled_sum) {
                    record_violation(result, "doubled_sum bookkeeping broken p=" +
                                                 std::to_string(p) + " enc_seed=" +
                                                 std::to_string(enc_seed));
                }
                if (p == 2 && rec.doubled_sum != 0) {
                    record_violation(result,
                                     "doubled sum nonzero at p=2, enc_seed=" +
                                         std::to_string(enc_seed));
                }
                if (oracle_calls < 200) {
                    ++oracle_calls;
                    uint8_t oracle = phase_oracle(diagram, rec.f_path, rec.p_cycle);
                    if (oracle != rec.doubled_sum) {
                        record_violation(result,
                                         "phase oracle disagrees with doubled sum p=" +
                                             std::to_string(p) + " enc_seed=" +
                                             std::to_string(enc_seed));
                    }
                }
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult suite_precipitation(const std::vector<uint32_t>& primes, uint64_t trials,
                                uint64_t seed) {
    Timer timer;
    SuiteResult result;
    result.name = "precipitation";
    for (uint32_t p : primes) {
        for (uint64_t t = 0; t < trials; ++t) {
            CodeParams params = ancilla_shape(p, t);
            uint64_t enc_seed = derive_seed(seed, (uint64_t{p} << 32) | t);
            SymplecticEncoder enc = random_encoder(params, enc_seed, gates_for(t));
            StateDiagram diagram(std::move(enc));
            size_t max_steps =
                static_cast<size_t>(diagram.vertex_count()) * (p + 2) + 16;
            for (size_t wire = 1; wire <= params.ancilla_count(); ++wire) {
                for (uint32_t a = 1; a < p; ++a) {
                    PrecipitationRecord rec = precipitation_orbit(
                        diagram, wire, static_cast<uint8_t>(a), max_steps);
                    ++result.checks;
                    if (!rec.reached_identity) {
                        record_violation(result,
                                         "orbit did not precipitate p=" +
                                             std::to_string(p) + " wire=" +
                                             std::to_string(wire) + " a=" +
                                             std::to_string(a) + " enc_seed=" +
                                             std::to_string(enc_seed));
                        continue;
                    }
                    if (rec.loop_length > 0 &&
                        rec.steps_to_identity >
                            rec.loop_entry + size_t{p} * rec.loop_length) {
                        record_violation(result,
                                         "precipitation exceeded the p*l bound p=" +
                                             std::to_string(p) + " enc_seed=" +
                                             std::to_string(enc_seed));
                    }
                }
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult suite_centralizer(const std::vector<uint32_t>& primes, uint64_t trials,
                              uint64_t seed) {
    Timer timer;
    SuiteResult result;
    result.name = "centralizer";
    for (uint32_t p : primes) {
        PrimeField field(p);
        for (uint64_t t = 0; t < trials; ++t) {
            CodeParams params = suite_shape(p, t);
            uint64_t enc_seed = derive_seed(seed, (uint64_t{p} << 32) | t);
            SymplecticEncoder enc = random_encoder(params, enc_seed, gates_for(t));
            StateDiagram diagram(std::move(enc));
            SubgroupDescriptor f0 = finite_memory_group(diagram);
            SubgroupDescriptor cent = centralizer(f0, params.m, p);

            // Brute-force membership scan over every memory Pauli.
            std::vector<Vertex> brute;
            for (Vertex v = 0; v < diagram.vertex_count(); ++v) {
                PauliOp pv = diagram.vertex_pauli(v);
                bool commutes_all = true;
                for (Vertex g : f0.members) {
                    if (commutation_exponent(pv, diagram.vertex_pauli(g)) != 0) {
                        commutes_all = false;
                        break;
                    }
                }
                if (commutes_all) {
                    brute.push_back(v);
                }
            }
            ++result.checks;
            if (brute != cent.members) {
                record_violation(result, "centralizer nullspace vs scan mismatch p=" +
                                             std::to_string(p) + " enc_seed=" +
                                             std::to_string(enc_seed));
            }
            if (p == 2) {
                SubgroupDescriptor p0 = zero_cycle_group(diagram);
                ++result.checks;
                if (p0.members != cent.members) {
                    record_violation(result, "P0 != C(F0) at p=2, enc_seed=" +
                                                 std::to_string(enc_seed));
                }
            }
        }
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult suite_qubit_no_go(uint64_t trials, uint64_t seed) {
    Timer timer;
    SuiteResult result;
    result.name = "qubit-no-go";

    SearchConfig exhaustive;
    exhaustive.params = CodeParams(2, 1, 1, 1);
    exhaustive.mode = SearchMode::exhaustive;
    exhaustive.target = SearchTarget::recursive_noncatastrophic;
    SearchResult ex = run_search(exhaustive);
    result.checks += ex.examined;
    if (ex.examined != 720) {
        record_violation(result, "Sp(4,2) enumeration found " +
                                     std::to_string(ex.examined) +
                                     " elements, expected 720");
    }
    if (ex.recursive_noncatastrophic_count != 0) {
        record_violation(result, "recursive non-catastrophic qubit encoder in "
                                 "exhaustive (1,1,1) enumeration");
    }

    SearchConfig sampled;
    sampled.params = CodeParams(2, 1, 2, 1);
    sampled.mode = SearchMode::sampled;
    sampled.sample_count = trials;
    sampled.seed = seed;
    sampled.gate_count = 20;
    sampled.target = SearchTarget::recursive_noncatastrophic;
    SearchResult sa = run_search(sampled);
    result.checks += sa.examined;
    if (sa.recursive_noncatastrophic_count != 0) {
        record_violation(result, "recursive non-catastrophic qubit encoder among " +
                                     std::to_string(trials) + " samples, seed=" +
                                     std::to_string(seed));
    }
    result.seconds = timer.seconds();
    return result;
}

SuiteResult run_suite(const std::string& name, const std::vector<uint32_t>& primes,
                      uint64_t trials, uint64_t seed) {
    if (name == "commutation") {
        return suite_commutation(primes, trials, seed);
    }
    if (name == "conservation") {
        return suite_conservation(primes, trials, seed);
    }
    if (name == "semicomm") {
        return suite_semicomm(primes, trials, seed);
    }
    if (name == "precipitation") {
        return suite_precipitation(primes, trials, seed);
    }
    if (name == "centralizer") {
        return suite_centralizer(primes, trials, seed);
    }
    if (name == "qubit-no-go") {
        return suite_qubit_no_go(trials, seed);
    }
    throw ValidationError("unknown suite '" + name + "'");
}

std::vector<std::string> suite_names() {
    return {"commutation", "conservation", "semicomm",
            "precipitation", "centralizer", "qubit-no-go"};
}

std::string suite_report(const SuiteResult& result, const std::vector<uint32_t>& primes,
                         uint64_t trials, uint64_t seed) {
    ReportWriter w;
    w.kv("tool", std::string("quditconv ") + kVersion);
    w.kv("kind", "verify");
    w.kv("suite", result.name);
    std::ostringstream plist;
    for (size_t i = 0; i < primes.size(); ++i) {
        if (i > 0) {
            plist << ' ';
        }
        plist << primes[i];
    }
    w.kv("primes", plist.str());
    w.kv("trials", trials);
    w.kv("seed", seed);
    w.kv("checks", result.checks);
    w.kv("violations", result.violations);
    w.kv("passed", result.passed());
    for (const std::string& detail : result.violation_details) {
        w.kv("violation", detail);
    }
    w.kv("seconds", std::to_string(result.seconds));
    return w.str();
}

}  // namespace qconv
