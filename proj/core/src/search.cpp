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

#include "quditconv/search.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <exception>
#include <thread>
#include <unordered_set>

#include "quditconv/errors.hpp"
#include "quditconv/report.hpp"
#include "quditconv/state_diagram.hpp"
#include "quditconv/version.hpp"

namespace qconv {

std::string to_string(SearchTarget t) {
    switch (t) {
        case SearchTarget::recursive_noncatastrophic:
            return "recursive-noncatastrophic";
        case SearchTarget::catastrophic:
            return "catastrophic";
        case SearchTarget::recursive:
            return "recursive";
    }
    return "unknown";
}

std::string to_string(SearchMode m) {
    return m == SearchMode::exhaustive ? "exhaustive" : "sampled";
}

uint64_t symplectic_group_order(uint32_t p, size_t n_qudits) {
    uint64_t order = 1;
    for (size_t i = 0; i < n_qudits * n_qudits; ++i) {
        order *= p;
    }
    uint64_t q = 1;
    for (size_t i = 1; i <= n_qudits; ++i) {
        q *= p;
        q *= p;
        order *= q - 1;
    }
    return order;
}

namespace {

// Base-p packing of a matrix into one u64 key; requires p^(dim^2) < 2^63.
uint64_t pack_matrix(const FpMatrix& m, uint32_t p) {
    uint64_t key = 0;
    uint64_t scale = 1;
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            key += m.at(i, j) * scale;
            scale *= p;
        }
    }
    return key;
}

FpMatrix unpack_matrix(uint64_t key, PrimeField field, size_t dim) {
    FpMatrix m(field, dim, dim);
    for (size_t i = 0; i < dim; ++i) {
        for (size_t j = 0; j < dim; ++j) {
            m.set(i, j, static_cast<uint8_t>(key % field.modulus()));
            key /= field.modulus();
        }
    }
    return m;
}

}  // namespace

std::vector<FpMatrix> enumerate_symplectic_group(PrimeField field, size_t n_qudits,
                                                 uint64_t cap) {
    size_t dim = 2 * n_qudits;
    uint32_t p = field.modulus();
    // The packed key must fit: p^(dim^2) < 2^63.
    uint64_t scale = 1;
    for (size_t i = 0; i < dim * dim; ++i) {
        if (scale > (uint64_t{1} << 62) / p) {
            throw ScaleGuardError("group elements do not fit a packed 64-bit key at p = " +
                                  std::to_string(p) + ", qudits = " +
                                  std::to_string(n_qudits));
        }
        scale *= p;
    }

    std::vector<FpMatrix> generators = elementary_symplectic_generators(field, n_qudits);
    std::unordered_set<uint64_t> seen;
    std::deque<FpMatrix> queue;
    FpMatrix id = FpMatrix::identity(field, dim);
    seen.insert(pack_matrix(id, p));
    queue.push_back(id);
    while (!queue.empty()) {
        FpMatrix cur = std::move(queue.front());
        queue.pop_front();
        for (const FpMatrix& g : generators) {
            FpMatrix next = g.mul(cur);
            uint64_t key = pack_matrix(next, p);
            if (seen.insert(key).second) {
                if (seen.size() > cap) {
                    throw ScaleGuardError("symplectic group exceeds the cap of " +
                                          std::to_string(cap) + " elements");
                }
                queue.push_back(std::move(next));
            }
        }
    }
    std::vector<uint64_t> keys(seen.begin(), seen.end());
    std::sort(keys.begin(), keys.end());
    std::vector<FpMatrix> out;
    out.reserve(keys.size());
    for (uint64_t key : keys) {
        out.push_back(unpack_matrix(key, field, dim));
    }
    return out;
}

uint64_t derive_seed(uint64_t master, uint64_t index) {
    uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

namespace {

struct WorkerAccumulator {
    uint64_t examined = 0;
    uint64_t catastrophic = 0;
    uint64_t recursive = 0;
    uint64_t recursive_noncatastrophic = 0;
    std::vector<SearchWitness> witnesses;
};

bool target_matches(SearchTarget target, bool catastrophic, bool recursive) {
    switch (target) {
        case SearchTarget::recursive_noncatastrophic:
            return recursive && !catastrophic;
        case SearchTarget::catastrophic:
            return catastrophic;
        case SearchTarget::recursive:
            return recursive;
    }
    return false;
}

}  // namespace

SearchResult run_search(const SearchConfig& config) {
    auto start = std::chrono::steady_clock::now();
    const CodeParams& params = config.params;
    PrimeField field(params.p);

    std::vector<FpMatrix> group;
    uint64_t total = 0;
    if (config.mode == SearchMode::exhaustive) {
        uint64_t order = symplectic_group_order(params.p, params.qudits());
        if (order > config.exhaustive_cap) {
            throw ValidationError("exhaustive search needs group order <= " +
                                  std::to_string(config.exhaustive_cap) + ", got " +
                                  std::to_string(order));
        }
        group = enumerate_symplectic_group(field, params.qudits(), config.exhaustive_cap);
        total = group.size();
    } else {
        if (config.sample_count < 1) {
            throw ValidationError("sampled search needs sample_count >= 1");
        }
        if (config.gate_count < 1) {
            throw ValidationError("sampled search needs gate_count >= 1");
        }
        total = config.sample_count;
    }

    uint32_t workers = std::max<uint32_t>(1, config.worker_count);
    std::vector<WorkerAccumulator> accs(workers);

    auto classify_index = [&](uint64_t index, WorkerAccumulator& acc) {
        SymplecticEncoder encoder =
            config.mode == SearchMode::exhaustive
                ? SymplecticEncoder(params, group[static_cast<size_t>(index)])
                : random_encoder(params, derive_seed(config.seed, index),
                                 config.gate_count);
        StateDiagram diagram(std::move(encoder));
        auto [cat, cat_witness] = is_catastrophic(diagram, config.budgets);
        auto [rec, rec_counter] = is_recursive(diagram, config.budgets);
        ++acc.examined;
        if (cat) {
            ++acc.catastrophic;
        }
        if (rec) {
            ++acc.recursive;
        }
        if (rec && !cat) {
            ++acc.recursive_noncatastrophic;
        }
        if (target_matches(config.target, cat, rec) &&
            acc.witnesses.size() < config.max_witnesses) {
            acc.witnesses.push_back(SearchWitness{index, diagram.encoder(), cat, rec});
        }
    };

    if (workers == 1) {
        for (uint64_t i = 0; i < total; ++i) {
            classify_index(i, accs[0]);
        }
    } else {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(workers);
        for (uint32_t w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    for (uint64_t i = w; i < total; i += workers) {
                        classify_index(i, accs[w]);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : threads) {
            t.join();
        }
        for (std::exception_ptr& e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    SearchResult result;
    for (WorkerAccumulator& acc : accs) {
        result.examined += acc.examined;
        result.catastrophic_count += acc.catastrophic;
        result.recursive_count += acc.recursive;
        result.recursive_noncatastrophic_count += acc.recursive_noncatastrophic;
        for (SearchWitness& w : acc.witnesses) {
            result.witnesses.push_back(std::move(w));
        }
    }
    std::sort(result.witnesses.begin(), result.witnesses.end(),
              [](const SearchWitness& a, const SearchWitness& b) {
                  return a.index < b.index;
              });
    if (result.witnesses.size() > config.max_witnesses) {
        result.witnesses.erase(
            result.witnesses.begin() + static_cast<std::ptrdiff_t>(config.max_witnesses),
            result.witnesses.end());
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string search_report(const SearchConfig& config, const SearchResult& result) {
    ReportWriter w;
    w.kv("tool", std::string("quditconv ") + kVersion);
    w.kv("kind", "search");
    w.kv("p", uint64_t{config.params.p});
    w.kv("m", uint64_t{config.params.m});
    w.kv("n", uint64_t{config.params.n});
    w.kv("k", uint64_t{config.params.k});
    w.kv("mode", to_string(config.mode));
    w.kv("target", to_string(config.target));
    if (config.mode == SearchMode::sampled) {
        w.kv("samples", config.sample_count);
        w.kv("seed", config.seed);
        w.kv("gates", uint64_t{config.gate_count});
    }
    w.kv("workers", uint64_t{std::max<uint32_t>(1, config.worker_count)});
    w.kv("examined", result.examined);
    w.kv("catastrophic_count", result.catastrophic_count);
    w.kv("recursive_count", result.recursive_count);
    w.kv("recursive_noncatastrophic_count", result.recursive_noncatastrophic_count);
    w.kv("inconclusive", result.inconclusive);
    w.kv("witnesses", uint64_t{result.witnesses.size()});
    for (const SearchWitness& witness : result.witnesses) {
        ReportWriter inner;
        inner.kv("index", witness.index);
        inner.kv("catastrophic", witness.catastrophic);
        inner.kv("recursive", witness.recursive);
        inner.block("encoder", serialize(witness.encoder));
        w.block("witness", inner.str());
    }
    w.kv("seconds", std::to_string(result.seconds));
    return w.str();
}

}  // namespace qconv
