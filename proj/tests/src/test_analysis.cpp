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

#include <algorithm>
#include <set>
#include <vector>

#include <doctest.h>

#include "oracles.hpp"
#include "quditconv/analysis.hpp"
#include "quditconv/errors.hpp"
#include "test_helpers.hpp"

using qconv::AnalysisBudgets;
using qconv::Classification;
using qconv::CodeParams;
using qconv::CriterionRecord;
using qconv::CriterionScan;
using qconv::EdgeFilter;
using qconv::StateDiagram;
using qconv::SubgroupDescriptor;
using qconv::SymplecticEncoder;
using qconv::Vertex;

namespace {

// Packed [x | z] digit vector of a memory vertex, for the plain-int oracle.
std::vector<int> vertex_vec(Vertex v, size_t m, uint32_t p) {
    std::vector<int> out(2 * m, 0);
    for (size_t j = 0; j < 2 * m; ++j) {
        out[j] = static_cast<int>(v % p);
        v /= p;
    }
    return out;
}

bool cycle_is_valid_witness(const StateDiagram& d, const qconv::Cycle& c) {
    if (c.vertices.empty() || c.edges.size() != c.vertices.size()) {
        return false;
    }
    bool has_logical = false;
    for (size_t i = 0; i < c.edges.size(); ++i) {
        const qconv::Edge& e = c.edges[i];
        if (e.from != c.vertices[i] ||
            e.to != c.vertices[(i + 1) % c.vertices.size()]) {
            return false;
        }
        qconv::Edge fresh = d.edge(e.from, e.sl_index);
        if (fresh.to != e.to || fresh.physical.weight() != 0) {
            return false;
        }
        if (e.logical.weight() >= 1) {
            has_logical = true;
        }
    }
    return has_logical;
}

}  // namespace

TEST_SUITE_BEGIN("analysis");

TEST_CASE("budget fields resolve per encoder") {
    AnalysisBudgets b;
    CHECK(b.resolved_max_len(CodeParams(3, 1, 2, 1)) == 9);
    CHECK(b.resolved_max_len(CodeParams(2, 2, 2, 1)) == 16);
    CHECK(b.resolved_repetition(CodeParams(3, 1, 2, 1)) == 3);
    CHECK(b.resolved_repetition(CodeParams(5, 1, 1, 1)) == 5);
    b.max_len = 4;
    b.repetition_budget = 7;
    CHECK(b.resolved_max_len(CodeParams(3, 1, 2, 1)) == 4);
    CHECK(b.resolved_repetition(CodeParams(3, 1, 2, 1)) == 7);
}

TEST_CASE("accumulator classification is catastrophic, non-recursive") {
    StateDiagram p2(testhelp::accumulator_p2());
    auto [cat2, wit2] = qconv::is_catastrophic(p2);
    CHECK(cat2);
    REQUIRE(wit2.has_value());
    CHECK(cycle_is_valid_witness(p2, *wit2));
    auto [rec2, ce2] = qconv::is_recursive(p2);
    CHECK_FALSE(rec2);
    CHECK(ce2.has_value());
    CHECK(qconv::finite_memory_group(p2).members == std::vector<Vertex>{0, 2});
    CHECK(qconv::zero_cycle_group(p2).members == std::vector<Vertex>{0, 2});

    StateDiagram p3(testhelp::accumulator_p3());
    auto [cat3, wit3] = qconv::is_catastrophic(p3);
    CHECK(cat3);
    REQUIRE(wit3.has_value());
    CHECK(cycle_is_valid_witness(p3, *wit3));
    CHECK_FALSE(qconv::is_recursive(p3).first);
    CHECK(qconv::finite_memory_group(p3).members == std::vector<Vertex>{0, 3, 6});
    CHECK(qconv::zero_cycle_group(p3).members == std::vector<Vertex>{0, 3, 6});
}

TEST_CASE("identity encoders carry no zero-physical pathology") {
    StateDiagram d2(SymplecticEncoder::identity(CodeParams(2, 1, 1, 1)));
    auto [cat, wit] = qconv::is_catastrophic(d2);
    CHECK_FALSE(cat);
    CHECK_FALSE(wit.has_value());
    auto [rec, ce] = qconv::is_recursive(d2);
    CHECK_FALSE(rec);
    REQUIRE(ce.has_value());
    CHECK(qconv::finite_memory_group(d2).members == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(qconv::zero_cycle_group(d2).members == std::vector<Vertex>{0});

    StateDiagram d3(SymplecticEncoder::identity(CodeParams(3, 1, 2, 1)));
    CHECK_FALSE(qconv::is_catastrophic(d3).first);
    CHECK_FALSE(qconv::is_recursive(d3).first);
    SubgroupDescriptor f0 = qconv::finite_memory_group(d3);
    CHECK(f0.members.size() == 9);
    CHECK(qconv::zero_cycle_group(d3).members == std::vector<Vertex>{0});
    CHECK(qconv::centralizer(f0, 1, 3).members == std::vector<Vertex>{0});
}

TEST_CASE("classifiers and subgroups match the definition-level oracle") {
    const CodeParams shapes[] = {CodeParams(2, 1, 1, 1), CodeParams(2, 1, 2, 1),
                                 CodeParams(2, 2, 2, 1), CodeParams(3, 1, 1, 1),
                                 CodeParams(3, 1, 2, 1), CodeParams(5, 1, 1, 1)};
    for (const CodeParams& params : shapes) {
        for (uint64_t seed = 0; seed < 25; ++seed) {
            SymplecticEncoder enc =
                qconv::random_encoder(params, 1000 + seed, 12 + seed % 9);
            testoracle::ODiagram od = testoracle::build_diagram(enc);
            StateDiagram d(enc);
            size_t walk = static_cast<size_t>(d.vertex_count());
            CAPTURE(params.p);
            CAPTURE(params.m);
            CAPTURE(seed);
            auto [cat, wit] = qconv::is_catastrophic(d);
            CHECK(cat == testoracle::catastrophic(od, walk));
            if (wit) {
                CHECK(cycle_is_valid_witness(d, *wit));
            }
            CHECK(qconv::is_recursive(d).first == testoracle::recursive(od, walk));
            CHECK(qconv::finite_memory_group(d).members == testoracle::f0_members(od));
            SubgroupDescriptor p0 = qconv::zero_cycle_group(d);
            CHECK(p0.members == testoracle::p0_members(od));
            SubgroupDescriptor f0 = qconv::finite_memory_group(d);
            CHECK(qconv::centralizer(f0, params.m, params.p).members ==
                  testoracle::centralizer_members(od, f0.members));
        }
    }
}

TEST_CASE("recursive counterexamples replay in the diagram") {
    const SymplecticEncoder encs[] = {
        testhelp::accumulator_p2(), testhelp::accumulator_p3(),
        SymplecticEncoder::identity(CodeParams(3, 1, 2, 1)),
        qconv::random_encoder(CodeParams(2, 1, 2, 1), 77, 16),
        qconv::random_encoder(CodeParams(3, 1, 1, 1), 78, 16)};
    EdgeFilter zp = EdgeFilter::zero_physical();
    EdgeFilter il = EdgeFilter::identity_logical();
    EdgeFilter zpil = EdgeFilter::zero_physical_identity_logical();
    for (const SymplecticEncoder& enc : encs) {
        StateDiagram d(enc);
        auto [rec, ce] = qconv::is_recursive(d);
        if (rec) {
            CHECK_FALSE(ce.has_value());
            continue;
        }
        REQUIRE(ce.has_value());
        const qconv::Edge& first = ce->first_edge;
        CHECK(first.logical.weight() == 1);
        std::vector<uint8_t> loops = d.loop_vertex_mask(zp);
        CHECK(loops[first.from] == 1);
        std::vector<Vertex> comp = d.scc(zp);
        CHECK_FALSE((first.physical.weight() == 0 && comp[first.from] == comp[first.to]));
        Vertex cur = first.to;
        for (const qconv::Edge& e : ce->tail) {
            CHECK(e.from == cur);
            CHECK(il.passes(d.edge(e.from, e.sl_index)));
            cur = e.to;
        }
        REQUIRE_FALSE(ce->loop.vertices.empty());
        CHECK(std::count(ce->loop.vertices.begin(), ce->loop.vertices.end(), cur) == 1);
        for (size_t i = 0; i < ce->loop.edges.size(); ++i) {
            const qconv::Edge& e = ce->loop.edges[i];
            CHECK(e.from == ce->loop.vertices[i]);
            CHECK(e.to == ce->loop.vertices[(i + 1) % ce->loop.vertices.size()]);
            CHECK(zpil.passes(d.edge(e.from, e.sl_index)));
        }
    }
}

TEST_CASE("subgroup descriptors are verified spans") {
    for (const SymplecticEncoder& enc :
         {testhelp::accumulator_p2(), testhelp::accumulator_p3(),
          qconv::random_encoder(CodeParams(3, 1, 2, 1), 31, 18)}) {
        StateDiagram d(enc);
        uint32_t p = enc.params().p;
        for (const SubgroupDescriptor& g :
             {qconv::finite_memory_group(d), qconv::zero_cycle_group(d)}) {
            CHECK(g.closure_verified);
            CHECK(g.contains(0));
            CHECK_FALSE(g.contains(d.vertex_count()));
            uint64_t span = 1;
            for (size_t i = 0; i < g.generators.size(); ++i) {
                span *= p;
            }
            CHECK(g.members.size() == span);
            for (Vertex gen : g.generators) {
                CHECK(g.contains(gen));
            }
        }
    }
}

TEST_CASE("centralizer rejects an empty set") {
    SubgroupDescriptor empty;
    CHECK_THROWS_AS(qconv::centralizer(empty, 1, 3), qconv::ValidationError);
}

TEST_CASE("criterion records recompute from scratch") {
    for (const SymplecticEncoder& enc :
         {testhelp::accumulator_p3(),
          qconv::random_encoder(CodeParams(3, 1, 2, 1), 41, 14),
          qconv::random_encoder(CodeParams(2, 1, 2, 1), 42, 14)}) {
        StateDiagram d(enc);
        const CodeParams& cp = enc.params();
        CriterionScan scan = qconv::criterion_scan(d);
        REQUIRE(scan.complete);
        CHECK_FALSE(scan.criterion_met);
        for (const CriterionRecord& rec : scan.records) {
            int total = 0;
            for (size_t j = 1; j < rec.f_path.size(); ++j) {
                for (Vertex mk : rec.p_cycle) {
                    total += testoracle::commutation(
                        vertex_vec(rec.f_path[j], cp.m, cp.p),
                        vertex_vec(mk, cp.m, cp.p), static_cast<int>(cp.p));
                }
            }
            CHECK(rec.sum == total % static_cast<int>(cp.p));
            CHECK(rec.doubled_sum == (2 * rec.sum) % cp.p);
        }
        // Records arrive in q-fold groups: same path, cycle repeated q times.
        uint64_t reps = AnalysisBudgets{}.resolved_repetition(cp);
        REQUIRE(scan.records.size() % reps == 0);
        for (size_t g = 0; g < scan.records.size(); g += reps) {
            const CriterionRecord& base = scan.records[g];
            for (uint64_t q = 2; q <= reps; ++q) {
                const CriterionRecord& rq = scan.records[g + q - 1];
                CHECK(rq.f_path == base.f_path);
                REQUIRE(rq.p_cycle.size() == base.p_cycle.size() * q);
                for (size_t i = 0; i < rq.p_cycle.size(); ++i) {
                    CHECK(rq.p_cycle[i] == base.p_cycle[i % base.p_cycle.size()]);
                }
            }
        }
    }
}

TEST_CASE("criterion scan honors the record budget") {
    StateDiagram d(testhelp::accumulator_p2());
    AnalysisBudgets tight;
    tight.enum_budget = 1;
    CriterionScan scan = qconv::criterion_scan(d, tight);
    CHECK_FALSE(scan.complete);
    REQUIRE(scan.records.size() == 1);
    CHECK(scan.records[0].f_path == std::vector<Vertex>{2});
    CHECK(scan.records[0].p_cycle == std::vector<Vertex>{0});
    CHECK(scan.records[0].sum == 0);
}

TEST_CASE("phase oracle equals the doubled criterion sum") {
    for (const SymplecticEncoder& enc :
         {testhelp::accumulator_p3(),
          qconv::random_encoder(CodeParams(3, 1, 2, 1), 51, 15),
          qconv::random_encoder(CodeParams(5, 1, 1, 1), 52, 15)}) {
        StateDiagram d(enc);
        CriterionScan scan = qconv::criterion_scan(d);
        size_t checked = 0;
        for (const CriterionRecord& rec : scan.records) {
            if (checked++ >= 60) {
                break;
            }
            CHECK(qconv::phase_oracle(d, rec.f_path, rec.p_cycle) == rec.doubled_sum);
        }
    }
}

TEST_CASE("phase oracle validates its sequences") {
    StateDiagram d(testhelp::accumulator_p3());
    std::vector<Vertex> path = {3};
    std::vector<Vertex> cycle = {3};
    CHECK(qconv::phase_oracle(d, path, cycle) == 0);

    CHECK_THROWS_WITH_AS(qconv::phase_oracle(d, {}, cycle),
                         "phase oracle needs nonempty sequences",
                         qconv::InvalidSequenceError);
    CHECK_THROWS_WITH_AS(qconv::phase_oracle(d, path, {}),
                         "phase oracle needs nonempty sequences",
                         qconv::InvalidSequenceError);
    CHECK_THROWS_WITH_AS(qconv::phase_oracle(d, {0}, cycle),
                         "finite standard path states must be non-identity",
                         qconv::InvalidSequenceError);
    CHECK_THROWS_WITH_AS(qconv::phase_oracle(d, {9}, cycle),
                         "path state out of range", qconv::InvalidSequenceError);
    CHECK_THROWS_WITH_AS(
        qconv::phase_oracle(d, {3, 6}, cycle),
        doctest::Contains("no identity-logical edge between path states"),
        qconv::InvalidSequenceError);
    CHECK_THROWS_WITH_AS(qconv::phase_oracle(d, {1}, cycle),
                         "path does not terminate on the identity memory",
                         qconv::InvalidSequenceError);
    CHECK_THROWS_WITH_AS(qconv::phase_oracle(d, path, {4}),
                         doctest::Contains("no zero-physical edge closing cycle step"),
                         qconv::InvalidSequenceError);
}

TEST_CASE("precipitation on the identity frame") {
    StateDiagram d(SymplecticEncoder::identity(CodeParams(3, 1, 2, 1)));
    qconv::PrecipitationRecord rec = qconv::precipitation_orbit(d, 1, 1, 50);
    CHECK(rec.reached_identity);
    CHECK(rec.steps_to_identity == 1);
    CHECK(rec.trajectory == std::vector<Vertex>{0, 0});
    CHECK(rec.injection_times == std::vector<size_t>{0});

    qconv::PrecipitationRecord zero = qconv::precipitation_orbit(d, 1, 0, 50);
    CHECK(zero.reached_identity);
    CHECK(zero.steps_to_identity == 0);
    CHECK(zero.trajectory == std::vector<Vertex>{0});
    CHECK(zero.injection_times.empty());
}

TEST_CASE("precipitation argument validation") {
    StateDiagram d(SymplecticEncoder::identity(CodeParams(3, 1, 2, 1)));
    CHECK_THROWS_AS(qconv::precipitation_orbit(d, 0, 1, 50), qconv::ValidationError);
    CHECK_THROWS_AS(qconv::precipitation_orbit(d, 2, 1, 50), qconv::ValidationError);
    CHECK_THROWS_AS(qconv::precipitation_orbit(d, 1, 3, 50), qconv::ValidationError);
    StateDiagram no_ancilla(testhelp::accumulator_p2());
    CHECK_THROWS_AS(qconv::precipitation_orbit(no_ancilla, 1, 1, 50),
                    qconv::ValidationError);
}

TEST_CASE("precipitation reaches the identity within the schedule bound") {
    const CodeParams shapes[] = {CodeParams(2, 1, 2, 1), CodeParams(3, 1, 2, 1),
                                 CodeParams(2, 2, 2, 1)};
    for (const CodeParams& params : shapes) {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            SymplecticEncoder enc = qconv::random_encoder(params, 300 + seed, 14);
            StateDiagram d(enc);
            size_t max_steps =
                static_cast<size_t>(d.vertex_count()) * (params.p + 2) + 16;
            for (size_t wire = 1; wire <= params.ancilla_count(); ++wire) {
                for (uint8_t a = 1; a < params.p; ++a) {
                    qconv::PrecipitationRecord rec =
                        qconv::precipitation_orbit(d, wire, a, max_steps);
                    CAPTURE(params.p);
                    CAPTURE(seed);
                    CAPTURE(wire);
                    CHECK(rec.reached_identity);
                    CHECK(rec.trajectory.front() == 0);
                    CHECK(rec.trajectory.back() == 0);
                    REQUIRE(!rec.injection_times.empty());
                    CHECK(rec.injection_times.front() == 0);
                    CHECK(rec.injection_times.size() <= params.p);
                    if (rec.loop_length > 0) {
                        CHECK(rec.steps_to_identity <=
                              rec.loop_entry + size_t{params.p} * rec.loop_length);
                    }
                }
            }
        }
    }
}

TEST_CASE("corollary holds for qubit encoders") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        SymplecticEncoder enc =
            qconv::random_encoder(CodeParams(2, 1, 2, 1), 500 + seed, 13);
        StateDiagram d(enc);
        qconv::CorollaryReport rep = qconv::verify_corollary_p0_equals_centralizer(d);
        CAPTURE(seed);
        CHECK(rep.equal);
        CHECK(rep.in_zero_cycle_only.empty());
        CHECK(rep.in_centralizer_only.empty());
        CHECK_FALSE(rep.criterion_met);
    }
}

TEST_CASE("corollary report is internally consistent at odd primes") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        SymplecticEncoder enc =
            qconv::random_encoder(CodeParams(3, 1, 2, 1), 600 + seed, 13);
        StateDiagram d(enc);
        qconv::CorollaryReport rep = qconv::verify_corollary_p0_equals_centralizer(d);
        CHECK(rep.zero_cycle.members == qconv::zero_cycle_group(d).members);
        CHECK(rep.finite_memory.members == qconv::finite_memory_group(d).members);
        CHECK(rep.centralizer_of_finite.members ==
              qconv::centralizer(rep.finite_memory, 1, 3).members);
        bool same = rep.zero_cycle.members == rep.centralizer_of_finite.members;
        CHECK(rep.equal == same);
        CHECK(rep.equal ==
              (rep.in_zero_cycle_only.empty() && rep.in_centralizer_only.empty()));
        std::vector<Vertex> zc_only;
        std::set_difference(rep.zero_cycle.members.begin(), rep.zero_cycle.members.end(),
                            rep.centralizer_of_finite.members.begin(),
                            rep.centralizer_of_finite.members.end(),
                            std::back_inserter(zc_only));
        CHECK(rep.in_zero_cycle_only == zc_only);
    }
}

TEST_CASE("classify bundles the pieces deterministically") {
    SymplecticEncoder enc = qconv::random_encoder(CodeParams(3, 1, 2, 1), 71, 19);
    StateDiagram d(enc);
    Classification a = qconv::classify(d);
    Classification b = qconv::classify(d);
    CHECK(a.catastrophic == b.catastrophic);
    CHECK(a.recursive == b.recursive);
    CHECK(a.catastrophic == qconv::is_catastrophic(d).first);
    CHECK(a.recursive == qconv::is_recursive(d).first);
    CHECK(a.finite_memory.members == b.finite_memory.members);
    CHECK(a.zero_cycle.members == b.zero_cycle.members);
    REQUIRE(a.criterion.records.size() == b.criterion.records.size());
    for (size_t i = 0; i < a.criterion.records.size(); ++i) {
        CHECK(a.criterion.records[i].f_path == b.criterion.records[i].f_path);
        CHECK(a.criterion.records[i].p_cycle == b.criterion.records[i].p_cycle);
        CHECK(a.criterion.records[i].sum == b.criterion.records[i].sum);
    }
    CHECK(a.catastrophic_witness.has_value() == b.catastrophic_witness.has_value());
    if (a.catastrophic_witness) {
        CHECK(a.catastrophic_witness->vertices == b.catastrophic_witness->vertices);
    }
}

TEST_SUITE_END();
