// Copyright 2026 The crdd Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "crdd/harness.h"

using namespace crdd;

namespace {

MethodTiming timing(std::string label, long pulses, std::string pair = "") {
    // Unit pulse spacing: every pulse occupies two time units.
    return {std::move(label), pulses, 2.0 * pulses, std::nullopt, std::nullopt, std::move(pair)};
}

MethodSpec sim(const std::string &seq) {
    MethodSpec m;
    m.label = "SIM-" + seq;
    m.kind = MethodKind::sim;
    m.sequence = seq;
    m.k = 2;
    return m;
}

MethodSpec cr(const std::string &seq) {
    MethodSpec m;
    m.label = "CR-" + seq;
    m.kind = MethodKind::cr;
    m.sequence = seq;
    m.k = 1;
    return m;
}

MethodSpec idle() {
    MethodSpec m;
    m.label = "IDLE";
    m.kind = MethodKind::idle;
    return m;
}

ExperimentPlan small_plan() {
    ExperimentPlan plan;
    plan.device = default_device(2);
    plan.embeddings = {{"n2_0", {0, 1}}, {"n3_0", {1, 2, 3}}};
    plan.methods = {idle(), sim("XY4"), cr("XY4")};
    plan.target_pulses = 32;
    plan.type1_states = 2;
    plan.type2_states = 2;
    plan.shots = 200;
    plan.seed = 99;
    plan.samples_per_pulse = 64;
    plan.threads = 1;
    return plan;
}

EmbeddingFit fit_of(const std::string &method, const std::string &emb, double tau) {
    EmbeddingFit f;
    f.method = method;
    f.embedding_id = emb;
    f.fit.gamma = 1 / tau;
    f.fit.tau_gamma = tau;
    return f;
}

}  // namespace

TEST(Methods, TimingFromCatalog) {
    double tau_p = 5e-8;
    MethodTiming s = method_timing(sim("XY4"), tau_p);
    EXPECT_EQ(s.pulses_per_cycle, 4);
    EXPECT_NEAR(s.cycle_duration_s, 8 * tau_p, 1e-20);
    MethodTiming c = method_timing(cr("UR10"), tau_p);
    EXPECT_EQ(c.pulses_per_cycle, 10);
    EXPECT_NEAR(c.cycle_duration_s, 20 * tau_p, 1e-20);
    EXPECT_EQ(method_timing(idle(), tau_p).pulses_per_cycle, 0);
    EXPECT_EQ(sim("XY4").pair_key(), "XY4");
}

TEST(Methods, Validation) {
    MethodSpec bad = sim("XY4");
    bad.k = 0;
    EXPECT_THROW(bad.validate(), std::invalid_argument);
    MethodSpec unknown = sim("NOPE");
    EXPECT_ANY_THROW(method_timing(unknown, 1e-8));
}

TEST(SchedulePoints, AlignedMixedSequences) {
    std::vector<MethodTiming> m{timing("XY4", 4), timing("UR10", 10), timing("KDD", 20), timing("RGA64c", 64)};
    auto pts = schedule_points(m, 320);
    std::vector<long> steps{40, 40, 40, 64};
    for (size_t i = 0; i < m.size(); ++i) {
        EXPECT_EQ(pts[i].front().pulses, 0);
        EXPECT_EQ(pts[i].back().pulses, 320);
        EXPECT_DOUBLE_EQ(pts[i].back().duration_s, 640.0);
        EXPECT_EQ(pts[i][1].pulses, steps[i]) << m[i].label;
        for (size_t k = 0; k < pts[i].size(); ++k) {
            EXPECT_EQ(pts[i][k].pulses, pts[i][k].cycles * m[i].pulses_per_cycle);
        }
    }
    ASSERT_EQ(pts[0].size(), pts[1].size());
    for (size_t k = 0; k < pts[0].size(); ++k) {
        EXPECT_EQ(pts[0][k].pulses, pts[1][k].pulses);
        EXPECT_EQ(pts[0][k].duration_s, pts[1][k].duration_s);
    }
}

TEST(SchedulePoints, TargetRoundsDownToCommonMultiple) {
    std::vector<MethodTiming> m{timing("XY4", 4), timing("UR10", 10)};
    auto pts = schedule_points(m, 99);
    EXPECT_EQ(pts[0].back().pulses, 80);
    EXPECT_EQ(pts[1].back().pulses, 80);
    std::vector<MethodTiming> one{timing("XY4", 4)};
    auto short_run = schedule_points(one, 8);
    EXPECT_EQ(short_run[0].back().cycles, 2);
}

TEST(SchedulePoints, PerMethodOverrides) {
    std::vector<MethodTiming> m{timing("SIM", 4), timing("CR", 4)};
    m[1].target_pulses = 64;
    m[1].stride_pulses = 32;
    auto pts = schedule_points(m, 16, 4);
    EXPECT_EQ(pts[0].size(), 5u);
    EXPECT_EQ(pts[1].size(), 3u);
    EXPECT_EQ(pts[1].back().pulses, 64);
}

TEST(SchedulePoints, IdleTakesUnionOfPartners) {
    std::vector<MethodTiming> m{timing("IDLE", 0), timing("A", 4), timing("B", 64)};
    auto pts = schedule_points(m, 320);
    std::set<double> expect;
    for (const auto &p : pts[1]) {
        expect.insert(p.duration_s);
    }
    for (const auto &p : pts[2]) {
        expect.insert(p.duration_s);
    }
    ASSERT_EQ(pts[0].size(), expect.size());
    size_t k = 0;
    for (double t : expect) {
        EXPECT_DOUBLE_EQ(pts[0][k].duration_s, t);
        EXPECT_EQ(pts[0][k].pulses, 0);
        ++k;
    }
}

TEST(SchedulePoints, IdlePartnersByPairKey) {
    std::vector<MethodTiming> m{timing("IDLE", 0, "B"), timing("A", 4, "A"), timing("B", 64, "B")};
    auto pts = schedule_points(m, 320);
    EXPECT_EQ(pts[0], std::vector<DurationPoint>({{0, 0, 0}, {0, 0, 128}, {0, 0, 256}, {0, 0, 384},
                                                  {0, 0, 512}, {0, 0, 640}}));
}

TEST(SchedulePoints, AlignmentErrorWhenPeriodExceedsTarget) {
    std::vector<MethodTiming> m{timing("RGA64c", 64), timing("UR10", 10)};
    try {
        schedule_points(m, 100);
        FAIL();
    } catch (const AlignmentError &e) {
        EXPECT_EQ(e.lcm, 320);
    }
}

TEST(Embeddings, PathsMinimiseReuse) {
    QubitGraph g{4, {{0, 1}, {1, 2}, {2, 3}}, {}};
    auto two = generate_embeddings(g, 2, 2);
    ASSERT_EQ(two.size(), 2u);
    std::set<int> seen;
    for (const auto &p : two) {
        for (int v : p) {
            EXPECT_TRUE(seen.insert(v).second);
        }
    }
    auto full = generate_embeddings(g, 4, 5);
    ASSERT_EQ(full.size(), 1u);
    EXPECT_EQ(full[0], std::vector<int>({0, 1, 2, 3}));
    EXPECT_THROW(generate_embeddings(g, 5, 1), std::invalid_argument);
}

TEST(Plan, JsonRoundTrip) {
    ExperimentPlan plan = small_plan();
    plan.methods[1].stride_pulses = 8;
    plan.methods[2].pad = PadMode::asymmetric;
    plan.methods[2].k = 2;
    ExperimentPlan back = plan_from_json(plan_to_json(plan));
    EXPECT_EQ(plan_to_json(back), plan_to_json(plan));
    EXPECT_EQ(back.embeddings[1].vertices, std::vector<int>({1, 2, 3}));
    EXPECT_EQ(back.methods[2].pad, PadMode::asymmetric);
}

TEST(Plan, PresetAndGeneratedEmbeddings) {
    auto j = nlohmann::json::parse(R"({
        "device": {"preset": "default", "seed": 3},
        "embedding_sizes": [2, 4],
        "methods": [{"label": "SIM-XY4", "kind": "sim", "sequence": "XY4"}]
    })");
    ExperimentPlan plan = plan_from_json(j);
    ASSERT_EQ(plan.embeddings.size(), 2u);
    EXPECT_EQ(plan.embeddings[0].id, "n2_0");
    EXPECT_EQ(plan.embeddings[1].id, "n4_0");
    EXPECT_EQ(plan.methods[0].k, 2);
    EXPECT_THROW(plan_from_json(nlohmann::json::parse(R"({"methods": 3})")), std::invalid_argument);
}

TEST(Run, RowCount) {
    ExperimentPlan plan = small_plan();
    plan.embeddings = {{"n2_0", {0, 1}}};
    plan.methods = {sim("XY4"), cr("XY4")};
    plan.target_pulses = 8;
    plan.stride_pulses = 4;
    plan.type2_states = 0;
    Dataset d = run_experiment(plan);
    EXPECT_EQ(d.records.size(), 4u);
    EXPECT_EQ(d.row_count(), 12u);
    EXPECT_TRUE(d.failures.empty());
}

TEST(Run, DeterministicAndThreadIndependent) {
    ExperimentPlan plan = small_plan();
    Dataset a = run_experiment(plan);
    plan.threads = 4;
    Dataset b = run_experiment(plan);
    EXPECT_EQ(a.records, b.records);
    std::ostringstream sa;
    std::ostringstream sb;
    write_results_csv(sa, a);
    write_results_csv(sb, b);
    EXPECT_EQ(sa.str(), sb.str());
    plan.seed = 100;
    Dataset c = run_experiment(plan);
    EXPECT_NE(a.records, c.records);
}

TEST(Run, RecordsAreCanonicallyOrdered) {
    ExperimentPlan plan = small_plan();
    size_t seen = 0;
    RunHooks hooks;
    hooks.on_record = [&](const SurvivalRecord &) { ++seen; };
    Dataset d = run_experiment(plan, hooks);
    EXPECT_EQ(seen, d.records.size());
    // 2 embeddings x 4 states x 3 methods.
    EXPECT_EQ(d.records.size(), 24u);
    for (size_t i = 1; i < d.records.size(); ++i) {
        const auto &p = d.records[i - 1];
        const auto &q = d.records[i];
        EXPECT_LE(std::tie(p.method, p.embedding_id, p.state_id), std::tie(q.method, q.embedding_id, q.state_id));
    }
    for (const auto &r : d.records) {
        for (size_t k = 1; k < r.points.size(); ++k) {
            EXPECT_LT(r.points[k - 1].duration_s, r.points[k].duration_s);
        }
        EXPECT_EQ(r.points.front().p0, 1.0);
    }
}

TEST(Csv, ResultsRoundTrip) {
    Dataset d = run_experiment(small_plan());
    std::ostringstream out;
    write_results_csv(out, d);
    std::istringstream in(out.str());
    Dataset back = read_results_csv(in);
    std::ostringstream again;
    write_results_csv(again, back);
    EXPECT_EQ(again.str(), out.str());
    EXPECT_EQ(back.row_count(), d.row_count());
}

TEST(Csv, MalformedResultsNameTheLine) {
    std::istringstream bad(
        "method,embedding_id,state_id,duration_s,pulses,shots,zeros,p0\n"
        "SIM-XY4,n2_0,s0,0,0,10,10,1\n"
        "SIM-XY4,n2_0,s0,oops,4,10,9,0.9\n");
    try {
        read_results_csv(bad);
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
    std::istringstream header("a,b\n");
    EXPECT_THROW(read_results_csv(header), std::invalid_argument);
}

TEST(Csv, FitsRoundTrip) {
    auto fits = fit_embeddings(run_experiment(small_plan()));
    ASSERT_EQ(fits.size(), 6u);
    std::ostringstream out;
    write_fits_csv(out, fits);
    std::istringstream in(out.str());
    auto back = read_fits_csv(in);
    std::ostringstream again;
    write_fits_csv(again, back);
    EXPECT_EQ(again.str(), out.str());
}

TEST(Summary, LabelsAndIds) {
    EXPECT_EQ(kind_from_label("IDLE"), MethodKind::idle);
    EXPECT_EQ(kind_from_label("SIM-UR10"), MethodKind::sim);
    EXPECT_EQ(kind_from_label("CR-UR10-pad"), MethodKind::cr);
    EXPECT_EQ(pair_from_label("CR-UR10-pad"), "UR10-pad");
    EXPECT_EQ(size_from_embedding_id("n12_3"), 12);
}

TEST(Summary, MediansAndRatios) {
    std::vector<EmbeddingFit> fits{
        fit_of("IDLE", "n4_0", 1), fit_of("IDLE", "n4_1", 3), fit_of("IDLE", "n4_2", 2),
        fit_of("IDLE-B", "n4_0", 4),
        fit_of("SIM-XY4", "n4_0", 8), fit_of("SIM-XY4", "n4_1", 10), fit_of("SIM-XY4", "n4_2", 12),
        fit_of("CR-XY4", "n4_0", 50), fit_of("CR-XY4", "n4_1", 30), fit_of("CR-XY4", "n4_2", 40),
        fit_of("CR-UR10", "n2_0", 7),
    };
    auto rows = summarize(fits);
    auto find = [&](int n, const std::string &m) {
        for (const auto &r : rows) {
            if (r.n == n && r.method == m) {
                return r;
            }
        }
        ADD_FAILURE() << m;
        return SummaryRow{};
    };
    SummaryRow idle_row = find(4, "IDLE");
    EXPECT_EQ(idle_row.median_tau_s, 2);
    EXPECT_EQ(idle_row.iqr_tau_s, 1);
    SummaryRow s = find(4, "SIM-XY4");
    EXPECT_EQ(s.median_tau_s, 10);
    EXPECT_DOUBLE_EQ(*s.sim_over_idle, 10.0 / 4.0);
    SummaryRow c = find(4, "CR-XY4");
    EXPECT_EQ(c.median_tau_s, 40);
    EXPECT_DOUBLE_EQ(*c.cr_over_sim, 4.0);
    SummaryRow lone = find(2, "CR-UR10");
    EXPECT_EQ(lone.iqr_tau_s, 0);
    EXPECT_FALSE(lone.cr_over_sim);
    std::ostringstream out;
    write_summary_csv(out, rows);
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')),
              "n,method,kind,pair,embeddings,median_tau_gamma_s,iqr_tau_gamma_s,sim_over_idle,cr_over_sim");
}

TEST(Summary, UnconvergedFitsAreSkipped) {
    std::vector<EmbeddingFit> fits{fit_of("SIM-XY4", "n2_0", 5), fit_of("SIM-XY4", "n2_1", 9)};
    fits[1].fit.flag = FitFlag::not_converged;
    fits[1].fit.gamma = NAN;
    auto rows = summarize(fits);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].embeddings, 1u);
    EXPECT_EQ(rows[0].median_tau_s, 5);
}
