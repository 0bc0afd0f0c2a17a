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
#include <numbers>
#include <random>

#include "crdd/catalog.h"
#include "crdd/format.h"
#include "crdd/graph.h"
#include "crdd/pulse.h"
#include "crdd/rng.h"
#include "crdd/sequence_json.h"
#include "crdd/transforms.h"

using namespace crdd;
using std::numbers::pi;

namespace {

// Composite Simpson rule with n (even) panels.
template <typename F>
double simpson_rule(F f, double a, double b, int n) {
    double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) {
        s += (i % 2 ? 4 : 2) * f(a + i * h);
    }
    return s * h / 3;
}

// Centre time of every pulse window, in temporal order.
std::vector<double> pulse_centres(const Sequence &s) {
    std::vector<double> out;
    double t = 0;
    for (const auto &seg : s.segments) {
        if (seg.is_pulse()) {
            out.push_back(t + seg.duration_s / 2);
        }
        t += seg.duration_s;
    }
    return out;
}

std::vector<double> durations(const Sequence &s) {
    std::vector<double> out;
    for (const auto &seg : s.segments) {
        out.push_back(seg.duration_s);
    }
    return out;
}

}  // namespace

TEST(Envelope, SquareIsConstant) {
    PulseShape s = PulseShape::square();
    for (double t : {0.0, 0.1, 0.5, 0.99, 1.0}) {
        auto q = envelope_amplitude(s, pi, 1.0, t);
        EXPECT_NEAR(q.in_phase, pi, 1e-14);
        EXPECT_EQ(q.quadrature, 0.0);
    }
}

TEST(Envelope, GaussianAreaIsFlipAngle) {
    PulseShape s = PulseShape::gaussian(0.25);
    double area = simpson_rule([&](double t) { return envelope_amplitude(s, pi, 1.0, t).in_phase; }, 0, 1, 20000);
    EXPECT_NEAR(area, pi, 1e-10);
    EXPECT_NEAR(envelope_area(s, pi, 1.0, 1.0), pi, 1e-12);
    EXPECT_NEAR(envelope_area(s, pi, 1.0, 0.5), pi / 2, 1e-12);
}

TEST(Envelope, DragQuadratureVanishesAtCentre) {
    PulseShape s = PulseShape::drag(0.5, 0.25);
    EXPECT_NEAR(envelope_amplitude(s, pi, 1.0, 0.5).quadrature, 0.0, 1e-12);
    // Odd about the centre.
    double a = envelope_amplitude(s, pi, 1.0, 0.3).quadrature;
    double b = envelope_amplitude(s, pi, 1.0, 0.7).quadrature;
    EXPECT_GT(std::abs(a), 0.1);
    EXPECT_NEAR(a, -b, 1e-12);
}

TEST(Envelope, OutsideWindowIsZero) {
    auto q = envelope_amplitude(PulseShape::gaussian(), pi, 1.0, 1.5);
    EXPECT_EQ(q.in_phase, 0.0);
    EXPECT_EQ(q.quadrature, 0.0);
}

TEST(Envelope, ShapeValidation) {
    EXPECT_THROW(PulseShape::gaussian(-1.0).validate(), std::invalid_argument);
    EXPECT_THROW(parse_shape_kind("triangle"), std::invalid_argument);
    EXPECT_EQ(parse_shape_kind("gaussian_drag"), ShapeKind::drag);
}

TEST(Catalog, PhaseTables) {
    auto xy4 = catalog_phases("XY4");
    ASSERT_EQ(xy4.size(), 4u);
    EXPECT_EQ(xy4, (std::vector<double>{0, pi / 2, 0, pi / 2}));

    std::vector<int> ur10{0, 4, 2, 4, 0, 0, 4, 2, 4, 0};
    auto got = catalog_phases("ur10");
    ASSERT_EQ(got.size(), 10u);
    for (size_t i = 0; i < 10; ++i) {
        EXPECT_NEAR(got[i], pi / 5 * ur10[i], 1e-15);
    }
    std::vector<int> ur12{0, 1, 3, 0, 4, 3, 3, 4, 0, 3, 1, 0};
    got = catalog_phases("UR12");
    ASSERT_EQ(got.size(), 12u);
    for (size_t i = 0; i < 12; ++i) {
        EXPECT_NEAR(got[i], pi / 3 * ur12[i], 1e-15);
    }
    EXPECT_EQ(catalog_phases("EDD"), (std::vector<double>{0, pi / 2, 0, pi / 2, pi / 2, 0, pi / 2, 0}));
    EXPECT_EQ(catalog_phases("KDD").size(), 20u);
}

TEST(Catalog, Rga64cExpansion) {
    auto edd = catalog_phases("EDD");
    auto rga = catalog_phases("RGA64c");
    ASSERT_EQ(rga.size(), 64u);
    for (size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(rga[i], edd[i], 1e-15);
    }
    // Each block of eight is the inner sequence shifted by the outer phase.
    for (size_t j = 0; j < 8; ++j) {
        for (size_t i = 0; i < 8; ++i) {
            double expect = std::remainder(edd[i] + edd[j], 2 * pi);
            double got = std::remainder(rga[8 * j + i], 2 * pi);
            EXPECT_NEAR(std::remainder(got - expect, 2 * pi), 0.0, 1e-12) << j << "," << i;
        }
    }
}

TEST(Catalog, NamesAreCaseInsensitive) {
    EXPECT_EQ(canonical_name("rga64C"), "RGA64c");
    EXPECT_THROW(catalog_phases("CPMG7"), UnknownSequenceError);
    for (const auto &n : catalog_names()) {
        EXPECT_EQ(canonical_name(n), n);
    }
}

TEST(Catalog, BuildNamedIsBackToBack) {
    Sequence s = build_named("xy4", 5.69e-8, PulseShape::square());
    EXPECT_EQ(s.pulse_count(), 4u);
    EXPECT_NEAR(s.duration(), 4 * 5.69e-8, 1e-20);
}

TEST(SimVariant, CycleLengths) {
    auto xy4 = catalog_phases("XY4");
    Sequence s2 = sim_variant(xy4, 1.0, 1.0, PulseShape::square());
    EXPECT_DOUBLE_EQ(s2.duration(), 8.0);
    EXPECT_EQ(s2.pulse_count(), 4u);
    Sequence s1 = sim_variant(xy4, 1.0, 0.0, PulseShape::square());
    EXPECT_DOUBLE_EQ(s1.duration(), 4.0);
    EXPECT_EQ(durations(s1), (std::vector<double>{1, 1, 1, 1}));
    Sequence ur = sim_variant(catalog_phases("UR10"), 36e-9, 7 * 36e-9, PulseShape::square());
    EXPECT_NEAR(ur.duration(), 2.88e-6, 1e-18);
}

TEST(SimVariant, PulseFirstSlots) {
    Sequence s = sim_variant(catalog_phases("XY4"), 1.0, 1.0, PulseShape::square());
    EXPECT_EQ(pulse_centres(s), (std::vector<double>{0.5, 2.5, 4.5, 6.5}));
    EXPECT_EQ(s.phases(), catalog_phases("XY4"));
}

TEST(SimVariant, IdealPulsesSitAtWindowCentres) {
    Sequence s = sim_variant(catalog_phases("XY4"), 1.0, 1.0, PulseShape::ideal());
    EXPECT_DOUBLE_EQ(s.duration(), 8.0);
    EXPECT_EQ(pulse_centres(s), (std::vector<double>{0.5, 2.5, 4.5, 6.5}));
}

TEST(Staggered, CrXy4PulseCentres) {
    auto p = catalog_phases("XY4");
    ColoredSchedule s = cr_variant(p, p, 1.0, PulseShape::square());
    EXPECT_DOUBLE_EQ(s.duration(), 8.0);
    std::vector<double> red, blue;
    for (int j = 0; j < 4; ++j) {
        blue.push_back(0.5 + 2 * j);
        red.push_back(1.5 + 2 * j);
    }
    EXPECT_EQ(pulse_centres(s.blue), blue);
    EXPECT_EQ(pulse_centres(s.red), red);
}

TEST(Staggered, HeterogeneousLengthsAreMatched) {
    auto [r, b] = match_lengths(catalog_phases("XY4"), catalog_phases("UR12"));
    EXPECT_EQ(r.size(), 12u);
    EXPECT_EQ(r, repeat_phases(catalog_phases("XY4"), 3));
    ColoredSchedule s = cr_variant(r, b, 1.0, PulseShape::square());
    EXPECT_DOUBLE_EQ(s.duration(), 24.0);
    EXPECT_THROW(match_lengths(catalog_phases("XY4"), catalog_phases("UR10")), LengthMismatchError);
}

TEST(Staggered, SinglePulse) {
    std::vector<double> x{0.0};
    ColoredSchedule s = cr_variant(x, x, 1.0, PulseShape::square());
    EXPECT_EQ(pulse_centres(s.red), (std::vector<double>{1.5}));
    EXPECT_EQ(pulse_centres(s.blue), (std::vector<double>{0.5}));
}

TEST(Padding, SymmetricAndAsymmetricLayouts) {
    auto p = catalog_phases("XY4");
    ColoredSchedule s = staggered(p, p, 1.0, 1.0, PadMode::symmetric, PulseShape::square());
    EXPECT_DOUBLE_EQ(s.duration(), 16.0);
    // R slot: tau_d/2, f_p, tau_d, pi, tau_d/2. The leading delays merge into one segment.
    EXPECT_EQ(durations(s.red).front(), 0.5 + 1.0 + 1.0);
    EXPECT_EQ(pulse_centres(s.red).front(), 3.0);
    EXPECT_EQ(pulse_centres(s.blue).front(), 1.0);

    ColoredSchedule a = staggered(p, p, 1.0, 1.0, PadMode::asymmetric, PulseShape::square());
    EXPECT_DOUBLE_EQ(a.duration(), 16.0);
    EXPECT_EQ(pulse_centres(a.red).front(), 3.5);
    EXPECT_EQ(pulse_centres(a.blue).front(), 1.5);
}

TEST(Padding, PadMatchesDirectConstruction) {
    auto p = catalog_phases("XY4");
    ColoredSchedule base = cr_variant(p, p, 1.0, PulseShape::square());
    for (PadMode m : {PadMode::symmetric, PadMode::asymmetric}) {
        EXPECT_EQ(pad(base, 0.0, m), base);
        ColoredSchedule padded = pad(base, 3.0, m);
        ColoredSchedule direct = staggered(p, p, 1.0, 3.0, m, PulseShape::square());
        EXPECT_EQ(padded.red.segments, direct.red.segments);
        EXPECT_EQ(padded.blue.segments, direct.blue.segments);
    }
}

TEST(Padding, LongCycleArithmetic) {
    double tau_p = 49.7777777777777e-9;
    auto p = catalog_phases("XY4");
    ColoredSchedule s = staggered(p, p, tau_p, 15 * tau_p, PadMode::symmetric, PulseShape::square());
    EXPECT_NEAR(s.duration(), 2 * 16 * 4 * tau_p, 1e-18);
    EXPECT_NEAR(s.duration(), 6.37e-6, 0.01e-6);
}

TEST(Padding, ModeNames) {
    EXPECT_EQ(parse_pad_mode("S"), PadMode::symmetric);
    EXPECT_EQ(parse_pad_mode("asymmetric"), PadMode::asymmetric);
    EXPECT_THROW(parse_pad_mode("middle"), std::invalid_argument);
}

TEST(TwoColor, Path) {
    QubitGraph g{4, {{0, 1}, {1, 2}, {2, 3}}, {}};
    auto c = *two_color(g).coloring;
    EXPECT_EQ(c, (std::vector<Color>{Color::red, Color::blue, Color::red, Color::blue}));
}

TEST(TwoColor, TriangleReportsOddCycle) {
    QubitGraph g{3, {{0, 1}, {1, 2}, {2, 0}}, {}};
    try {
        two_color(g);
        FAIL() << "expected NotBipartiteError";
    } catch (const NotBipartiteError &e) {
        EXPECT_EQ(e.cycle.size(), 3u);
    }
}

TEST(TwoColor, EachComponentStartsRed) {
    QubitGraph g{4, {{0, 1}, {2, 3}}, {}};
    EXPECT_EQ(*two_color(g).coloring, (std::vector<Color>{Color::red, Color::blue, Color::red, Color::blue}));
}

TEST(TwoColor, RandomBipartiteGraphsAreProperlyColoured) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + (int)uniform_index(rng, 30);
        std::vector<int> side(n);
        for (auto &s : side) {
            s = (int)uniform_index(rng, 2);
        }
        QubitGraph g{n, {}, {}};
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (side[u] != side[v] && uniform01(rng) < 0.2) {
                    g.edges.push_back({u, v});
                }
            }
        }
        QubitGraph c = two_color(g);
        EXPECT_TRUE(is_proper_coloring(c));
        // Swapping the labels of the hidden partition never changes the verdict.
        for (auto &[u, v] : g.edges) {
            std::swap(u, v);
        }
        EXPECT_TRUE(is_proper_coloring(two_color(g)));
    }
}

TEST(TwoColor, OddCyclesInLargerGraphs) {
    QubitGraph g{6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {4, 5}}, {}};
    try {
        two_color(g);
        FAIL();
    } catch (const NotBipartiteError &e) {
        ASSERT_EQ(e.cycle.size() % 2, 1u);
        auto adj = g.adjacency();
        for (size_t i = 0; i < e.cycle.size(); ++i) {
            int a = e.cycle[i];
            int b = e.cycle[(i + 1) % e.cycle.size()];
            EXPECT_TRUE(std::binary_search(adj[a].begin(), adj[a].end(), b));
        }
    }
}

TEST(Graph, ValidationAndInducedSubgraph) {
    EXPECT_THROW((QubitGraph{2, {{0, 0}}, {}}).validate(), std::invalid_argument);
    EXPECT_THROW((QubitGraph{2, {{0, 2}}, {}}).validate(), std::invalid_argument);
    EXPECT_THROW((QubitGraph{2, {{0, 1}, {1, 0}}, {}}).validate(), std::invalid_argument);
    QubitGraph g = two_color(QubitGraph{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {}});
    std::vector<int> verts{3, 2, 1};
    QubitGraph h = g.induced(verts);
    EXPECT_EQ(h.n, 3);
    EXPECT_EQ(h.edges.size(), 2u);
    EXPECT_EQ(*h.coloring, (std::vector<Color>{Color::blue, Color::red, Color::blue}));
}

TEST(Json, SequenceRoundTrip) {
    for (PulseShape shape : {PulseShape::square(), PulseShape::ideal(), PulseShape::drag(0.3, 1e-9)}) {
        Sequence s = sim_variant(catalog_phases("UR10"), 5.69e-8, 1.3e-8, shape, "UR10");
        Sequence back = sequence_from_json(nlohmann::json::parse(sequence_to_json(s).dump()));
        EXPECT_EQ(back, s);
    }
}

TEST(Json, ScheduleAndGraphRoundTrip) {
    auto p = catalog_phases("KDD");
    ColoredSchedule s = staggered(p, p, 1e-8, 2e-8, PadMode::asymmetric, PulseShape::gaussian());
    EXPECT_EQ(schedule_from_json(nlohmann::json::parse(schedule_to_json(s).dump())), s);
    QubitGraph g = two_color(QubitGraph{3, {{0, 1}, {1, 2}}, {}});
    nlohmann::json gj = graph_to_json(g);
    EXPECT_EQ(gj["coloring"], nlohmann::json({"R", "B", "R"}));
    EXPECT_EQ(graph_from_json(gj), g);
}

TEST(Json, ErrorsNameTheField) {
    nlohmann::json j = sequence_to_json(build_named("XY4", 1e-8, PulseShape::square()));
    j.erase("tau_p_s");
    try {
        sequence_from_json(j);
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("tau_p_s"), std::string::npos);
    }
}

TEST(Format, RoundTripsExactly) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        double v = std::ldexp(uniform01(rng) - 0.5, (int)uniform_index(rng, 200) - 100);
        EXPECT_EQ(parse_double(format_double(v)), v);
    }
    EXPECT_EQ(format_double(INFINITY), "inf");
    EXPECT_TRUE(std::isnan(parse_double(format_double(NAN))));
    EXPECT_THROW(parse_double("1.0x"), std::invalid_argument);
}

TEST(Rng, DerivedSeedsAreStableAndDistinct) {
    EXPECT_EQ(derive_seed(7, {1, 2}), derive_seed(7, {1, 2}));
    EXPECT_NE(derive_seed(7, {1, 2}), derive_seed(7, {2, 1}));
    EXPECT_NE(derive_seed(7, {1}), derive_seed(8, {1}));
    // FNV-1a reference values.
    EXPECT_EQ(hash_label(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(hash_label("a"), 0xaf63dc4c8601ec8cULL);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
        double u = uniform01(rng);
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        ASSERT_LT(uniform_index(rng, 6), 6u);
    }
}
