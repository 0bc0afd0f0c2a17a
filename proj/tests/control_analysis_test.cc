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
#include <complex>
#include <numbers>
#include <sstream>

#include "crdd/catalog.h"
#include "crdd/control_csv.h"
#include "crdd/error_matrix.h"
#include "crdd/symmetry.h"
#include "crdd/transforms.h"

using namespace crdd;
using std::numbers::pi;
using cd = std::complex<double>;

namespace {

Sequence single_pulse(double phase, double tau_p, const PulseShape &shape, double tail = 0) {
    Sequence s{"one", tau_p, shape, {}};
    append_pulse_window(s.segments, phase, tau_p, shape);
    append_delay(s.segments, tail);
    return s;
}

// Value of one component in every interval at its first node.
std::vector<double> interval_starts(const ControlTrace &tr, Axis mu, Axis alpha) {
    std::vector<double> out;
    for (const auto &iv : tr.nodes) {
        out.push_back(iv.front()((int)mu, (int)alpha));
    }
    return out;
}

}  // namespace

TEST(TimeGrid, ClosedUnderSymmetryMaps) {
    auto p = catalog_phases("XY4");
    ColoredSchedule s = cr_variant(p, p, 1.0, PulseShape::square());
    TimeGrid g = TimeGrid::build(s.red, 64);
    std::vector<double> starts;
    for (const auto &iv : g.intervals) {
        starts.push_back(iv.start);
        EXPECT_EQ(iv.steps % 2, 0);
        EXPECT_LE(iv.step(), 1.0 / 64 * (1 + 1e-9));
    }
    starts.push_back(g.duration);
    auto has = [&](double t) {
        return std::any_of(starts.begin(), starts.end(), [&](double u) { return std::abs(u - t) < 1e-9; });
    };
    for (double t : starts) {
        EXPECT_TRUE(has(std::fmod(t + g.duration / 2, g.duration)));
        EXPECT_TRUE(has(g.duration - t));
    }
    EXPECT_THROW(TimeGrid::build(s.red, 8), std::invalid_argument);
}

TEST(TimeGrid, SimpsonIsExactOnCubics) {
    Sequence s = idle_sequence(3.0, 1.0);
    TimeGrid g = TimeGrid::build(s, 16);
    auto t = g.node_times();
    ASSERT_EQ(t.size(), g.node_count());
    std::vector<double> f;
    for (double x : t) {
        f.push_back(x * x * x - 2 * x);
    }
    EXPECT_NEAR(simpson(g, f), 81.0 / 4 - 9.0, 1e-12);
}

TEST(Propagate, PureDelayIsIdentity) {
    ControlTrace tr = control_trace(idle_sequence(5.0, 1.0), 32);
    for (const auto &iv : tr.nodes) {
        for (const auto &r : iv) {
            EXPECT_LT((r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-15);
        }
    }
    ErrorMatrix c = chi1(tr);
    EXPECT_LT((c.values - 5.0 * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Propagate, IdealXPulseIsMinusIX) {
    Propagation p = propagate(single_pulse(0, 1.0, PulseShape::ideal()), 32);
    Eigen::Matrix2cd expect;
    expect << 0, cd(0, -1), cd(0, -1), 0;
    EXPECT_LT((p.final_unitary - expect).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Propagate, SquarePulseMidpointMatchesClosedForm) {
    for (double phase : {0.0, pi / 2, 0.7}) {
        Propagation p = propagate(single_pulse(phase, 1.0, PulseShape::square()), 64);
        // The grid splits at T/2, so the midpoint closes the first interval.
        const GridInterval &first = p.grid.intervals[0];
        ASSERT_NEAR(first.time(first.steps), 0.5, 1e-15);
        // exp(-i (pi/4)(cos(phi) X + sin(phi) Y)).
        double c = std::cos(pi / 4);
        double s = std::sin(pi / 4);
        Eigen::Matrix2cd expect;
        expect << c, cd(0, -s) * std::exp(cd(0, -phase)), cd(0, -s) * std::exp(cd(0, phase)), c;
        EXPECT_LT((p.nodes[0].back() - expect).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Propagate, BoundedPulsesAreExactRotations) {
    for (PulseShape shape : {PulseShape::square(), PulseShape::gaussian(), PulseShape::drag()}) {
        Propagation p = propagate(single_pulse(pi / 2, 1e-8, shape), 256);
        EXPECT_LT((p.final_unitary - rotation_unitary(pi, pi / 2)).cwiseAbs().maxCoeff(), 1e-11)
            << shape_kind_name(shape.kind);
    }
}

TEST(ControlMatrix, RotationAboutXDuringSquarePulse) {
    ControlTrace tr = control_trace(single_pulse(0, 1.0, PulseShape::square()), 64);
    const GridInterval &iv = tr.grid.intervals[0];
    for (int k = 0; k <= iv.steps; ++k) {
        double theta = pi * iv.time(k);
        const Eigen::Matrix3d &r = tr.nodes[0][k];
        EXPECT_NEAR(r(2, 2), std::cos(theta), 1e-10);
        EXPECT_NEAR(r(0, 0), 1.0, 1e-10);
    }
}

TEST(ControlMatrix, NodesAreRotations) {
    auto p = catalog_phases("UR10");
    ColoredSchedule s = cr_variant(p, p, 1.0, PulseShape::drag());
    ControlTrace tr = control_trace(s.blue, 64);
    EXPECT_LT((tr.nodes[0][0] - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-15);
    for (const auto &iv : tr.nodes) {
        for (const auto &r : iv) {
            EXPECT_LT((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-8);
            EXPECT_NEAR(r.determinant(), 1.0, 1e-8);
        }
    }
    EXPECT_LT((tr.final_matrix - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(ControlMatrix, RodriguesAgreesWithAdjointAction) {
    Eigen::Vector3d n(1, 2, -0.5);
    n.normalize();
    double theta = 1.234;
    Eigen::Matrix2cd u = std::cos(theta / 2) * Eigen::Matrix2cd::Identity() -
                         cd(0, std::sin(theta / 2)) * (n.x() * pauli(Axis::x) + n.y() * pauli(Axis::y) +
                                                       n.z() * pauli(Axis::z));
    EXPECT_LT((control_matrix(u) - rotation_matrix(n, theta)).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(ControlMatrix, IdealXy4SignsAfterFirstPulse) {
    Sequence s = sim_variant(catalog_phases("XY4"), 1.0, 1.0, PulseShape::ideal());
    ControlTrace tr = bang_bang_trace(s, 32);
    // The first pulse sits at t = 0.5; interval 1 starts right after it.
    ASSERT_NEAR(tr.grid.intervals[1].start, 0.5, 1e-12);
    const Eigen::Matrix3d &r = tr.nodes[1].front();
    EXPECT_NEAR(r(2, 2), -1, 1e-15);
    EXPECT_NEAR(r(1, 1), -1, 1e-15);
    EXPECT_NEAR(r(0, 0), 1, 1e-15);
}

TEST(ControlMatrix, IdealXy4ZzFlipsAtEveryPulse) {
    Sequence s = sim_variant(catalog_phases("XY4"), 1.0, 1.0, PulseShape::ideal());
    ControlTrace tr = bang_bang_trace(s, 32);
    std::vector<double> zz;
    for (double v : interval_starts(tr, Axis::z, Axis::z)) {
        if (zz.empty() || v != zz.back()) {
            zz.push_back(v);
        }
    }
    EXPECT_EQ(zz, (std::vector<double>{1, -1, 1, -1, 1}));
}

TEST(ControlMatrix, IdealUr10ReturnsToIdentity) {
    Sequence s = sim_variant(catalog_phases("UR10"), 1.0, 1.0, PulseShape::ideal());
    ControlTrace tr = bang_bang_trace(s, 32);
    EXPECT_NEAR(tr.final_matrix(2, 2), 1.0, 1e-12);
    EXPECT_THROW(bang_bang_trace(sim_variant(catalog_phases("UR10"), 1.0, 1.0, PulseShape::square()), 32),
                 std::invalid_argument);
}

TEST(Chi, IdealXy4CancelsToFirstOrder) {
    Sequence s = sim_variant(catalog_phases("XY4"), 1.0, 1.0, PulseShape::ideal());
    ErrorMatrix c = chi1(bang_bang_trace(s, 32));
    EXPECT_LE(c.max_abs(), 1e-12 * s.duration());
}

TEST(Chi, CrXy4OneLocalResidualPattern) {
    auto p = catalog_phases("XY4");
    ColoredSchedule s = cr_variant(p, p, 1.0, PulseShape::square());
    ErrorMatrix c = chi1(control_trace(s.red, 256));
    double tol = 1e-8 * s.duration();
    for (int mu = 0; mu < 3; ++mu) {
        for (int a = 0; a < 3; ++a) {
            bool allowed = a == 2 && mu < 2;
            if (allowed) {
                EXPECT_GT(std::abs(c.values(mu, a)), 0.1);
            } else {
                EXPECT_LE(std::abs(c.values(mu, a)), tol) << mu << a;
            }
        }
    }
}

TEST(Chi, SimXy4TwoLocalClosedForm) {
    // Z-row product is 1 on delays and cos^2 of the rotation angle during the simultaneous
    // pulses, so the ZZ entry is 4 tau_d + 4 * (tau_p / 2).
    for (double tau_d : {1.0, 3.0}) {
        Sequence s = sim_variant(catalog_phases("XY4"), 1.0, tau_d, PulseShape::square());
        SuppressionReport r = verify_first_order(s, 256, 1e-8);
        EXPECT_NEAR(r.chi2.chi.values(2, 2), 4 * tau_d + 2, 1e-6 * s.duration());
        EXPECT_FALSE(r.chi2.pass[2][2]);
        EXPECT_FALSE(r.chi2.pass[0][0]);
        EXPECT_TRUE(r.chi2.pass[0][1]);
        EXPECT_FALSE(r.passed());
    }
}

TEST(Chi, StaggeredSchedulesCancelTwoLocalTerms) {
    std::vector<std::pair<std::string, std::string>> pairs{{"XY4", "XY4"}, {"KDD", "KDD"}, {"XY4", "UR12"}};
    for (auto [a, b] : pairs) {
        auto [r, bl] = match_lengths(catalog_phases(a), catalog_phases(b));
        ColoredSchedule s = cr_variant(r, bl, 1.0, PulseShape::square());
        SuppressionReport rep = verify_first_order(s, 128, 1e-8);
        EXPECT_TRUE(rep.passed()) << a << "," << b << " " << rep.chi2.chi.max_abs();
    }
}

TEST(Chi, IdealStaggeredPairProductIntegratesToZero) {
    auto p = catalog_phases("XY4");
    ColoredSchedule s = cr_variant(p, p, 1.0, PulseShape::ideal());
    TimeGrid g = TimeGrid::build(std::vector<const Sequence *>{&s.red, &s.blue}, 32);
    ErrorMatrix c = chi2(bang_bang_trace(s.red, g), bang_bang_trace(s.blue, g));
    EXPECT_LE(std::abs(c.values(2, 2)), 1e-12);
}

TEST(Chi, MismatchedGridsAreRejected) {
    auto p = catalog_phases("XY4");
    ColoredSchedule s = cr_variant(p, p, 1.0, PulseShape::square());
    EXPECT_THROW(chi2(control_trace(s.red, 32), control_trace(s.blue, 64)), GridMismatchError);
}

TEST(Symmetry, StaggeredXy4RedComponents) {
    auto p = catalog_phases("XY4");
    ColoredSchedule s = cr_variant(p, p, 1.0, PulseShape::square());
    ControlTrace tr = control_trace(s.red, 128);
    SymmetryEntry zz = classify_symmetry(tr, Axis::z, Axis::z);
    EXPECT_TRUE(zz.has(SymmetryRelation::displacement_symmetric));
    EXPECT_LE(zz.residual_of(SymmetryRelation::displacement_symmetric), 1e-6);
    EXPECT_FALSE(zz.has(SymmetryRelation::displacement_antisymmetric));
    SymmetryEntry zx = classify_symmetry(tr, Axis::z, Axis::x);
    EXPECT_TRUE(zx.has(SymmetryRelation::displacement_antisymmetric));
    EXPECT_FALSE(zx.has(SymmetryRelation::displacement_symmetric));
}

TEST(Symmetry, StaggeredUr12BlueComponents) {
    auto p = catalog_phases("UR12");
    ColoredSchedule s = cr_variant(p, p, 1.0, PulseShape::square());
    ControlTrace tr = control_trace(s.blue, 128);
    for (Axis a : {Axis::x, Axis::y}) {
        SymmetryEntry e = classify_symmetry(tr, Axis::z, a);
        EXPECT_TRUE(e.has(SymmetryRelation::displacement_antisymmetric));
        EXPECT_LE(e.residual_of(SymmetryRelation::displacement_antisymmetric), 1e-6);
    }
}

TEST(Symmetry, ZeroComponentHasEveryRelation) {
    ControlTrace tr = control_trace(idle_sequence(2.0, 1.0), 32);
    SymmetryEntry e = classify_symmetry(tr, Axis::x, Axis::y);
    EXPECT_TRUE(e.identically_zero);
    for (auto r : kAllRelations) {
        EXPECT_TRUE(e.has(r));
    }
}

TEST(Symmetry, ConstantComponentIsSymmetricOnly) {
    // An X pulse leaves R^{XX} = 1 throughout.
    Sequence s{"c", 1.0, PulseShape::square(), {}};
    append_delay(s.segments, 1.0);
    append_pulse_window(s.segments, 0, 1.0, PulseShape::square());
    append_delay(s.segments, 1.0);
    SymmetryEntry e = classify_symmetry(control_trace(s, 64), Axis::x, Axis::x);
    EXPECT_FALSE(e.identically_zero);
    EXPECT_TRUE(e.has(SymmetryRelation::displacement_symmetric));
    EXPECT_TRUE(e.has(SymmetryRelation::mirror_symmetric));
    EXPECT_FALSE(e.has(SymmetryRelation::displacement_antisymmetric));
    EXPECT_FALSE(e.has(SymmetryRelation::mirror_antisymmetric));
    EXPECT_NEAR(e.residual_of(SymmetryRelation::mirror_antisymmetric), 2.0, 1e-12);
}

TEST(BangBang, ConvergesToSquarePulsesAtFirstOrder) {
    auto p = catalog_phases("XY4");
    std::vector<double> errors;
    // Fixed cycle time, so only the pulse width changes.
    for (double tau_p : {0.2, 0.1, 0.05}) {
        Sequence sq = sim_variant(p, tau_p, 2.0 - tau_p, PulseShape::square());
        Sequence bb = to_ideal(sq);
        TimeGrid g = TimeGrid::build(std::vector<const Sequence *>{&sq, &bb}, 64);
        ControlTrace a = control_trace(sq, g);
        ControlTrace b = bang_bang_trace(bb, g);
        double err = 0;
        for (int mu = 0; mu < 3; ++mu) {
            for (int al = 0; al < 3; ++al) {
                auto fa = a.component((Axis)mu, (Axis)al);
                auto fb = b.component((Axis)mu, (Axis)al);
                std::vector<double> d(fa.size());
                for (size_t k = 0; k < fa.size(); ++k) {
                    d[k] = std::abs(fa[k] - fb[k]);
                }
                err += simpson(g, d);
            }
        }
        errors.push_back(err / g.duration);
    }
    for (size_t i = 1; i < errors.size(); ++i) {
        double order = std::log2(errors[i - 1] / errors[i]);
        EXPECT_NEAR(order, 1.0, 0.1);
    }
}

TEST(Csv, Layouts) {
    auto p = catalog_phases("XY4");
    ColoredSchedule s = cr_variant(p, p, 1.0, PulseShape::square());
    ControlTrace tr = control_trace(s.red, 32);
    std::ostringstream trace;
    write_trace_csv(trace, tr);
    std::istringstream in(trace.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "t_s,R_XX,R_XY,R_XZ,R_YX,R_YY,R_YZ,R_ZX,R_ZY,R_ZZ");
    size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, tr.grid.node_count());

    std::ostringstream chi;
    write_chi_csv(chi, verify_first_order(s, 32, 1e-8));
    std::string chi_text = chi.str();
    EXPECT_EQ(chi_text.substr(0, chi_text.find('\n')), "kind,alpha,beta,value_s,pass");
    EXPECT_EQ(std::count(chi_text.begin(), chi_text.end(), '\n'), 28);

    std::ostringstream sym;
    auto entries = classify_all(tr);
    write_symmetry_csv(sym, entries);
    std::string sym_text = sym.str();
    EXPECT_EQ(sym_text.substr(0, sym_text.find('\n')), "mu,alpha,relation,residual,flag");
    EXPECT_EQ(std::count(sym_text.begin(), sym_text.end(), '\n'), 37);
}
