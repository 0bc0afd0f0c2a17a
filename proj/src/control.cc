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

#include "crdd/control.h"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <tuple>

namespace crdd {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0, 1};

struct IntervalPlan {
    size_t segment = 0;
    /// Instantaneous pulses applied at the interval start, in order.
    std::vector<size_t> jumps_before;
};

struct SequencePlan {
    std::vector<IntervalPlan> intervals;
    std::vector<size_t> jumps_at_end;
    /// Local pieces of every bounded pulse segment, keyed by segment index.
    std::map<size_t, std::vector<PulsePiece>> pieces;
};

bool is_jump(const Segment &s) {
    return s.is_pulse() && s.duration_s == 0;
}

SequencePlan plan_sequence(const Sequence &sequence, const TimeGrid &grid) {
    if (std::abs(sequence.duration() - grid.duration) > 1e-9 * grid.duration) {
        throw std::invalid_argument("sequence '" + sequence.name + "' does not match the grid duration");
    }
    auto bounds = sequence.boundaries();
    const auto &segs = sequence.segments;
    double tol = grid.tolerance();
    SequencePlan plan;
    size_t idx = 0;
    for (const auto &iv : grid.intervals) {
        IntervalPlan ip;
        while (idx < segs.size() && bounds[idx + 1] <= iv.start + tol) {
            if (is_jump(segs[idx])) {
                ip.jumps_before.push_back(idx);
            }
            ++idx;
        }
        if (idx >= segs.size() || bounds[idx + 1] < iv.start + iv.length - tol) {
            throw std::invalid_argument("grid interval is not contained in a single segment");
        }
        ip.segment = idx;
        if (segs[idx].is_pulse()) {
            plan.pieces[idx].push_back({iv.start - bounds[idx], iv.length, iv.steps});
        }
        plan.intervals.push_back(std::move(ip));
    }
    if (!plan.intervals.empty()) {
        idx = plan.intervals.back().segment + 1;
    }
    for (; idx < segs.size(); ++idx) {
        if (is_jump(segs[idx])) {
            plan.jumps_at_end.push_back(idx);
        } else if (segs[idx].duration_s > tol) {
            throw std::invalid_argument("grid ends before the sequence");
        }
    }
    return plan;
}

Eigen::Vector3d pulse_drive(const PulseSpec &pulse, const PulseCalibration &cal, double u) {
    Quadratures q = envelope_amplitude(pulse.shape, pulse.flip_angle_rad, pulse.duration_s, u);
    double x = cal.amplitude_scale * q.in_phase;
    double y = cal.amplitude_scale * q.quadrature;
    if (cal.quadrature_correction != 0) {
        y += cal.quadrature_correction * q.in_phase *
             std::cos(envelope_area(pulse.shape, pulse.flip_angle_rad, pulse.duration_s, u));
    }
    double c = std::cos(pulse.phase_rad);
    double s = std::sin(pulse.phase_rad);
    return {x * c - y * s, x * s + y * c, 0};
}

Eigen::Matrix2cd su2(const Eigen::Vector3d &v) {
    // exp(-i v.sigma)
    double a = v.norm();
    Eigen::Matrix2cd out;
    if (a == 0) {
        out.setIdentity();
        return out;
    }
    double c = std::cos(a);
    double s = std::sin(a) / a;
    out(0, 0) = Complex(c, -s * v.z());
    out(1, 1) = Complex(c, s * v.z());
    out(0, 1) = Complex(-s * v.y(), -s * v.x());
    out(1, 0) = Complex(s * v.y(), -s * v.x());
    return out;
}

const double kGaussLo = 0.5 - std::sqrt(3.0) / 6;
const double kGaussHi = 0.5 + std::sqrt(3.0) / 6;
const double kCommutator = std::sqrt(3.0) / 24;

// One fourth-order Magnus step of H = (w . sigma)/2 from local time u over length h.
Eigen::Matrix2cd magnus_step(const PulseSpec &pulse, const PulseCalibration &cal, double u, double h) {
    Eigen::Vector3d w1 = pulse_drive(pulse, cal, u + kGaussLo * h);
    Eigen::Vector3d w2 = pulse_drive(pulse, cal, u + kGaussHi * h);
    Eigen::Vector3d v = (h / 4) * (w1 + w2) + (kCommutator * h * h) * w2.cross(w1);
    return su2(v);
}

double unitarity_defect(const Eigen::Matrix2cd &u) {
    return (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
}

void check_unitary(const Eigen::Matrix2cd &u) {
    double d = unitarity_defect(u);
    if (!(d <= 1e-10)) {
        throw IntegrationError("control propagator drifted from unitarity by " + std::to_string(d));
    }
}

double calibration_area(const PulseSpec &pulse, std::span<const PulsePiece> pieces) {
    double area = 0;
    for (const auto &p : pieces) {
        double h = p.length / p.steps;
        for (int k = 0; k < p.steps; ++k) {
            double u = p.start + k * h;
            double a = envelope_amplitude(pulse.shape, pulse.flip_angle_rad, pulse.duration_s, u + kGaussLo * h).in_phase;
            double b = envelope_amplitude(pulse.shape, pulse.flip_angle_rad, pulse.duration_s, u + kGaussHi * h).in_phase;
            area += h / 2 * (a + b);
        }
    }
    return area;
}

using CalibrationKey = std::tuple<int, double, double, double, double, std::vector<PulsePiece>>;

CalibrationKey calibration_key(const PulseSpec &pulse, const std::vector<PulsePiece> &pieces) {
    return {
        (int)pulse.shape.kind,
        pulse.shape.sigma_s.value_or(-1),
        pulse.shape.drag_coefficient,
        pulse.flip_angle_rad,
        pulse.duration_s,
        pieces};
}

}  // namespace

char axis_letter(Axis a) {
    return "XYZ"[(int)a];
}

Axis parse_axis(char c) {
    switch (c) {
        case 'X':
        case 'x':
            return Axis::x;
        case 'Y':
        case 'y':
            return Axis::y;
        case 'Z':
        case 'z':
            return Axis::z;
    }
    throw std::invalid_argument(std::string("unknown Pauli axis '") + c + "'");
}

const Eigen::Matrix2cd &pauli(Axis a) {
    static const std::array<Eigen::Matrix2cd, 3> table = [] {
        std::array<Eigen::Matrix2cd, 3> t;
        t[0] << 0, 1, 1, 0;
        t[1] << 0, -kI, kI, 0;
        t[2] << 1, 0, 0, -1;
        return t;
    }();
    return table[(int)a];
}

Eigen::Matrix2cd rotation_unitary(double theta, double phi) {
    return su2(Eigen::Vector3d(std::cos(phi), std::sin(phi), 0) * (theta / 2));
}

Eigen::Matrix2cd pulse_propagator(
    const PulseSpec &pulse, std::span<const PulsePiece> pieces, const PulseCalibration &calibration) {
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
    for (const auto &p : pieces) {
        double h = p.length / p.steps;
        for (int k = 0; k < p.steps; ++k) {
            u = magnus_step(pulse, calibration, p.start + k * h, h) * u;
        }
    }
    return u;
}

PulseCalibration calibrate_pulse(const PulseSpec &pulse, std::span<const PulsePiece> pieces) {
    if (pulse.shape.is_ideal()) {
        return {};
    }
    PulseCalibration cal;
    double area = calibration_area(pulse, pieces);
    if (area != 0) {
        cal.amplitude_scale = pulse.flip_angle_rad / area;
    }
    PulseSpec frame = pulse;
    frame.phase_rad = 0;
    Eigen::Matrix2cd target = rotation_unitary(pulse.flip_angle_rad, 0);
    if (pulse.shape.kind == ShapeKind::drag && pulse.shape.drag_coefficient != 0) {
        double q0_target = std::cos(pulse.flip_angle_rad / 2);
        auto residual = [&](const PulseCalibration &c) {
            Eigen::Matrix2cd u = pulse_propagator(frame, pieces, c);
            double q0 = (u(0, 0) + u(1, 1)).real() / 2;
            double qz = (u(1, 1) - u(0, 0)).imag() / 2;
            return Eigen::Vector2d(q0 - q0_target, qz);
        };
        for (int iter = 0; iter < 50; ++iter) {
            Eigen::Vector2d r = residual(cal);
            if (r.norm() < 1e-15) {
                break;
            }
            double ds = 1e-7 * cal.amplitude_scale;
            // kappa is dimensionless (it multiplies the in-phase Rabi rate).
            double dk = 1e-7;
            Eigen::Matrix2d jac;
            jac.col(0) = (residual({cal.amplitude_scale + ds, cal.quadrature_correction}) - r) / ds;
            jac.col(1) = (residual({cal.amplitude_scale, cal.quadrature_correction + dk}) - r) / dk;
            Eigen::Vector2d step = jac.fullPivLu().solve(-r);
            cal.amplitude_scale += step[0];
            cal.quadrature_correction += step[1];
        }
    }
    Eigen::Matrix2cd got = pulse_propagator(frame, pieces, cal);
    double err = (got - target).cwiseAbs().maxCoeff();
    if (!(err <= 1e-11)) {
        throw IntegrationError("pulse calibration did not converge (error " + std::to_string(err) + ")");
    }
    return cal;
}

Propagation propagate(const Sequence &sequence, const TimeGrid &grid) {
    sequence.validate();
    SequencePlan plan = plan_sequence(sequence, grid);
    const auto &segs = sequence.segments;

    std::vector<std::pair<CalibrationKey, PulseCalibration>> cache;
    std::map<size_t, PulseCalibration> calibrations;
    for (const auto &[idx, pieces] : plan.pieces) {
        const PulseSpec &pulse = *segs[idx].pulse;
        auto key = calibration_key(pulse, pieces);
        const PulseCalibration *found = nullptr;
        for (const auto &[k, c] : cache) {
            if (k == key) {
                found = &c;
                break;
            }
        }
        if (found == nullptr) {
            cache.emplace_back(key, calibrate_pulse(pulse, pieces));
            found = &cache.back().second;
        }
        calibrations[idx] = *found;
    }

    Propagation out;
    out.grid = grid;
    out.nodes.resize(grid.intervals.size());
    Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
    auto jump = [&](size_t idx) {
        const PulseSpec &p = *segs[idx].pulse;
        u = rotation_unitary(p.flip_angle_rad, p.phase_rad) * u;
    };
    auto bounds = sequence.boundaries();
    for (size_t i = 0; i < grid.intervals.size(); ++i) {
        const auto &iv = grid.intervals[i];
        const auto &ip = plan.intervals[i];
        for (size_t j : ip.jumps_before) {
            jump(j);
        }
        auto &nodes = out.nodes[i];
        nodes.reserve(iv.steps + 1);
        nodes.push_back(u);
        const Segment &seg = segs[ip.segment];
        if (!seg.is_pulse()) {
            nodes.resize(iv.steps + 1, u);
            continue;
        }
        const PulseCalibration &cal = calibrations[ip.segment];
        double h = iv.step();
        double local = iv.start - bounds[ip.segment];
        for (int k = 0; k < iv.steps; ++k) {
            u = magnus_step(*seg.pulse, cal, local + k * h, h) * u;
            check_unitary(u);
            nodes.push_back(u);
        }
    }
    for (size_t j : plan.jumps_at_end) {
        jump(j);
    }
    out.final_unitary = u;
    return out;
}

Propagation propagate(const Sequence &sequence, int samples_per_pulse) {
    return propagate(sequence, TimeGrid::build(sequence, samples_per_pulse));
}

Eigen::Matrix3d control_matrix(const Eigen::Matrix2cd &u) {
    Eigen::Matrix3d r;
    for (int mu = 0; mu < 3; ++mu) {
        Eigen::Matrix2cd m = u.adjoint() * pauli((Axis)mu) * u;
        for (int alpha = 0; alpha < 3; ++alpha) {
            Complex tr = (m * pauli((Axis)alpha)).trace() / 2.0;
            if (!(std::abs(tr.imag()) <= 1e-12)) {
                throw IntegrationError("control matrix entry has imaginary part " + std::to_string(tr.imag()));
            }
            r(mu, alpha) = tr.real();
        }
    }
    return r;
}

Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d &axis, double theta) {
    Eigen::Vector3d n = axis.normalized();
    Eigen::Matrix3d cross;
    cross << 0, -n.z(), n.y(), n.z(), 0, -n.x(), -n.y(), n.x(), 0;
    return std::cos(theta) * Eigen::Matrix3d::Identity() + std::sin(theta) * cross +
           (1 - std::cos(theta)) * n * n.transpose();
}

std::vector<double> ControlTrace::component(Axis mu, Axis alpha) const {
    std::vector<double> out;
    out.reserve(grid.node_count());
    for (const auto &iv : nodes) {
        for (const auto &r : iv) {
            out.push_back(r((int)mu, (int)alpha));
        }
    }
    return out;
}

ControlTrace control_trace(const Propagation &propagation) {
    ControlTrace out;
    out.grid = propagation.grid;
    out.nodes.resize(propagation.nodes.size());
    for (size_t i = 0; i < propagation.nodes.size(); ++i) {
        out.nodes[i].reserve(propagation.nodes[i].size());
        for (const auto &u : propagation.nodes[i]) {
            out.nodes[i].push_back(control_matrix(u));
        }
    }
    out.final_matrix = control_matrix(propagation.final_unitary);
    return out;
}

ControlTrace control_trace(const Sequence &sequence, const TimeGrid &grid) {
    return control_trace(propagate(sequence, grid));
}

ControlTrace control_trace(const Sequence &sequence, int samples_per_pulse) {
    return control_trace(propagate(sequence, samples_per_pulse));
}

ControlTrace bang_bang_trace(const Sequence &sequence, const TimeGrid &grid) {
    sequence.validate();
    for (const auto &s : sequence.segments) {
        if (s.is_pulse() && !s.pulse->shape.is_ideal()) {
            throw std::invalid_argument("bang_bang_trace requires ideal pulses only");
        }
    }
    SequencePlan plan = plan_sequence(sequence, grid);
    Eigen::Matrix3d o = Eigen::Matrix3d::Identity();
    auto jump = [&](size_t idx) {
        const PulseSpec &p = *sequence.segments[idx].pulse;
        o = rotation_matrix({std::cos(p.phase_rad), std::sin(p.phase_rad), 0}, p.flip_angle_rad) * o;
    };
    ControlTrace out;
    out.grid = grid;
    out.nodes.resize(grid.intervals.size());
    for (size_t i = 0; i < grid.intervals.size(); ++i) {
        for (size_t j : plan.intervals[i].jumps_before) {
            jump(j);
        }
        out.nodes[i].assign(grid.intervals[i].steps + 1, o);
    }
    for (size_t j : plan.jumps_at_end) {
        jump(j);
    }
    out.final_matrix = o;
    return out;
}

ControlTrace bang_bang_trace(const Sequence &sequence, int samples_per_pulse) {
    return bang_bang_trace(sequence, TimeGrid::build(sequence, samples_per_pulse));
}

Sequence to_ideal(const Sequence &sequence) {
    Sequence out{sequence.name, sequence.tau_p_s, PulseShape::ideal(), {}};
    for (const auto &s : sequence.segments) {
        if (!s.is_pulse()) {
            append_delay(out.segments, s.duration_s);
            continue;
        }
        PulseSpec p = *s.pulse;
        double half = p.duration_s / 2;
        p.duration_s = 0;
        p.shape = PulseShape::ideal();
        append_delay(out.segments, half);
        out.segments.push_back(Segment::make_pulse(p));
        append_delay(out.segments, half);
    }
    return out;
}

}  // namespace crdd
