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

#include "crdd/noise_sim.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "crdd/control.h"
#include "crdd/rng.h"

namespace crdd {

namespace {

using Complex = std::complex<double>;
constexpr Complex kI{0, 1};

// a.sigma as row-major 2x2.
std::array<Complex, 4> pauli_combination(double x, double y, double z) {
    return {Complex(z, 0), Complex(x, -y), Complex(x, y), Complex(-z, 0)};
}

void check_capacity(int n) {
    if (n > kMaxQubits) {
        throw CapacityError(
            "register of " + std::to_string(n) + " qubits exceeds the statevector limit of " +
            std::to_string(kMaxQubits));
    }
}

// out += m applied to qubit v of in.
void add_local(const std::array<Complex, 4> &m, int v, const StateVector &in, StateVector &out) {
    size_t bit = size_t{1} << v;
    for (size_t i = 0; i < in.size(); ++i) {
        if (i & bit) {
            continue;
        }
        size_t j = i | bit;
        Complex a = in[i];
        Complex b = in[j];
        out[i] += m[0] * a + m[1] * b;
        out[j] += m[2] * a + m[3] * b;
    }
}

// psi <- m applied to qubit v.
void apply_local(const std::array<Complex, 4> &m, int v, StateVector &psi) {
    size_t bit = size_t{1} << v;
    for (size_t i = 0; i < psi.size(); ++i) {
        if (i & bit) {
            continue;
        }
        size_t j = i | bit;
        Complex a = psi[i];
        Complex b = psi[j];
        psi[i] = m[0] * a + m[1] * b;
        psi[j] = m[2] * a + m[3] * b;
    }
}

// out += c * (mv on qubit v)(mw on qubit w) in.
void add_pair(
    const std::array<Complex, 4> &mv,
    int v,
    const std::array<Complex, 4> &mw,
    int w,
    double c,
    const StateVector &in,
    StateVector &out) {
    size_t bv = size_t{1} << v;
    size_t bw = size_t{1} << w;
    for (size_t i = 0; i < in.size(); ++i) {
        if (i & (bv | bw)) {
            continue;
        }
        size_t idx[2][2] = {{i, i | bw}, {i | bv, i | bv | bw}};
        Complex x[2][2] = {{in[idx[0][0]], in[idx[0][1]]}, {in[idx[1][0]], in[idx[1][1]]}};
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                Complex y = 0;
                for (int p = 0; p < 2; ++p) {
                    Complex row = mw[2 * b] * x[p][0] + mw[2 * b + 1] * x[p][1];
                    y += mv[2 * a + p] * row;
                }
                out[idx[a][b]] += c * y;
            }
        }
    }
}

double norm_of(const StateVector &psi) {
    double s = 0;
    for (const auto &a : psi) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

}  // namespace

MatrixFreeHamiltonian::MatrixFreeHamiltonian(const DeviceModel &device, std::span<const Drive> drives)
    : n_(device.num_qubits()) {
    check_capacity(n_);
    device.validate();
    if ((int)drives.size() != n_) {
        throw std::invalid_argument("one drive per qubit is required");
    }
    edges_ = device.graph.edges;
    coupling_ = device.coupling;
    for (int v = 0; v < n_; ++v) {
        auto f = device.local_field[v];
        f[0] += drives[v].omega / 2 * std::cos(drives[v].phase);
        f[1] += drives[v].omega / 2 * std::sin(drives[v].phase);
        field_.push_back(f);
    }
}

void MatrixFreeHamiltonian::apply(const StateVector &in, StateVector &out) const {
    out.assign(in.size(), Complex(0));
    for (int v = 0; v < n_; ++v) {
        const auto &f = field_[v];
        add_local(pauli_combination(f[0], f[1], f[2]), v, in, out);
    }
    for (size_t e = 0; e < edges_.size(); ++e) {
        auto [v, w] = edges_[e];
        size_t mask = (size_t{1} << v) | (size_t{1} << w);
        for (size_t i = 0; i < in.size(); ++i) {
            int parity = std::popcount(i & mask) & 1;
            out[i] += (parity ? -coupling_[e] : coupling_[e]) * in[i];
        }
    }
}

MatrixFreeHamiltonian build_hamiltonian(const DeviceModel &device, std::span<const Drive> drives) {
    return MatrixFreeHamiltonian(device, drives);
}

StateVector product_state(std::span<const Pole> poles) {
    check_capacity((int)poles.size());
    StateVector psi(size_t{1} << poles.size(), Complex(0));
    psi[0] = 1;
    // Build by tensoring qubits in from the lowest bit.
    size_t filled = 1;
    for (size_t v = 0; v < poles.size(); ++v) {
        auto amp = pole_vector(poles[v]);
        for (size_t i = 0; i < filled; ++i) {
            psi[i | filled] = psi[i] * amp[1];
            psi[i] *= amp[0];
        }
        filled <<= 1;
    }
    return psi;
}

CycleEvolver::CycleEvolver(const DeviceModel &device, std::span<const Sequence> schedule, int samples_per_pulse)
    : n_(device.num_qubits()), duration_(0), pulses_(0) {
    check_capacity(n_);
    device.validate();
    if ((int)schedule.size() != n_) {
        throw std::invalid_argument("schedule needs one sequence per qubit");
    }
    duration_ = schedule[0].duration();
    std::vector<const Sequence *> ptrs;
    for (const auto &s : schedule) {
        if (std::abs(s.duration() - duration_) > 1e-9 * duration_) {
            throw std::invalid_argument(
                "schedule duration mismatch: '" + s.name + "' lasts " + std::to_string(s.duration()) + " s, expected " +
                std::to_string(duration_) + " s");
        }
        ptrs.push_back(&s);
        pulses_ = std::max(pulses_, (long)s.pulse_count());
    }
    edges_ = device.graph.edges;
    coupling_ = device.coupling;
    grid_ = TimeGrid::build(ptrs, 2 * samples_per_pulse);

    // Distinct sequences share one trace.
    std::vector<const Sequence *> distinct;
    std::vector<size_t> which(n_);
    for (int v = 0; v < n_; ++v) {
        auto it = std::find_if(distinct.begin(), distinct.end(), [&](const Sequence *d) { return *d == schedule[v]; });
        which[v] = it - distinct.begin();
        if (it == distinct.end()) {
            distinct.push_back(&schedule[v]);
        }
    }
    std::vector<ControlTrace> traces;
    std::vector<Eigen::Matrix2cd> finals;
    for (const Sequence *s : distinct) {
        Propagation p = propagate(*s, grid_);
        finals.push_back(p.final_unitary);
        traces.push_back(control_trace(p));
    }

    size_t nodes = grid_.node_count();
    coeff_.assign(nodes * n_ * 6, 0);
    for (int v = 0; v < n_; ++v) {
        const ControlTrace &t = traces[which[v]];
        Eigen::RowVector3d b(device.local_field[v][0], device.local_field[v][1], device.local_field[v][2]);
        size_t node = 0;
        for (const auto &iv : t.nodes) {
            for (const auto &r : iv) {
                double *c = &coeff_[(node * n_ + v) * 6];
                Eigen::RowVector3d field = b * r;
                for (int a = 0; a < 3; ++a) {
                    c[a] = r(2, a);
                    c[3 + a] = field[a];
                }
                ++node;
            }
        }
        const auto &u = finals[which[v]];
        final_local_.push_back({u(0, 0), u(0, 1), u(1, 0), u(1, 1)});
    }

}

void CycleEvolver::build_dense_cache() {
    if (dense_.has_value()) {
        return;
    }
    size_t dim = size_t{1} << n_;
    std::vector<Complex> m(dim * dim);
    for (size_t col = 0; col < dim; ++col) {
        StateVector e(dim, Complex(0));
        e[col] = 1;
        apply_integrated(e);
        for (size_t row = 0; row < dim; ++row) {
            m[row * dim + col] = e[row];
        }
    }
    dense_ = std::move(m);
}

void CycleEvolver::apply_toggling(size_t node, const StateVector &in, StateVector &out) const {
    out.assign(in.size(), Complex(0));
    const double *base = &coeff_[node * n_ * 6];
    for (int v = 0; v < n_; ++v) {
        const double *c = base + v * 6;
        if (c[3] != 0 || c[4] != 0 || c[5] != 0) {
            add_local(pauli_combination(c[3], c[4], c[5]), v, in, out);
        }
    }
    for (size_t e = 0; e < edges_.size(); ++e) {
        auto [v, w] = edges_[e];
        const double *a = base + v * 6;
        const double *b = base + w * 6;
        add_pair(
            pauli_combination(a[0], a[1], a[2]), v, pauli_combination(b[0], b[1], b[2]), w, coupling_[e], in, out);
    }
    for (auto &x : out) {
        x *= -kI;
    }
}

void CycleEvolver::apply_integrated(StateVector &psi) const {
    StateVector k1, k2, k3, k4, tmp(psi.size());
    size_t base = 0;
    for (const auto &iv : grid_.intervals) {
        double h = 2 * iv.step();
        for (int j = 0; j < iv.steps; j += 2) {
            size_t n0 = base + j;
            apply_toggling(n0, psi, k1);
            for (size_t i = 0; i < psi.size(); ++i) {
                tmp[i] = psi[i] + (h / 2) * k1[i];
            }
            apply_toggling(n0 + 1, tmp, k2);
            for (size_t i = 0; i < psi.size(); ++i) {
                tmp[i] = psi[i] + (h / 2) * k2[i];
            }
            apply_toggling(n0 + 1, tmp, k3);
            for (size_t i = 0; i < psi.size(); ++i) {
                tmp[i] = psi[i] + h * k3[i];
            }
            apply_toggling(n0 + 2, tmp, k4);
            for (size_t i = 0; i < psi.size(); ++i) {
                psi[i] += (h / 6) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            }
        }
        base += iv.steps + 1;
    }
    for (int v = 0; v < n_; ++v) {
        apply_local(final_local_[v], v, psi);
    }
}

void CycleEvolver::apply(StateVector &psi) const {
    if (psi.size() != (size_t{1} << n_)) {
        throw std::invalid_argument("state dimension does not match the device");
    }
    if (!dense_.has_value()) {
        apply_integrated(psi);
        return;
    }
    size_t dim = psi.size();
    StateVector out(dim, Complex(0));
    const auto &m = *dense_;
    for (size_t row = 0; row < dim; ++row) {
        Complex acc = 0;
        for (size_t col = 0; col < dim; ++col) {
            acc += m[row * dim + col] * psi[col];
        }
        out[row] = acc;
    }
    psi = std::move(out);
}

StateVector evolve(
    const DeviceModel &device,
    std::span<const Sequence> schedule,
    long repetitions,
    StateVector psi,
    int samples_per_pulse) {
    if (repetitions < 0) {
        throw std::invalid_argument("repetitions must be non-negative");
    }
    CycleEvolver cycle(device, schedule, samples_per_pulse);
    if ((size_t)repetitions > (size_t{1} << cycle.num_qubits())) {
        cycle.build_dense_cache();
    }
    double before = norm_of(psi);
    for (long r = 0; r < repetitions; ++r) {
        cycle.apply(psi);
    }
    double drift = std::abs(norm_of(psi) - before);
    if (!(drift <= 1e-9)) {
        throw std::runtime_error("statevector norm drifted by " + std::to_string(drift));
    }
    return psi;
}

std::vector<double> decoded_distribution(std::span<const Pole> poles, const StateVector &psi) {
    if (psi.size() != (size_t{1} << poles.size())) {
        throw std::invalid_argument("state dimension does not match the pole list");
    }
    StateVector x = psi;
    for (size_t v = 0; v < poles.size(); ++v) {
        auto [a, b] = pole_vector(poles[v]);
        // Inverse of [[a, -b*], [b, a*]].
        apply_local({std::conj(a), std::conj(b), -b, a}, (int)v, x);
    }
    std::vector<double> out(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        out[i] = std::norm(x[i]);
    }
    return out;
}

long sample_zero_count(std::span<const double> probs, long shots, uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    std::vector<double> cdf(probs.size());
    double acc = 0;
    for (size_t i = 0; i < probs.size(); ++i) {
        acc += std::max(probs[i], 0.0);
        cdf[i] = acc;
    }
    std::mt19937_64 rng(seed);
    long zeros = 0;
    for (long s = 0; s < shots; ++s) {
        double u = uniform01(rng) * acc;
        size_t outcome = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        zeros += outcome == 0;
    }
    return zeros;
}

SurvivalPoint encode_decode_survival(
    const StateSpec &state,
    const DeviceModel &device,
    std::span<const Sequence> schedule,
    long repetitions,
    long shots,
    uint64_t seed,
    int samples_per_pulse) {
    if ((int)state.poles.size() != device.num_qubits()) {
        throw std::invalid_argument("state and device sizes differ");
    }
    StateVector psi = evolve(device, schedule, repetitions, product_state(state.poles), samples_per_pulse);
    auto probs = decoded_distribution(state.poles, psi);
    SurvivalPoint p;
    p.duration_s = repetitions * schedule[0].duration();
    long pulses = 0;
    for (const auto &s : schedule) {
        pulses = std::max(pulses, (long)s.pulse_count());
    }
    p.pulses = repetitions * pulses;
    p.shots = shots;
    p.zeros = sample_zero_count(probs, shots, seed);
    p.p0 = (double)p.zeros / shots;
    return p;
}

}  // namespace crdd
