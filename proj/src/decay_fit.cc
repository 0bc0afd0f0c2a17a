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

#include "crdd/decay_fit.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace crdd {

std::string_view fit_flag_name(FitFlag f) {
    switch (f) {
        case FitFlag::ok:
            return "ok";
        case FitFlag::degenerate:
            return "degenerate";
        case FitFlag::infinite_tau:
            return "infinite_tau";
        case FitFlag::not_converged:
            return "not_converged";
    }
    throw std::invalid_argument("unknown fit flag");
}

FitFlag parse_fit_flag(std::string_view name) {
    for (FitFlag f : {FitFlag::ok, FitFlag::degenerate, FitFlag::infinite_tau, FitFlag::not_converged}) {
        if (fit_flag_name(f) == name) {
            return f;
        }
    }
    throw std::invalid_argument("unknown fit flag '" + std::string(name) + "'");
}

double FitResult::model(double t) const {
    return amplitude * std::exp(-gamma * t) + offset;
}

double characteristic_time(const FitResult &fit) {
    if (!(fit.gamma > 0)) {
        return std::numeric_limits<double>::infinity();
    }
    return 1 / fit.gamma;
}

namespace {

constexpr double kGradTol = 1e-10;
constexpr int kMaxIter = 500;

// Scaled problem: x = t / t_max, parameters (A, g = gamma * t_max, c).
struct Problem {
    std::vector<double> x;
    std::vector<double> p;

    double rss(const Eigen::Vector3d &q) const {
        double s = 0;
        for (size_t i = 0; i < x.size(); ++i) {
            double r = q[0] * std::exp(-q[1] * x[i]) + q[2] - p[i];
            s += r * r;
        }
        return s;
    }

    void linearize(const Eigen::Vector3d &q, Eigen::MatrixXd &jac, Eigen::VectorXd &res) const {
        size_t n = x.size();
        jac.resize(n, 3);
        res.resize(n);
        for (size_t i = 0; i < n; ++i) {
            double e = std::exp(-q[1] * x[i]);
            res[i] = q[0] * e + q[2] - p[i];
            jac(i, 0) = e;
            jac(i, 1) = -q[0] * x[i] * e;
            jac(i, 2) = 1;
        }
    }
};

const Eigen::Vector3d kLower(0, 0, 0);
const Eigen::Vector3d kUpper(1, std::numeric_limits<double>::infinity(), 1);

Eigen::Vector3d project(Eigen::Vector3d q) {
    for (int k = 0; k < 3; ++k) {
        q[k] = std::clamp(q[k], kLower[k], kUpper[k]);
    }
    return q;
}

// Parameters pinned at a bound with the gradient pushing outward are excluded from the step.
std::array<bool, 3> free_mask(const Eigen::Vector3d &q, const Eigen::Vector3d &grad) {
    std::array<bool, 3> free{};
    for (int k = 0; k < 3; ++k) {
        bool at_lower = q[k] <= kLower[k] && grad[k] > 0;
        bool at_upper = q[k] >= kUpper[k] && grad[k] < 0;
        free[k] = !(at_lower || at_upper);
    }
    return free;
}

double masked_norm(const Eigen::Vector3d &grad, const std::array<bool, 3> &free) {
    double s = 0;
    for (int k = 0; k < 3; ++k) {
        if (free[k]) {
            s += grad[k] * grad[k];
        }
    }
    return std::sqrt(s);
}

Eigen::Vector3d initial_guess(const Problem &prob) {
    double lo = *std::min_element(prob.p.begin(), prob.p.end());
    double hi = *std::max_element(prob.p.begin(), prob.p.end());
    double c0 = lo;
    double a0 = hi - lo;
    // Log-linear regression of (p - c0) over the first half.
    size_t half = (prob.x.size() + 1) / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (size_t i = 0; i < half; ++i) {
        double d = prob.p[i] - c0;
        if (d > 1e-12 * std::max(a0, 1e-300)) {
            double y = std::log(d);
            sx += prob.x[i];
            sy += y;
            sxx += prob.x[i] * prob.x[i];
            sxy += prob.x[i] * y;
            ++m;
        }
    }
    double g0 = 1;
    if (m >= 2) {
        double den = m * sxx - sx * sx;
        if (den > 0) {
            double slope = (m * sxy - sx * sy) / den;
            if (std::isfinite(slope) && slope < 0) {
                g0 = -slope;
            }
        }
    }
    return project({a0, g0, c0});
}

}  // namespace

FitResult fit_decay(std::span<const DecayPoint> points, std::optional<DecayParams> start) {
    if (points.size() < 4) {
        throw std::invalid_argument("fit_decay needs at least 4 points");
    }
    for (size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].t) || !std::isfinite(points[i].p) || points[i].t < 0 ||
            (i > 0 && !(points[i].t > points[i - 1].t))) {
            throw std::invalid_argument("fit_decay needs finite, non-negative, strictly increasing times");
        }
    }
    FitResult out;
    bool constant = std::all_of(points.begin(), points.end(), [&](const DecayPoint &d) { return d.p == points[0].p; });
    if (constant) {
        out.offset = points[0].p;
        out.tau_gamma = std::numeric_limits<double>::infinity();
        out.flag = FitFlag::degenerate;
        out.std_error = {NAN, NAN, NAN};
        return out;
    }

    double scale = points.back().t > 0 ? points.back().t : 1;
    Problem prob;
    for (const auto &d : points) {
        prob.x.push_back(d.t / scale);
        prob.p.push_back(d.p);
    }
    Eigen::Vector3d q = start.has_value()
                            ? project({start->amplitude, start->gamma * scale, start->offset})
                            : initial_guess(prob);

    Eigen::MatrixXd jac;
    Eigen::VectorXd res;
    double lambda = 1e-3;
    double cost = prob.rss(q);
    bool converged = false;
    int iter = 0;
    double gnorm = 0;
    for (; iter < kMaxIter; ++iter) {
        prob.linearize(q, jac, res);
        Eigen::Vector3d grad = jac.transpose() * res;
        auto free = free_mask(q, grad);
        gnorm = masked_norm(grad, free);
        if (gnorm <= kGradTol) {
            converged = true;
            break;
        }
        Eigen::Matrix3d jtj = jac.transpose() * jac;
        bool improved = false;
        while (lambda < 1e20) {
            Eigen::Matrix3d a = jtj;
            Eigen::Vector3d b = -grad;
            for (int k = 0; k < 3; ++k) {
                if (!free[k]) {
                    a.row(k).setZero();
                    a.col(k).setZero();
                    a(k, k) = 1;
                    b[k] = 0;
                } else {
                    a(k, k) += lambda * std::max(jtj(k, k), 1e-12);
                }
            }
            Eigen::Vector3d trial = project(q + a.ldlt().solve(b));
            double trial_cost = prob.rss(trial);
            if (trial_cost < cost) {
                q = trial;
                cost = trial_cost;
                lambda = std::max(lambda / 10, 1e-12);
                improved = true;
                break;
            }
            lambda *= 10;
        }
        if (!improved) {
            // No representable step lowers the cost: stationary to working precision.
            converged = true;
            break;
        }
    }

    out.amplitude = q[0];
    out.gamma = q[1] / scale;
    out.offset = q[2];
    out.rss = cost;
    out.iterations = iter;
    out.gradient_norm = gnorm;
    out.tau_gamma = characteristic_time(out);

    prob.linearize(q, jac, res);
    size_t n = points.size();
    Eigen::Matrix3d jtj = jac.transpose() * jac;
    Eigen::FullPivLU<Eigen::Matrix3d> lu(jtj);
    if (n > 3 && lu.isInvertible()) {
        Eigen::Matrix3d cov = lu.inverse() * (cost / (n - 3));
        out.std_error = {std::sqrt(cov(0, 0)), std::sqrt(cov(1, 1)) / scale, std::sqrt(cov(2, 2))};
    } else {
        out.std_error = {NAN, NAN, NAN};
    }

    if (!converged) {
        out.flag = FitFlag::not_converged;
    } else if (!(out.gamma > 0)) {
        out.flag = FitFlag::infinite_tau;
    }
    return out;
}

}  // namespace crdd
