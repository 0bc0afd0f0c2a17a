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

#include "crdd/spline.h"

#include <algorithm>
#include <cmath>

namespace crdd {

NaturalCubicSpline::NaturalCubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    size_t n = x_.size();
    if (n < 2 || y_.size() != n) {
        throw std::invalid_argument("spline needs at least two knots and matching value count");
    }
    for (size_t i = 1; i < n; ++i) {
        if (!(x_[i] > x_[i - 1])) {
            throw std::invalid_argument("spline knots must be strictly increasing");
        }
    }
    // Thomas algorithm on the interior second derivatives.
    m_.assign(n, 0);
    if (n == 2) {
        return;
    }
    std::vector<double> diag(n, 0), upper(n, 0), rhs(n, 0);
    for (size_t i = 1; i + 1 < n; ++i) {
        double h0 = x_[i] - x_[i - 1];
        double h1 = x_[i + 1] - x_[i];
        diag[i] = 2 * (h0 + h1);
        upper[i] = h1;
        rhs[i] = 6 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
        if (i > 1) {
            double w = h0 / diag[i - 1];
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
    }
    for (size_t i = n - 2; i >= 1; --i) {
        m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
    }
}

size_t NaturalCubicSpline::piece(double t) const {
    auto it = std::upper_bound(x_.begin(), x_.end(), t);
    size_t i = it == x_.begin() ? 0 : (size_t)(it - x_.begin()) - 1;
    return std::min(i, x_.size() - 2);
}

double NaturalCubicSpline::value(double t) const {
    size_t i = piece(t);
    double h = x_[i + 1] - x_[i];
    double a = (x_[i + 1] - t) / h;
    double b = (t - x_[i]) / h;
    return a * y_[i] + b * y_[i + 1] + ((a * a * a - a) * m_[i] + (b * b * b - b) * m_[i + 1]) * h * h / 6;
}

// Integral of piece i from x_i to t.
double NaturalCubicSpline::antiderivative(size_t i, double t) const {
    double h = x_[i + 1] - x_[i];
    double b = (t - x_[i]) / h;
    double a = 1 - b;
    // Integrate in b: dt = h db, with a = 1 - b.
    double ia = (1 - a * a) / 2;
    double ib = b * b / 2;
    double ia3 = (1 - a * a * a * a) / 4 - ia;
    double ib3 = b * b * b * b / 4 - ib;
    return h * (y_[i] * ia + y_[i + 1] * ib + (m_[i] * ia3 + m_[i + 1] * ib3) * h * h / 6);
}

double NaturalCubicSpline::integral(double a, double b) const {
    if (a > b) {
        return -integral(b, a);
    }
    if (a < x_.front() || b > x_.back()) {
        throw ExtrapolationError("integration range lies outside the spline knots");
    }
    size_t i = piece(a);
    size_t j = piece(b);
    if (i == j) {
        return antiderivative(i, b) - antiderivative(i, a);
    }
    double total = antiderivative(i, x_[i + 1]) - antiderivative(i, a);
    for (size_t k = i + 1; k < j; ++k) {
        total += antiderivative(k, x_[k + 1]);
    }
    return total + antiderivative(j, b);
}

double time_avg_survival(std::span<const DecayPoint> points, double T) {
    if (points.size() < 2) {
        throw std::invalid_argument("time_avg_survival needs at least two points");
    }
    if (points.front().t != 0) {
        throw std::invalid_argument("time_avg_survival needs a point at t = 0");
    }
    if (!(points.front().p > 0)) {
        throw std::invalid_argument("time_avg_survival needs p(0) > 0");
    }
    if (!(T > 0) || T > points.back().t) {
        throw ExtrapolationError("averaging time lies outside the sampled range");
    }
    std::vector<double> x, y;
    for (const auto &d : points) {
        x.push_back(d.t);
        y.push_back(d.p);
    }
    NaturalCubicSpline spline(std::move(x), std::move(y));
    return spline.integral(0, T) / (points.front().p * T);
}

}  // namespace crdd
