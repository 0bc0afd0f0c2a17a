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

#include "crdd/svg_report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "crdd/stats.h"

namespace crdd {

namespace {

constexpr double kWidth = 760;
constexpr double kHeight = 480;
constexpr double kLeft = 90;
constexpr double kRight = 180;
constexpr double kTop = 44;
constexpr double kBottom = 64;

const char *const kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

const char *color(size_t i) {
    return kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

struct Axis1 {
    double lo = 0;
    double hi = 1;
    bool log = false;
    double pixel_lo = 0;
    double pixel_hi = 1;

    double map(double v) const {
        double a = log ? std::log10(v) : v;
        return pixel_lo + (a - lo) / (hi - lo) * (pixel_hi - pixel_lo);
    }

    std::vector<double> ticks() const {
        std::vector<double> out;
        if (log) {
            for (double d = std::ceil(lo - 1e-9); d <= hi + 1e-9; d += 1) {
                out.push_back(std::pow(10.0, d));
            }
            return out;
        }
        double raw = (hi - lo) / 5;
        double mag = std::pow(10.0, std::floor(std::log10(raw)));
        double step = mag;
        for (double m : {1.0, 2.0, 5.0, 10.0}) {
            if (m * mag >= raw) {
                step = m * mag;
                break;
            }
        }
        for (double t = std::ceil(lo / step - 1e-9) * step; t <= hi + 1e-9 * step; t += step) {
            out.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
        }
        return out;
    }
};

Axis1 make_axis(std::vector<double> values, bool log, double pixel_lo, double pixel_hi) {
    Axis1 a;
    a.log = log;
    a.pixel_lo = pixel_lo;
    a.pixel_hi = pixel_hi;
    std::erase_if(values, [&](double v) { return !std::isfinite(v) || (log && v <= 0); });
    if (values.empty()) {
        values = log ? std::vector<double>{1, 10} : std::vector<double>{0, 1};
    }
    auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    if (log) {
        a.lo = std::floor(std::log10(*mn));
        a.hi = std::ceil(std::log10(*mx));
        if (a.hi <= a.lo) {
            a.hi = a.lo + 1;
        }
        return a;
    }
    double lo = *mn;
    double hi = *mx;
    if (hi - lo <= 1e-300) {
        double pad = lo == 0 ? 0.5 : std::abs(lo) * 0.1;
        lo -= pad;
        hi += pad;
    }
    double pad = (hi - lo) * 0.05;
    a.lo = lo - pad;
    a.hi = hi + pad;
    return a;
}

std::string header(const std::string &title) {
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
         "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) + "\" fill=\"white\"/>\n";
    s += "<text x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" + escape(title) +
         "</text>\n";
    return s;
}

std::string frame(const Axis1 &y, const std::string &y_label) {
    std::string s;
    double x0 = kLeft;
    double x1 = kWidth - kRight;
    double y0 = kHeight - kBottom;
    double y1 = kTop;
    s += "<rect x=\"" + num(x0) + "\" y=\"" + num(y1) + "\" width=\"" + num(x1 - x0) + "\" height=\"" +
         num(y0 - y1) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for (double t : y.ticks()) {
        double py = y.map(t);
        s += "<line x1=\"" + num(x0 - 5) + "\" y1=\"" + num(py) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(py) +
             "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + num(x0 - 8) + "\" y=\"" + num(py + 4) + "\" text-anchor=\"end\">" + tick_label(t) +
             "</text>\n";
    }
    s += "<text x=\"18\" y=\"" + num((y0 + y1) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         num((y0 + y1) / 2) + ")\">" + escape(y_label) + "</text>\n";
    return s;
}

std::string legend(const std::vector<std::string> &names) {
    std::string s;
    double x = kWidth - kRight + 16;
    for (size_t i = 0; i < names.size(); ++i) {
        double y = kTop + 14 + 18 * (double)i;
        s += "<rect x=\"" + num(x) + "\" y=\"" + num(y - 9) + "\" width=\"12\" height=\"10\" fill=\"" + color(i) +
             "\"/>\n";
        s += "<text x=\"" + num(x + 18) + "\" y=\"" + num(y) + "\">" + escape(names[i]) + "</text>\n";
    }
    return s;
}

}  // namespace

BoxStats box_stats(std::vector<double> values) {
    std::erase_if(values, [](double v) { return !std::isfinite(v); });
    if (values.empty()) {
        throw std::invalid_argument("box plot group has no finite values");
    }
    std::sort(values.begin(), values.end());
    BoxStats b;
    b.q1 = quantile_sorted(values, 0.25);
    b.median = quantile_sorted(values, 0.5);
    b.q3 = quantile_sorted(values, 0.75);
    double reach = 1.5 * (b.q3 - b.q1);
    b.whisker_low = b.q1;
    b.whisker_high = b.q3;
    for (double v : values) {
        if (v < b.q1 - reach || v > b.q3 + reach) {
            b.outliers.push_back(v);
        } else {
            b.whisker_low = std::min(b.whisker_low, v);
            b.whisker_high = std::max(b.whisker_high, v);
        }
    }
    return b;
}

std::string render_line_plot(const LinePlot &plot) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto &s : plot.series) {
        if (s.x.size() != s.y.size()) {
            throw std::invalid_argument("series '" + s.name + "' has mismatched x and y lengths");
        }
        xs.insert(xs.end(), s.x.begin(), s.x.end());
        ys.insert(ys.end(), s.y.begin(), s.y.end());
    }
    Axis1 x = make_axis(xs, false, kLeft, kWidth - kRight);
    Axis1 y = make_axis(ys, plot.log_y, kHeight - kBottom, kTop);
    std::string s = header(plot.title) + frame(y, plot.y_label);
    for (double t : x.ticks()) {
        double px = x.map(t);
        s += "<line x1=\"" + num(px) + "\" y1=\"" + num(kHeight - kBottom) + "\" x2=\"" + num(px) + "\" y2=\"" +
             num(kHeight - kBottom + 5) + "\" stroke=\"black\"/>\n";
        s += "<text x=\"" + num(px) + "\" y=\"" + num(kHeight - kBottom + 19) + "\" text-anchor=\"middle\">" +
             tick_label(t) + "</text>\n";
    }
    s += "<text x=\"" + num((kLeft + kWidth - kRight) / 2) + "\" y=\"" + num(kHeight - 16) +
         "\" text-anchor=\"middle\">" + escape(plot.x_label) + "</text>\n";
    std::vector<std::string> names;
    for (size_t i = 0; i < plot.series.size(); ++i) {
        const auto &ser = plot.series[i];
        names.push_back(ser.name);
        std::string pts;
        for (size_t k = 0; k < ser.x.size(); ++k) {
            if (!std::isfinite(ser.x[k]) || !std::isfinite(ser.y[k]) || (plot.log_y && ser.y[k] <= 0)) {
                continue;
            }
            pts += (pts.empty() ? "" : " ") + num(x.map(ser.x[k])) + "," + num(y.map(ser.y[k]));
        }
        s += "<polyline fill=\"none\" stroke=\"" + std::string(color(i)) + "\" stroke-width=\"1.5\" points=\"" + pts +
             "\"/>\n";
    }
    s += legend(names);
    s += "</svg>\n";
    return s;
}

std::string render_box_plot(const BoxPlot &plot) {
    std::vector<double> all;
    for (const auto &g : plot.groups) {
        all.insert(all.end(), g.values.begin(), g.values.end());
    }
    Axis1 y = make_axis(all, plot.log_y, kHeight - kBottom, kTop);
    std::string s = header(plot.title) + frame(y, plot.y_label);
    double x0 = kLeft;
    double width = (kWidth - kRight - kLeft) / (double)std::max<size_t>(1, plot.groups.size());
    std::vector<std::string> names;
    for (size_t i = 0; i < plot.groups.size(); ++i) {
        const auto &g = plot.groups[i];
        names.push_back(g.name);
        double cx = x0 + width * ((double)i + 0.5);
        s += "<text x=\"" + num(cx) + "\" y=\"" + num(kHeight - kBottom + 19) + "\" text-anchor=\"middle\">" +
             escape(g.name) + "</text>\n";
        std::vector<double> vals = g.values;
        if (plot.log_y) {
            std::erase_if(vals, [](double v) { return v <= 0; });
        }
        std::erase_if(vals, [](double v) { return !std::isfinite(v); });
        if (vals.empty()) {
            continue;
        }
        BoxStats b = box_stats(vals);
        double half = std::min(24.0, width * 0.3);
        const char *c = color(i);
        s += "<line x1=\"" + num(cx) + "\" y1=\"" + num(y.map(b.whisker_low)) + "\" x2=\"" + num(cx) + "\" y2=\"" +
             num(y.map(b.q1)) + "\" stroke=\"black\"/>\n";
        s += "<line x1=\"" + num(cx) + "\" y1=\"" + num(y.map(b.q3)) + "\" x2=\"" + num(cx) + "\" y2=\"" +
             num(y.map(b.whisker_high)) + "\" stroke=\"black\"/>\n";
        for (double w : {b.whisker_low, b.whisker_high}) {
            s += "<line x1=\"" + num(cx - half / 2) + "\" y1=\"" + num(y.map(w)) + "\" x2=\"" + num(cx + half / 2) +
                 "\" y2=\"" + num(y.map(w)) + "\" stroke=\"black\"/>\n";
        }
        double top = y.map(b.q3);
        s += "<rect x=\"" + num(cx - half) + "\" y=\"" + num(top) + "\" width=\"" + num(2 * half) + "\" height=\"" +
             num(y.map(b.q1) - top) + "\" fill=\"" + c + "\" fill-opacity=\"0.35\" stroke=\"" + c + "\"/>\n";
        s += "<line x1=\"" + num(cx - half) + "\" y1=\"" + num(y.map(b.median)) + "\" x2=\"" + num(cx + half) +
             "\" y2=\"" + num(y.map(b.median)) + "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        for (double o : b.outliers) {
            s += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(y.map(o)) + "\" r=\"3\" fill=\"none\" stroke=\"" + c +
                 "\"/>\n";
        }
    }
    s += legend(names);
    s += "</svg>\n";
    return s;
}

LinePlot survival_plot(const Dataset &data, bool log_y) {
    std::map<std::string, std::map<double, std::pair<long, long>>> pooled;
    for (const auto &r : data.records) {
        for (const auto &p : r.points) {
            auto &c = pooled[r.method][p.duration_s];
            c.first += p.zeros;
            c.second += p.shots;
        }
    }
    LinePlot plot{"Survival probability", "duration (s)", "mean P0", log_y, {}};
    for (const auto &[method, curve] : pooled) {
        LineSeries s{method, {}, {}};
        for (const auto &[t, c] : curve) {
            s.x.push_back(t);
            s.y.push_back((double)c.first / (double)c.second);
        }
        plot.series.push_back(std::move(s));
    }
    return plot;
}

BoxPlot tau_box_plot(std::span<const EmbeddingFit> fits, bool log_y) {
    std::map<std::string, std::vector<double>> groups;
    for (const auto &f : fits) {
        auto &g = groups[f.method];
        if (std::isfinite(f.fit.tau_gamma)) {
            g.push_back(f.fit.tau_gamma);
        }
    }
    BoxPlot plot{"Characteristic time over embeddings", "tau_gamma (s)", log_y, {}};
    for (auto &[method, values] : groups) {
        plot.groups.push_back({method, std::move(values)});
    }
    return plot;
}

}  // namespace crdd
