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

#ifndef _CRDD_SVG_REPORT_H
#define _CRDD_SVG_REPORT_H

#include <string>
#include <vector>

#include "crdd/harness.h"

namespace crdd {

struct LineSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct LinePlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    /// Non-positive y values are dropped on a log axis.
    bool log_y = false;
    std::vector<LineSeries> series;
};

struct BoxGroup {
    std::string name;
    std::vector<double> values;
};

struct BoxPlot {
    std::string title;
    std::string y_label;
    bool log_y = false;
    std::vector<BoxGroup> groups;
};

/// Quartiles (type 7) with whiskers at the most extreme samples within 1.5 IQR of the box.
struct BoxStats {
    double q1 = 0;
    double median = 0;
    double q3 = 0;
    double whisker_low = 0;
    double whisker_high = 0;
    std::vector<double> outliers;
};

/// Non-finite values are ignored. Throws std::invalid_argument when none remain.
BoxStats box_stats(std::vector<double> values);

std::string render_line_plot(const LinePlot &plot);
std::string render_box_plot(const BoxPlot &plot);

/// Mean p0 against duration per method, pooled over embeddings and states.
LinePlot survival_plot(const Dataset &data, bool log_y);
/// tau_gamma per method over embeddings; non-finite values are left out.
BoxPlot tau_box_plot(std::span<const EmbeddingFit> fits, bool log_y);

}  // namespace crdd

#endif
