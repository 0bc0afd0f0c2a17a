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

#include "crdd/control_csv.h"

#include "crdd/format.h"

namespace crdd {

void write_trace_csv(std::ostream &out, const ControlTrace &trace) {
    out << "t_s";
    for (char mu : {'X', 'Y', 'Z'}) {
        for (char alpha : {'X', 'Y', 'Z'}) {
            out << ",R_" << mu << alpha;
        }
    }
    out << "\n";
    for (size_t i = 0; i < trace.nodes.size(); ++i) {
        const auto &iv = trace.grid.intervals[i];
        for (int k = 0; k <= iv.steps; ++k) {
            out << format_double(iv.time(k));
            const auto &r = trace.nodes[i][k];
            for (int mu = 0; mu < 3; ++mu) {
                for (int alpha = 0; alpha < 3; ++alpha) {
                    out << "," << format_double(r(mu, alpha));
                }
            }
            out << "\n";
        }
    }
}

void write_chi_csv(std::ostream &out, const SuppressionReport &report) {
    out << "kind,alpha,beta,value_s,pass\n";
    auto rows = [&](const char *kind, const EntryVerdicts &v) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                out << kind << "," << axis_letter((Axis)i) << "," << axis_letter((Axis)j) << ","
                    << format_double(v.chi.values(i, j)) << "," << (v.pass[i][j] ? "true" : "false") << "\n";
            }
        }
    };
    rows("chi1_red", report.chi1_red);
    rows("chi1_blue", report.chi1_blue);
    rows("chi2", report.chi2);
}

void write_symmetry_csv(std::ostream &out, std::span<const SymmetryEntry> entries) {
    out << "mu,alpha,relation,residual,flag\n";
    for (const auto &e : entries) {
        for (auto r : kAllRelations) {
            out << axis_letter(e.mu) << "," << axis_letter(e.alpha) << "," << relation_name(r) << ","
                << format_double(e.residual_of(r)) << "," << (e.has(r) ? "true" : "false") << "\n";
        }
    }
}

}  // namespace crdd
