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

#ifndef _CRDD_CONTROL_CSV_H
#define _CRDD_CONTROL_CSV_H

#include <ostream>
#include <span>

#include "crdd/error_matrix.h"
#include "crdd/symmetry.h"

namespace crdd {

/// One row per grid node (interval boundaries appear twice). Columns t_s, R_XX .. R_ZZ.
void write_trace_csv(std::ostream &out, const ControlTrace &trace);

/// Columns kind, alpha, beta, value_s, pass. Kinds are chi1_red, chi1_blue and chi2.
/// For chi1 rows alpha holds mu and beta holds alpha.
void write_chi_csv(std::ostream &out, const SuppressionReport &report);

/// Columns mu, alpha, relation, residual, flag. One row per component and relation.
void write_symmetry_csv(std::ostream &out, std::span<const SymmetryEntry> entries);

}  // namespace crdd

#endif
