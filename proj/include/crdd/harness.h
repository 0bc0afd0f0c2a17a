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

#ifndef _CRDD_HARNESS_H
#define _CRDD_HARNESS_H

#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "crdd/decay_fit.h"
#include "crdd/device.h"
#include "crdd/noise_sim.h"
#include "crdd/transforms.h"
#include "json.hpp"

namespace crdd {

enum class MethodKind { idle, sim, cr };

std::string_view method_kind_name(MethodKind k);

/// A DD method and the parameters that generate its per-qubit schedule.
struct MethodSpec {
    std::string label;
    MethodKind kind = MethodKind::sim;
    /// Catalog name; for cr the red-colour sequence.
    std::string sequence;
    /// cr only; empty means the same as sequence. The shorter list is repeated to match.
    std::string blue;
    /// sim: tau_d = (k - 1) tau_p. cr: padding with tau_d = (k - 1) tau_p (k = 1 is unpadded).
    int k = 2;
    PadMode pad = PadMode::symmetric;
    PulseShape shape = PulseShape::square();
    /// Per-method overrides of the plan's duration policy.
    std::optional<long> target_pulses;
    std::optional<long> stride_pulses;
    /// Groups methods for ratio columns. Empty means the label text after the first '-'.
    std::string pair;
    /// Explicit schedule used instead of the catalog construction. sim applies red to every
    /// qubit; cr assigns red and blue by device colouring.
    std::optional<ColoredSchedule> custom;

    std::string pair_key() const;
    void validate() const;
};

/// Per-qubit schedule of a non-idle method on a device (cr uses the device colouring).
std::vector<Sequence> method_schedule(const MethodSpec &method, const DeviceModel &device);

struct MethodTiming {
    std::string label;
    /// Zero marks an idle method.
    long pulses_per_cycle = 0;
    double cycle_duration_s = 0;
    std::optional<long> target_pulses;
    std::optional<long> stride_pulses;
    std::string pair;
};

MethodTiming method_timing(const MethodSpec &method, double tau_p);

struct DurationPoint {
    long cycles = 0;
    long pulses = 0;
    double duration_s = 0;

    bool operator==(const DurationPoint &other) const = default;
};

struct AlignmentError : std::invalid_argument {
    AlignmentError(long lcm, long target);
    long lcm;
};

/// Sample points per method, starting at zero duration.
///
/// The aligned end point is the largest multiple of the least common multiple P of all cycle
/// pulse counts not exceeding the target. Each method steps by the smallest multiple of its
/// cycle that divides the end point and is at least the stride (default: end / 8). Idle
/// methods sample the union of wall times of the non-idle methods sharing their pair key
/// (all non-idle methods when the key is empty). Throws AlignmentError when P exceeds the target.
std::vector<std::vector<DurationPoint>> schedule_points(
    std::span<const MethodTiming> methods, long target_pulses, std::optional<long> stride_pulses = std::nullopt);

/// Simple paths with the given vertex count, chosen greedily to minimise vertex reuse.
std::vector<std::vector<int>> generate_embeddings(const QubitGraph &graph, int size, int count);

struct Embedding {
    std::string id;
    std::vector<int> vertices;
};

struct ExperimentPlan {
    DeviceModel device;
    std::vector<Embedding> embeddings;
    std::vector<MethodSpec> methods;
    long target_pulses = 320;
    std::optional<long> stride_pulses;
    int type1_states = 6;
    int type2_states = 14;
    long shots = 1000;
    uint64_t seed = 0;
    int samples_per_pulse = 256;
    /// Worker threads; zero means hardware concurrency.
    int threads = 0;

    void validate() const;
};

nlohmann::json plan_to_json(const ExperimentPlan &plan);
/// Accepts a device object or {"preset": "default", "seed": s}, and either explicit
/// "embeddings" or "embedding_sizes" (+ optional "embeddings_per_size").
ExperimentPlan plan_from_json(const nlohmann::json &j);

struct CellFailure {
    std::string method;
    std::string embedding_id;
    std::string state_id;
    std::string message;
};

struct Dataset {
    /// Sorted by (method, embedding_id, state_id); points sorted by duration.
    std::vector<SurvivalRecord> records;
    std::vector<CellFailure> failures;

    size_t row_count() const;
};

struct RunHooks {
    /// Called once per finished cell, serialized.
    std::function<void(const SurvivalRecord &)> on_record;
    std::function<void(const CellFailure &)> on_failure;
};

/// Runs every (embedding, state, method) cell. Results do not depend on thread count.
Dataset run_experiment(const ExperimentPlan &plan, const RunHooks &hooks = {});

void write_results_csv(std::ostream &out, const Dataset &data);
/// Throws std::invalid_argument naming the line on malformed input.
Dataset read_results_csv(std::istream &in);

struct EmbeddingFit {
    std::string method;
    std::string embedding_id;
    FitResult fit;
};

/// One fit per (method, embedding) of the state-pooled survival curve.
std::vector<EmbeddingFit> fit_embeddings(const Dataset &data);
void write_fits_csv(std::ostream &out, std::span<const EmbeddingFit> fits);
std::vector<EmbeddingFit> read_fits_csv(std::istream &in);

struct SummaryRow {
    int n = 0;
    std::string method;
    MethodKind kind = MethodKind::sim;
    std::string pair;
    size_t embeddings = 0;
    double median_tau_s = 0;
    double iqr_tau_s = 0;
    /// SIM rows: median tau / best IDLE median tau at the same n.
    std::optional<double> sim_over_idle;
    /// CR rows: median tau / median tau of the SIM method with the same pair key.
    std::optional<double> cr_over_sim;
};

/// Method kind and pair key inferred from a label ("IDLE...", "SIM-...", "CR-...").
MethodKind kind_from_label(const std::string &label);
std::string pair_from_label(const std::string &label);
/// Register size encoded in an embedding id "n<size>_<index>".
int size_from_embedding_id(const std::string &id);

std::vector<SummaryRow> summarize(std::span<const EmbeddingFit> fits);
std::vector<SummaryRow> summarize(const Dataset &data);
void write_summary_csv(std::ostream &out, std::span<const SummaryRow> rows);

}  // namespace crdd

#endif
