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

#ifndef _CRDD_NOISE_SIM_H
#define _CRDD_NOISE_SIM_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "crdd/device.h"
#include "crdd/sequence.h"
#include "crdd/time_grid.h"

namespace crdd {

using StateVector = std::vector<std::complex<double>>;

/// Largest register the dense statevector simulator accepts.
constexpr int kMaxQubits = 14;

struct CapacityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Instantaneous control on one qubit: H_v = (omega/2)(cos(phi) X + sin(phi) Y).
struct Drive {
    double omega = 0;
    double phase = 0;
};

/// Lab-frame Hamiltonian of a device under given instantaneous drives, applied without
/// forming the 2^n x 2^n matrix. Qubit v is bit v of the basis index.
class MatrixFreeHamiltonian {
   public:
    /// Throws CapacityError for more than kMaxQubits qubits.
    MatrixFreeHamiltonian(const DeviceModel &device, std::span<const Drive> drives);

    /// out = H * in.
    void apply(const StateVector &in, StateVector &out) const;
    int num_qubits() const {
        return n_;
    }

   private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<double> coupling_;
    /// Per qubit total single-qubit field (x, y, z) including drive.
    std::vector<std::array<double, 3>> field_;
};

MatrixFreeHamiltonian build_hamiltonian(const DeviceModel &device, std::span<const Drive> drives);

/// Computational-basis product state, normalised.
StateVector product_state(std::span<const Pole> poles);

/// One full cycle of a per-qubit schedule under static errors.
///
/// Integrates the error Hamiltonian in the control toggling frame with classical RK4 on a
/// half-resolution grid, then applies the cycle's exact local control unitaries. For small
/// registers the whole cycle can be cached as a dense matrix.
class CycleEvolver {
   public:
    CycleEvolver(const DeviceModel &device, std::span<const Sequence> schedule, int samples_per_pulse = 256);

    void apply(StateVector &psi) const;
    /// Stores the cycle as a dense 2^n x 2^n matrix so later applies are a single product.
    /// Worth it once more than 2^n cycles will be applied.
    void build_dense_cache();
    bool has_dense_cache() const {
        return dense_.has_value();
    }
    double cycle_duration() const {
        return duration_;
    }
    int num_qubits() const {
        return n_;
    }
    /// Largest qubit pulse count per cycle.
    long pulses_per_cycle() const {
        return pulses_;
    }

   private:
    void apply_integrated(StateVector &psi) const;
    void apply_toggling(size_t node, const StateVector &in, StateVector &out) const;

    int n_;
    double duration_;
    long pulses_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<double> coupling_;
    TimeGrid grid_;
    /// Per node and qubit: Z row of the control matrix (3) and rotated local field (3).
    std::vector<double> coeff_;
    std::vector<std::array<std::complex<double>, 4>> final_local_;
    std::optional<std::vector<std::complex<double>>> dense_;
};

/// Evolves psi through m cycles. Throws std::invalid_argument on mismatched schedule durations
/// and std::runtime_error when the norm drifts by more than 1e-9.
StateVector evolve(
    const DeviceModel &device,
    std::span<const Sequence> schedule,
    long repetitions,
    StateVector psi,
    int samples_per_pulse = 256);

/// Squared magnitudes of U_enc^dag psi in the computational basis.
std::vector<double> decoded_distribution(std::span<const Pole> poles, const StateVector &psi);

/// Number of all-zeros outcomes among shots samples drawn from probs by inverse CDF.
long sample_zero_count(std::span<const double> probs, long shots, uint64_t seed);

struct SurvivalPoint {
    double duration_s = 0;
    long pulses = 0;
    long shots = 0;
    long zeros = 0;
    double p0 = 0;

    bool operator==(const SurvivalPoint &other) const = default;
};

struct SurvivalRecord {
    std::string method;
    std::string embedding_id;
    std::string state_id;
    std::vector<SurvivalPoint> points;

    bool operator==(const SurvivalRecord &other) const = default;
};

/// Prepare, run m cycles, decode and sample.
SurvivalPoint encode_decode_survival(
    const StateSpec &state,
    const DeviceModel &device,
    std::span<const Sequence> schedule,
    long repetitions,
    long shots,
    uint64_t seed,
    int samples_per_pulse = 256);

}  // namespace crdd

#endif
