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

#ifndef _CRDD_CONTROL_H
#define _CRDD_CONTROL_H

#include <Eigen/Dense>
#include <span>
#include <stdexcept>
#include <vector>

#include "crdd/sequence.h"
#include "crdd/time_grid.h"

namespace crdd {

enum class Axis { x = 0, y = 1, z = 2 };

char axis_letter(Axis a);
Axis parse_axis(char c);
const Eigen::Matrix2cd &pauli(Axis a);

struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Amplitude corrections that make a bounded pulse an exact target rotation on a given step partition.
/// The pulse-frame drive is (s*w_I, s*w_Q + kappa*w_I*cos(Theta_I)) where Theta_I is the running in-phase area.
struct PulseCalibration {
    double amplitude_scale = 1;
    double quadrature_correction = 0;
};

/// One uniform stretch of a pulse window in local time.
struct PulsePiece {
    double start = 0;
    double length = 0;
    int steps = 0;
    bool operator==(const PulsePiece &other) const = default;
};

/// exp(-i (theta/2) (X cos(phi) + Y sin(phi))).
Eigen::Matrix2cd rotation_unitary(double theta, double phi);

/// Propagator of a bounded pulse over the given pieces (which must tile [0, duration]).
Eigen::Matrix2cd pulse_propagator(
    const PulseSpec &pulse, std::span<const PulsePiece> pieces, const PulseCalibration &calibration);

/// Solves for the calibration that makes pulse_propagator equal rotation_unitary(flip, phase).
/// Square and Gaussian pulses only rescale the amplitude. DRAG also solves for the quadrature correction.
PulseCalibration calibrate_pulse(const PulseSpec &pulse, std::span<const PulsePiece> pieces);

struct Propagation {
    TimeGrid grid;
    /// Per interval, per node (steps + 1 entries).
    std::vector<std::vector<Eigen::Matrix2cd>> nodes;
    /// Cycle propagator, including any instantaneous pulse placed exactly at the end.
    Eigen::Matrix2cd final_unitary;
};

/// Fourth-order Magnus integration of the control Hamiltonian on the grid.
/// Throws IntegrationError if any node drifts from unitarity by more than 1e-10.
Propagation propagate(const Sequence &sequence, const TimeGrid &grid);
Propagation propagate(const Sequence &sequence, int samples_per_pulse = 256);

/// R^{mu alpha} = Tr[U^dag sigma^mu U sigma^alpha] / 2. Throws IntegrationError when an
/// imaginary part exceeds 1e-12.
Eigen::Matrix3d control_matrix(const Eigen::Matrix2cd &u);

/// Rotation matrix of exp(-i (theta/2) n.sigma) in the adjoint representation.
Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d &axis, double theta);

struct ControlTrace {
    TimeGrid grid;
    std::vector<std::vector<Eigen::Matrix3d>> nodes;
    Eigen::Matrix3d final_matrix;

    double duration() const {
        return grid.duration;
    }
    /// Flattened samples of one component in TimeGrid::node_times order.
    std::vector<double> component(Axis mu, Axis alpha) const;
};

ControlTrace control_trace(const Propagation &propagation);
ControlTrace control_trace(const Sequence &sequence, const TimeGrid &grid);
ControlTrace control_trace(const Sequence &sequence, int samples_per_pulse = 256);

/// Piecewise-constant trace of an all-ideal sequence built from exact SO(3) rotations.
/// Throws std::invalid_argument when a bounded pulse is present.
ControlTrace bang_bang_trace(const Sequence &sequence, const TimeGrid &grid);
ControlTrace bang_bang_trace(const Sequence &sequence, int samples_per_pulse = 256);

/// Copy of a sequence with every bounded pulse replaced by an ideal pulse at the centre of its window.
Sequence to_ideal(const Sequence &sequence);

}  // namespace crdd

#endif
