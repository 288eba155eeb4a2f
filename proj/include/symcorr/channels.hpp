#pragma once

// Identical single-qubit noise applied independently to every qubit.

#include <array>
#include <span>

#include "symcorr/qstate.hpp"

namespace symcorr {

enum class ChannelKind { amplitude_damping, phase_damping };

struct ChannelSpec {
  ChannelKind kind = ChannelKind::amplitude_damping;
  double rate = 0.0;
};

/// Throws ArgumentError unless rate is in [0, 1].
void validate(const ChannelSpec& spec);

/// Two-element Kraus decomposition of the single-qubit map.
///   amplitude damping: K0 = diag(1, sqrt(1-r)), K1 = sqrt(r) |0><1|
///   phase damping:     K0 = diag(1, sqrt(1-r)), K1 = sqrt(r) |1><1|
std::array<Mat2, 2> kraus_operators(const ChannelSpec& spec);

/// Applies the channel to each qubit in turn (0, 1, ..., n-1).
DensityMatrix apply_local_channel(const DensityMatrix& rho, const ChannelSpec& spec);

/// Same, visiting qubits in the given order. Channels on distinct qubits
/// commute, so the order only changes rounding.
DensityMatrix apply_local_channel(const DensityMatrix& rho, const ChannelSpec& spec, std::span<const int> order);

}  // namespace symcorr
