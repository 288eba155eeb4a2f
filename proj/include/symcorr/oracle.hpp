#pragma once

// Brute-force validators. Each one reaches its answer by a route that shares
// no optimization shortcut with the production path it checks:
//  - bipartite discord over every orthonormal basis of the measured block,
//  - global discord over all 2n rotation angles with explicit dense rotations,
//  - noise channels through an explicit system-environment unitary,
//  - the local-hidden-variable bound by enumerating deterministic strategies.
// Results are deterministic for a given seed.

#include <cstdint>

#include "symcorr/channels.hpp"
#include "symcorr/qstate.hpp"
#include "symcorr/rotation.hpp"

namespace symcorr {

struct OracleConfig {
  /// Local searches started per quantity (the first one from the identity).
  int restarts = 8;
  /// Random candidates screened before each local search.
  int grid_density = 16;
  std::uint64_t seed = 20150601;
  /// Largest state accepted; at most 5.
  int max_qubits = 4;

  /// Throws ArgumentError on non-positive counts or max_qubits outside [2, 5].
  void validate() const;
};

/// Minimum of the measured conditional entropy over all orthonormal bases of
/// the measured block, parametrized as a product of two-level rotations
/// G_pq(alpha, beta) over every pair p < q (d(d-1) real parameters, which
/// reach every basis up to irrelevant phases). Returns the discord.
double oracle_bipartite_discord(const DensityMatrix& rho, const Cut& cut, const OracleConfig& config = {});

struct OracleGlobalResult {
  double value = 0.0;
  RotationAngles angles;
};

/// Global discord minimized over independent (theta_i, phi_i) for every qubit.
OracleGlobalResult oracle_global_discord(const DensityMatrix& rho, const OracleConfig& config = {});

/// Global discord objective evaluated with the full rotation built by
/// Kronecker products and the relative entropies computed from their
/// definitions.
double oracle_global_objective(const DensityMatrix& rho, const RotationAngles& angles);

/// Channel applied by coupling each qubit to a fresh environment qubit in |0>
/// through a two-qubit unitary and tracing the environment out.
DensityMatrix oracle_channel_dilation(const DensityMatrix& rho, const ChannelSpec& spec);

/// max |N_n| over all 2^(2n) deterministic +-1 assignments (n <= 8).
double oracle_lhv_bound(int n);

}  // namespace symcorr
