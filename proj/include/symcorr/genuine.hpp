#pragma once

// Genuine multipartite correlations of n-qubit states.
//
// Per bipartition the mutual information I splits into the discord D
// (minimum over projective measurements on one side of the entropy cost of
// measuring) and the classical part J = I - D. The genuine n-partite
// quantities take the minimum over bipartitions:
//   T = min_cut I,   D = min_cut D,   J = T - D.

#include <vector>

#include "symcorr/oracle.hpp"
#include "symcorr/qstate.hpp"
#include "symcorr/rotation.hpp"

namespace symcorr {

struct GenuineConfig {
  /// Coarse theta samples on [0, pi/2) before golden-section refinement.
  int grid_points = 64;
  double theta_tolerance = 1e-7;
  /// Used by general mode.
  OracleConfig oracle{};
};

struct DiscordResult {
  double discord = 0.0;
  /// Optimal theta of symmetric_basis(k, .) in [0, pi/2); NaN in general mode.
  double optimal_theta = 0.0;
  /// Minimized sum_i b_i S(rho_i).
  double conditional_entropy = 0.0;
};

/// Sum_i b_i S(<psi_i|rho|psi_i>/b_i) over the symmetric basis of the
/// measured block at angle theta.
double symmetric_conditional_entropy(const DensityMatrix& rho, const Cut& cut, double theta);

/// D = S(rho_measured) - S(rho) + min_basis sum_i b_i S(rho_i).
///
/// Symmetric mode searches the one-parameter family symmetric_basis(k, theta)
/// and throws SymmetryError unless rho is permutation invariant. General mode
/// searches every orthonormal basis (oracle_bipartite_discord) and is limited
/// by config.oracle.max_qubits.
DiscordResult bipartite_discord(const DensityMatrix& rho, const Cut& cut, DiscordMode mode = DiscordMode::symmetric,
                                const GenuineConfig& config = {});

struct CutReport {
  /// Oriented: the measured block is the side the discord was evaluated on.
  Cut cut;
  double mutual_info = 0.0;
  double discord = 0.0;
  double classical = 0.0;
  double optimal_theta = 0.0;
};

struct GenuineReport {
  double total = 0.0;
  double quantum = 0.0;
  double classical = 0.0;
  /// Cut minimizing the mutual information.
  Cut optimal_cut;
  /// Cut minimizing the discord (the one `quantum` is taken from).
  Cut discord_cut;
  double optimal_theta = 0.0;
  /// Discord at optimal_cut, the alternative convention for the quantum part.
  double quantum_at_optimal_cut = 0.0;
  std::vector<CutReport> per_cut;
};

/// Symmetric mode evaluates the cuts {n-k : k} for k = 1..n/2, measuring
/// each side in turn; same-size cuts of a permutation-invariant state are
/// equivalent. General mode evaluates every bipartition and measured side
/// through the oracle.
GenuineReport genuine_correlations(const DensityMatrix& rho, DiscordMode mode = DiscordMode::symmetric,
                                   const GenuineConfig& config = {});

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

/// h((1 + sqrt(1 - C^2)) / 2) with h the binary entropy.
double entanglement_of_formation(const DensityMatrix& rho);

/// Discord of a rank-2 state from the Koashi-Winter relation: purify with one
/// ancilla qubit a, then D = S(rho_M) - S(rho) + E(rho_{U,a}) with M the
/// measured block and U the other. The U side is restricted to the support
/// of rho_U, which must be at most two-dimensional. Throws ArgumentError if
/// rho or rho_U has rank above 2.
double koashi_winter_discord(const DensityMatrix& rho, const Cut& cut);

}  // namespace symcorr
