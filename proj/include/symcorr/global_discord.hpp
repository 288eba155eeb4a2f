#pragma once

// Global discord: the relative entropy lost by a local projective
// measurement on every qubit, minus what each single qubit loses on its own:
//   G(rho) = min_R [S(rho || Pi(rho)) - sum_j S(rho_j || Pi_j(rho_j))],
// where Pi dephases in the product basis R|k> with R = (x)_j R(theta_j, phi_j).

#include "symcorr/oracle.hpp"
#include "symcorr/qstate.hpp"
#include "symcorr/rotation.hpp"

namespace symcorr {

/// R rho-diagonal: zeroes every off-diagonal element of rho in the rotated
/// product basis.
DensityMatrix dephase_in_rotated_basis(const DensityMatrix& rho, const RotationAngles& angles);

/// Populations <k| R^dagger rho R |k> of the rotated product basis.
RVector rotated_populations(const DensityMatrix& rho, const RotationAngles& angles);

/// The quantity minimized in global_discord at fixed angles. Uses
/// S(rho || Pi(rho)) = H(populations) - S(rho).
double global_discord_objective(const DensityMatrix& rho, const RotationAngles& angles);

struct GlobalDiscordConfig {
  /// Grid resolution per angle in symmetric mode.
  int grid_points = 64;
  /// General mode settings (restarts, seed, size cap).
  OracleConfig oracle{32, 16, 20150601, 4};
};

struct GlobalDiscordResult {
  double value = 0.0;
  RotationAngles angles;
};

/// Symmetric mode uses one (theta, phi) for every qubit: a 64 x 64 grid on
/// theta in [pi/8, 5pi/8) x phi in [0, 2pi) refined by Nelder-Mead. Because
/// theta and theta + pi/2 measure in the same basis, the reported theta is
/// folded into [pi/8, 5pi/8), which puts the computational basis at pi/2.
/// Throws SymmetryError if rho is not permutation invariant.
///
/// General mode minimizes over all 2n angles by multi-start local search.
GlobalDiscordResult global_discord(const DensityMatrix& rho, DiscordMode mode = DiscordMode::symmetric,
                                   const GlobalDiscordConfig& config = {});

/// Closed form for thermo_state(n, p0), measured in the computational basis:
///   p0^n log p0^n + p1^n log p1^n - (p0^n + p1^n) log((p0^n + p1^n)/2).
double global_discord_thermo_analytic(int n, double p0);

}  // namespace symcorr
