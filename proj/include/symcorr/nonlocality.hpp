#pragma once

// Generalized Svetlichny inequality for n qubits.
//
// With two dichotomic observables per party, o_j (setting 1) and O_j
// (setting 2), the polynomials are built from m_1 = o_1, M_1 = O_1 by
//   m_j = 1/2 m_{j-1}(o_j + O_j) + 1/2 M_{j-1}(o_j - O_j)
//   M_j = 1/2 M_{j-1}(o_j + O_j) + 1/2 m_{j-1}(O_j - o_j)
// and N_n = m_n for even n, (m_n + M_n)/2 for odd n. Local hidden-variable
// models satisfy |N_n| <= 1.
//
// Measurements lie in the equatorial plane: party i with setting q measures
// cos(t) sigma_x + sin(t) sigma_y with t = settings[i][q].
//
// A setting choice is encoded as an n-bit index whose bit (n-1-i) is 0 when
// party i uses setting 1 and 1 for setting 2.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "symcorr/qstate.hpp"

namespace symcorr {

class SvetlichnyExpansion {
 public:
  SvetlichnyExpansion(int n, std::vector<std::int64_t> numerators, int log2_denominator);

  int n() const { return n_; }
  std::size_t size() const { return numerators_.size(); }
  std::int64_t numerator(std::size_t settings) const { return numerators_.at(settings); }
  int log2_denominator() const { return log2_denominator_; }
  double weight(std::size_t settings) const;

 private:
  int n_;
  std::vector<std::int64_t> numerators_;
  int log2_denominator_;
};

/// Expands N_n into its 2^n monomials. Coefficients are exact dyadic
/// rationals in lowest terms.
SvetlichnyExpansion svetlichny_expansion(int n);

/// Two measurement angles per party.
struct SettingsTable {
  std::vector<std::array<double, 2>> angles;

  int n() const { return static_cast<int>(angles.size()); }
  /// Per-party angles selected by a setting-choice index.
  std::vector<double> choose(std::size_t settings) const;
};

/// Tr[(x)_i (cos t_i sigma_x + sin t_i sigma_y) rho].
double correlation(const DensityMatrix& rho, std::span<const double> angles);

double svetlichny_value(const DensityMatrix& rho, const SettingsTable& settings);

/// Maximal N_n attained by a GHZ state: sqrt(2^(n-1)) for even n and
/// sqrt(2^(n-2)) for odd n.
double ghz_quantum_max(int n);

/// States whose only anti-diagonal entries are <0..0|rho|1..1> and its
/// conjugate have correlation A cos(sum t_i + phase); this is that A and phase.
struct GhzCoherence {
  double amplitude = 0.0;
  double phase = 0.0;
};

std::optional<GhzCoherence> ghz_coherence(const DensityMatrix& rho);

struct ViolationOptions {
  /// Use the cosine-comb closed form when ghz_coherence() applies.
  bool allow_closed_form = true;
  int starts = 64;
  std::uint64_t seed = 20150601;
  int max_sweeps = 200;
};

struct ViolationResult {
  double value = 0.0;
  SettingsTable settings;
  bool closed_form = false;
};

/// Maximum of N_n over equatorial settings.
///
/// For GHZ-coherence states the correlations depend on the angles only
/// through their sums, and the maximum is amplitude * ghz_quantum_max(n),
/// reached with settings (0, pi/2) on every party and one common shift on
/// party 0 to absorb the phase. Other states use multi-start coordinate
/// ascent: N_n is of the form a cos t + b sin t + c in each single angle, so
/// every coordinate step is solved exactly.
ViolationResult max_violation(const DensityMatrix& rho, const ViolationOptions& options = {});

struct SvetlichnyBounds {
  double lhv = 1.0;
  double quantum_max = 0.0;
  /// Thresholds for 1:(n-1) separability that exceed the LHV bound, taken as
  /// 2^floor((n-2)/2). This rule matches the published levels 2 (n = 4, 5)
  /// and 4 (n = 6, 7); it is an extrapolation for other n.
  std::vector<double> separability_thresholds;
};

SvetlichnyBounds bounds(int n);

}  // namespace symcorr
