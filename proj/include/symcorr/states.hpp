#pragma once

// State families and symmetry-adapted measurement bases.

#include <vector>

#include "symcorr/qstate.hpp"

namespace symcorr {

/// How ghz_state treats alpha1 above 1/sqrt(2).
///
/// The weighted GHZ family is defined for alpha1 in [0, 1/sqrt(2)]; larger
/// values are the same family with the roles of |0...0> and |1...1>
/// exchanged (a local unitary), so lenient mode accepts alpha1 in [0, 1].
enum class AlphaPolicy { lenient, strict };

inline constexpr double kInvSqrt2 = 0.70710678118654752440;

/// True if alpha1 exceeds the strict upper bound 1/sqrt(2).
bool alpha_exceeds_strict_range(double alpha1);

/// Thermodynamic-protocol state on n qubits:
///   (p0^n + p1^n)/2 (|0..0><0..0| + |1..1><1..1|)
/// + (p0^n - p1^n)/2 (|0..0><1..1| + |1..1><0..0|)
/// + sum_{j=1}^{n-1} p0^j p1^(n-j) I_j,
/// with p1 = 1 - p0 and I_j the identity on basis states having exactly j
/// qubits in |0>. Counting zeros makes the weights those of
/// (p0|0><0| + p1|1><1|)^(x)n; counting ones instead gives the p0 <-> p1
/// image under X^(x)n, so every correlation measure is unaffected.
DensityMatrix thermo_state(int n, double p0);

/// alpha1 |0...0> + sqrt(1 - alpha1^2) |1...1>.
PureState ghz_state(int n, double alpha1, AlphaPolicy policy = AlphaPolicy::lenient);

/// Weighted GHZ state after local amplitude damping with rate lambda on every
/// qubit, built directly from its closed form.
DensityMatrix ghz_ad_closed(int n, double alpha1, double lambda, AlphaPolicy policy = AlphaPolicy::lenient);

/// Weighted GHZ state after local phase damping with rate gamma on every
/// qubit: populations unchanged, coherence scaled by (1 - gamma)^(n/2).
DensityMatrix ghz_pd_closed(int n, double alpha1, double gamma, AlphaPolicy policy = AlphaPolicy::lenient);

/// Complete orthonormal basis of a k-qubit block, stored as matrix columns.
class MeasurementBasis {
 public:
  /// Throws ArgumentError unless the columns are 2^k orthonormal vectors
  /// (Gram matrix within 1e-10 of identity).
  MeasurementBasis(int block_size, CMatrix vectors);

  int block_size() const { return block_size_; }
  std::size_t size() const { return static_cast<std::size_t>(vectors_.cols()); }
  const CMatrix& vectors() const { return vectors_; }
  PureState vector(std::size_t i) const;

 private:
  int block_size_;
  CMatrix vectors_;
};

/// Symmetry-adapted basis of a k-qubit block (k >= 1):
///   column 0:  cos(theta)|0..0> + sin(theta)|1..1>
///   column 1: -sin(theta)|0..0> + cos(theta)|1..1>
///   then, for j = 1..k-1 excitations, the C(k,j) discrete-Fourier modes of
///   the j-excitation subspace (basis states in increasing index order, mode
///   m has amplitude exp(2 pi i m l / C(k,j)) / sqrt(C(k,j)) on the l-th).
/// Only columns 0 and 1 depend on theta. For k = 3 the first Fourier mode of
/// each sector is |W> and |W-bar>; for k = 2, theta = pi/4 gives the Bell
/// basis.
MeasurementBasis symmetric_basis(int k, double theta);

/// The theta-independent columns of symmetric_basis(k, .) (the Fourier modes).
CMatrix symmetric_basis_fixed_columns(int k);

enum class SymmetryKind { translation, parity_phase };

/// Symmetry operators of the thermodynamic and damped-GHZ families.
///
/// translation: cyclic shift of the listed qubits.
/// parity_phase: on a block of k qubits, the diagonal operator
///   (-1)^(#ones) * exp(i phi #ones), phi = pi/k for odd k and 2 pi/k for
/// even k. For k = 2 that product is the identity, so the plain parity
/// (-1)^(#ones) is returned instead. Eigenvalues: +1 on |0..0> and |1..1>,
/// -exp(i pi/3) on the one-excitation sector for k = 3.
LocalUnitary symmetry_generator(SymmetryKind kind, std::vector<int> block);

}  // namespace symcorr
