#pragma once

// Dense n-qubit states.
//
// Basis convention: qubit 0 is the most significant bit of a computational
// basis index, so |q0 q1 ... q_{n-1}> has index sum_i q_i * 2^(n-1-i).
// Every constructor, partial trace and reordering in this library obeys it.
// Entropies are in bits.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symcorr/types.hpp"

namespace symcorr {

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
/// Eigenvalues above -kEigenClamp are numerical noise and clamp to zero.
inline constexpr double kEigenClamp = 1e-9;
/// Probabilities below this make a measurement outcome degenerate.
inline constexpr double kDegenerateProbability = 1e-12;

/// Throws GuardError when n is outside [1, kMaxQubits].
void check_qubit_count(int n_qubits);

class PureState {
 public:
  PureState(int n_qubits, CVector amplitudes);

  /// Computational basis state |index>.
  static PureState basis(int n_qubits, std::size_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const CVector& amplitudes() const { return amplitudes_; }

 private:
  int n_qubits_;
  CVector amplitudes_;
};

/// Hermitian, unit-trace matrix of dimension 2^n.
///
/// Construction checks shape, hermiticity and trace (all O(dim^2)).
/// Positivity needs a diagonalization and is checked on demand by
/// check_positive(), and implicitly by every entropy evaluation.
class DensityMatrix {
 public:
  DensityMatrix(int n_qubits, CMatrix data);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return static_cast<std::size_t>(data_.rows()); }
  const CMatrix& matrix() const { return data_; }
  cplx operator()(std::size_t row, std::size_t col) const {
    return data_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  double trace() const { return data_.trace().real(); }

  /// Eigenvalues in ascending order.
  RVector eigenvalues() const;

  /// Throws InvariantError if an eigenvalue is below -tolerance.
  void check_positive(double tolerance = kEigenClamp) const;

 private:
  int n_qubits_;
  CMatrix data_;
};

/// A bipartition of {0..n-1} into the measured block and the remainder.
class Cut {
 public:
  /// `measured` must be nonempty, in range, free of duplicates, and leave a
  /// nonempty remainder. Both blocks are stored in ascending order.
  Cut(int n_qubits, std::vector<int> measured);

  /// The cut whose measured block is the last k qubits: {n-k : k}.
  static Cut trailing(int n_qubits, int k);

  int n_qubits() const { return n_qubits_; }
  const std::vector<int>& measured() const { return measured_; }
  const std::vector<int>& remainder() const { return remainder_; }

  /// Same bipartition with the roles of the blocks exchanged.
  Cut swapped() const;

  /// Formats as "{0,1|2}" with the measured block after the bar.
  std::string to_string() const;

  friend bool operator==(const Cut&, const Cut&) = default;

 private:
  int n_qubits_;
  std::vector<int> measured_;
  std::vector<int> remainder_;
};

/// A unitary acting on an ordered subset of qubits. The first listed qubit is
/// the most significant bit of the operator's own index.
struct LocalUnitary {
  std::vector<int> qubits;
  CMatrix matrix;
};

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state on `keep` (any order; the result keeps ascending qubit order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

/// Relabel qubits: qubit i of the result is qubit order[i] of the input.
DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const int> order);

/// U rho U^dagger with U acting on u.qubits.
DensityMatrix apply_unitary(const DensityMatrix& rho, const LocalUnitary& u);

/// -sum lambda log2 lambda over eigenvalues of a Hermitian matrix whose
/// eigenvalues should lie in [0, 1]. Eigenvalues are clamped to [0, 1];
/// anything below -kEigenClamp throws InvariantError.
double hermitian_entropy(const CMatrix& h);

/// Shannon entropy in bits; entries are clamped to [0, 1].
double shannon_entropy(std::span<const double> probabilities);

double von_neumann_entropy(const DensityMatrix& rho);

/// sum_j S(rho_j) - S(rho) over single-qubit marginals.
double total_correlations(const DensityMatrix& rho);

/// S(rho_A) + S(rho_B) - S(rho) for the two blocks of the cut.
double mutual_information(const DensityMatrix& rho, const Cut& cut);

/// Result of projecting the measured block onto one probe vector.
struct ConditionalOutcome {
  double probability = 0.0;
  /// Normalized state of the remainder; empty when the outcome is degenerate
  /// (probability below kDegenerateProbability).
  std::optional<DensityMatrix> state;
};

ConditionalOutcome conditional_state(const DensityMatrix& rho, const Cut& cut, const PureState& probe);

/// rho reordered with the measured block first, ready for repeated
/// conditioning on probe vectors. This is the hot path of every discord
/// evaluation.
class MeasuredView {
 public:
  MeasuredView(const DensityMatrix& rho, const Cut& cut);

  std::size_t measured_dim() const { return measured_dim_; }
  std::size_t remainder_dim() const { return remainder_dim_; }

  /// <probe| rho |probe> as an operator on the remainder (trace = outcome
  /// probability). Zero entries of the probe are skipped.
  CMatrix unnormalized_conditional(const CVector& probe) const;

  /// sum_i b_i S(rho_i / b_i) over the columns of `basis`; degenerate
  /// outcomes contribute zero.
  double conditional_entropy(const CMatrix& basis) const;

  /// Contribution of a single probe: b S(rho_probe / b).
  double weighted_entropy(const CVector& probe) const;

 private:
  CMatrix reordered_;
  std::size_t measured_dim_;
  std::size_t remainder_dim_;
};

/// True iff max |U^dagger rho U - rho| <= 1e-9. Throws ArgumentError unless
/// u.matrix is unitary within 1e-10.
bool is_invariant_under(const DensityMatrix& rho, const LocalUnitary& u);

/// Invariance under every qubit permutation, checked on the generators of the
/// symmetric group: the transposition (0 1) and the cyclic shift.
bool is_permutation_invariant(const DensityMatrix& rho);

/// Permutation unitary that moves qubit `qubits[i]` to position `qubits[i+1]`
/// cyclically within the listed block.
LocalUnitary cyclic_shift(std::vector<int> qubits);

/// Permutation unitary exchanging two qubits.
LocalUnitary transposition(int a, int b);

}  // namespace symcorr
