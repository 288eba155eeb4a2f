#include "symcorr/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "symcorr/kernels.hpp"

namespace symcorr {
namespace {

std::size_t dim_of(int n) { return std::size_t{1} << n; }

// Scatter the k bits of `value` onto the given qubit positions of an n-qubit
// index (first listed qubit takes the most significant bit of `value`).
std::size_t scatter_bits(std::size_t value, std::span<const int> qubits, int n) {
  std::size_t out = 0;
  const std::size_t k = qubits.size();
  for (std::size_t j = 0; j < k; ++j) {
    if ((value >> (k - 1 - j)) & 1U) out |= std::size_t{1} << (n - 1 - qubits[j]);
  }
  return out;
}

std::vector<std::size_t> scatter_table(std::span<const int> qubits, int n) {
  std::vector<std::size_t> table(dim_of(static_cast<int>(qubits.size())));
  for (std::size_t v = 0; v < table.size(); ++v) table[v] = scatter_bits(v, qubits, n);
  return table;
}

std::vector<int> complement(std::span<const int> qubits, int n) {
  std::vector<int> out;
  for (int q = 0; q < n; ++q) {
    if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) out.push_back(q);
  }
  return out;
}

void check_qubit_list(std::span<const int> qubits, int n, const char* what) {
  if (qubits.empty()) throw ArgumentError(std::string(what) + ": empty qubit set");
  std::vector<int> sorted(qubits.begin(), qubits.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ArgumentError(std::string(what) + ": duplicate qubit index");
  }
  if (sorted.front() < 0 || sorted.back() >= n) {
    throw ArgumentError(std::string(what) + ": qubit index out of range");
  }
}

// (U (x) I) m, where U acts on the leading `du`-dimensional factor.
CMatrix left_multiply_leading(const CMatrix& m, const CMatrix& u) {
  const Eigen::Index du = u.rows();
  const Eigen::Index dr = m.rows() / du;
  CMatrix out(m.rows(), m.cols());
  const CMatrix ut = u.transpose();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    Eigen::Map<const CMatrix> x(m.col(c).data(), dr, du);
    Eigen::Map<CMatrix> y(out.col(c).data(), dr, du);
    y.noalias() = x * ut;
  }
  return out;
}

}  // namespace

void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw GuardError("qubit count " + std::to_string(n_qubits) + " outside supported range [1, " +
                     std::to_string(kMaxQubits) + "]");
  }
}

// ---------------------------------------------------------------------------

PureState::PureState(int n_qubits, CVector amplitudes) : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(n_qubits);
  if (static_cast<std::size_t>(amplitudes_.size()) != dim_of(n_qubits)) {
    throw ArgumentError("PureState: amplitude vector length does not match 2^n");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > kNormTolerance) {
    throw ArgumentError("PureState: amplitudes are not normalized");
  }
}

PureState PureState::basis(int n_qubits, std::size_t index) {
  check_qubit_count(n_qubits);
  if (index >= dim_of(n_qubits)) throw ArgumentError("PureState::basis: index out of range");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim_of(n_qubits)));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(n_qubits, std::move(v));
}

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(int n_qubits, CMatrix data) : n_qubits_(n_qubits), data_(std::move(data)) {
  check_qubit_count(n_qubits);
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  if (data_.rows() != d || data_.cols() != d) {
    throw ArgumentError("DensityMatrix: matrix is not 2^n x 2^n");
  }
  const double asym = (data_ - data_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTolerance) {
    throw InvariantError("DensityMatrix: matrix is not Hermitian (deviation " + std::to_string(asym) + ")");
  }
  const cplx tr = data_.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw InvariantError("DensityMatrix: trace is " + std::to_string(tr.real()) + ", expected 1");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const CVector& v = psi.amplitudes();
  return DensityMatrix(psi.n_qubits(), v * v.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  check_qubit_count(n_qubits);
  const auto d = static_cast<Eigen::Index>(dim_of(n_qubits));
  return DensityMatrix(n_qubits, CMatrix::Identity(d, d) / static_cast<double>(d));
}

RVector DensityMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(data_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

void DensityMatrix::check_positive(double tolerance) const {
  const double lowest = eigenvalues().minCoeff();
  if (lowest < -tolerance) {
    throw InvariantError("DensityMatrix: negative eigenvalue " + std::to_string(lowest));
  }
}

// ---------------------------------------------------------------------------

Cut::Cut(int n_qubits, std::vector<int> measured) : n_qubits_(n_qubits), measured_(std::move(measured)) {
  if (n_qubits < 2) throw ArgumentError("Cut: need at least two qubits");
  check_qubit_list(measured_, n_qubits, "Cut");
  std::sort(measured_.begin(), measured_.end());
  remainder_ = complement(measured_, n_qubits);
  if (remainder_.empty()) throw ArgumentError("Cut: remainder block is empty");
}

Cut Cut::trailing(int n_qubits, int k) {
  if (k < 1 || k >= n_qubits) throw ArgumentError("Cut::trailing: block size out of range");
  std::vector<int> measured(static_cast<std::size_t>(k));
  std::iota(measured.begin(), measured.end(), n_qubits - k);
  return Cut(n_qubits, std::move(measured));
}

Cut Cut::swapped() const { return Cut(n_qubits_, remainder_); }

std::string Cut::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < remainder_.size(); ++i) os << (i ? "," : "") << remainder_[i];
  os << '|';
  for (std::size_t i = 0; i < measured_.size(); ++i) os << (i ? "," : "") << measured_[i];
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------------------

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const int n = a.n_qubits() + b.n_qubits();
  check_qubit_count(n);
  const CMatrix& x = a.matrix();
  const CMatrix& y = b.matrix();
  CMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return DensityMatrix(n, std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const int n = rho.n_qubits();
  check_qubit_list(keep, n, "partial_trace");
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  const std::vector<int> traced = complement(kept, n);

  const auto rows = scatter_table(kept, n);
  const auto inner = scatter_table(traced, n);
  const auto dk = static_cast<Eigen::Index>(rows.size());
  const CMatrix& m = rho.matrix();

  CMatrix out = CMatrix::Zero(dk, dk);
  for (Eigen::Index j = 0; j < dk; ++j) {
    for (Eigen::Index i = 0; i < dk; ++i) {
      cplx acc = 0.0;
      for (std::size_t t : inner) {
        acc += m(static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)] | t),
                 static_cast<Eigen::Index>(rows[static_cast<std::size_t>(j)] | t));
      }
      out(i, j) = acc;
    }
  }
  return DensityMatrix(static_cast<int>(kept.size()), std::move(out));
}

DensityMatrix permute_qubits(const DensityMatrix& rho, std::span<const int> order) {
  const int n = rho.n_qubits();
  if (static_cast<int>(order.size()) != n) throw ArgumentError("permute_qubits: order must list every qubit");
  check_qubit_list(order, n, "permute_qubits");
  // New index y has qubit i at bit (n-1-i); the same bit value sits at
  // position (n-1-order[i]) of the old index.
  const auto src = scatter_table(order, n);
  const auto d = static_cast<Eigen::Index>(src.size());
  const CMatrix& m = rho.matrix();
  CMatrix out(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    const auto sc = static_cast<Eigen::Index>(src[static_cast<std::size_t>(c)]);
    for (Eigen::Index r = 0; r < d; ++r) out(r, c) = m(static_cast<Eigen::Index>(src[static_cast<std::size_t>(r)]), sc);
  }
  return DensityMatrix(n, std::move(out));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const LocalUnitary& u) {
  const int n = rho.n_qubits();
  check_qubit_list(u.qubits, n, "apply_unitary");
  const auto du = static_cast<Eigen::Index>(dim_of(static_cast<int>(u.qubits.size())));
  if (u.matrix.rows() != du || u.matrix.cols() != du) {
    throw ArgumentError("apply_unitary: operator dimension does not match its qubit list");
  }
  std::vector<int> order = u.qubits;
  for (int q : complement(u.qubits, n)) order.push_back(q);
  const DensityMatrix front = permute_qubits(rho, order);

  const CMatrix half = left_multiply_leading(front.matrix(), u.matrix);
  CMatrix full = left_multiply_leading(half.adjoint(), u.matrix);
  // Symmetrize away rounding so the Hermitian check stays meaningful.
  full = 0.5 * (full + full.adjoint()).eval();

  std::vector<int> inverse(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) inverse[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return permute_qubits(DensityMatrix(n, std::move(full)), inverse);
}

// ---------------------------------------------------------------------------

double hermitian_entropy(const CMatrix& h) {
  if (h.rows() == 1) {
    const double p = std::clamp(h(0, 0).real(), 0.0, 1.0);
    return p > 0.0 ? -p * std::log2(p) : 0.0;
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  const RVector& ev = solver.eigenvalues();
  if (ev.minCoeff() < -kEigenClamp) {
    throw InvariantError("entropy: eigenvalue " + std::to_string(ev.minCoeff()) + " below clamp threshold");
  }
  double s = 0.0;
  for (double lambda : ev) {
    const double p = std::clamp(lambda, 0.0, 1.0);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double x : probabilities) {
    const double p = std::clamp(x, 0.0, 1.0);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) { return hermitian_entropy(rho.matrix()); }

double total_correlations(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  if (n < 2) throw ArgumentError("total_correlations: need at least two qubits");
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const int keep[] = {j};
    sum += von_neumann_entropy(partial_trace(rho, keep));
  }
  return sum - von_neumann_entropy(rho);
}

double mutual_information(const DensityMatrix& rho, const Cut& cut) {
  if (cut.n_qubits() != rho.n_qubits()) throw ArgumentError("mutual_information: cut size mismatch");
  return von_neumann_entropy(partial_trace(rho, cut.measured())) +
         von_neumann_entropy(partial_trace(rho, cut.remainder())) - von_neumann_entropy(rho);
}

// ---------------------------------------------------------------------------

MeasuredView::MeasuredView(const DensityMatrix& rho, const Cut& cut) {
  if (cut.n_qubits() != rho.n_qubits()) throw ArgumentError("MeasuredView: cut size mismatch");
  std::vector<int> order = cut.measured();
  order.insert(order.end(), cut.remainder().begin(), cut.remainder().end());
  reordered_ = permute_qubits(rho, order).matrix();
  measured_dim_ = dim_of(static_cast<int>(cut.measured().size()));
  remainder_dim_ = dim_of(static_cast<int>(cut.remainder().size()));
}

CMatrix MeasuredView::unnormalized_conditional(const CVector& probe) const {
  if (static_cast<std::size_t>(probe.size()) != measured_dim_) {
    throw ArgumentError("conditional state: probe dimension does not match the measured block");
  }
  const auto dr = static_cast<Eigen::Index>(remainder_dim_);
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < probe.size(); ++i) {
    if (probe(i) != cplx(0.0)) support.push_back(i);
  }
  CMatrix out = CMatrix::Zero(dr, dr);
  for (Eigen::Index j : support) {
    for (Eigen::Index b = 0; b < dr; ++b) {
      const cplx* column = reordered_.col(j * dr + b).data();
      std::span<cplx> target(out.col(b).data(), static_cast<std::size_t>(dr));
      for (Eigen::Index i : support) {
        const cplx weight = std::conj(probe(i)) * probe(j);
        kernels::caxpy(target, weight, std::span<const cplx>(column + i * dr, static_cast<std::size_t>(dr)));
      }
    }
  }
  return out;
}

double MeasuredView::weighted_entropy(const CVector& probe) const {
  CMatrix sigma = unnormalized_conditional(probe);
  const double b = sigma.trace().real();
  if (b < kDegenerateProbability) return 0.0;
  sigma /= b;
  return b * hermitian_entropy(sigma);
}

double MeasuredView::conditional_entropy(const CMatrix& basis) const {
  double total = 0.0;
  for (Eigen::Index i = 0; i < basis.cols(); ++i) total += weighted_entropy(basis.col(i));
  return total;
}

ConditionalOutcome conditional_state(const DensityMatrix& rho, const Cut& cut, const PureState& probe) {
  if (probe.n_qubits() != static_cast<int>(cut.measured().size())) {
    throw ArgumentError("conditional_state: probe dimension does not match the measured block");
  }
  const MeasuredView view(rho, cut);
  CMatrix sigma = view.unnormalized_conditional(probe.amplitudes());
  ConditionalOutcome out;
  const double b = sigma.trace().real();
  if (b < kDegenerateProbability) return out;
  out.probability = b;
  sigma /= b;
  sigma = 0.5 * (sigma + sigma.adjoint()).eval();
  out.state.emplace(static_cast<int>(cut.remainder().size()), std::move(sigma));
  return out;
}

// ---------------------------------------------------------------------------

bool is_invariant_under(const DensityMatrix& rho, const LocalUnitary& u) {
  const CMatrix& m = u.matrix;
  if (m.rows() != m.cols() ||
      (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() > 1e-10) {
    throw ArgumentError("is_invariant_under: operator is not unitary");
  }
  // U^dagger rho U is apply_unitary with U^dagger.
  const LocalUnitary adj{u.qubits, m.adjoint()};
  const DensityMatrix moved = apply_unitary(rho, adj);
  return (moved.matrix() - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-9;
}

LocalUnitary cyclic_shift(std::vector<int> qubits) {
  const int m = static_cast<int>(qubits.size());
  if (m < 1 || m > kMaxQubits) throw ArgumentError("cyclic_shift: bad block size");
  const auto d = static_cast<Eigen::Index>(dim_of(m));
  CMatrix p = CMatrix::Zero(d, d);
  for (Eigen::Index x = 0; x < d; ++x) {
    // Bit of block position i moves to position i+1 (mod m).
    Eigen::Index y = 0;
    for (int i = 0; i < m; ++i) {
      const Eigen::Index bit = (x >> (m - 1 - i)) & 1;
      const int target = (i + 1) % m;
      y |= bit << (m - 1 - target);
    }
    p(y, x) = 1.0;
  }
  return LocalUnitary{std::move(qubits), std::move(p)};
}

LocalUnitary transposition(int a, int b) {
  if (a == b) throw ArgumentError("transposition: qubits must differ");
  CMatrix swap = CMatrix::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = 1.0;
  swap(1, 2) = swap(2, 1) = 1.0;
  return LocalUnitary{{a, b}, std::move(swap)};
}

bool is_permutation_invariant(const DensityMatrix& rho) {
  const int n = rho.n_qubits();
  if (n < 2) return true;
  if (!is_invariant_under(rho, transposition(0, 1))) return false;
  if (n == 2) return true;
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return is_invariant_under(rho, cyclic_shift(std::move(all)));
}

}  // namespace symcorr
