#include "symcorr/states.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace symcorr {
namespace {

void check_family_size(int n, const char* what) {
  if (n < 2) throw ArgumentError(std::string(what) + ": need at least two qubits");
  check_qubit_count(n);
}

void check_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) throw ArgumentError(std::string(what) + " must lie in [0, 1]");
}

void check_alpha(double alpha1, AlphaPolicy policy) {
  check_unit_interval(alpha1, "alpha1");
  if (policy == AlphaPolicy::strict && alpha_exceeds_strict_range(alpha1)) {
    throw ArgumentError("alpha1 exceeds 1/sqrt(2) (strict mode)");
  }
}

double beta_of(double alpha1) { return std::sqrt(std::max(0.0, 1.0 - alpha1 * alpha1)); }

int popcount(std::size_t x) { return std::popcount(x); }

}  // namespace

bool alpha_exceeds_strict_range(double alpha1) { return alpha1 > kInvSqrt2 + 1e-12; }

DensityMatrix thermo_state(int n, double p0) {
  check_family_size(n, "thermo_state");
  check_unit_interval(p0, "p0");
  const double p1 = 1.0 - p0;
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  const double a = std::pow(p0, n);
  const double b = std::pow(p1, n);

  CMatrix m = CMatrix::Zero(d, d);
  for (Eigen::Index x = 1; x + 1 < d; ++x) {
    const int zeros = n - popcount(static_cast<std::size_t>(x));
    m(x, x) = std::pow(p0, zeros) * std::pow(p1, n - zeros);
  }
  m(0, 0) = m(d - 1, d - 1) = 0.5 * (a + b);
  m(0, d - 1) = m(d - 1, 0) = 0.5 * (a - b);
  return DensityMatrix(n, std::move(m));
}

PureState ghz_state(int n, double alpha1, AlphaPolicy policy) {
  check_family_size(n, "ghz_state");
  check_alpha(alpha1, policy);
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  CVector v = CVector::Zero(d);
  v(0) = alpha1;
  v(d - 1) = beta_of(alpha1);
  v.normalize();
  return PureState(n, std::move(v));
}

DensityMatrix ghz_ad_closed(int n, double alpha1, double lambda, AlphaPolicy policy) {
  check_family_size(n, "ghz_ad_closed");
  check_alpha(alpha1, policy);
  check_unit_interval(lambda, "lambda");
  const double a2 = alpha1 * alpha1;
  const double b2 = 1.0 - a2;
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);

  CMatrix m = CMatrix::Zero(d, d);
  m(0, 0) = a2 + b2 * std::pow(lambda, n);
  m(d - 1, d - 1) = b2 * std::pow(1.0 - lambda, n);
  m(0, d - 1) = m(d - 1, 0) = alpha1 * beta_of(alpha1) * std::pow(1.0 - lambda, 0.5 * n);
  // k = number of qubits still excited.
  for (Eigen::Index x = 1; x + 1 < d; ++x) {
    const int k = popcount(static_cast<std::size_t>(x));
    m(x, x) = b2 * std::pow(1.0 - lambda, k) * std::pow(lambda, n - k);
  }
  return DensityMatrix(n, std::move(m));
}

DensityMatrix ghz_pd_closed(int n, double alpha1, double gamma, AlphaPolicy policy) {
  check_family_size(n, "ghz_pd_closed");
  check_alpha(alpha1, policy);
  check_unit_interval(gamma, "gamma");
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << n);
  CMatrix m = CMatrix::Zero(d, d);
  m(0, 0) = alpha1 * alpha1;
  m(d - 1, d - 1) = 1.0 - alpha1 * alpha1;
  m(0, d - 1) = m(d - 1, 0) = alpha1 * beta_of(alpha1) * std::pow(1.0 - gamma, 0.5 * n);
  return DensityMatrix(n, std::move(m));
}

// ---------------------------------------------------------------------------

MeasurementBasis::MeasurementBasis(int block_size, CMatrix vectors)
    : block_size_(block_size), vectors_(std::move(vectors)) {
  check_qubit_count(block_size);
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << block_size);
  if (vectors_.rows() != d || vectors_.cols() != d) {
    throw ArgumentError("MeasurementBasis: need 2^k vectors of length 2^k");
  }
  const CMatrix gram = vectors_.adjoint() * vectors_;
  if ((gram - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-10) {
    throw ArgumentError("MeasurementBasis: vectors are not orthonormal");
  }
}

PureState MeasurementBasis::vector(std::size_t i) const {
  if (i >= size()) throw ArgumentError("MeasurementBasis::vector: index out of range");
  return PureState(block_size_, vectors_.col(static_cast<Eigen::Index>(i)));
}

CMatrix symmetric_basis_fixed_columns(int k) {
  check_qubit_count(k);
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << k);
  CMatrix out = CMatrix::Zero(d, d - 2);
  Eigen::Index col = 0;
  for (int j = 1; j < k; ++j) {
    std::vector<Eigen::Index> sector;
    for (Eigen::Index x = 0; x < d; ++x) {
      if (popcount(static_cast<std::size_t>(x)) == j) sector.push_back(x);
    }
    const auto size = static_cast<double>(sector.size());
    for (std::size_t mode = 0; mode < sector.size(); ++mode, ++col) {
      for (std::size_t l = 0; l < sector.size(); ++l) {
        const double phase = 2.0 * kPi * static_cast<double>(mode * l) / size;
        out(sector[l], col) = std::polar(1.0 / std::sqrt(size), phase);
      }
    }
  }
  return out;
}

MeasurementBasis symmetric_basis(int k, double theta) {
  check_qubit_count(k);
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << k);
  CMatrix v = CMatrix::Zero(d, d);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  v(0, 0) = c;
  v(d - 1, 0) = s;
  v(0, 1) = -s;
  v(d - 1, 1) = c;
  if (d > 2) v.rightCols(d - 2) = symmetric_basis_fixed_columns(k);
  return MeasurementBasis(k, std::move(v));
}

LocalUnitary symmetry_generator(SymmetryKind kind, std::vector<int> block) {
  if (kind == SymmetryKind::translation) return cyclic_shift(std::move(block));

  const int k = static_cast<int>(block.size());
  check_qubit_count(k);
  const auto d = static_cast<Eigen::Index>(std::size_t{1} << k);
  const double phi = (k == 2) ? 0.0 : (k % 2 == 1 ? kPi / k : 2.0 * kPi / k);
  CMatrix u = CMatrix::Zero(d, d);
  for (Eigen::Index x = 0; x < d; ++x) {
    const int ones = popcount(static_cast<std::size_t>(x));
    const double parity = (ones % 2 == 0) ? 1.0 : -1.0;
    u(x, x) = parity * std::polar(1.0, phi * ones);
  }
  return LocalUnitary{std::move(block), std::move(u)};
}

}  // namespace symcorr
