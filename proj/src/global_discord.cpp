#include "symcorr/global_discord.hpp"

#include <cmath>
#include <limits>

#include "symcorr/kernels.hpp"
#include "symcorr/optimize.hpp"

namespace symcorr {

Mat2 rotation_matrix(double theta, double phi) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, std::polar(s, phi), -std::polar(s, -phi), c};
}

RotationAngles RotationAngles::uniform(int n, double theta, double phi) {
  return RotationAngles{std::vector<double>(static_cast<std::size_t>(n), theta),
                        std::vector<double>(static_cast<std::size_t>(n), phi)};
}

namespace {

Mat2 adjoint(const Mat2& u) { return {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])}; }

void check_angles(const DensityMatrix& rho, const RotationAngles& angles) {
  if (angles.size() != rho.n_qubits() || angles.phi.size() != angles.theta.size()) {
    throw ArgumentError("rotation angles: need one (theta, phi) pair per qubit");
  }
}

// m <- R^dagger m R (forward) or R m R^dagger (inverse) with R the product rotation.
void rotate(CMatrix& m, int n, const RotationAngles& angles, bool inverse) {
  const std::size_t dim = static_cast<std::size_t>(m.rows());
  std::span<cplx> buf(m.data(), dim * dim);
  for (int q = 0; q < n; ++q) {
    const Mat2 r = rotation_matrix(angles.theta[static_cast<std::size_t>(q)], angles.phi[static_cast<std::size_t>(q)]);
    const Mat2 r_dag = adjoint(r);
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    kernels::apply_1q_left(buf, dim, bit, inverse ? r : r_dag);
    kernels::apply_1q_right(buf, dim, bit, inverse ? r_dag : r);
  }
}

double population_entropy(const CMatrix& m) {
  std::vector<double> p(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index k = 0; k < m.rows(); ++k) p[static_cast<std::size_t>(k)] = m(k, k).real();
  return shannon_entropy(p);
}

// rho with its entropies and marginals cached for repeated evaluation.
class GlobalObjective {
 public:
  explicit GlobalObjective(const DensityMatrix& rho) : rho_(rho), entropy_(von_neumann_entropy(rho)) {
    for (int j = 0; j < rho.n_qubits(); ++j) {
      const int keep[] = {j};
      marginals_.push_back(partial_trace(rho, keep).matrix());
      marginal_entropy_.push_back(hermitian_entropy(marginals_.back()));
    }
  }

  double operator()(const RotationAngles& angles) {
    const int n = rho_.n_qubits();
    scratch_ = rho_.matrix();
    rotate(scratch_, n, angles, false);
    double value = population_entropy(scratch_) - entropy_;
    for (int j = 0; j < n; ++j) {
      const auto sj = static_cast<std::size_t>(j);
      const RotationAngles single{{angles.theta[sj]}, {angles.phi[sj]}};
      CMatrix m = marginals_[sj];
      rotate(m, 1, single, false);
      value -= population_entropy(m) - marginal_entropy_[sj];
    }
    return value;
  }

 private:
  const DensityMatrix& rho_;
  double entropy_;
  std::vector<CMatrix> marginals_;
  std::vector<double> marginal_entropy_;
  CMatrix scratch_;
};

double fold(double x, double lo, double period) {
  double y = std::fmod(x - lo, period);
  if (y < 0.0) y += period;
  if (y >= period) y = 0.0;
  return lo + y;
}

GlobalDiscordResult symmetric_global_discord(const DensityMatrix& rho, const GlobalDiscordConfig& config) {
  if (!is_permutation_invariant(rho)) {
    throw SymmetryError("global_discord: state is not permutation invariant; use general mode");
  }
  if (config.grid_points < 2) throw ArgumentError("global_discord: grid_points must be at least 2");
  const int n = rho.n_qubits();
  GlobalObjective objective(rho);
  auto f = [&](const std::vector<double>& x) { return objective(RotationAngles::uniform(n, x[0], x[1])); };

  constexpr double theta_lo = kPi / 8.0;
  constexpr double theta_span = kPi / 2.0;
  const double theta_step = theta_span / config.grid_points;
  const double phi_step = 2.0 * kPi / config.grid_points;

  std::vector<double> best{theta_lo, 0.0};
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < config.grid_points; ++i) {
    for (int j = 0; j < config.grid_points; ++j) {
      std::vector<double> x{theta_lo + i * theta_step, j * phi_step};
      const double v = f(x);
      if (v < best_value) {
        best_value = v;
        best = std::move(x);
      }
    }
  }

  optimize::NelderMeadOptions nm;
  nm.initial_step = theta_step;
  nm.value_tolerance = 1e-15;
  nm.size_tolerance = 1e-10;
  const auto refined = optimize::nelder_mead(f, best, nm);
  if (refined.value < best_value) {
    best_value = refined.value;
    best = refined.x;
  }

  const double theta = fold(best[0], theta_lo, theta_span);
  const double phi = fold(best[1], 0.0, 2.0 * kPi);
  return {std::max(best_value, 0.0), RotationAngles::uniform(n, theta, phi)};
}

}  // namespace

RVector rotated_populations(const DensityMatrix& rho, const RotationAngles& angles) {
  check_angles(rho, angles);
  CMatrix m = rho.matrix();
  rotate(m, rho.n_qubits(), angles, false);
  return m.diagonal().real();
}

DensityMatrix dephase_in_rotated_basis(const DensityMatrix& rho, const RotationAngles& angles) {
  check_angles(rho, angles);
  CMatrix m = rho.matrix();
  rotate(m, rho.n_qubits(), angles, false);
  CMatrix diag = CMatrix::Zero(m.rows(), m.cols());
  diag.diagonal() = m.diagonal().real().cast<cplx>();
  rotate(diag, rho.n_qubits(), angles, true);
  diag = 0.5 * (diag + diag.adjoint()).eval();
  return DensityMatrix(rho.n_qubits(), std::move(diag));
}

double global_discord_objective(const DensityMatrix& rho, const RotationAngles& angles) {
  check_angles(rho, angles);
  GlobalObjective objective(rho);
  return objective(angles);
}

GlobalDiscordResult global_discord(const DensityMatrix& rho, DiscordMode mode, const GlobalDiscordConfig& config) {
  if (mode == DiscordMode::symmetric) return symmetric_global_discord(rho, config);
  auto result = oracle_global_discord(rho, config.oracle);
  for (auto& t : result.angles.theta) t = fold(t, 0.0, kPi);
  for (auto& p : result.angles.phi) p = fold(p, 0.0, 2.0 * kPi);
  return {std::max(result.value, 0.0), std::move(result.angles)};
}

double global_discord_thermo_analytic(int n, double p0) {
  if (n < 2) throw ArgumentError("global_discord_thermo_analytic: need at least two qubits");
  if (!(p0 >= 0.0 && p0 <= 1.0)) throw ArgumentError("p0 must lie in [0, 1]");
  const double a = std::pow(p0, n);
  const double b = std::pow(1.0 - p0, n);
  auto xlogx = [](double x) { return x > 0.0 ? x * std::log2(x) : 0.0; };
  const double s = a + b;
  return xlogx(a) + xlogx(b) - (s > 0.0 ? s * std::log2(0.5 * s) : 0.0);
}

}  // namespace symcorr
