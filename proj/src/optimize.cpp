#include "symcorr/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

namespace symcorr::optimize {
namespace {

constexpr double kInvPhi = 0.61803398874989484820;

}  // namespace

Minimum1D golden_section(const Objective1D& f, double lo, double hi, double tol) {
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? Minimum1D{c, fc} : Minimum1D{d, fd};
}

Minimum1D grid_golden(const Objective1D& f, double lo, double hi, int grid_points, double tol, bool periodic) {
  const int n = std::max(grid_points, 3);
  const double step = (hi - lo) / (periodic ? n : n - 1);
  Minimum1D best{lo, f(lo)};
  for (int i = 1; i < n; ++i) {
    const double x = lo + i * step;
    const double v = f(x);
    if (v < best.value) best = {x, v};
  }
  double a = best.x - step;
  double b = best.x + step;
  if (!periodic) {
    a = std::max(a, lo);
    b = std::min(b, hi);
  }
  const Minimum1D refined = golden_section(f, a, b, tol);
  if (refined.value < best.value) best = refined;
  if (periodic) {
    const double period = hi - lo;
    best.x = lo + std::fmod(std::fmod(best.x - lo, period) + period, period);
  }
  return best;
}

MinimumND nelder_mead(const ObjectiveND& f, std::vector<double> x0, const NelderMeadOptions& options) {
  const std::size_t dim = x0.size();
  std::vector<std::vector<double>> simplex(dim + 1, x0);
  std::vector<double> values(dim + 1);
  int evals = 0;
  auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };
  for (std::size_t i = 0; i < dim; ++i) simplex[i + 1][i] += options.initial_step;
  for (std::size_t i = 0; i <= dim; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(dim + 1);
  std::vector<double> centroid(dim), trial(dim), trial2(dim);
  while (evals < options.max_evaluations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - 1];

    double size = 0.0;
    for (std::size_t i = 0; i <= dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) size = std::max(size, std::abs(simplex[i][j] - simplex[best][j]));
    }
    if (values[worst] - values[best] <= options.value_tolerance && size <= options.size_tolerance) break;
    if (size <= options.size_tolerance * 1e-3) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += simplex[i][j] / static_cast<double>(dim);
    }
    for (std::size_t j = 0; j < dim; ++j) trial[j] = centroid[j] + (centroid[j] - simplex[worst][j]);
    const double fr = eval(trial);
    if (fr < values[best]) {
      for (std::size_t j = 0; j < dim; ++j) trial2[j] = centroid[j] + 2.0 * (centroid[j] - simplex[worst][j]);
      const double fe = eval(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = trial;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    for (std::size_t j = 0; j < dim; ++j) {
      trial2[j] = outside ? centroid[j] + 0.5 * (trial[j] - centroid[j])
                          : centroid[j] + 0.5 * (simplex[worst][j] - centroid[j]);
    }
    const double fc = eval(trial2);
    if (fc < std::min(fr, values[worst])) {
      simplex[worst] = trial2;
      values[worst] = fc;
      continue;
    }
    // Shrink toward the best vertex.
    for (std::size_t i = 0; i <= dim; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < dim; ++j) simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
      values[i] = eval(simplex[i]);
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  const auto idx = static_cast<std::size_t>(it - values.begin());
  return MinimumND{simplex[idx], *it, evals};
}

MinimumND bfgs(const ObjectiveND& f, std::vector<double> x0, const BfgsOptions& options) {
  using Eigen::MatrixXd;
  using Eigen::VectorXd;
  const auto dim = static_cast<Eigen::Index>(x0.size());
  int evals = 0;
  std::vector<double> buf(x0);
  auto eval = [&](const VectorXd& x) {
    ++evals;
    std::copy(x.data(), x.data() + dim, buf.begin());
    return f(buf);
  };
  auto gradient = [&](const VectorXd& x) {
    VectorXd g(dim);
    VectorXd probe = x;
    for (Eigen::Index i = 0; i < dim; ++i) {
      const double h = options.gradient_step;
      probe(i) = x(i) + h;
      const double up = eval(probe);
      probe(i) = x(i) - h;
      const double down = eval(probe);
      probe(i) = x(i);
      g(i) = (up - down) / (2.0 * h);
    }
    return g;
  };

  VectorXd x = Eigen::Map<const VectorXd>(x0.data(), dim);
  double fx = eval(x);
  VectorXd g = gradient(x);
  MatrixXd h_inv = MatrixXd::Identity(dim, dim);

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    if (g.lpNorm<Eigen::Infinity>() < options.gradient_tolerance) break;
    VectorXd dir = -h_inv * g;
    double slope = g.dot(dir);
    if (slope >= 0.0) {
      h_inv.setIdentity();
      dir = -g;
      slope = g.dot(dir);
    }
    double step = 1.0;
    VectorXd x_new = x + dir;
    double f_new = eval(x_new);
    while (f_new > fx + 1e-4 * step * slope && step > 1e-12) {
      step *= 0.5;
      x_new = x + step * dir;
      f_new = eval(x_new);
    }
    if (!(f_new < fx)) break;
    const VectorXd g_new = gradient(x_new);
    const VectorXd s = x_new - x;
    const VectorXd y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-14) {
      const double rho = 1.0 / sy;
      const MatrixXd eye = MatrixXd::Identity(dim, dim);
      h_inv = (eye - rho * s * y.transpose()) * h_inv * (eye - rho * y * s.transpose()) + rho * s * s.transpose();
    }
    const double improvement = fx - f_new;
    x = x_new;
    fx = f_new;
    g = g_new;
    if (improvement < 1e-15) break;
  }
  return MinimumND{std::vector<double>(x.data(), x.data() + dim), fx, evals};
}

}  // namespace symcorr::optimize
