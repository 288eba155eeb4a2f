#pragma once

// Derivative-free and finite-difference minimizers used by the discord and
// nonlocality searches.

#include <functional>
#include <vector>

namespace symcorr::optimize {

using Objective1D = std::function<double(double)>;
using ObjectiveND = std::function<double(const std::vector<double>&)>;

struct Minimum1D {
  double x = 0.0;
  double value = 0.0;
};

struct MinimumND {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section search on [lo, hi] until the bracket is narrower than tol.
Minimum1D golden_section(const Objective1D& f, double lo, double hi, double tol);

/// Coarse grid of `grid_points` samples followed by golden-section refinement
/// between the neighbours of the best sample. With `periodic`, the grid covers
/// [lo, hi) and the result is wrapped back into that interval.
Minimum1D grid_golden(const Objective1D& f, double lo, double hi, int grid_points, double tol, bool periodic);

struct NelderMeadOptions {
  double initial_step = 0.1;
  double value_tolerance = 1e-14;
  double size_tolerance = 1e-10;
  int max_evaluations = 20000;
};

MinimumND nelder_mead(const ObjectiveND& f, std::vector<double> x0, const NelderMeadOptions& options = {});

struct BfgsOptions {
  double gradient_step = 1e-6;
  double gradient_tolerance = 1e-9;
  int max_iterations = 500;
};

/// Quasi-Newton descent with central-difference gradients and an Armijo
/// backtracking line search.
MinimumND bfgs(const ObjectiveND& f, std::vector<double> x0, const BfgsOptions& options = {});

}  // namespace symcorr::optimize
