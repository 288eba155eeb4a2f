#include <gtest/gtest.h>

#include <cmath>

#include "symcorr/optimize.hpp"
#include "symcorr/types.hpp"

using namespace symcorr;
using namespace symcorr::optimize;

TEST(GoldenSection, FindsParabolaMinimum) {
  const auto m = golden_section([](double x) { return (x - 0.3) * (x - 0.3); }, -1.0, 2.0, 1e-9);
  EXPECT_NEAR(m.x, 0.3, 1e-8);
  EXPECT_NEAR(m.value, 0.0, 1e-15);
}

TEST(GridGolden, FindsGlobalMinimumOfMultimodal) {
  // Local minima near 1.07 and at the right edge; the global one is near 1.07.
  auto f = [](double x) { return std::cos(3.0 * x) + 0.1 * (x - 2.0) * (x - 2.0); };
  const auto m = grid_golden(f, 0.0, 3.0, 64, 1e-9, false);
  const auto fine = golden_section(f, 0.8, 1.3, 1e-12);
  EXPECT_NEAR(m.x, fine.x, 1e-7);
}

TEST(GridGolden, PeriodicWrapsAroundBoundary) {
  // Period pi/2, minimum at 0 == pi/2.
  auto f = [](double t) { return -std::cos(4.0 * t); };
  const auto m = grid_golden(f, 0.0, kPi / 2.0, 64, 1e-9, true);
  EXPECT_GE(m.x, 0.0);
  EXPECT_LT(m.x, kPi / 2.0);
  EXPECT_NEAR(m.value, -1.0, 1e-12);
  const double d = std::min(m.x, kPi / 2.0 - m.x);
  EXPECT_LT(d, 1e-6);

  auto g = [](double t) { return -std::cos(4.0 * (t - 0.01)); };
  const auto mg = grid_golden(g, 0.0, kPi / 2.0, 64, 1e-10, true);
  EXPECT_NEAR(mg.x, 0.01, 1e-7);
  auto h = [](double t) { return -std::cos(4.0 * (t + 0.01)); };
  const auto mh = grid_golden(h, 0.0, kPi / 2.0, 64, 1e-10, true);
  EXPECT_NEAR(mh.x, kPi / 2.0 - 0.01, 1e-7);
}

TEST(NelderMead, Rosenbrock) {
  auto f = [](const std::vector<double>& x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions o;
  o.initial_step = 0.5;
  o.value_tolerance = 1e-20;
  o.size_tolerance = 1e-12;
  const auto m = nelder_mead(f, {-1.2, 1.0}, o);
  EXPECT_NEAR(m.x[0], 1.0, 1e-5);
  EXPECT_NEAR(m.x[1], 1.0, 1e-5);
  EXPECT_GT(m.evaluations, 0);
}

TEST(Bfgs, Quadratic) {
  auto f = [](const std::vector<double>& x) {
    return 2.0 * x[0] * x[0] + x[1] * x[1] + x[0] * x[1] - x[0] + 3.0;
  };
  const auto m = bfgs(f, {1.0, -1.0});
  // Gradient zero: 4x + y = 1, 2y + x = 0 -> x = 2/7, y = -1/7.
  EXPECT_NEAR(m.x[0], 2.0 / 7.0, 1e-6);
  EXPECT_NEAR(m.x[1], -1.0 / 7.0, 1e-6);
}
