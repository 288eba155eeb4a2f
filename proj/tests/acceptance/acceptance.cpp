// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "symcorr/channels.hpp"
#include "symcorr/genuine.hpp"
#include "symcorr/global_discord.hpp"
#include "symcorr/nonlocality.hpp"
#include "symcorr/oracle.hpp"
#include "symcorr/states.hpp"

using namespace symcorr;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Global discord of thermo states measured in the computational basis.
double analytic_global(int n, double p0) {
  const double a = std::pow(p0, n);
  const double b = std::pow(1.0 - p0, n);
  return xlog2x(a) + xlog2x(b) - (a + b) * std::log2((a + b) / 2.0);
}

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

// Damping rate where the maximal violation of ghz_ad(n, alpha1, .) drops to 1.
double loss_rate(int n, double alpha1) {
  auto v = [&](double lambda) { return max_violation(ghz_ad_closed(n, alpha1, lambda)).value; };
  if (v(0.0) <= 1.0) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (v(mid) > 1.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome criterion1() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int n = 3; n <= 6; ++n) {
    for (int i = 0; i <= 20; ++i) {
      const double p0 = i / 20.0;
      worst = std::max(worst, std::abs(global_discord(thermo_state(n, p0)).value - analytic_global(n, p0)));
    }
  }
  double endpoint = 0.0;
  for (int n = 3; n <= 6; ++n) {
    endpoint = std::max(endpoint, std::abs(global_discord(thermo_state(n, 0.0)).value - 1.0));
    endpoint = std::max(endpoint, std::abs(global_discord(thermo_state(n, 1.0)).value - 1.0));
    endpoint = std::max(endpoint, std::abs(global_discord(thermo_state(n, 0.5)).value));
  }
  const double elapsed = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "max |G - closed form| = %.3g, endpoint error = %.3g, %.1f s", worst, endpoint,
                elapsed);
  return {worst <= 1e-6 && endpoint <= 1e-6 && elapsed < 60.0, buf};
}

Outcome criterion2() {
  double genuine_err = 0.0;
  double global_err = 0.0;
  for (int n : {3, 4}) {
    for (double p0 : {0.2, 0.35, 0.8}) {
      const auto rho = thermo_state(n, p0);
      genuine_err = std::max(genuine_err, std::abs(genuine_correlations(rho).optimal_theta - kPi / 4.0));
      for (double t : global_discord(rho).angles.theta) global_err = std::max(global_err, std::abs(t - kPi / 2.0));
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max |theta_genuine - pi/4| = %.3g, max |theta_global - pi/2| = %.3g", genuine_err,
                global_err);
  return {genuine_err <= 1e-3 && global_err <= 1e-3, buf};
}

Outcome criterion3() {
  const auto t0 = Clock::now();
  double discord_err = 0.0;
  double global_err = 0.0;
  GlobalDiscordConfig gconfig;
  for (int n : {3, 4}) {
    const std::vector<DensityMatrix> states{thermo_state(n, 0.2),           thermo_state(n, 0.8),
                                            ghz_ad_closed(n, 0.6, 0.3),     ghz_ad_closed(n, kInvSqrt2, 0.5),
                                            ghz_pd_closed(n, 0.45, 0.4),    ghz_pd_closed(n, kInvSqrt2, 0.7)};
    for (const auto& rho : states) {
      for (int k = 1; k <= n / 2; ++k) {
        for (const Cut& cut : {Cut::trailing(n, k), Cut::trailing(n, k).swapped()}) {
          discord_err = std::max(discord_err, std::abs(bipartite_discord(rho, cut).discord -
                                                       oracle_bipartite_discord(rho, cut)));
        }
      }
      global_err = std::max(global_err,
                            std::abs(global_discord(rho).value - oracle_global_discord(rho, gconfig.oracle).value));
    }
  }
  const double elapsed = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "max discord gap = %.3g, max global gap = %.3g, %.1f s", discord_err, global_err,
                elapsed);
  return {discord_err <= 2e-3 && global_err <= 2e-3 && elapsed < 600.0, buf};
}

Outcome criterion4() {
  double corr_err = 0.0;
  double svet_err = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const auto g = genuine_correlations(DensityMatrix::from_pure(ghz_state(n, kInvSqrt2)));
    corr_err = std::max({corr_err, std::abs(g.total - 2.0), std::abs(g.quantum - 1.0), std::abs(g.classical - 1.0)});
  }
  for (int n = 2; n <= 5; ++n) {
    const double expected = std::sqrt(std::ldexp(1.0, n % 2 == 0 ? n - 1 : n - 2));
    const double got = max_violation(DensityMatrix::from_pure(ghz_state(n, kInvSqrt2))).value;
    svet_err = std::max(svet_err, std::abs(got - expected));
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max |(T,D,J) - (2,1,1)| = %.3g, max Svetlichny gap = %.3g", corr_err, svet_err);
  return {corr_err <= 1e-9 && svet_err <= 1e-3, buf};
}

Outcome criterion5() {
  double worst = 0.0;
  for (int n = 2; n <= 6; ++n) {
    for (double alpha1 : {kInvSqrt2, 0.4}) {
      const auto ghz = DensityMatrix::from_pure(ghz_state(n, alpha1));
      for (int i = 0; i <= 10; ++i) {
        const double rate = i / 10.0;
        const auto ad = apply_local_channel(ghz, {ChannelKind::amplitude_damping, rate});
        const auto pd = apply_local_channel(ghz, {ChannelKind::phase_damping, rate});
        worst = std::max(worst, max_abs(ad.matrix() - ghz_ad_closed(n, alpha1, rate).matrix()));
        worst = std::max(worst, max_abs(pd.matrix() - ghz_pd_closed(n, alpha1, rate).matrix()));
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max elementwise gap = %.3g", worst);
  return {worst <= 1e-12, buf};
}

Outcome criterion6() {
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    for (int a = 1; a <= 5; ++a) {
      const double alpha1 = kInvSqrt2 * a / 5.0;
      const auto ghz = DensityMatrix::from_pure(ghz_state(n, alpha1));
      for (int r = 0; r <= 4; ++r) {
        const double rate = r / 4.0;
        const double ad = max_violation(apply_local_channel(ghz, {ChannelKind::amplitude_damping, rate})).value;
        const double pd = max_violation(apply_local_channel(ghz, {ChannelKind::phase_damping, rate})).value;
        worst = std::max(worst, std::abs(ad - pd));
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "max |N_AD - N_PD| = %.3g", worst);
  return {worst <= 1e-6, buf};
}

Outcome criterion7() {
  std::string detail = "max N_n =";
  bool ok = true;
  for (int n = 2; n <= 4; ++n) {
    const double b = oracle_lhv_bound(n);
    ok = ok && b == 1.0;
    char buf[48];
    std::snprintf(buf, sizeof buf, " %g (n=%d)", b, n);
    detail += buf;
  }
  return {ok, detail};
}

Outcome criterion8() {
  const double rate = loss_rate(2, kInvSqrt2);
  const double expected = 1.0 - 1.0 / std::sqrt(2.0);
  char buf[160];
  std::snprintf(buf, sizeof buf, "loss rate %.8f, expected %.8f", rate, expected);
  return {std::abs(rate - expected) <= 1e-4, buf};
}

Outcome criterion9() {
  const auto t0 = Clock::now();
  double asym = 0.0;
  double at_half = 0.0;
  double jump = 0.0;
  for (int n : {3, 4, 6}) {
    const int points = 201;
    std::vector<double> gen(points);
    std::vector<double> glob(points);
    for (int i = 0; i < points; ++i) {
      const auto rho = thermo_state(n, i / 200.0);
      gen[static_cast<std::size_t>(i)] = genuine_correlations(rho).quantum;
      glob[static_cast<std::size_t>(i)] = global_discord(rho).value;
    }
    for (int i = 0; i < points; ++i) {
      const auto a = static_cast<std::size_t>(i);
      const auto b = static_cast<std::size_t>(points - 1 - i);
      asym = std::max({asym, std::abs(gen[a] - gen[b]), std::abs(glob[a] - glob[b])});
      if (i + 1 < points) {
        jump = std::max({jump, std::abs(gen[a + 1] - gen[a]), std::abs(glob[a + 1] - glob[a])});
      }
    }
    at_half = std::max({at_half, std::abs(gen[100]), std::abs(glob[100])});
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "max asymmetry = %.3g, max |value at 1/2| = %.3g, max step = %.3g, %.1f s", asym,
                at_half, jump, seconds_since(t0));
  return {asym <= 1e-9 && at_half <= 1e-9 && jump <= 0.05, buf};
}

Outcome criterion10() {
  std::string detail = "loss rates at alpha1=1/sqrt2:";
  bool increasing = true;
  double previous = -1.0;
  for (int n = 2; n <= 6; ++n) {
    const double r = loss_rate(n, kInvSqrt2);
    increasing = increasing && r > previous;
    previous = r;
    char buf[48];
    std::snprintf(buf, sizeof buf, " %.4f", r);
    detail += buf;
  }
  const double big = std::sqrt(2.0 + std::sqrt(3.0)) / 2.0;
  double peak = 0.0;
  for (int n : {2, 3}) {
    for (int i = 0; i <= 100; ++i) peak = std::max(peak, max_violation(ghz_ad_closed(n, big, i / 100.0)).value);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s; max N at large alpha1 (n=2,3) = %.4f", increasing ? "" : " (not increasing)",
                peak);
  detail += buf;
  return {increasing && peak <= 1.0, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"analytic global discord", criterion1},
      {"optimal-angle recovery", criterion2},
      {"oracle equivalence", criterion3},
      {"pure-GHZ baselines", criterion4},
      {"noise-channel consistency", criterion5},
      {"AD/PD nonlocality indistinguishability", criterion6},
      {"LHV bound", criterion7},
      {"CHSH threshold", criterion8},
      {"discord curve shape", criterion9},
      {"violation-loss shape", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
