#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "symcorr/channels.hpp"
#include "symcorr/oracle.hpp"
#include "symcorr/states.hpp"
#include "test_util.hpp"

using namespace symcorr;
using symcorr::testutil::max_abs_diff;

namespace {

ChannelSpec ad(double r) { return {ChannelKind::amplitude_damping, r}; }
ChannelSpec pd(double r) { return {ChannelKind::phase_damping, r}; }

CMatrix to_matrix(const Mat2& m) {
  CMatrix out(2, 2);
  out << m[0], m[1], m[2], m[3];
  return out;
}

}  // namespace

TEST(Kraus, Completeness) {
  for (double r : {0.0, 0.2, 0.5, 1.0}) {
    for (const auto& spec : {ad(r), pd(r)}) {
      CMatrix sum = CMatrix::Zero(2, 2);
      for (const auto& k : kraus_operators(spec)) sum += to_matrix(k).adjoint() * to_matrix(k);
      EXPECT_LT(max_abs_diff(sum, CMatrix::Identity(2, 2)), 1e-12);
    }
  }
}

TEST(Kraus, Entries) {
  const auto a = kraus_operators(ad(0.36));
  EXPECT_NEAR(a[0][3].real(), 0.8, 1e-15);
  EXPECT_NEAR(a[1][1].real(), 0.6, 1e-15);
  const auto p = kraus_operators(pd(0.36));
  EXPECT_NEAR(p[1][3].real(), 0.6, 1e-15);
  EXPECT_THROW(kraus_operators(ad(1.5)), ArgumentError);
  EXPECT_THROW(kraus_operators(pd(-0.1)), ArgumentError);
}

TEST(LocalChannel, FullAmplitudeDampingRelaxes) {
  std::mt19937_64 rng(43);
  for (int n = 1; n <= 4; ++n) {
    const auto out = apply_local_channel(testutil::random_state(n, rng), ad(1.0));
    EXPECT_LT(max_abs_diff(out.matrix(), DensityMatrix::from_pure(PureState::basis(n, 0)).matrix()), 1e-14);
  }
}

TEST(LocalChannel, PhaseDampingKeepsPopulations) {
  std::mt19937_64 rng(47);
  const auto rho = testutil::random_state(3, rng);
  for (double g : {0.1, 0.6, 1.0}) {
    const auto out = apply_local_channel(rho, pd(g));
    EXPECT_LT((out.matrix().diagonal() - rho.matrix().diagonal()).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(LocalChannel, MatchesClosedForms) {
  for (int n = 2; n <= 6; ++n) {
    const auto psi = DensityMatrix::from_pure(ghz_state(n, 0.55));
    for (int i = 0; i <= 10; ++i) {
      const double r = i / 10.0;
      EXPECT_LT(max_abs_diff(apply_local_channel(psi, ad(r)).matrix(), ghz_ad_closed(n, 0.55, r).matrix()), 1e-12);
      EXPECT_LT(max_abs_diff(apply_local_channel(psi, pd(r)).matrix(), ghz_pd_closed(n, 0.55, r).matrix()), 1e-12);
    }
  }
}

TEST(LocalChannel, MatchesEnvironmentDilation) {
  std::mt19937_64 rng(53);
  const auto rho = testutil::random_state(3, rng);
  for (double r : {0.15, 0.7}) {
    for (const auto& spec : {ad(r), pd(r)}) {
      EXPECT_LT(max_abs_diff(apply_local_channel(rho, spec).matrix(), oracle_channel_dilation(rho, spec).matrix()), 1e-12);
    }
  }
}

TEST(LocalChannel, PreservesTraceAndPositivity) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 5; ++t) {
    const auto rho = testutil::random_state(3, rng);
    for (const auto& spec : {ad(0.3), pd(0.8)}) {
      const auto out = apply_local_channel(rho, spec);
      EXPECT_NEAR(out.trace(), 1.0, 1e-12);
      EXPECT_NO_THROW(out.check_positive());
    }
  }
}

TEST(LocalChannel, OrderDoesNotMatter) {
  std::mt19937_64 rng(61);
  const auto rho = testutil::random_state(4, rng);
  const int reversed[] = {3, 2, 1, 0};
  const int shuffled[] = {2, 0, 3, 1};
  const auto base = apply_local_channel(rho, ad(0.42));
  EXPECT_LT(max_abs_diff(base.matrix(), apply_local_channel(rho, ad(0.42), reversed).matrix()), 1e-12);
  EXPECT_LT(max_abs_diff(base.matrix(), apply_local_channel(rho, ad(0.42), shuffled).matrix()), 1e-12);
}

TEST(LocalChannel, AmplitudeDampingComposes) {
  std::mt19937_64 rng(67);
  const auto rho = testutil::random_state(1, rng);
  const double l1 = 0.3;
  const double l2 = 0.45;
  const auto twice = apply_local_channel(apply_local_channel(rho, ad(l1)), ad(l2));
  const auto once = apply_local_channel(rho, ad(1.0 - (1.0 - l1) * (1.0 - l2)));
  EXPECT_LT(max_abs_diff(twice.matrix(), once.matrix()), 1e-14);
}

TEST(LocalChannel, RejectsBadQubitOrder) {
  const auto rho = DensityMatrix::maximally_mixed(2);
  const int bad[] = {0, 2};
  EXPECT_THROW(apply_local_channel(rho, ad(0.1), bad), ArgumentError);
}
