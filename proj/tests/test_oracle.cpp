#include <gtest/gtest.h>

#include <random>

#include "symcorr/channels.hpp"
#include "symcorr/oracle.hpp"
#include "symcorr/states.hpp"
#include "test_util.hpp"

using namespace symcorr;

TEST(OracleConfig, Validation) {
  OracleConfig c;
  EXPECT_NO_THROW(c.validate());
  c.restarts = 0;
  EXPECT_THROW(c.validate(), ArgumentError);
  c = {};
  c.grid_density = 0;
  EXPECT_THROW(c.validate(), ArgumentError);
  c = {};
  c.max_qubits = 6;
  EXPECT_THROW(c.validate(), ArgumentError);
  c.max_qubits = 1;
  EXPECT_THROW(c.validate(), ArgumentError);
}

TEST(OracleDiscord, ProductAndClassicalStatesVanish) {
  EXPECT_NEAR(oracle_bipartite_discord(DensityMatrix::maximally_mixed(3), Cut(3, {2})), 0.0, 1e-9);
  // (|00><00| + |11><11|)/2 is classically correlated.
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = m(3, 3) = 0.5;
  EXPECT_NEAR(oracle_bipartite_discord(DensityMatrix(2, m), Cut(2, {1})), 0.0, 1e-7);
}

TEST(OracleDiscord, BellStateAndWerner) {
  const auto bell = DensityMatrix::from_pure(ghz_state(2, kInvSqrt2));
  EXPECT_NEAR(oracle_bipartite_discord(bell, Cut(2, {1})), 1.0, 1e-7);
  // Werner state: D = (1-p)/4 log(1-p) - (1+p)/2 log(1+p) + (1+3p)/4 log(1+3p).
  const double p = 0.6;
  const CMatrix w = p * bell.matrix() + (1.0 - p) * CMatrix::Identity(4, 4) / 4.0;
  const double expected = 0.25 * (1 - p) * std::log2(1 - p) - 0.5 * (1 + p) * std::log2(1 + p) +
                          0.25 * (1 + 3 * p) * std::log2(1 + 3 * p);
  EXPECT_NEAR(oracle_bipartite_discord(DensityMatrix(2, w), Cut(2, {0})), expected, 1e-6);
}

TEST(OracleDiscord, DeterministicForSeed) {
  std::mt19937_64 rng(109);
  const auto rho = testutil::random_state(3, rng);
  OracleConfig c;
  c.restarts = 3;
  EXPECT_EQ(oracle_bipartite_discord(rho, Cut(3, {1, 2}), c), oracle_bipartite_discord(rho, Cut(3, {1, 2}), c));
  EXPECT_EQ(oracle_global_discord(rho, c).value, oracle_global_discord(rho, c).value);
}

TEST(OracleDiscord, RespectsQubitCap) {
  OracleConfig c;
  c.max_qubits = 3;
  const auto rho = thermo_state(4, 0.7);
  EXPECT_THROW(oracle_bipartite_discord(rho, Cut(4, {3}), c), GuardError);
  EXPECT_THROW(oracle_global_discord(rho, c), GuardError);
}

TEST(OracleGlobal, BellAndProduct) {
  const auto bell = DensityMatrix::from_pure(ghz_state(2, kInvSqrt2));
  EXPECT_NEAR(oracle_global_discord(bell).value, 1.0, 1e-6);
  EXPECT_NEAR(oracle_global_discord(DensityMatrix::maximally_mixed(3)).value, 0.0, 1e-9);
}

TEST(OracleDilation, MatchesKrausForm) {
  std::mt19937_64 rng(113);
  for (int n = 1; n <= 4; ++n) {
    const auto rho = testutil::random_state(n, rng);
    for (ChannelKind kind : {ChannelKind::amplitude_damping, ChannelKind::phase_damping}) {
      for (double rate : {0.0, 0.3, 1.0}) {
        const ChannelSpec spec{kind, rate};
        EXPECT_LT(testutil::max_abs_diff(oracle_channel_dilation(rho, spec).matrix(),
                                        apply_local_channel(rho, spec).matrix()),
                  1e-12);
      }
    }
    EXPECT_LT(testutil::max_abs_diff(oracle_channel_dilation(rho, {ChannelKind::amplitude_damping, 0.0}).matrix(),
                                    rho.matrix()),
              1e-14);
  }
}
