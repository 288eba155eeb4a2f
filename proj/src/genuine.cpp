#include "symcorr/genuine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symcorr/optimize.hpp"
#include "symcorr/states.hpp"

namespace symcorr {
namespace {

double binary_entropy(double p) {
  auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(p) + term(1.0 - p);
}

// The search over symmetric_basis(k, theta) for one oriented cut. The
// Fourier columns do not depend on theta, so their contribution is summed
// once and only the two theta columns are re-evaluated.
DiscordResult symmetric_search(const DensityMatrix& rho, const Cut& cut, const GenuineConfig& config) {
  if (config.grid_points < 2) throw ArgumentError("GenuineConfig: grid_points must be at least 2");
  const MeasuredView view(rho, cut);
  const int k = static_cast<int>(cut.measured().size());
  const auto d = static_cast<Eigen::Index>(view.measured_dim());

  double fixed = 0.0;
  if (k > 1) {
    const CMatrix columns = symmetric_basis_fixed_columns(k);
    for (Eigen::Index c = 0; c < columns.cols(); ++c) fixed += view.weighted_entropy(columns.col(c));
  }

  auto pair_entropy = [&](double theta) {
    CVector a = CVector::Zero(d);
    CVector b = CVector::Zero(d);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    a(0) = c;
    a(d - 1) = s;
    b(0) = -s;
    b(d - 1) = c;
    return view.weighted_entropy(a) + view.weighted_entropy(b);
  };

  const auto best = optimize::grid_golden(pair_entropy, 0.0, 0.5 * kPi, config.grid_points, config.theta_tolerance, true);
  const double conditional = fixed + best.value;
  const double offset = von_neumann_entropy(partial_trace(rho, cut.measured())) - von_neumann_entropy(rho);
  return {std::max(offset + conditional, 0.0), best.x, conditional};
}

void require_symmetric(const DensityMatrix& rho, const char* what) {
  if (!is_permutation_invariant(rho)) {
    throw SymmetryError(std::string(what) + ": state is not permutation invariant; use general mode");
  }
}

CutReport report_for(const DensityMatrix& rho, const Cut& cut, DiscordMode mode, const GenuineConfig& config) {
  const double mi = mutual_information(rho, cut);
  DiscordResult r;
  if (mode == DiscordMode::symmetric) {
    r = symmetric_search(rho, cut, config);
  } else {
    r.discord = std::max(oracle_bipartite_discord(rho, cut, config.oracle), 0.0);
    r.optimal_theta = std::numeric_limits<double>::quiet_NaN();
  }
  const double discord = std::min(r.discord, std::max(mi, 0.0));
  return CutReport{cut, mi, discord, mi - discord, r.optimal_theta};
}

std::vector<Cut> cuts_to_evaluate(int n, DiscordMode mode) {
  std::vector<Cut> cuts;
  if (mode == DiscordMode::symmetric) {
    for (int k = 1; k <= n / 2; ++k) {
      const Cut c = Cut::trailing(n, k);
      cuts.push_back(c);
      cuts.push_back(c.swapped());
    }
    return cuts;
  }
  const std::size_t full = (std::size_t{1} << n) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::vector<int> measured;
    for (int q = 0; q < n; ++q) {
      if ((mask >> (n - 1 - q)) & 1U) measured.push_back(q);
    }
    cuts.emplace_back(n, std::move(measured));
  }
  return cuts;
}

// Columns of the eigenvectors whose eigenvalue exceeds the clamp, largest first.
CMatrix support(const CMatrix& h, RVector& values) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  const RVector& ev = es.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = ev.size() - 1; i >= 0; --i) {
    if (ev(i) > kEigenClamp) keep.push_back(i);
  }
  CMatrix out(h.rows(), static_cast<Eigen::Index>(keep.size()));
  values.resize(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) {
    out.col(static_cast<Eigen::Index>(j)) = es.eigenvectors().col(keep[j]);
    values(static_cast<Eigen::Index>(j)) = ev(keep[j]);
  }
  return out;
}

}  // namespace

double symmetric_conditional_entropy(const DensityMatrix& rho, const Cut& cut, double theta) {
  const MeasuredView view(rho, cut);
  return view.conditional_entropy(symmetric_basis(static_cast<int>(cut.measured().size()), theta).vectors());
}

DiscordResult bipartite_discord(const DensityMatrix& rho, const Cut& cut, DiscordMode mode, const GenuineConfig& config) {
  if (cut.n_qubits() != rho.n_qubits()) throw ArgumentError("bipartite_discord: cut does not match the state");
  if (mode == DiscordMode::symmetric) {
    require_symmetric(rho, "bipartite_discord");
    return symmetric_search(rho, cut, config);
  }
  const double d = oracle_bipartite_discord(rho, cut, config.oracle);
  const double offset = von_neumann_entropy(partial_trace(rho, cut.measured())) - von_neumann_entropy(rho);
  return {std::max(d, 0.0), std::numeric_limits<double>::quiet_NaN(), d - offset};
}

GenuineReport genuine_correlations(const DensityMatrix& rho, DiscordMode mode, const GenuineConfig& config) {
  const int n = rho.n_qubits();
  if (n < 2) throw ArgumentError("genuine_correlations: need at least two qubits");
  if (mode == DiscordMode::symmetric) require_symmetric(rho, "genuine_correlations");

  std::vector<CutReport> reports;
  for (const Cut& c : cuts_to_evaluate(n, mode)) reports.push_back(report_for(rho, c, mode, config));

  // Ties keep the first cut in enumeration order (smallest measured block).
  const auto by_mi = std::min_element(reports.begin(), reports.end(),
                                      [](const CutReport& a, const CutReport& b) { return a.mutual_info < b.mutual_info - 1e-12; });
  const auto by_d = std::min_element(reports.begin(), reports.end(),
                                     [](const CutReport& a, const CutReport& b) { return a.discord < b.discord - 1e-12; });

  // The MI-minimizing bipartition may have been evaluated from either side;
  // the discord at that bipartition is the smaller of the two.
  double at_optimal = by_mi->discord;
  for (const auto& r : reports) {
    if (r.cut == by_mi->cut || r.cut == by_mi->cut.swapped()) at_optimal = std::min(at_optimal, r.discord);
  }

  const double total = by_mi->mutual_info;
  const double quantum = by_d->discord;
  return GenuineReport{total,          quantum,      total - quantum, by_mi->cut, by_d->cut, by_d->optimal_theta,
                       at_optimal, std::move(reports)};
}

double concurrence(const DensityMatrix& rho) {
  if (rho.n_qubits() != 2) throw ArgumentError("concurrence: need a two-qubit state");
  CMatrix yy = CMatrix::Zero(4, 4);
  yy(0, 3) = yy(3, 0) = -1.0;
  yy(1, 2) = yy(2, 1) = 1.0;
  const CMatrix& r = rho.matrix();
  const CMatrix flipped = yy * r.conjugate() * yy;

  // Eigenvalues of sqrt(rho) flipped sqrt(rho) are the squares of the
  // Wootters lambdas and, unlike rho * flipped, form a Hermitian problem.
  Eigen::SelfAdjointEigenSolver<CMatrix> es(r);
  const RVector root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const CMatrix sqrt_rho = es.eigenvectors() * root.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
  CMatrix m = sqrt_rho * flipped * sqrt_rho;
  m = 0.5 * (m + m.adjoint()).eval();
  RVector lambdas = Eigen::SelfAdjointEigenSolver<CMatrix>(m, Eigen::EigenvaluesOnly).eigenvalues();
  lambdas = lambdas.cwiseMax(0.0).cwiseSqrt();
  const double c = lambdas(3) - lambdas(2) - lambdas(1) - lambdas(0);
  return std::max(c, 0.0);
}

double entanglement_of_formation(const DensityMatrix& rho) {
  const double c = std::min(concurrence(rho), 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

double koashi_winter_discord(const DensityMatrix& rho, const Cut& cut) {
  if (cut.n_qubits() != rho.n_qubits()) throw ArgumentError("koashi_winter_discord: cut does not match the state");
  RVector lambda;
  const CMatrix vectors = support(rho.matrix(), lambda);
  if (vectors.cols() > 2) throw ArgumentError("koashi_winter_discord: state rank exceeds 2");

  // Reorder so the unmeasured block U is the high part of each index.
  std::vector<int> order = cut.remainder();
  order.insert(order.end(), cut.measured().begin(), cut.measured().end());
  const auto du = static_cast<Eigen::Index>(std::size_t{1} << cut.remainder().size());
  const auto dm = static_cast<Eigen::Index>(std::size_t{1} << cut.measured().size());

  // Purification sum_m sqrt(lambda_m) |v_m>|m>; component m as a du x dm matrix.
  std::vector<CMatrix> parts;
  for (Eigen::Index m = 0; m < vectors.cols(); ++m) {
    const CVector v = vectors.col(m);
    CVector permuted(v.size());
    const int n = rho.n_qubits();
    for (Eigen::Index x = 0; x < v.size(); ++x) {
      std::size_t y = 0;
      for (int i = 0; i < n; ++i) {
        const std::size_t bit = (static_cast<std::size_t>(x) >> (n - 1 - order[static_cast<std::size_t>(i)])) & 1U;
        y |= bit << (n - 1 - i);
      }
      permuted(static_cast<Eigen::Index>(y)) = v(x);
    }
    // Row-major split: index y = u * dm + mm.
    CMatrix block(du, dm);
    for (Eigen::Index u = 0; u < du; ++u) {
      for (Eigen::Index mm = 0; mm < dm; ++mm) block(u, mm) = permuted(u * dm + mm);
    }
    parts.push_back(std::sqrt(lambda(m)) * block);
  }

  // rho_{U,a}[(u, m), (u', m')] = sum_M parts[m](u, M) conj(parts[m'](u', M)).
  const auto rank = static_cast<Eigen::Index>(parts.size());
  CMatrix rho_ua = CMatrix::Zero(du * 2, du * 2);
  for (Eigen::Index m = 0; m < rank; ++m) {
    for (Eigen::Index mp = 0; mp < rank; ++mp) {
      const CMatrix blk = parts[static_cast<std::size_t>(m)] * parts[static_cast<std::size_t>(mp)].adjoint();
      for (Eigen::Index u = 0; u < du; ++u) {
        for (Eigen::Index up = 0; up < du; ++up) rho_ua(u * 2 + m, up * 2 + mp) = blk(u, up);
      }
    }
  }

  // Restrict U to the support of rho_U; pad a rank-1 support to a qubit.
  CMatrix rho_u = CMatrix::Zero(du, du);
  for (const auto& p : parts) rho_u += p * p.adjoint();
  RVector u_values;
  CMatrix u_support = support(rho_u, u_values);
  if (u_support.cols() > 2) throw ArgumentError("koashi_winter_discord: unmeasured block has support above 2");
  if (u_support.cols() < 2) {
    CMatrix full = Eigen::SelfAdjointEigenSolver<CMatrix>(rho_u).eigenvectors();
    CMatrix padded(du, 2);
    padded.col(0) = full.col(du - 1);
    padded.col(1) = full.col(du - 2);
    u_support = padded;
  }
  CMatrix iso = CMatrix::Zero(du * 2, 4);
  for (Eigen::Index u = 0; u < du; ++u) {
    for (Eigen::Index s = 0; s < 2; ++s) {
      for (Eigen::Index a = 0; a < 2; ++a) iso(u * 2 + a, s * 2 + a) = u_support(u, s);
    }
  }
  CMatrix two = iso.adjoint() * rho_ua * iso;
  two = 0.5 * (two + two.adjoint()).eval();
  two /= two.trace().real();
  const double e = entanglement_of_formation(DensityMatrix(2, std::move(two)));

  const double s_measured = von_neumann_entropy(partial_trace(rho, cut.measured()));
  return std::max(s_measured - von_neumann_entropy(rho) + e, 0.0);
}

}  // namespace symcorr
