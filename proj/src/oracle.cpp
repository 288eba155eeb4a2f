#include "symcorr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "symcorr/nonlocality.hpp"
#include "symcorr/optimize.hpp"

namespace symcorr {
namespace {

constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

void check_size(const DensityMatrix& rho, const OracleConfig& config) {
  config.validate();
  if (rho.n_qubits() > config.max_qubits) {
    throw GuardError("oracle refuses " + std::to_string(rho.n_qubits()) + " qubits (cap " +
                     std::to_string(config.max_qubits) + ")");
  }
}

// Product of complex two-level rotations over all index pairs p < q.
CMatrix givens_basis(std::span<const double> params, Eigen::Index d) {
  CMatrix u = CMatrix::Identity(d, d);
  std::size_t at = 0;
  for (Eigen::Index p = 0; p < d; ++p) {
    for (Eigen::Index q = p + 1; q < d; ++q) {
      const double alpha = params[at++];
      const double beta = params[at++];
      const double c = std::cos(alpha);
      const cplx s = std::polar(std::sin(alpha), beta);
      const CVector col_p = u.col(p);
      const CVector col_q = u.col(q);
      u.col(p) = c * col_p + s * col_q;
      u.col(q) = -std::conj(s) * col_p + c * col_q;
    }
  }
  return u;
}

// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
// of R's diagonal divided out.
CMatrix haar_unitary(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix z(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) z(i, j) = cplx(g(rng), g(rng));
  }
  const Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0.0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t size, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> x(size);
  for (double& v : x) v = dist(rng);
  return x;
}

// Screen `grid_density` random points and return the best as a start.
std::vector<double> screened_start(const optimize::ObjectiveND& f, std::mt19937_64& rng, std::size_t size,
                                   double hi, int candidates) {
  std::vector<double> best;
  double best_value = std::numeric_limits<double>::infinity();
  for (int i = 0; i < candidates; ++i) {
    auto x = random_vector(rng, size, 0.0, hi);
    const double v = f(x);
    if (v < best_value) {
      best_value = v;
      best = std::move(x);
    }
  }
  return best;
}

CMatrix dense_rotation(const RotationAngles& angles) {
  CMatrix r = CMatrix::Ones(1, 1);
  for (int i = 0; i < angles.size(); ++i) {
    const Mat2 m = rotation_matrix(angles.theta[static_cast<std::size_t>(i)], angles.phi[static_cast<std::size_t>(i)]);
    CMatrix one(2, 2);
    one << m[0], m[1], m[2], m[3];
    CMatrix next(r.rows() * 2, r.cols() * 2);
    for (Eigen::Index a = 0; a < r.rows(); ++a) {
      for (Eigen::Index b = 0; b < r.cols(); ++b) next.block(2 * a, 2 * b, 2, 2) = r(a, b) * one;
    }
    r.swap(next);
  }
  return r;
}

// S(rho || Pi(rho)) with Pi the dephasing in the columns of `r`:
// Tr rho log rho - Tr rho log Pi(rho).
double dephasing_relative_entropy(const CMatrix& rho, const CMatrix& r) {
  const CMatrix rotated = r.adjoint() * rho * r;
  double cross = 0.0;
  for (Eigen::Index k = 0; k < rotated.rows(); ++k) {
    const double p = std::max(rotated(k, k).real(), 0.0);
    if (p > 0.0) cross += p * std::log2(p);
  }
  return -hermitian_entropy(rho) - cross;
}

}  // namespace

void OracleConfig::validate() const {
  if (restarts < 1) throw ArgumentError("OracleConfig: restarts must be positive");
  if (grid_density < 1) throw ArgumentError("OracleConfig: grid_density must be positive");
  if (max_qubits < 2 || max_qubits > 5) throw ArgumentError("OracleConfig: max_qubits must lie in [2, 5]");
}

double oracle_bipartite_discord(const DensityMatrix& rho, const Cut& cut, const OracleConfig& config) {
  check_size(rho, config);
  const MeasuredView view(rho, cut);
  const auto d = static_cast<Eigen::Index>(view.measured_dim());
  const std::size_t params = static_cast<std::size_t>(d * (d - 1));
  const double offset =
      von_neumann_entropy(partial_trace(rho, cut.measured())) - von_neumann_entropy(rho);

  // Local search in U0 * G(x) around a Haar-random frame U0, re-centred on
  // the result until it stops improving, so the search never sits at a
  // coordinate singularity of the Givens parametrization.
  auto search_from = [&](CMatrix frame) {
    double value = view.conditional_entropy(frame);
    for (int pass = 0; pass < 8; ++pass) {
      const optimize::ObjectiveND f = [&](const std::vector<double>& x) {
        return view.conditional_entropy(frame * givens_basis(x, d));
      };
      optimize::BfgsOptions options;
      options.gradient_step = 1e-7;
      options.gradient_tolerance = 1e-10;
      const auto m = optimize::bfgs(f, std::vector<double>(params, 0.0), options);
      if (m.value >= value - 1e-13) break;
      frame = (frame * givens_basis(m.x, d)).eval();
      value = m.value;
    }
    return value;
  };

  double best = search_from(CMatrix::Identity(d, d));
  for (int r = 1; r < config.restarts; ++r) {
    std::mt19937_64 rng(config.seed + kSeedStride * static_cast<std::uint64_t>(r));
    CMatrix frame;
    double frame_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < config.grid_density; ++i) {
      CMatrix u = haar_unitary(d, rng);
      const double v = view.conditional_entropy(u);
      if (v < frame_value) {
        frame_value = v;
        frame = std::move(u);
      }
    }
    best = std::min(best, search_from(std::move(frame)));
  }
  return offset + best;
}

double oracle_global_objective(const DensityMatrix& rho, const RotationAngles& angles) {
  const int n = rho.n_qubits();
  if (angles.size() != n || angles.phi.size() != angles.theta.size()) {
    throw ArgumentError("oracle_global_objective: need one angle pair per qubit");
  }
  double value = dephasing_relative_entropy(rho.matrix(), dense_rotation(angles));
  for (int j = 0; j < n; ++j) {
    const int keep[] = {j};
    const DensityMatrix reduced = partial_trace(rho, keep);
    const RotationAngles single{{angles.theta[static_cast<std::size_t>(j)]}, {angles.phi[static_cast<std::size_t>(j)]}};
    value -= dephasing_relative_entropy(reduced.matrix(), dense_rotation(single));
  }
  return value;
}

OracleGlobalResult oracle_global_discord(const DensityMatrix& rho, const OracleConfig& config) {
  check_size(rho, config);
  const int n = rho.n_qubits();
  const std::size_t params = 2 * static_cast<std::size_t>(n);
  auto unpack = [n](const std::vector<double>& x) {
    RotationAngles a;
    a.theta.assign(x.begin(), x.begin() + n);
    a.phi.assign(x.begin() + n, x.end());
    return a;
  };
  const optimize::ObjectiveND f = [&](const std::vector<double>& x) { return oracle_global_objective(rho, unpack(x)); };

  OracleGlobalResult best{std::numeric_limits<double>::infinity(), {}};
  for (int r = 0; r < config.restarts; ++r) {
    std::mt19937_64 rng(config.seed + kSeedStride * static_cast<std::uint64_t>(r + 1));
    std::vector<double> start =
        r == 0 ? std::vector<double>(params, 0.0) : screened_start(f, rng, params, 2.0 * kPi, config.grid_density);
    optimize::NelderMeadOptions nm;
    nm.initial_step = 0.2;
    nm.value_tolerance = 1e-15;
    nm.size_tolerance = 1e-9;
    auto m = optimize::nelder_mead(f, std::move(start), nm);
    optimize::BfgsOptions bf;
    bf.gradient_step = 1e-7;
    bf.gradient_tolerance = 1e-11;
    auto polished = optimize::bfgs(f, m.x, bf);
    if (polished.value < m.value) m = std::move(polished);
    if (m.value < best.value) best = {m.value, unpack(m.x)};
  }
  return best;
}

DensityMatrix oracle_channel_dilation(const DensityMatrix& rho, const ChannelSpec& spec) {
  validate(spec);
  const int n = rho.n_qubits();
  check_qubit_count(n + 1);
  const double keep = std::sqrt(1.0 - spec.rate);
  const double jump = std::sqrt(spec.rate);

  // Columns are the images of |s e> in the order 00, 01, 10, 11.
  CMatrix u = CMatrix::Zero(4, 4);
  if (spec.kind == ChannelKind::amplitude_damping) {
    u(0, 0) = 1.0;
    u(1, 1) = keep;
    u(2, 1) = -jump;
    u(1, 2) = jump;
    u(2, 2) = keep;
    u(3, 3) = 1.0;
  } else {
    u(0, 0) = 1.0;
    u(1, 1) = 1.0;
    u(2, 2) = keep;
    u(3, 2) = jump;
    u(2, 3) = jump;
    u(3, 3) = -keep;
  }

  CMatrix env = CMatrix::Zero(2, 2);
  env(0, 0) = 1.0;
  const DensityMatrix fresh(1, env);
  std::vector<int> system(static_cast<std::size_t>(n));
  std::iota(system.begin(), system.end(), 0);

  DensityMatrix current = rho;
  for (int q = 0; q < n; ++q) {
    const DensityMatrix coupled = apply_unitary(tensor(current, fresh), LocalUnitary{{q, n}, u});
    current = partial_trace(coupled, system);
  }
  return current;
}

double oracle_lhv_bound(int n) {
  if (n < 2 || n > 8) throw GuardError("oracle_lhv_bound: n must lie in [2, 8]");
  const SvetlichnyExpansion expansion = svetlichny_expansion(n);
  const std::size_t terms = std::size_t{1} << n;
  const std::size_t strategies = std::size_t{1} << (2 * n);
  double best = 0.0;
  for (std::size_t a = 0; a < strategies; ++a) {
    // Bit 2i of `a` is party i's outcome for setting 1, bit 2i+1 for setting 2.
    double sum = 0.0;
    for (std::size_t s = 0; s < terms; ++s) {
      int sign = 1;
      for (int i = 0; i < n; ++i) {
        const std::size_t q = (s >> (n - 1 - i)) & 1U;
        if ((a >> (2 * i + q)) & 1U) sign = -sign;
      }
      sum += sign * expansion.weight(s);
    }
    best = std::max(best, std::abs(sum));
  }
  return best;
}

}  // namespace symcorr
