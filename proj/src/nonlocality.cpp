#include "symcorr/nonlocality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>

namespace symcorr {
namespace {

constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

void check_n(int n) {
  if (n < 2) throw ArgumentError("Svetlichny inequality needs at least two parties");
  check_qubit_count(n);
}

double wrap_angle(double t) {
  const double two_pi = 2.0 * kPi;
  double w = std::fmod(t, two_pi);
  if (w < 0.0) w += two_pi;
  return w >= two_pi ? 0.0 : w;
}

// rho_{xbar, x} for every x; the only entries an equatorial correlator reads.
std::vector<cplx> anti_diagonal(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  std::vector<cplx> out(d);
  for (std::size_t x = 0; x < d; ++x) out[x] = rho(d - 1 - x, x);
  return out;
}

double correlation_from(std::span<const cplx> anti, std::span<const double> angles) {
  const int n = static_cast<int>(angles.size());
  cplx sum = 0.0;
  for (std::size_t x = 0; x < anti.size(); ++x) {
    if (anti[x] == cplx(0.0)) continue;
    double phase = 0.0;
    for (int i = 0; i < n; ++i) {
      const bool one = (x >> (n - 1 - i)) & 1U;
      phase += one ? angles[static_cast<std::size_t>(i)] : -angles[static_cast<std::size_t>(i)];
    }
    sum += anti[x] * std::polar(1.0, phase);
  }
  return sum.real();
}

double value_from(std::span<const cplx> anti, const SvetlichnyExpansion& e, const SettingsTable& s) {
  double total = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k) total += e.weight(k) * correlation_from(anti, s.choose(k));
  return total;
}

// sum_k w_k exp(i sum_i t_i^{q_i}) for settings (0, pi/2) on every party.
cplx comb_at_quadrature(const SvetlichnyExpansion& e) {
  cplx z = 0.0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    z += e.weight(k) * std::polar(1.0, 0.5 * kPi * std::popcount(k));
  }
  return z;
}

}  // namespace

SvetlichnyExpansion::SvetlichnyExpansion(int n, std::vector<std::int64_t> numerators, int log2_denominator)
    : n_(n), numerators_(std::move(numerators)), log2_denominator_(log2_denominator) {
  if (numerators_.size() != (std::size_t{1} << n)) throw ArgumentError("SvetlichnyExpansion: need 2^n coefficients");
}

double SvetlichnyExpansion::weight(std::size_t settings) const {
  return std::ldexp(static_cast<double>(numerators_.at(settings)), -log2_denominator_);
}

SvetlichnyExpansion svetlichny_expansion(int n) {
  check_n(n);
  // Numerators over a shared power-of-two denominator; party j appends one
  // low bit to the setting index.
  std::vector<std::int64_t> m{1, 0};
  std::vector<std::int64_t> big_m{0, 1};
  int log2_den = 0;
  for (int j = 2; j <= n; ++j) {
    std::vector<std::int64_t> next_m(m.size() * 2), next_big(m.size() * 2);
    for (std::size_t s = 0; s < m.size(); ++s) {
      next_m[2 * s] = m[s] + big_m[s];      // o_j
      next_m[2 * s + 1] = m[s] - big_m[s];  // O_j
      next_big[2 * s] = big_m[s] - m[s];
      next_big[2 * s + 1] = big_m[s] + m[s];
    }
    m.swap(next_m);
    big_m.swap(next_big);
    ++log2_den;
  }
  std::vector<std::int64_t> out = m;
  if (n % 2 == 1) {
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = m[s] + big_m[s];
    ++log2_den;
  }
  const auto all_even = [&] {
    return std::all_of(out.begin(), out.end(), [](std::int64_t v) { return v % 2 == 0; });
  };
  while (log2_den > 0 && all_even()) {
    for (auto& v : out) v /= 2;
    --log2_den;
  }
  return SvetlichnyExpansion(n, std::move(out), log2_den);
}

std::vector<double> SettingsTable::choose(std::size_t settings) const {
  const int count = n();
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const std::size_t q = (settings >> (count - 1 - i)) & 1U;
    out[static_cast<std::size_t>(i)] = angles[static_cast<std::size_t>(i)][q];
  }
  return out;
}

double correlation(const DensityMatrix& rho, std::span<const double> angles) {
  if (static_cast<int>(angles.size()) != rho.n_qubits()) throw ArgumentError("correlation: need one angle per qubit");
  const auto anti = anti_diagonal(rho);
  const int n = rho.n_qubits();
  cplx sum = 0.0;
  for (std::size_t x = 0; x < anti.size(); ++x) {
    double phase = 0.0;
    for (int i = 0; i < n; ++i) {
      const bool one = (x >> (n - 1 - i)) & 1U;
      phase += one ? angles[static_cast<std::size_t>(i)] : -angles[static_cast<std::size_t>(i)];
    }
    sum += anti[x] * std::polar(1.0, phase);
  }
  if (std::abs(sum.imag()) > 1e-10) throw InvariantError("correlation: expectation value is not real");
  return sum.real();
}

double svetlichny_value(const DensityMatrix& rho, const SettingsTable& settings) {
  if (settings.n() != rho.n_qubits()) throw ArgumentError("svetlichny_value: settings table size mismatch");
  const SvetlichnyExpansion e = svetlichny_expansion(rho.n_qubits());
  return value_from(anti_diagonal(rho), e, settings);
}

double ghz_quantum_max(int n) {
  check_n(n);
  return std::sqrt(std::ldexp(1.0, n % 2 == 0 ? n - 1 : n - 2));
}

std::optional<GhzCoherence> ghz_coherence(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  for (std::size_t x = 1; x + 1 < d; ++x) {
    if (std::abs(rho(d - 1 - x, x)) > 1e-12) return std::nullopt;
  }
  const cplx c = rho(0, d - 1);
  return GhzCoherence{2.0 * std::abs(c), std::arg(c)};
}

ViolationResult max_violation(const DensityMatrix& rho, const ViolationOptions& options) {
  const int n = rho.n_qubits();
  check_n(n);
  const SvetlichnyExpansion e = svetlichny_expansion(n);

  if (options.allow_closed_form) {
    if (const auto coherence = ghz_coherence(rho)) {
      const cplx z = comb_at_quadrature(e);
      ViolationResult out;
      out.closed_form = true;
      out.value = coherence->amplitude * std::abs(z);
      const double shift = -(std::arg(z) + coherence->phase);
      out.settings.angles.assign(static_cast<std::size_t>(n), {0.0, 0.5 * kPi});
      out.settings.angles[0] = {wrap_angle(shift), wrap_angle(0.5 * kPi + shift)};
      return out;
    }
  }

  const auto anti = anti_diagonal(rho);
  auto objective = [&](const SettingsTable& s) { return value_from(anti, e, s); };

  ViolationResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (int start = 0; start < options.starts; ++start) {
    std::mt19937_64 rng(options.seed + kSeedStride * static_cast<std::uint64_t>(start + 1));
    std::uniform_real_distribution<double> dist(0.0, 2.0 * kPi);
    SettingsTable s;
    s.angles.resize(static_cast<std::size_t>(n));
    for (auto& pair : s.angles) pair = {dist(rng), dist(rng)};

    double current = objective(s);
    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
      const double before = current;
      for (auto& pair : s.angles) {
        for (double& t : pair) {
          t = 0.0;
          const double f0 = objective(s);
          t = 0.5 * kPi;
          const double f1 = objective(s);
          t = kPi;
          const double f2 = objective(s);
          const double c = 0.5 * (f0 + f2);
          t = wrap_angle(std::atan2(f1 - c, f0 - c));
          current = objective(s);
        }
      }
      if (current - before < 1e-13) break;
    }
    if (current > best.value) {
      best.value = current;
      best.settings = s;
    }
  }
  return best;
}

SvetlichnyBounds bounds(int n) {
  check_n(n);
  SvetlichnyBounds b;
  b.quantum_max = ghz_quantum_max(n);
  const double threshold = std::ldexp(1.0, (n - 2) / 2);
  if (threshold > b.lhv) b.separability_thresholds.push_back(threshold);
  return b;
}

}  // namespace symcorr
