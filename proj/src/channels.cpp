#include "symcorr/channels.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "symcorr/kernels.hpp"

namespace symcorr {
namespace {

Mat2 adjoint(const Mat2& u) { return {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])}; }

}  // namespace

void validate(const ChannelSpec& spec) {
  if (!(spec.rate >= 0.0 && spec.rate <= 1.0)) throw ArgumentError("channel rate must lie in [0, 1]");
}

std::array<Mat2, 2> kraus_operators(const ChannelSpec& spec) {
  validate(spec);
  const double keep = std::sqrt(1.0 - spec.rate);
  const double jump = std::sqrt(spec.rate);
  const Mat2 k0{1.0, 0.0, 0.0, keep};
  const Mat2 k1 = spec.kind == ChannelKind::amplitude_damping ? Mat2{0.0, jump, 0.0, 0.0} : Mat2{0.0, 0.0, 0.0, jump};
  return {k0, k1};
}

DensityMatrix apply_local_channel(const DensityMatrix& rho, const ChannelSpec& spec) {
  std::vector<int> order(static_cast<std::size_t>(rho.n_qubits()));
  std::iota(order.begin(), order.end(), 0);
  return apply_local_channel(rho, spec, order);
}

DensityMatrix apply_local_channel(const DensityMatrix& rho, const ChannelSpec& spec, std::span<const int> order) {
  const auto kraus = kraus_operators(spec);
  const int n = rho.n_qubits();
  const std::size_t dim = rho.dim();
  CMatrix current = rho.matrix();
  CMatrix term(current.rows(), current.cols());
  CMatrix next(current.rows(), current.cols());

  for (int q : order) {
    if (q < 0 || q >= n) throw ArgumentError("apply_local_channel: qubit index out of range");
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    next.setZero();
    for (const Mat2& k : kraus) {
      term = current;
      std::span<cplx> buf(term.data(), dim * dim);
      kernels::apply_1q_left(buf, dim, bit, k);
      kernels::apply_1q_right(buf, dim, bit, adjoint(k));
      next += term;
    }
    current.swap(next);
  }
  current = 0.5 * (current + current.adjoint()).eval();
  return DensityMatrix(n, std::move(current));
}

}  // namespace symcorr
