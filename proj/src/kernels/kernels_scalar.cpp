#include "symcorr/kernels.hpp"

namespace symcorr::kernels::scalar {

void apply_1q_left(std::span<cplx> m, std::size_t dim, std::size_t bit, const Mat2& u) {
  for (std::size_t c = 0; c < dim; ++c) {
    cplx* col = m.data() + c * dim;
    for (std::size_t base = 0; base < dim; base += 2 * bit) {
      for (std::size_t off = 0; off < bit; ++off) {
        const std::size_t i0 = base + off;
        const std::size_t i1 = i0 + bit;
        const cplx a = col[i0];
        const cplx b = col[i1];
        col[i0] = u[0] * a + u[1] * b;
        col[i1] = u[2] * a + u[3] * b;
      }
    }
  }
}

void apply_1q_right(std::span<cplx> m, std::size_t dim, std::size_t bit, const Mat2& u) {
  for (std::size_t base = 0; base < dim; base += 2 * bit) {
    for (std::size_t off = 0; off < bit; ++off) {
      cplx* c0 = m.data() + (base + off) * dim;
      cplx* c1 = c0 + bit * dim;
      for (std::size_t r = 0; r < dim; ++r) {
        const cplx a = c0[r];
        const cplx b = c1[r];
        c0[r] = a * u[0] + b * u[2];
        c1[r] = a * u[1] + b * u[3];
      }
    }
  }
}

void caxpy(std::span<cplx> y, cplx a, std::span<const cplx> x) {
  const std::size_t len = y.size();
  for (std::size_t i = 0; i < len; ++i) y[i] += a * x[i];
}

}  // namespace symcorr::kernels::scalar
