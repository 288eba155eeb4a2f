// Compiled with -mavx2 -mfma. Only reached through dispatch after a CPU check.

#include <immintrin.h>

#include "symcorr/kernels.hpp"

namespace symcorr::kernels::avx2 {
namespace {

// Two complex doubles per register: [re0, im0, re1, im1].
struct Scalar {
  cplx z;
  __m256d re;
  __m256d im;
  explicit Scalar(cplx value)
      : z(value), re(_mm256_set1_pd(value.real())), im(_mm256_set1_pd(value.imag())) {}
};

inline __m256d cmul(__m256d v, const Scalar& s) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(v, s.re, _mm256_mul_pd(swapped, s.im));
}

inline __m256d load(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// Rows i0 = base+off and i1 = i0+bit for a run of `bit` consecutive offsets.
inline void pair_rows(cplx* a, cplx* b, std::size_t len, const Scalar& u00, const Scalar& u01,
                      const Scalar& u10, const Scalar& u11) {
  std::size_t k = 0;
  for (; k + 2 <= len; k += 2) {
    const __m256d va = load(a + k);
    const __m256d vb = load(b + k);
    store(a + k, _mm256_add_pd(cmul(va, u00), cmul(vb, u01)));
    store(b + k, _mm256_add_pd(cmul(va, u10), cmul(vb, u11)));
  }
  for (; k < len; ++k) {
    const cplx x = a[k];
    const cplx y = b[k];
    a[k] = u00.z * x + u01.z * y;
    b[k] = u10.z * x + u11.z * y;
  }
}

}  // namespace

void apply_1q_left(std::span<cplx> m, std::size_t dim, std::size_t bit, const Mat2& u) {
  if (bit == 1) {
    // Partners are adjacent; nothing contiguous to vectorize over.
    scalar::apply_1q_left(m, dim, bit, u);
    return;
  }
  const Scalar u00(u[0]), u01(u[1]), u10(u[2]), u11(u[3]);
  for (std::size_t c = 0; c < dim; ++c) {
    cplx* col = m.data() + c * dim;
    for (std::size_t base = 0; base < dim; base += 2 * bit) {
      pair_rows(col + base, col + base + bit, bit, u00, u01, u10, u11);
    }
  }
}

void apply_1q_right(std::span<cplx> m, std::size_t dim, std::size_t bit, const Mat2& u) {
  // Column c0 <- u00*c0 + u10*c1, c1 <- u01*c0 + u11*c1; same shape as pair_rows
  // with the transposed coefficients.
  const Scalar u00(u[0]), u01(u[2]), u10(u[1]), u11(u[3]);
  for (std::size_t base = 0; base < dim; base += 2 * bit) {
    for (std::size_t off = 0; off < bit; ++off) {
      cplx* c0 = m.data() + (base + off) * dim;
      pair_rows(c0, c0 + bit * dim, dim, u00, u01, u10, u11);
    }
  }
}

void caxpy(std::span<cplx> y, cplx a, std::span<const cplx> x) {
  const Scalar s(a);
  const std::size_t len = y.size();
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    store(y.data() + i, _mm256_add_pd(load(y.data() + i), cmul(load(x.data() + i), s)));
  }
  for (; i < len; ++i) y[i] += a * x[i];
}

}  // namespace symcorr::kernels::avx2
