#include <atomic>

#include "symcorr/kernels.hpp"

namespace symcorr::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(SYMCORR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect() { return cpu_has_avx2() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

Backend active_backend() { return current().load(std::memory_order_relaxed); }

std::string_view backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool avx2_available() { return cpu_has_avx2(); }

void force_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_available()) {
    throw ArgumentError("AVX2 kernels are not available on this build or CPU");
  }
  current().store(b, std::memory_order_relaxed);
}

void reset_backend() { current().store(detect(), std::memory_order_relaxed); }

void apply_1q_left(std::span<cplx> m, std::size_t dim, std::size_t bit, const Mat2& u) {
#if defined(SYMCORR_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::apply_1q_left(m, dim, bit, u);
#endif
  scalar::apply_1q_left(m, dim, bit, u);
}

void apply_1q_right(std::span<cplx> m, std::size_t dim, std::size_t bit, const Mat2& u) {
#if defined(SYMCORR_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::apply_1q_right(m, dim, bit, u);
#endif
  scalar::apply_1q_right(m, dim, bit, u);
}

void caxpy(std::span<cplx> y, cplx a, std::span<const cplx> x) {
  if (y.size() != x.size()) throw ArgumentError("caxpy: length mismatch");
#if defined(SYMCORR_HAVE_AVX2)
  if (active_backend() == Backend::avx2) return avx2::caxpy(y, a, x);
#endif
  scalar::caxpy(y, a, x);
}

}  // namespace symcorr::kernels
