#pragma once

// Data-parallel inner loops over dense complex matrices.
//
// Every kernel has a portable scalar reference implementation and, on x86-64
// builds, an AVX2+FMA variant. The variant is picked once at runtime from the
// CPU feature flags; force_backend() overrides the choice (tests use it to
// compare the two paths). Matrices are Eigen column-major buffers.

#include <cstddef>
#include <span>
#include <string_view>

#include "symcorr/types.hpp"

namespace symcorr::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
std::string_view backend_name(Backend b);

/// True if this binary contains AVX2 kernels and the CPU can run them.
bool avx2_available();

/// Select a backend explicitly. Throws ArgumentError if avx2 is requested
/// but unavailable.
void force_backend(Backend b);

/// Return to automatic selection.
void reset_backend();

// `bit` is the index stride of the target qubit, i.e. 1 << (n - 1 - q) under
// the qubit-0-is-most-significant convention. `dim` is the matrix dimension.

/// m <- (u on target qubit) * m
void apply_1q_left(std::span<cplx> m, std::size_t dim, std::size_t bit, const Mat2& u);

/// m <- m * (u on target qubit)
void apply_1q_right(std::span<cplx> m, std::size_t dim, std::size_t bit, const Mat2& u);

/// y <- y + a * x
void caxpy(std::span<cplx> y, cplx a, std::span<const cplx> x);

namespace scalar {
void apply_1q_left(std::span<cplx> m, std::size_t dim, std::size_t bit, const Mat2& u);
void apply_1q_right(std::span<cplx> m, std::size_t dim, std::size_t bit, const Mat2& u);
void caxpy(std::span<cplx> y, cplx a, std::span<const cplx> x);
}  // namespace scalar

#if defined(SYMCORR_HAVE_AVX2)
namespace avx2 {
void apply_1q_left(std::span<cplx> m, std::size_t dim, std::size_t bit, const Mat2& u);
void apply_1q_right(std::span<cplx> m, std::size_t dim, std::size_t bit, const Mat2& u);
void caxpy(std::span<cplx> y, cplx a, std::span<const cplx> x);
}  // namespace avx2
#endif

}  // namespace symcorr::kernels
