// Dense double-precision kernels behind the library's arithmetic inner loops
// (loss sums, residual updates, spectral transforms, averaging). A scalar
// reference implementation always exists; an AVX2+FMA variant is selected at
// runtime when the CPU supports it. Backends may differ in the last bits of a
// reduction (different summation order); equivalence is tested to tight
// relative tolerances in tests/test_kernels.cpp.
//
// Environment override: SPANEL_KERNELS=scalar|avx2 (avx2 silently falls back
// to scalar when the CPU lacks support).
#pragma once

#include <cstddef>
#include <span>

namespace spanel::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
const char* backend_name(Backend b);
bool avx2_supported();
// Force a backend (tests); throws spanel::Error if unsupported on this CPU.
void force_backend(Backend b);

double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double sumsq(std::span<const double> x);
// sum of squared differences, Σ (a_i - b_i)^2
double sse(std::span<const double> a, std::span<const double> b);
// y += a * x
void axpy(double a, std::span<const double> x, std::span<double> y);
// out = a - b
void sub(std::span<const double> a, std::span<const double> b, std::span<double> out);

namespace scalar {
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double sumsq(std::span<const double> x);
double sse(std::span<const double> a, std::span<const double> b);
void axpy(double a, std::span<const double> x, std::span<double> y);
void sub(std::span<const double> a, std::span<const double> b, std::span<double> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double sumsq(std::span<const double> x);
double sse(std::span<const double> a, std::span<const double> b);
void axpy(double a, std::span<const double> x, std::span<double> y);
void sub(std::span<const double> a, std::span<const double> b, std::span<double> out);
}  // namespace avx2
#endif

}  // namespace spanel::kernels
