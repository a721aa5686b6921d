// AVX2+FMA kernels, 4-wide doubles with two independent accumulators to break
// the add dependency chain, scalar tail. This translation unit is compiled
// with -mavx2 -mfma; callers must gate on avx2_supported().
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "spanel/kernels.hpp"

namespace spanel::kernels::avx2 {

namespace {

inline double hadd(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

double sum(std::span<const double> x) {
    const double* p = x.data();
    size_t n = x.size(), i = 0;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(p + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(p + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(p + i));
    double acc = hadd(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += p[i];
    return acc;
}

double dot(std::span<const double> x, std::span<const double> y) {
    const double* px = x.data();
    const double* py = y.data();
    size_t n = x.size(), i = 0;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(px + i + 4), _mm256_loadu_pd(py + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i), acc0);
    double acc = hadd(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) acc += px[i] * py[i];
    return acc;
}

double sumsq(std::span<const double> x) { return dot(x, x); }

double sse(std::span<const double> a, std::span<const double> b) {
    const double* pa = a.data();
    const double* pb = b.data();
    size_t n = a.size(), i = 0;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    for (; i + 8 <= n; i += 8) {
        const __m256d d0 = _mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i));
        const __m256d d1 = _mm256_sub_pd(_mm256_loadu_pd(pa + i + 4), _mm256_loadu_pd(pb + i + 4));
        acc0 = _mm256_fmadd_pd(d0, d0, acc0);
        acc1 = _mm256_fmadd_pd(d1, d1, acc1);
    }
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i));
        acc0 = _mm256_fmadd_pd(d, d, acc0);
    }
    double acc = hadd(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        const double d = pa[i] - pb[i];
        acc += d * d;
    }
    return acc;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    const double* px = x.data();
    double* py = y.data();
    size_t n = x.size(), i = 0;
    const __m256d va = _mm256_set1_pd(a);
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(py + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(px + i), _mm256_loadu_pd(py + i)));
    }
    for (; i < n; ++i) py[i] += a * px[i];
}

void sub(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    const double* pa = a.data();
    const double* pb = b.data();
    double* po = out.data();
    size_t n = a.size(), i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(po + i, _mm256_sub_pd(_mm256_loadu_pd(pa + i), _mm256_loadu_pd(pb + i)));
    }
    for (; i < n; ++i) po[i] = pa[i] - pb[i];
}

}  // namespace spanel::kernels::avx2

#endif  // x86_64
