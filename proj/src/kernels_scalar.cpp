// Reference kernels. Plain loops, one accumulator: these define the semantics
// the SIMD variants are tested against.
#include "spanel/kernels.hpp"

namespace spanel::kernels::scalar {

double sum(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += v;
    return acc;
}

double dot(std::span<const double> x, std::span<const double> y) {
    double acc = 0.0;
    for (size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

double sumsq(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += v * v;
    return acc;
}

double sse(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    for (size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void sub(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
}

}  // namespace spanel::kernels::scalar
