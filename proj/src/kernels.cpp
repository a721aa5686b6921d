// Runtime backend selection. The dispatch table is initialized once, from the
// CPU feature check plus the SPANEL_KERNELS override, and can be re-pointed by
// force_backend() in tests.
#include "spanel/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "spanel/common.hpp"

namespace spanel::kernels {

namespace {

struct Vtable {
    double (*sum)(std::span<const double>);
    double (*dot)(std::span<const double>, std::span<const double>);
    double (*sumsq)(std::span<const double>);
    double (*sse)(std::span<const double>, std::span<const double>);
    void (*axpy)(double, std::span<const double>, std::span<double>);
    void (*sub)(std::span<const double>, std::span<const double>, std::span<double>);
};

constexpr Vtable kScalar = {scalar::sum, scalar::dot, scalar::sumsq,
                            scalar::sse, scalar::axpy, scalar::sub};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Vtable kAvx2 = {avx2::sum, avx2::dot, avx2::sumsq,
                          avx2::sse, avx2::axpy, avx2::sub};
#endif

struct Dispatch {
    const Vtable* table;
    Backend backend;
};

Dispatch select_initial() {
#if defined(__x86_64__) || defined(_M_X64)
    bool want_avx2 = avx2_supported();
    if (const char* env = std::getenv("SPANEL_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) want_avx2 = false;
        // "avx2" keeps the CPU-capability result
    }
    if (want_avx2) return {&kAvx2, Backend::avx2};
#endif
    return {&kScalar, Backend::scalar};
}

std::atomic<const Vtable*> g_table{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const Vtable& table() {
    const Vtable* t = g_table.load(std::memory_order_acquire);
    if (!t) {
        Dispatch d = select_initial();
        g_backend.store(d.backend, std::memory_order_relaxed);
        g_table.store(d.table, std::memory_order_release);
        t = d.table;
    }
    return *t;
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend active_backend() {
    table();
    return g_backend.load(std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

void force_backend(Backend b) {
    if (b == Backend::scalar) {
        g_backend.store(Backend::scalar, std::memory_order_relaxed);
        g_table.store(&kScalar, std::memory_order_release);
        return;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (b == Backend::avx2 && avx2_supported()) {
        g_backend.store(Backend::avx2, std::memory_order_relaxed);
        g_table.store(&kAvx2, std::memory_order_release);
        return;
    }
#endif
    throw Error("kernel backend not supported on this CPU: " + std::string(backend_name(b)));
}

double sum(std::span<const double> x) { return table().sum(x); }
double dot(std::span<const double> x, std::span<const double> y) { return table().dot(x, y); }
double sumsq(std::span<const double> x) { return table().sumsq(x); }
double sse(std::span<const double> a, std::span<const double> b) { return table().sse(a, b); }
void axpy(double a, std::span<const double> x, std::span<double> y) { table().axpy(a, x, y); }
void sub(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    table().sub(a, b, out);
}

}  // namespace spanel::kernels
