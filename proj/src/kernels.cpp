#include "voi/kernels.hpp"

#include <stdexcept>

namespace voi::kernels {

namespace scalar {

double dot(const double* a, const double* b, std::size_t n) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot_rev(const double* a, const double* b, std::size_t n) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[n - 1 - i];
    return s;
}

void sum_sumsq(const double* x, std::size_t n, double& sum, double& sumsq) noexcept {
    double s = 0.0, s2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += x[i];
        s2 += x[i] * x[i];
    }
    sum = s;
    sumsq = s2;
}

void spf_cost_batch(const double* load_kwh, const double* price_gbp,
                    const double* spf_base, const double* degradation,
                    const double* uplift_noise, std::size_t n,
                    double uplift_gain, double fixed_cost,
                    double* cost_out) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        const double spf = spf_base[i] * (1.0 - degradation[i])
                         * (1.0 + uplift_gain * (1.0 + uplift_noise[i]));
        cost_out[i] = load_kwh[i] * price_gbp[i] / spf + fixed_cost;
    }
}

} // namespace scalar

#ifdef VOI_HAVE_AVX2_TU
namespace avx2 {
double dot(const double*, const double*, std::size_t) noexcept;
double dot_rev(const double*, const double*, std::size_t) noexcept;
void sum_sumsq(const double*, std::size_t, double&, double&) noexcept;
void spf_cost_batch(const double*, const double*, const double*, const double*,
                    const double*, std::size_t, double, double, double*) noexcept;
} // namespace avx2
#endif

#ifdef VOI_HAVE_NEON_TU
namespace neon {
double dot(const double*, const double*, std::size_t) noexcept;
double dot_rev(const double*, const double*, std::size_t) noexcept;
void sum_sumsq(const double*, std::size_t, double&, double&) noexcept;
void spf_cost_batch(const double*, const double*, const double*, const double*,
                    const double*, std::size_t, double, double, double*) noexcept;
} // namespace neon
#endif

namespace {

struct Vtable {
    double (*dot)(const double*, const double*, std::size_t) noexcept;
    double (*dot_rev)(const double*, const double*, std::size_t) noexcept;
    void (*sum_sumsq)(const double*, std::size_t, double&, double&) noexcept;
    void (*spf_cost_batch)(const double*, const double*, const double*,
                           const double*, const double*, std::size_t,
                           double, double, double*) noexcept;
};

constexpr Vtable kScalar{scalar::dot, scalar::dot_rev, scalar::sum_sumsq,
                         scalar::spf_cost_batch};

#ifdef VOI_HAVE_AVX2_TU
constexpr Vtable kAvx2{avx2::dot, avx2::dot_rev, avx2::sum_sumsq,
                       avx2::spf_cost_batch};
#endif
#ifdef VOI_HAVE_NEON_TU
constexpr Vtable kNeon{neon::dot, neon::dot_rev, neon::sum_sumsq,
                       neon::spf_cost_batch};
#endif

bool cpu_supports(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return true;
        case Backend::Avx2:
#if defined(VOI_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::Neon:
#ifdef VOI_HAVE_NEON_TU
            return true; // NEON is baseline on aarch64
#else
            return false;
#endif
    }
    return false;
}

const Vtable* table_for(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return &kScalar;
#ifdef VOI_HAVE_AVX2_TU
        case Backend::Avx2: return &kAvx2;
#endif
#ifdef VOI_HAVE_NEON_TU
        case Backend::Neon: return &kNeon;
#endif
        default: return &kScalar;
    }
}

Backend detect() noexcept {
    if (cpu_supports(Backend::Avx2)) return Backend::Avx2;
    if (cpu_supports(Backend::Neon)) return Backend::Neon;
    return Backend::Scalar;
}

Backend g_active = detect();
const Vtable* g_vt = table_for(g_active);

} // namespace

const char* name(Backend b) noexcept {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "?";
}

bool supported(Backend b) noexcept { return cpu_supports(b); }

Backend active() noexcept { return g_active; }

void force(Backend b) {
    if (!cpu_supports(b))
        throw std::invalid_argument(std::string("kernel backend not supported here: ") + name(b));
    g_active = b;
    g_vt = table_for(b);
}

double dot(const double* a, const double* b, std::size_t n) noexcept {
    return g_vt->dot(a, b, n);
}

double dot_rev(const double* a, const double* b, std::size_t n) noexcept {
    return g_vt->dot_rev(a, b, n);
}

void sum_sumsq(const double* x, std::size_t n, double& sum, double& sumsq) noexcept {
    g_vt->sum_sumsq(x, n, sum, sumsq);
}

void spf_cost_batch(const double* load_kwh, const double* price_gbp,
                    const double* spf_base, const double* degradation,
                    const double* uplift_noise, std::size_t n,
                    double uplift_gain, double fixed_cost,
                    double* cost_out) noexcept {
    g_vt->spf_cost_batch(load_kwh, price_gbp, spf_base, degradation,
                         uplift_noise, n, uplift_gain, fixed_cost, cost_out);
}

double pairwise_sum(const double* x, std::size_t n) noexcept {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += x[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

} // namespace voi::kernels
