// NEON variants for aarch64, where 128-bit SIMD is baseline.

#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>

namespace voi::kernels::neon {

double dot(const double* a, const double* b, std::size_t n) noexcept {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot_rev(const double* a, const double* b, std::size_t n) noexcept {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t va = vld1q_f64(a + i);
        float64x2_t vb = vld1q_f64(b + (n - 2 - i));
        vb = vextq_f64(vb, vb, 1); // swap lanes
        acc = vfmaq_f64(acc, va, vb);
    }
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[n - 1 - i];
    return s;
}

void sum_sumsq(const double* x, std::size_t n, double& sum, double& sumsq) noexcept {
    float64x2_t vs = vdupq_n_f64(0.0);
    float64x2_t vs2 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t v = vld1q_f64(x + i);
        vs = vaddq_f64(vs, v);
        vs2 = vfmaq_f64(vs2, v, v);
    }
    double s = vaddvq_f64(vs), s2 = vaddvq_f64(vs2);
    for (; i < n; ++i) {
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
    const float64x2_t one = vdupq_n_f64(1.0);
    const float64x2_t gain = vdupq_n_f64(uplift_gain);
    const float64x2_t fixed = vdupq_n_f64(fixed_cost);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t load = vld1q_f64(load_kwh + i);
        float64x2_t price = vld1q_f64(price_gbp + i);
        float64x2_t s0 = vld1q_f64(spf_base + i);
        float64x2_t deg = vld1q_f64(degradation + i);
        float64x2_t eps = vld1q_f64(uplift_noise + i);
        float64x2_t uplift = vfmaq_f64(one, gain, vaddq_f64(one, eps));
        float64x2_t spf = vmulq_f64(vmulq_f64(s0, vsubq_f64(one, deg)), uplift);
        float64x2_t cost = vdivq_f64(vmulq_f64(load, price), spf);
        vst1q_f64(cost_out + i, vaddq_f64(cost, fixed));
    }
    for (; i < n; ++i) {
        const double spf = spf_base[i] * (1.0 - degradation[i])
                         * (1.0 + uplift_gain * (1.0 + uplift_noise[i]));
        cost_out[i] = load_kwh[i] * price_gbp[i] / spf + fixed_cost;
    }
}

} // namespace voi::kernels::neon

#endif // aarch64
