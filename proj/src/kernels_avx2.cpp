// AVX2/FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the runtime dispatch has confirmed CPU support.

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <cstddef>

namespace voi::kernels::avx2 {

namespace {

inline double hsum(__m256d v) noexcept {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

} // namespace

double dot(const double* a, const double* b, std::size_t n) noexcept {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double dot_rev(const double* a, const double* b, std::size_t n) noexcept {
    // b is consumed back to front; reverse each loaded lane once.
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d va = _mm256_loadu_pd(a + i);
        __m256d vb = _mm256_loadu_pd(b + (n - 4 - i));
        vb = _mm256_permute4x64_pd(vb, _MM_SHUFFLE(0, 1, 2, 3));
        acc = _mm256_fmadd_pd(va, vb, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += a[i] * b[n - 1 - i];
    return s;
}

void sum_sumsq(const double* x, std::size_t n, double& sum, double& sumsq) noexcept {
    __m256d vs = _mm256_setzero_pd();
    __m256d vs2 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        vs = _mm256_add_pd(vs, v);
        vs2 = _mm256_fmadd_pd(v, v, vs2);
    }
    double s = hsum(vs), s2 = hsum(vs2);
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
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d gain = _mm256_set1_pd(uplift_gain);
    const __m256d fixed = _mm256_set1_pd(fixed_cost);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d load = _mm256_loadu_pd(load_kwh + i);
        __m256d price = _mm256_loadu_pd(price_gbp + i);
        __m256d s0 = _mm256_loadu_pd(spf_base + i);
        __m256d deg = _mm256_loadu_pd(degradation + i);
        __m256d eps = _mm256_loadu_pd(uplift_noise + i);
        __m256d uplift = _mm256_fmadd_pd(gain, _mm256_add_pd(one, eps), one);
        __m256d spf = _mm256_mul_pd(_mm256_mul_pd(s0, _mm256_sub_pd(one, deg)), uplift);
        __m256d cost = _mm256_div_pd(_mm256_mul_pd(load, price), spf);
        _mm256_storeu_pd(cost_out + i, _mm256_add_pd(cost, fixed));
    }
    for (; i < n; ++i) {
        const double spf = spf_base[i] * (1.0 - degradation[i])
                         * (1.0 + uplift_gain * (1.0 + uplift_noise[i]));
        cost_out[i] = load_kwh[i] * price_gbp[i] / spf + fixed_cost;
    }
}

} // namespace voi::kernels::avx2

#endif // x86
