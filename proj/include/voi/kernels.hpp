#pragma once

// Batch arithmetic kernels used by the estimator inner loops. Every kernel
// has a scalar reference implementation plus SIMD variants (AVX2 on x86-64,
// NEON on aarch64) selected once at startup from CPU features. The variants
// are equivalence-tested against the scalar reference; results may differ by
// a few ulps (FMA contraction, lane-wise accumulation order).

#include <cstddef>

namespace voi::kernels {

enum class Backend { Scalar, Avx2, Neon };

const char* name(Backend b) noexcept;
bool supported(Backend b) noexcept;

// Currently selected backend. Defaults to the widest supported one.
Backend active() noexcept;

// Override the backend (tests, troubleshooting). Throws std::invalid_argument
// if the requested backend is not supported on this CPU.
void force(Backend b);

// sum_i a[i] * b[i]
double dot(const double* a, const double* b, std::size_t n) noexcept;

// sum_i a[i] * b[n-1-i]; used for temporal-superposition folds where one
// operand is a lag kernel indexed from the most recent step backwards.
double dot_rev(const double* a, const double* b, std::size_t n) noexcept;

// Accumulate sum and sum of squares in one pass.
void sum_sumsq(const double* x, std::size_t n, double& sum, double& sumsq) noexcept;

// Heat-pump operating cost over a batch of scenarios:
//   cost[i] = load_kwh[i] * price_gbp[i]
//               / (spf_base[i] * (1 - degradation[i])
//                  * (1 + uplift_gain * (1 + uplift_noise[i])))
//             + fixed_cost
void spf_cost_batch(const double* load_kwh, const double* price_gbp,
                    const double* spf_base, const double* degradation,
                    const double* uplift_noise, std::size_t n,
                    double uplift_gain, double fixed_cost,
                    double* cost_out) noexcept;

// Deterministic pairwise reduction. Backend-independent by design: results
// must not depend on the selected SIMD backend or the worker count, so this
// is always the scalar recursion.
double pairwise_sum(const double* x, std::size_t n) noexcept;

} // namespace voi::kernels
