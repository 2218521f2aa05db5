#pragma once

namespace voi::math {

inline constexpr double kSqrt2Pi = 2.5066282746310005024;

double normal_pdf(double x) noexcept;

// Phi(x), evaluated through erfc so both tails keep full relative accuracy.
double normal_cdf(double x) noexcept;

// Phi^-1(p) for p in (0,1). Rational initial guess polished with Halley
// iterations on erfc; accurate to ~2 ulp over the full double range reachable
// from 53-bit uniforms. Throws std::domain_error outside (0,1).
double inverse_normal_cdf(double p);

// Exponential integral E1(x), x > 0. Power series for x <= 1, modified Lentz
// continued fraction above. Relative accuracy ~1e-14.
double exp1(double x);

} // namespace voi::math
