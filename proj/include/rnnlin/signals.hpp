#pragma once

#include <cstddef>
#include <span>

#include "rnnlin/types.hpp"

namespace rnnlin {

inline constexpr std::size_t kDefaultGridPoints = 4096;
inline constexpr std::size_t kMinGridPoints = 8;

/// One-sided Z-transform sum_t x[t] z^t (positive powers), |z| <= 1.
Complex z_eval(std::span<const double> taps, Complex z);
Complex z_eval(std::span<const Complex> taps, Complex z);
inline Complex z_eval(const FirKernel& k, Complex z) { return z_eval(std::span<const double>(k.taps()), z); }

/// l2 norm of the taps, which equals the H2 norm of the transform.
double h2_norm(std::span<const double> x);
double h2_norm(std::span<const Complex> x);

/// Delays a one-sided sequence by `k` samples (prepends k zeros).
RealSequence delay(std::span<const double> x, std::size_t k);

/// Brackets ||K||_inf: lower is the maximum of |K| over an equispaced grid on
/// the unit circle, upper is the l1 sum of the taps.
HardyBracket hinf_bracket(const FirKernel& k, std::size_t grid_points);

/// Default bracket: 4096-point grid, refined dyadically (up to twice) while the
/// lower estimate moves by more than 1e-6.
HardyBracket hinf_bracket(const FirKernel& k);

/// Bracket for rho(K, K') = ||K - K'||_inf on the zero-padded tap difference.
HardyBracket system_distance(const FirKernel& k, const FirKernel& k2, std::size_t grid_points);
HardyBracket system_distance(const FirKernel& k, const FirKernel& k2);

/// (1/a) * log(C/eps)^2, natural logarithm. Requires 0 < eps < C.
double entropy_main_term(const ImpulseClass& cls, double eps);

}  // namespace rnnlin
