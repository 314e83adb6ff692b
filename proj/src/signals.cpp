#include "rnnlin/signals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rnnlin {

namespace {

// Points on the unit circle come out of std::polar with |z| = 1 +- a few ulp.
constexpr double kUnitDiskSlack = 1e-12;

void check_point(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("z_eval: evaluation point must be finite");
    if (std::abs(z) > 1.0 + kUnitDiskSlack)
        throw std::invalid_argument("z_eval: evaluation point must satisfy |z| <= 1");
}

template <class T>
Complex horner(std::span<const T> taps, Complex z) {
    Complex acc{0.0, 0.0};
    for (auto it = taps.rbegin(); it != taps.rend(); ++it) acc = acc * z + Complex(*it);
    return acc;
}

double grid_max(const FirKernel& k, std::size_t grid_points) {
    double best = 0.0;
    for (std::size_t j = 0; j < grid_points; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_points);
        best = std::max(best, std::abs(z_eval(k, std::polar(1.0, theta))));
    }
    return best;
}

double l1(const FirKernel& k) {
    double s = 0.0;
    for (double v : k.taps()) s += std::abs(v);
    return s;
}

FirKernel difference(const FirKernel& k, const FirKernel& k2) {
    std::vector<double> d(std::max(k.length(), k2.length()), 0.0);
    for (std::size_t i = 0; i < k.length(); ++i) d[i] += k[i];
    for (std::size_t i = 0; i < k2.length(); ++i) d[i] -= k2[i];
    return FirKernel(std::move(d));
}

}  // namespace

Complex z_eval(std::span<const double> taps, Complex z) {
    check_point(z);
    if (!all_finite(taps)) throw std::invalid_argument("z_eval: taps must be finite");
    return horner(taps, z);
}

Complex z_eval(std::span<const Complex> taps, Complex z) {
    check_point(z);
    if (!all_finite(taps)) throw std::invalid_argument("z_eval: taps must be finite");
    return horner(taps, z);
}

double h2_norm(std::span<const double> x) {
    if (!all_finite(x)) throw std::invalid_argument("h2_norm: samples must be finite");
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

double h2_norm(std::span<const Complex> x) {
    if (!all_finite(x)) throw std::invalid_argument("h2_norm: samples must be finite");
    double s = 0.0;
    for (const Complex& v : x) s += std::norm(v);
    return std::sqrt(s);
}

RealSequence delay(std::span<const double> x, std::size_t k) {
    RealSequence out(k, 0.0);
    out.insert(out.end(), x.begin(), x.end());
    return out;
}

HardyBracket hinf_bracket(const FirKernel& k, std::size_t grid_points) {
    if (grid_points < kMinGridPoints)
        throw std::invalid_argument("hinf_bracket: grid_points must be at least 8");
    return HardyBracket{grid_max(k, grid_points), l1(k)};
}

HardyBracket hinf_bracket(const FirKernel& k) {
    std::size_t n = kDefaultGridPoints;
    double lower = grid_max(k, n);
    for (int step = 0; step < 2; ++step) {
        n *= 2;
        const double refined = grid_max(k, n);
        const bool settled = refined - lower <= 1e-6;
        lower = std::max(lower, refined);
        if (settled) break;
    }
    return HardyBracket{lower, l1(k)};
}

HardyBracket system_distance(const FirKernel& k, const FirKernel& k2, std::size_t grid_points) {
    return hinf_bracket(difference(k, k2), grid_points);
}

HardyBracket system_distance(const FirKernel& k, const FirKernel& k2) { return hinf_bracket(difference(k, k2)); }

double entropy_main_term(const ImpulseClass& cls, double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("entropy_main_term: eps must be positive");
    if (eps >= cls.amplitude()) throw std::invalid_argument("entropy_main_term: eps must be smaller than C");
    const double l = std::log(cls.amplitude() / eps);
    return l * l / cls.decay();
}

}  // namespace rnnlin
