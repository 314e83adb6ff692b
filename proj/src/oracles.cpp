#include "rnnlin/oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rnnlin::oracle {

namespace {

double at(std::span<const double> x, long t) {
    if (t < 0 || t >= static_cast<long>(x.size())) return 0.0;
    return x[static_cast<std::size_t>(t)];
}

void check_horizon(std::size_t horizon) {
    if (horizon == 0) throw std::invalid_argument("oracle: horizon must be at least 1");
}

}  // namespace

RealSequence conv_oracle(const FirKernel& k, std::span<const double> x, std::size_t horizon) {
    check_horizon(horizon);
    RealSequence y(horizon, 0.0);
    for (std::size_t t = 0; t < horizon; ++t)
        for (std::size_t tau = 0; tau < k.length(); ++tau)
            y[t] += k[tau] * at(x, static_cast<long>(t) - static_cast<long>(tau));
    return y;
}

ComplexSequence modulation_oracle(std::size_t period, std::size_t shift, std::span<const double> x,
                                  std::size_t horizon) {
    check_horizon(horizon);
    if (period == 0 || shift >= period) throw std::invalid_argument("modulation_oracle: need 0 <= f < F");
    ComplexSequence y(horizon);
    for (std::size_t t = 0; t < horizon; ++t) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(shift) * static_cast<double>(t) /
                             static_cast<double>(period);
        y[t] = at(x, static_cast<long>(t)) * Complex(std::cos(angle), std::sin(angle));
    }
    return y;
}

ComplexSequence ltv_oracle(const SpreadingFunction& s, std::span<const double> x, std::size_t horizon) {
    check_horizon(horizon);
    ComplexSequence y(horizon);
    const double period = static_cast<double>(s.dopplers());
    for (std::size_t t = 0; t < horizon; ++t) {
        Complex acc{0.0, 0.0};
        for (std::size_t tau = 0; tau < s.delays(); ++tau) {
            const double xv = at(x, static_cast<long>(t) - static_cast<long>(tau));
            for (std::size_t f = 0; f < s.dopplers(); ++f) {
                const double angle =
                    2.0 * std::numbers::pi * static_cast<double>((f * t) % s.dopplers()) / period;
                acc += s(tau, f) * xv * Complex(std::cos(angle), std::sin(angle));
            }
        }
        y[t] = acc;
    }
    return y;
}

ComplexSequence ltv_oracle_doppler_first(const SpreadingFunction& s, std::span<const double> x,
                                         std::size_t horizon) {
    check_horizon(horizon);
    ComplexSequence y(horizon, Complex{0.0, 0.0});
    for (std::size_t f = 0; f < s.dopplers(); ++f) {
        for (std::size_t t = 0; t < horizon; ++t) {
            const Complex mod = std::exp(Complex(0.0, 2.0 * std::numbers::pi * static_cast<double>(f) *
                                                          static_cast<double>(t) / static_cast<double>(s.dopplers())));
            Complex inner{0.0, 0.0};
            for (std::size_t tau = 0; tau < s.delays(); ++tau)
                inner += s(tau, f) * at(x, static_cast<long>(t) - static_cast<long>(tau));
            y[t] += inner * mod;
        }
    }
    return y;
}

RealSequence recursion_oracle(const RationalTf& tf, std::span<const double> x, std::size_t horizon) {
    check_horizon(horizon);
    const auto& a = tf.num();
    const auto& b = tf.den();
    RealSequence y(horizon, 0.0);
    for (std::size_t t = 0; t < horizon; ++t) {
        double acc = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] / b[0] * at(x, static_cast<long>(t) - static_cast<long>(i));
        for (std::size_t j = 1; j < b.size() && j <= t; ++j) acc -= b[j] / b[0] * y[t - j];
        y[t] = acc;
    }
    return y;
}

}  // namespace rnnlin::oracle
