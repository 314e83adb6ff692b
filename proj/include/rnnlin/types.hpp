#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rnnlin {

using Complex = std::complex<double>;

/// One-sided sequences indexed from t = 0. Samples at negative indices and
/// beyond the stored horizon are implicitly zero.
using RealSequence = std::vector<double>;
using ComplexSequence = std::vector<Complex>;

template <class T>
T sample(std::span<const T> seq, std::ptrdiff_t t) {
    if (t < 0 || static_cast<std::size_t>(t) >= seq.size()) return T{};
    return seq[static_cast<std::size_t>(t)];
}

inline bool all_finite(std::span<const double> v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline bool all_finite(std::span<const Complex> v) {
    for (const Complex& x : v)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

/// Real FIR kernel k_1..k_L; tap l multiplies x[t-(l-1)].
class FirKernel {
   public:
    explicit FirKernel(std::vector<double> taps) : taps_(std::move(taps)) {
        if (taps_.empty()) throw std::invalid_argument("FirKernel: kernel must have at least one tap");
        if (!all_finite(taps_)) throw std::invalid_argument("FirKernel: taps must be finite");
    }

    const std::vector<double>& taps() const noexcept { return taps_; }
    std::size_t length() const noexcept { return taps_.size(); }
    double operator[](std::size_t i) const { return taps_[i]; }

    bool operator==(const FirKernel&) const = default;

   private:
    std::vector<double> taps_;
};

/// Class of causal systems whose impulse response obeys |k[t]| <= C e^{-a t}.
class ImpulseClass {
   public:
    ImpulseClass(double amplitude, double decay) : amplitude_(amplitude), decay_(decay) {
        if (!(amplitude > 0.0) || !std::isfinite(amplitude))
            throw std::invalid_argument("ImpulseClass: amplitude C must be positive and finite");
        if (!(decay > 0.0) || !std::isfinite(decay))
            throw std::invalid_argument("ImpulseClass: decay rate a must be positive and finite");
    }

    double amplitude() const noexcept { return amplitude_; }
    double decay() const noexcept { return decay_; }

    /// Envelope C e^{-a t}.
    double envelope(std::size_t t) const { return amplitude_ * std::exp(-decay_ * static_cast<double>(t)); }

    bool operator==(const ImpulseClass&) const = default;

   private:
    double amplitude_;
    double decay_;
};

/// Certified bracket around an H-infinity norm: lower <= ||K||_inf <= upper.
struct HardyBracket {
    double lower = 0.0;
    double upper = 0.0;
};

/// l-infinity bound on the inputs a synthesized network must handle exactly.
class InputBound {
   public:
    explicit InputBound(double value) : value_(value) {
        if (!(value > 0.0) || !std::isfinite(value))
            throw std::invalid_argument("InputBound: C_in must be positive and finite");
    }
    double value() const noexcept { return value_; }

   private:
    double value_;
};

/// Delay-Doppler spreading grid S(tau, f), tau < D, f < F.
class SpreadingFunction {
   public:
    SpreadingFunction(std::size_t delays, std::size_t dopplers, std::vector<Complex> values_row_major)
        : delays_(delays), dopplers_(dopplers), values_(std::move(values_row_major)) {
        if (delays_ == 0 || dopplers_ == 0)
            throw std::invalid_argument("SpreadingFunction: D and F must be positive");
        if (values_.size() != delays_ * dopplers_)
            throw std::invalid_argument("SpreadingFunction: expected D*F values");
        if (!all_finite(values_)) throw std::invalid_argument("SpreadingFunction: entries must be finite");
    }

    static SpreadingFunction from_rows(const std::vector<std::vector<Complex>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("SpreadingFunction: empty spreading grid");
        std::vector<Complex> flat;
        for (const auto& row : rows) {
            if (row.size() != rows.front().size())
                throw std::invalid_argument("SpreadingFunction: ragged rows");
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return SpreadingFunction(rows.size(), rows.front().size(), std::move(flat));
    }

    std::size_t delays() const noexcept { return delays_; }
    std::size_t dopplers() const noexcept { return dopplers_; }
    std::size_t spread() const noexcept { return delays_ * dopplers_; }

    Complex operator()(std::size_t tau, std::size_t f) const { return values_[tau * dopplers_ + f]; }
    const std::vector<Complex>& values() const noexcept { return values_; }

   private:
    std::size_t delays_;
    std::size_t dopplers_;
    std::vector<Complex> values_;
};

/// K(z) = (sum_i a_i z^i) / (sum_j b_j z^j) with b_0 != 0.
class RationalTf {
   public:
    RationalTf(std::vector<double> num, std::vector<double> den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.empty()) throw std::invalid_argument("RationalTf: numerator must have at least one coefficient");
        if (den_.empty() || den_.front() == 0.0)
            throw std::invalid_argument("RationalTf: leading denominator coefficient b_0 must be nonzero");
        if (!all_finite(num_) || !all_finite(den_))
            throw std::invalid_argument("RationalTf: coefficients must be finite");
    }

    const std::vector<double>& num() const noexcept { return num_; }
    const std::vector<double>& den() const noexcept { return den_; }
    std::size_t num_order() const noexcept { return num_.size() - 1; }  // Q
    std::size_t den_order() const noexcept { return den_.size() - 1; }  // P

   private:
    std::vector<double> num_;
    std::vector<double> den_;
};

}  // namespace rnnlin
