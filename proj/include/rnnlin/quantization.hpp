#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rnnlin/types.hpp"

namespace rnnlin {

/// Floor of a nonnegative ratio that treats values within a few ulp below an
/// integer as that integer, so 2.9999999999999996 -> 3.
std::int64_t snapped_floor(double ratio);

/// sign(w) * floor(|w| / delta) * delta.
double quantize(double w, double delta);

/// Index q with quantize(w, delta) == q * delta.
std::int64_t quantize_index(double w, double delta);

/// Truncation length ceil((1/a) log(C/eps) + (1/a) log(2 / (1 - e^{-a}))).
std::size_t truncation_length(const ImpulseClass& cls, double eps);

/// Step eps / (2M).
double quantization_step(const ImpulseClass& cls, double eps);

/// Largest magnitude index floor(C e^{-a t} / delta) representable at tap t.
std::int64_t max_magnitude_index(const ImpulseClass& cls, double delta, std::size_t t);

/// Bits for tap t: one sign bit plus ceil(log2(max_index + 1)) magnitude bits.
std::size_t tap_bits(const ImpulseClass& cls, double delta, std::size_t t);

/// Truncated, delta-quantized FIR approximant of a member of C(C, a).
/// Taps are stored as integer multiples of delta.
class QuantizedFir {
   public:
    QuantizedFir(ImpulseClass cls, double eps, std::vector<std::int64_t> indices);

    const ImpulseClass& impulse_class() const noexcept { return cls_; }
    double eps() const noexcept { return eps_; }
    std::size_t length() const noexcept { return indices_.size(); }  // M
    double delta() const noexcept { return delta_; }
    const std::vector<std::int64_t>& indices() const noexcept { return indices_; }
    std::vector<double> taps() const;

    bool operator==(const QuantizedFir& other) const {
        return cls_ == other.cls_ && eps_ == other.eps_ && indices_ == other.indices_;
    }

   private:
    ImpulseClass cls_;
    double eps_;
    double delta_;
    std::vector<std::int64_t> indices_;
};

/// Finite bit sequence, MSB-first when packed into bytes.
class Bitstring {
   public:
    Bitstring() = default;
    explicit Bitstring(std::vector<bool> bits) : bits_(std::move(bits)) {}

    std::size_t length() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i]; }
    const std::vector<bool>& bits() const noexcept { return bits_; }

    /// Appends the low `width` bits of `value`, most significant first.
    void append(std::uint64_t value, std::size_t width);

    /// Reads `width` bits starting at `pos`, advancing it.
    std::uint64_t read(std::size_t& pos, std::size_t width) const;

    /// Payload bytes, MSB-first, last byte padded with zero bits.
    std::vector<std::uint8_t> to_bytes() const;
    static Bitstring from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_length);

    /// 8-byte little-endian bit length followed by the padded payload.
    std::vector<std::uint8_t> to_container() const;
    static Bitstring from_container(std::span<const std::uint8_t> container);

    bool operator==(const Bitstring&) const = default;

   private:
    std::vector<bool> bits_;
};

/// Quantizes the first M samples of an impulse response oracle.
/// Throws if any queried sample leaves the envelope C e^{-a t}.
template <class Oracle>
QuantizedFir quantize_impulse_response(const ImpulseClass& cls, Oracle&& k, double eps);

/// Fixed-layout encoding: per tap, sign bit then magnitude index.
Bitstring encode(const QuantizedFir& q);
QuantizedFir decode(const Bitstring& bits, const ImpulseClass& cls, double eps);

/// Total encoded length, which depends on (C, a, eps) only.
std::size_t encoded_length(const ImpulseClass& cls, double eps);

struct BitBudget {
    std::size_t truncation_length = 0;  // M
    double delta = 0.0;
    std::size_t total_bits = 0;
    double chain_bound = 0.0;
    double main_term = 0.0;

    double ratio() const { return static_cast<double>(total_bits) / main_term; }
};

BitBudget bit_budget_report(const ImpulseClass& cls, double eps);

// --- implementation ---

void check_envelope(const ImpulseClass& cls, double value, std::size_t t);

template <class Oracle>
QuantizedFir quantize_impulse_response(const ImpulseClass& cls, Oracle&& k, double eps) {
    const std::size_t m = truncation_length(cls, eps);
    const double delta = quantization_step(cls, eps);
    std::vector<std::int64_t> idx;
    idx.reserve(m);
    for (std::size_t t = 0; t < m; ++t) {
        const double v = static_cast<double>(k(t));
        check_envelope(cls, v, t);
        idx.push_back(quantize_index(v, delta));
    }
    return QuantizedFir(cls, eps, std::move(idx));
}

}  // namespace rnnlin
