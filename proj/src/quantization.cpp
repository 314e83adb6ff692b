#include "rnnlin/quantization.hpp"

#include "rnnlin/signals.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace rnnlin {

namespace {

constexpr double kIndexSlack = 4.0 * std::numeric_limits<double>::epsilon();
// The truncation length goes through two logs and a division.
constexpr double kLengthSlack = 1e-12;
constexpr double kEnvelopeSlack = 1e-12;

double near_integer(double x, double rel_tol, bool& hit) {
    const double r = std::nearbyint(x);
    hit = std::abs(x - r) <= rel_tol * std::max(1.0, std::abs(x));
    return r;
}

void check_eps(double eps) {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be positive and finite");
}

std::size_t magnitude_bits(std::int64_t max_index) {
    return static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(max_index)));
}

}  // namespace

std::int64_t snapped_floor(double ratio) {
    if (!std::isfinite(ratio) || ratio < 0.0) throw std::invalid_argument("snapped_floor: ratio must be finite and >= 0");
    bool hit = false;
    const double r = near_integer(ratio, kIndexSlack, hit);
    return static_cast<std::int64_t>(hit ? r : std::floor(ratio));
}

std::int64_t quantize_index(double w, double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta)) throw std::invalid_argument("quantize: delta must be positive");
    if (!std::isfinite(w)) throw std::invalid_argument("quantize: weight must be finite");
    const std::int64_t mag = snapped_floor(std::abs(w) / delta);
    return w < 0.0 ? -mag : mag;
}

double quantize(double w, double delta) { return static_cast<double>(quantize_index(w, delta)) * delta; }

std::size_t truncation_length(const ImpulseClass& cls, double eps) {
    check_eps(eps);
    const double a = cls.decay();
    const double x = std::log(cls.amplitude() / eps) / a + std::log(2.0 / (1.0 - std::exp(-a))) / a;
    bool hit = false;
    const double r = near_integer(x, kLengthSlack, hit);
    const double m = hit ? r : std::ceil(x);
    return m < 1.0 ? 1 : static_cast<std::size_t>(m);
}

double quantization_step(const ImpulseClass& cls, double eps) {
    return eps / (2.0 * static_cast<double>(truncation_length(cls, eps)));
}

std::int64_t max_magnitude_index(const ImpulseClass& cls, double delta, std::size_t t) {
    return snapped_floor(cls.envelope(t) / delta);
}

std::size_t tap_bits(const ImpulseClass& cls, double delta, std::size_t t) {
    return 1 + magnitude_bits(max_magnitude_index(cls, delta, t));
}

void check_envelope(const ImpulseClass& cls, double value, std::size_t t) {
    const double env = cls.envelope(t);
    if (!std::isfinite(value) || std::abs(value) > env * (1.0 + kEnvelopeSlack))
        throw std::invalid_argument("impulse response violates |k[t]| <= C e^{-a t} at t = " + std::to_string(t));
}

QuantizedFir::QuantizedFir(ImpulseClass cls, double eps, std::vector<std::int64_t> indices)
    : cls_(cls), eps_(eps), delta_(0.0), indices_(std::move(indices)) {
    check_eps(eps);
    if (indices_.size() != truncation_length(cls_, eps_))
        throw std::invalid_argument("QuantizedFir: expected M = " + std::to_string(truncation_length(cls_, eps_)) +
                                    " taps, got " + std::to_string(indices_.size()));
    delta_ = quantization_step(cls_, eps_);
    for (std::size_t t = 0; t < indices_.size(); ++t) {
        const std::int64_t mag = indices_[t] < 0 ? -indices_[t] : indices_[t];
        if (mag > max_magnitude_index(cls_, delta_, t))
            throw std::invalid_argument("QuantizedFir: tap " + std::to_string(t) + " lies outside its envelope");
    }
}

std::vector<double> QuantizedFir::taps() const {
    std::vector<double> out;
    out.reserve(indices_.size());
    for (std::int64_t q : indices_) out.push_back(static_cast<double>(q) * delta_);
    return out;
}

void Bitstring::append(std::uint64_t value, std::size_t width) {
    if (width > 64) throw std::invalid_argument("Bitstring::append: width exceeds 64");
    if (width < 64 && (value >> width) != 0) throw std::invalid_argument("Bitstring::append: value does not fit");
    for (std::size_t i = width; i-- > 0;) bits_.push_back(((value >> i) & 1u) != 0);
}

std::uint64_t Bitstring::read(std::size_t& pos, std::size_t width) const {
    if (width > 64 || pos + width > bits_.size()) throw std::out_of_range("Bitstring::read: past end of bitstring");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < width; ++i) v = (v << 1) | (bits_[pos++] ? 1u : 0u);
    return v;
}

std::vector<std::uint8_t> Bitstring::to_bytes() const {
    std::vector<std::uint8_t> out((bits_.size() + 7) / 8, 0);
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    return out;
}

Bitstring Bitstring::from_bytes(std::span<const std::uint8_t> bytes, std::size_t bit_length) {
    if (bytes.size() != (bit_length + 7) / 8)
        throw std::invalid_argument("Bitstring: payload size does not match bit length");
    std::vector<bool> bits(bit_length);
    for (std::size_t i = 0; i < bit_length; ++i) bits[i] = (bytes[i / 8] & (0x80u >> (i % 8))) != 0;
    for (std::size_t i = bit_length; i < bytes.size() * 8; ++i)
        if (bytes[i / 8] & (0x80u >> (i % 8))) throw std::invalid_argument("Bitstring: nonzero padding bits");
    return Bitstring(std::move(bits));
}

std::vector<std::uint8_t> Bitstring::to_container() const {
    std::vector<std::uint8_t> out;
    const auto n = static_cast<std::uint64_t>(bits_.size());
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>((n >> (8 * i)) & 0xffu));
    const auto payload = to_bytes();
    out.insert(out.end(), payload.begin(), payload.end());
    return out;
}

Bitstring Bitstring::from_container(std::span<const std::uint8_t> container) {
    if (container.size() < 8) throw std::invalid_argument("Bitstring: container shorter than its 8-byte header");
    std::uint64_t n = 0;
    for (int i = 7; i >= 0; --i) n = (n << 8) | container[static_cast<std::size_t>(i)];
    return from_bytes(container.subspan(8), static_cast<std::size_t>(n));
}

std::size_t encoded_length(const ImpulseClass& cls, double eps) {
    const std::size_t m = truncation_length(cls, eps);
    const double delta = quantization_step(cls, eps);
    std::size_t total = 0;
    for (std::size_t t = 0; t < m; ++t) total += tap_bits(cls, delta, t);
    return total;
}

Bitstring encode(const QuantizedFir& q) {
    Bitstring out;
    for (std::size_t t = 0; t < q.length(); ++t) {
        const std::int64_t idx = q.indices()[t];
        const std::int64_t max_idx = max_magnitude_index(q.impulse_class(), q.delta(), t);
        const std::uint64_t mag = static_cast<std::uint64_t>(idx < 0 ? -idx : idx);
        if (mag > static_cast<std::uint64_t>(max_idx))
            throw std::invalid_argument("encode: tap " + std::to_string(t) + " lies outside its envelope");
        out.append(idx < 0 ? 1u : 0u, 1);
        out.append(mag, magnitude_bits(max_idx));
    }
    return out;
}

QuantizedFir decode(const Bitstring& bits, const ImpulseClass& cls, double eps) {
    const std::size_t expected = encoded_length(cls, eps);
    if (bits.length() != expected)
        throw std::invalid_argument("decode: expected " + std::to_string(expected) + " bits, got " +
                                    std::to_string(bits.length()));
    const std::size_t m = truncation_length(cls, eps);
    const double delta = quantization_step(cls, eps);
    std::vector<std::int64_t> idx;
    idx.reserve(m);
    std::size_t pos = 0;
    for (std::size_t t = 0; t < m; ++t) {
        const std::int64_t max_idx = max_magnitude_index(cls, delta, t);
        const bool negative = bits.read(pos, 1) != 0;
        const std::uint64_t mag = bits.read(pos, magnitude_bits(max_idx));
        if (mag > static_cast<std::uint64_t>(max_idx))
            throw std::invalid_argument("decode: magnitude index at tap " + std::to_string(t) +
                                        " exceeds its envelope");
        if (negative && mag == 0) throw std::invalid_argument("decode: negative zero at tap " + std::to_string(t));
        const auto v = static_cast<std::int64_t>(mag);
        idx.push_back(negative ? -v : v);
    }
    return QuantizedFir(cls, eps, std::move(idx));
}

BitBudget bit_budget_report(const ImpulseClass& cls, double eps) {
    check_eps(eps);
    if (eps >= cls.amplitude()) throw std::invalid_argument("bit_budget_report: eps must be smaller than C");
    BitBudget b;
    b.truncation_length = truncation_length(cls, eps);
    b.delta = quantization_step(cls, eps);
    b.total_bits = encoded_length(cls, eps);

    const double lambda = std::numbers::log2e;
    const double m = static_cast<double>(b.truncation_length);
    const double a = cls.decay();
    const double l = std::log(cls.amplitude() / eps);
    b.chain_bound = m * (lambda * l - m * a * lambda / 2.0 + lambda * std::log(m) + a * lambda / 2.0 + 3.0) + m;
    b.main_term = entropy_main_term(cls, eps);
    return b;
}

}  // namespace rnnlin
