#include <cmath>
#include <numbers>

#include "doctest.h"
#include "rnnlin/quantization.hpp"
#include "rnnlin/signals.hpp"
#include "test_helpers.hpp"

using namespace rnnlin;

namespace {
const ImpulseClass kWorked(1.0, std::numbers::ln2);

QuantizedFir random_fir(testing::Gen& g) {
    const ImpulseClass cls(g.uniform(0.2, 5.0), g.uniform(0.1, 3.0));
    const double eps = cls.amplitude() * std::pow(10.0, -g.uniform(0.1, 5.0));
    const std::size_t m = truncation_length(cls, eps);
    const double delta = quantization_step(cls, eps);
    std::vector<std::int64_t> idx(m);
    for (std::size_t t = 0; t < m; ++t) {
        const auto top = max_magnitude_index(cls, delta, t);
        const double pick = g.uniform(0.0, 1.0);
        // Mix interior values with the boundary magnitudes.
        std::int64_t v = pick < 0.2 ? top : pick < 0.3 ? 0 : std::int64_t(g.uniform(0.0, double(top) + 0.999));
        v = std::min(v, top);
        idx[t] = g.uniform(0.0, 1.0) < 0.5 ? -v : v;
    }
    return QuantizedFir(cls, eps, idx);
}
}  // namespace

TEST_CASE("quantize examples") {
    CHECK(quantize(0.26, 0.1) == doctest::Approx(0.2));
    CHECK(quantize(-0.26, 0.1) == doctest::Approx(-0.2));
    CHECK(quantize(0.0, 0.37) == 0.0);
    CHECK(quantize_index(0.26, 0.1) == 2);
    CHECK(quantize_index(-0.26, 0.1) == -2);
    // 0.3 / 0.1 evaluates to 2.9999999999999996; the index must still be 3.
    CHECK(quantize_index(0.3, 0.1) == 3);
    CHECK_THROWS_AS(quantize(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("quantize properties") {
    testing::Gen g(41);
    for (int i = 0; i < 2000; ++i) {
        const double w = g.uniform(-10.0, 10.0);
        const double delta = std::pow(10.0, g.uniform(-6.0, 0.0));
        const double q = quantize(w, delta);
        CHECK(std::abs(q - w) <= delta * (1 + 1e-12));
        CHECK(std::abs(q) <= std::abs(w) * (1 + 1e-15) + 1e-300);
        CHECK(quantize(-w, delta) == -q);
    }
}

TEST_CASE("truncation length and step for the worked instance") {
    CHECK(truncation_length(kWorked, 0.25) == 4);
    CHECK(quantization_step(kWorked, 0.25) == 0.03125);
    CHECK(truncation_length(kWorked, 1e-3) == 12);
}

TEST_CASE("encode: per-tap allocation and total length") {
    const double delta = quantization_step(kWorked, 0.25);
    std::vector<std::size_t> bits;
    for (std::size_t t = 0; t < 4; ++t) bits.push_back(tap_bits(kWorked, delta, t));
    CHECK(bits == std::vector<std::size_t>{7, 6, 5, 4});

    const QuantizedFir q(kWorked, 0.25, {32, -16, 8, 4});
    CHECK(encode(q).length() == 22);
    const QuantizedFir zero(kWorked, 0.25, {0, 0, 0, 0});
    const auto zb = encode(zero);
    CHECK(zb.length() == 22);
    for (bool b : zb.bits()) CHECK_FALSE(b);
}

TEST_CASE("encode: allocation degenerates to the sign bit once the envelope drops below delta") {
    // Within t < M the envelope always admits magnitude 1; past it the grid collapses to {0}.
    const ImpulseClass cls(1.0, 3.0);
    const double eps = 0.1;
    const std::size_t m = truncation_length(cls, eps);
    const double delta = quantization_step(cls, eps);
    for (std::size_t t = 0; t < m; ++t) CHECK(max_magnitude_index(cls, delta, t) >= 1);
    std::size_t t = m;
    while (cls.envelope(t) >= delta) ++t;
    CHECK(max_magnitude_index(cls, delta, t) == 0);
    CHECK(tap_bits(cls, delta, t) == 1);

    // Single-tap class.
    const ImpulseClass steep(1.0, 8.0);
    REQUIRE(truncation_length(steep, 0.9) == 1);
    const QuantizedFir q(steep, 0.9, {-1});
    CHECK(decode(encode(q), steep, 0.9) == q);
}

TEST_CASE("QuantizedFir rejects taps outside the envelope") {
    CHECK_THROWS_AS(QuantizedFir(kWorked, 0.25, {33, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(QuantizedFir(kWorked, 0.25, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("decode examples and errors") {
    const QuantizedFir q(kWorked, 0.25, {32, -16, 8, 4});
    const auto bits = encode(q);
    CHECK(decode(bits, kWorked, 0.25) == q);
    CHECK(decode(bits, kWorked, 0.25).taps() == std::vector<double>{1.0, -0.5, 0.25, 0.125});

    const auto zero = decode(Bitstring(std::vector<bool>(22, false)), kWorked, 0.25);
    for (double v : zero.taps()) CHECK(v == 0.0);

    std::vector<bool> truncated = bits.bits();
    truncated.pop_back();
    CHECK_THROWS_AS(decode(Bitstring(truncated), kWorked, 0.25), std::invalid_argument);

    // Tap 0 magnitude field is 6 bits wide but only 0..32 are inside the envelope.
    Bitstring over;
    over.append(0, 1);
    over.append(63, 6);
    over.append(0, 15);
    CHECK_THROWS_AS(decode(over, kWorked, 0.25), std::invalid_argument);
}

TEST_CASE("container layout") {
    Bitstring b;
    b.append(0b101, 3);
    const auto c = b.to_container();
    REQUIRE(c.size() == 9);
    CHECK(c[0] == 3);
    for (int i = 1; i < 8; ++i) CHECK(c[i] == 0);
    CHECK(c[8] == 0b10100000);
    CHECK(Bitstring::from_container(c) == b);

    auto bad = c;
    bad[8] |= 1;  // padding must be zero
    CHECK_THROWS_AS(Bitstring::from_container(bad), std::invalid_argument);
    bad = c;
    bad.push_back(0);
    CHECK_THROWS_AS(Bitstring::from_container(bad), std::invalid_argument);
}

TEST_CASE("round trip on random instances, through the byte container") {
    testing::Gen g(42);
    for (int i = 0; i < 1000; ++i) {
        const QuantizedFir q = random_fir(g);
        const auto bits = encode(q);
        CHECK(bits.length() == encoded_length(q.impulse_class(), q.eps()));
        const auto back = decode(Bitstring::from_container(bits.to_container()), q.impulse_class(), q.eps());
        CHECK(back == q);
        const auto taps = back.taps();
        for (std::size_t t = 0; t < taps.size(); ++t)
            CHECK(std::abs(taps[t]) <= q.impulse_class().envelope(t) * (1 + 1e-12));
    }
}

TEST_CASE("bit budget: worked instances") {
    auto b = bit_budget_report(kWorked, 0.25);
    CHECK(b.truncation_length == 4);
    CHECK(b.delta == 0.03125);
    CHECK(b.total_bits == 22);
    CHECK(b.chain_bound == doctest::Approx(26.0).epsilon(1e-12));

    b = bit_budget_report(kWorked, 1e-3);
    CHECK(b.truncation_length == 12);
    CHECK(b.total_bits == 126);
    CHECK(b.chain_bound == doctest::Approx(144.609).epsilon(1e-4));
    CHECK(b.main_term == doctest::Approx(entropy_main_term(kWorked, 1e-3)));

    CHECK_THROWS_AS(bit_budget_report(kWorked, 1.0), std::invalid_argument);
    CHECK(bit_budget_report(kWorked, 1.0 - 1e-9).main_term < 1e-12);
}

TEST_CASE("bit budget: total within chain bound, ratio non-increasing") {
    for (double a : {0.1, 0.5, std::numbers::ln2, 1.0, 2.0, 4.0})
        for (double c : {0.5, 1.0, 10.0})
            for (double rel : {0.5, 1e-1, 1e-2, 1e-3, 1e-5, 1e-8}) {
                const auto b = bit_budget_report(ImpulseClass(c, a), c * rel);
                CHECK(double(b.total_bits) <= b.chain_bound);
            }
    double prev = INFINITY;
    for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
        const double r = bit_budget_report(kWorked, eps).ratio();
        CHECK(r <= prev);
        prev = r;
    }
}
