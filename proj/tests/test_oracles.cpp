#include <cmath>

#include "doctest.h"
#include "rnnlin/oracles.hpp"
#include "test_helpers.hpp"

using namespace rnnlin;
using namespace rnnlin::oracle;
using testing::as_complex;
using testing::max_abs_diff;

TEST_CASE("conv_oracle examples") {
    const std::vector<double> x{0.5, -1.5, 2.0};
    CHECK(conv_oracle(FirKernel({1.0}), x, 3) == x);
    CHECK(conv_oracle(FirKernel({0.0, 1.0}), std::vector<double>{1.0}, 3) == std::vector<double>{0, 1, 0});
    CHECK(conv_oracle(FirKernel({1.0, 2.0}), std::vector<double>{1, 1}, 3) == std::vector<double>{1, 3, 2});
    CHECK_THROWS_AS(conv_oracle(FirKernel({1.0}), x, 0), std::invalid_argument);
}

TEST_CASE("ltv_oracle examples") {
    const std::vector<double> x{0.5, -1.5, 2.0, 1.0};
    CHECK(max_abs_diff(ltv_oracle(SpreadingFunction::from_rows({{1.0}}), x, 4), as_complex(x)) == 0.0);

    // Support at (0, f) reproduces the modulation formula.
    for (std::size_t f = 0; f < 5; ++f) {
        std::vector<Complex> row(5, 0.0);
        row[f] = 1.0;
        const auto s = SpreadingFunction::from_rows({row});
        CHECK(max_abs_diff(ltv_oracle(s, x, 4), modulation_oracle(5, f, x, 4)) <= 1e-12);
    }

    testing::Gen g(51);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Complex> v(4);
        for (auto& e : v) e = g.complex(1.0);
        const SpreadingFunction s(2, 2, v);
        const auto xr = g.signal(40, 1.0);
        CHECK(max_abs_diff(ltv_oracle(s, xr, 40), ltv_oracle_doppler_first(s, xr, 40)) <= 1e-12);
    }
}

TEST_CASE("recursion_oracle examples") {
    const std::vector<double> x{1.0, -2.0, 0.25};
    const RationalTf fir({1.0, 2.0, -1.0}, {1.0});
    CHECK(recursion_oracle(fir, x, 6) == conv_oracle(FirKernel({1.0, 2.0, -1.0}), x, 6));

    const auto geo = recursion_oracle(RationalTf({1.0}, {1.0, -0.5}), std::vector<double>{1.0}, 10);
    for (std::size_t t = 0; t < 10; ++t) CHECK(geo[t] == std::ldexp(1.0, -int(t)));

    const auto step = recursion_oracle(RationalTf({1.0}, {1.0, -1.0}), std::vector<double>{1.0}, 10);
    for (double v : step) CHECK(v == 1.0);

    // b_0 scales everything.
    const auto scaled = recursion_oracle(RationalTf({2.0}, {2.0, -1.0}), std::vector<double>{1.0}, 5);
    CHECK(scaled == recursion_oracle(RationalTf({1.0}, {1.0, -0.5}), std::vector<double>{1.0}, 5));
}

TEST_CASE("oracle consistency") {
    testing::Gen g(52);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = g.signal(50, 2.0);
        const FirKernel k = g.kernel(10);
        std::vector<std::vector<Complex>> rows;
        for (double v : k.taps()) rows.push_back({Complex(v, 0.0)});
        CHECK(max_abs_diff(ltv_oracle(SpreadingFunction::from_rows(rows), x, 50), as_complex(conv_oracle(k, x, 50))) <=
              1e-12);
        const auto r = recursion_oracle(RationalTf(k.taps(), {1.0}), x, 50);
        CHECK(max_abs_diff(as_complex(r), as_complex(conv_oracle(k, x, 50))) <= 1e-12);
    }
}

TEST_CASE("oracles are linear") {
    testing::Gen g(53);
    for (int trial = 0; trial < 30; ++trial) {
        const auto x1 = g.signal(40, 1.0), x2 = g.signal(40, 1.0);
        const double alpha = g.uniform(-3.0, 3.0), beta = g.uniform(-3.0, 3.0);
        std::vector<double> mix(40);
        for (std::size_t i = 0; i < 40; ++i) mix[i] = alpha * x1[i] + beta * x2[i];

        auto combine = [&](const ComplexSequence& a, const ComplexSequence& b) {
            ComplexSequence out(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) out[i] = alpha * a[i] + beta * b[i];
            return out;
        };

        const FirKernel k = g.kernel(8);
        CHECK(max_abs_diff(as_complex(conv_oracle(k, mix, 40)),
                           combine(as_complex(conv_oracle(k, x1, 40)), as_complex(conv_oracle(k, x2, 40)))) <= 1e-9);
        const auto s = g.spreading(4, 4);
        CHECK(max_abs_diff(ltv_oracle(s, mix, 40), combine(ltv_oracle(s, x1, 40), ltv_oracle(s, x2, 40))) <= 1e-9);
        const auto tf = g.stable_rational(4, 4);
        CHECK(max_abs_diff(as_complex(recursion_oracle(tf, mix, 40)),
                           combine(as_complex(recursion_oracle(tf, x1, 40)),
                                   as_complex(recursion_oracle(tf, x2, 40)))) <= 1e-9);
    }
}
