#include <algorithm>
#include <numbers>

#include "doctest.h"
#include "rnnlin/cli.hpp"
#include "rnnlin/constructors.hpp"
#include "rnnlin/io.hpp"
#include "test_helpers.hpp"

using namespace rnnlin;
using rnnlin::io::json;

TEST_CASE("io: value round trips") {
    CHECK(io::complex_from_json(io::complex_to_json({1.5, -2.0})) == Complex(1.5, -2.0));
    CHECK(io::complex_from_json(json(3.0)) == Complex(3.0, 0.0));

    const auto s = SpreadingFunction::from_rows({{1.0, Complex(0.0, 2.0)}, {-1.0, 0.5}});
    const auto s2 = io::spreading_from_json(io::spreading_to_json(s));
    CHECK(s2.delays() == 2);
    CHECK(s2.dopplers() == 2);
    CHECK(s2(0, 1) == Complex(0.0, 2.0));
    CHECK(s2(1, 1) == Complex(0.5, 0.0));

    const RationalTf tf({1.0, 0.5}, {2.0, -0.25});
    const auto tf2 = io::rational_from_json(io::rational_to_json(tf));
    CHECK(tf2.num() == tf.num());
    CHECK(tf2.den() == tf.den());

    testing::Gen g(61);
    const auto spec = build_ltv(g.spreading(3, 3), InputBound(1.5));
    const auto back = io::spec_from_json(json::parse(io::spec_to_json(spec).dump()));
    CHECK(back.a1 == spec.a1);
    CHECK(back.a_h == spec.a_h);
    CHECK(back.w_out == spec.w_out);
    CHECK(back.b1 == spec.b1);
}

TEST_CASE("io: schema errors") {
    CHECK_THROWS_AS(io::kernel_from_json(json{{"tap", {1.0}}}), std::invalid_argument);
    CHECK_THROWS_AS(io::kernel_from_json(json{{"taps", json::array()}}), std::invalid_argument);
    CHECK_THROWS_AS(io::spreading_from_json(json{{"D", 1}, {"F", 2}, {"S", {{1.0}}}}), std::invalid_argument);
    CHECK_THROWS_AS(io::spec_from_json(json{{"state_dim", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(io::sidecar_from_json(json{{"C", 1.0}}), std::invalid_argument);
}

TEST_CASE("synthesize: examples") {
    auto s = cli::synthesize(cli::SystemKind::conv, json{{"taps", {1.0}}});
    CHECK(s.spec.state_dim() == 0);
    CHECK(s.spec_file.at("kind") == "conv");

    s = cli::synthesize(cli::SystemKind::quantfir,
                        json{{"C", 1.0}, {"a", std::numbers::ln2}, {"eps", 0.25},
                             {"impulse", {{"scale", 1.0}, {"rate", std::numbers::ln2}}}});
    REQUIRE(s.quantized);
    CHECK(s.report.at("M") == 4);
    CHECK(s.report.at("delta") == 0.03125);
    CHECK(s.report.at("taps").size() == 4);
    CHECK(s.report.at("encoded_bits") == 22);

    CHECK_THROWS_AS(cli::synthesize(cli::SystemKind::rational, json{{"num", {1.0}}, {"den", {0.0, 1.0}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_kind("fir"), std::invalid_argument);
}

TEST_CASE("verify: pass, fail, incompatible") {
    const json conv{{"taps", {0.5, -1.0, 2.0}}};
    const auto s = cli::synthesize(cli::SystemKind::conv, conv);
    const cli::VerifyOptions opt{5, 32, 7, std::nullopt};
    auto r = cli::verify(cli::SystemKind::conv, conv, s.spec_file, opt);
    CHECK(r.at("pass") == true);
    CHECK(r.at("tolerance") == 1e-9);
    // Same seed, same inputs.
    CHECK(cli::verify(cli::SystemKind::conv, conv, s.spec_file, opt).at("max_abs_deviation") ==
          r.at("max_abs_deviation"));

    json corrupted = s.spec_file;
    corrupted["w_out"][0] = 0.75;
    r = cli::verify(cli::SystemKind::conv, conv, corrupted, opt);
    CHECK(r.at("pass") == false);
    CHECK(r.at("max_abs_deviation").get<double>() > 1e-3);

    // A frequency shift is the one-hot spreading function at (0, f).
    const auto fs = cli::synthesize(cli::SystemKind::freqshift, json{{"F", 4}, {"f", 1}, {"C_in", 2.0}});
    const json ltv{{"D", 1}, {"F", 4}, {"S", {{0.0, 1.0, 0.0, 0.0}}}, {"C_in", 2.0}};
    CHECK(cli::verify(cli::SystemKind::ltv, ltv, fs.spec_file, opt).at("pass") == true);

    CHECK_THROWS_WITH_AS(cli::verify(cli::SystemKind::conv, conv, fs.spec_file, opt),
                         doctest::Contains("incompatible kinds"), std::invalid_argument);
}

TEST_CASE("entropy report") {
    const auto rows = cli::entropy_report(1.0, std::numbers::ln2, {0.25, 1e-3});
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].at("M") == 4);
    CHECK(rows[0].at("total_bits") == 22);
    CHECK(rows[1].at("total_bits") == 126);
    const auto csv = cli::entropy_report_csv(rows);
    CHECK(csv.rfind("eps,M,delta,total_bits,chain_bound,main_term,ratio\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
    CHECK(cli::entropy_report_csv(cli::entropy_report(1.0, 1.0, {})) ==
          "eps,M,delta,total_bits,chain_bound,main_term,ratio\n");
}

TEST_CASE("encode and decode through files") {
    const QuantizedFir q(ImpulseClass(1.0, std::numbers::ln2), 0.25, {32, -16, 8, 4});
    const std::string text = cli::dump(io::quantized_fir_to_json(q));
    const auto enc = cli::encode_fir(json::parse(text));
    CHECK(enc.container.size() == 8 + 3);
    CHECK(cli::dump(cli::decode_fir(enc.container, enc.sidecar)) == text);

    json wrong = enc.sidecar;
    wrong["eps"] = 1e-3;
    CHECK_THROWS_AS(cli::decode_fir(enc.container, wrong), std::invalid_argument);

    const QuantizedFir zero(ImpulseClass(1.0, std::numbers::ln2), 0.25, {0, 0, 0, 0});
    const auto z = cli::encode_fir(io::quantized_fir_to_json(zero));
    CHECK(z.container[0] == 22);
    for (std::size_t i = 8; i < z.container.size(); ++i) CHECK(z.container[i] == 0);
}

TEST_CASE("digest") {
    CHECK(cli::digest("") == "cbf29ce484222325");
    CHECK(cli::digest("a") == "af63dc4c8601ec8c");
}
