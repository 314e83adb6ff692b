#include "rnnlin/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rnnlin/constructors.hpp"
#include "rnnlin/oracles.hpp"
#include "rnnlin/signals.hpp"

namespace rnnlin::cli {

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw std::invalid_argument(std::string("schema: missing field '") + key + "'");
    return j.at(key);
}

double number(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number()) throw std::invalid_argument(std::string("schema: '") + key + "' must be a number");
    return v.get<double>();
}

std::size_t index(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw std::invalid_argument(std::string("schema: '") + key + "' must be a nonnegative integer");
    return v.get<std::size_t>();
}

InputBound input_bound(const json& params) { return InputBound(number(params, "C_in")); }

ImpulseClass impulse_class(const json& params) { return ImpulseClass(number(params, "C"), number(params, "a")); }

/// "impulse": {"taps": [...]} (zero beyond the list) or {"scale": s, "rate": r} for s e^{-r t}.
std::function<double(std::size_t)> impulse_oracle(const json& params) {
    const json& spec = field(params, "impulse");
    if (spec.contains("taps")) {
        auto taps = io::real_sequence_from_json(spec);
        return [taps = std::move(taps)](std::size_t t) { return t < taps.size() ? taps[t] : 0.0; };
    }
    const double scale = number(spec, "scale");
    const double rate = number(spec, "rate");
    return [scale, rate](std::size_t t) { return scale * std::exp(-rate * static_cast<double>(t)); };
}

QuantizedFir quantized_from_params(const json& params) {
    return quantize_impulse_response(impulse_class(params), impulse_oracle(params), number(params, "eps"));
}

ComplexSequence to_complex(const RealSequence& y) { return ComplexSequence(y.begin(), y.end()); }

ComplexSequence reference_output(SystemKind kind, const json& params, std::span<const double> x, std::size_t horizon) {
    switch (kind) {
        case SystemKind::conv:
            return to_complex(oracle::conv_oracle(io::kernel_from_json(params), x, horizon));
        case SystemKind::freqshift:
            return oracle::modulation_oracle(index(params, "F"), index(params, "f"), x, horizon);
        case SystemKind::ltv:
            return oracle::ltv_oracle(io::spreading_from_json(params), x, horizon);
        case SystemKind::rational:
            return to_complex(oracle::recursion_oracle(io::rational_from_json(params), x, horizon));
        case SystemKind::quantfir:
            return to_complex(oracle::conv_oracle(FirKernel(quantized_from_params(params).taps()), x, horizon));
    }
    throw std::logic_error("unreachable");
}

bool complex_valued(SystemKind kind) { return kind == SystemKind::freqshift || kind == SystemKind::ltv; }

}  // namespace

SystemKind parse_kind(std::string_view name) {
    if (name == "conv") return SystemKind::conv;
    if (name == "freqshift") return SystemKind::freqshift;
    if (name == "ltv") return SystemKind::ltv;
    if (name == "rational") return SystemKind::rational;
    if (name == "quantfir") return SystemKind::quantfir;
    throw std::invalid_argument("unknown kind '" + std::string(name) + "' (expected conv|freqshift|ltv|rational|quantfir)");
}

std::string_view kind_name(SystemKind kind) {
    switch (kind) {
        case SystemKind::conv: return "conv";
        case SystemKind::freqshift: return "freqshift";
        case SystemKind::ltv: return "ltv";
        case SystemKind::rational: return "rational";
        case SystemKind::quantfir: return "quantfir";
    }
    return "?";
}

double default_tolerance(SystemKind kind) { return complex_valued(kind) ? 1e-8 : 1e-9; }

Synthesis synthesize(SystemKind kind, const json& params) {
    Synthesis out;
    std::optional<double> bound;
    switch (kind) {
        case SystemKind::conv:
            out.spec = build_convolution(io::kernel_from_json(params));
            break;
        case SystemKind::freqshift: {
            const InputBound b = input_bound(params);
            out.spec = build_frequency_shift(index(params, "F"), index(params, "f"), b);
            bound = b.value();
            break;
        }
        case SystemKind::ltv: {
            const InputBound b = input_bound(params);
            out.spec = build_ltv(io::spreading_from_json(params), b);
            bound = b.value();
            break;
        }
        case SystemKind::rational:
            out.spec = build_rational(io::rational_from_json(params));
            break;
        case SystemKind::quantfir: {
            auto [q, spec] = build_quantized_fir(impulse_class(params), impulse_oracle(params), number(params, "eps"));
            out.spec = std::move(spec);
            out.quantized = std::move(q);
            break;
        }
    }

    out.spec_file = io::spec_to_json(out.spec);
    out.spec_file["kind"] = kind_name(kind);
    if (bound) out.spec_file["input_bound"] = *bound;

    out.report = json{{"command", "synthesize"},
                      {"kind", kind_name(kind)},
                      {"state_dim", out.spec.state_dim()},
                      {"hidden_width", out.spec.hidden_width()},
                      {"nonzero_weights", out.spec.nonzero_weights()}};
    if (bound) out.report["input_bound"] = *bound;
    if (out.quantized) {
        out.report["M"] = out.quantized->length();
        out.report["delta"] = out.quantized->delta();
        out.report["taps"] = out.quantized->taps();
        out.report["encoded_bits"] = encode(*out.quantized).length();
    }
    return out;
}

json verify(SystemKind kind, const json& params, const json& spec_file, const VerifyOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    if (options.trials == 0) throw std::invalid_argument("verify: trials must be at least 1");
    if (options.horizon == 0) throw std::invalid_argument("verify: horizon must be at least 1");

    const RnnSpec spec = io::spec_from_json(spec_file);
    if (!complex_valued(kind) && !spec.has_real_output())
        throw std::invalid_argument(std::string("verify: incompatible kinds: spec has complex output weights but '") +
                                    std::string(kind_name(kind)) + "' systems are real-valued");

    double c_in = 1.0;
    if (params.contains("C_in")) c_in = number(params, "C_in");
    else if (spec_file.contains("input_bound")) c_in = spec_file.at("input_bound").get<double>();
    const double tolerance = options.tolerance.value_or(default_tolerance(kind));

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> dist(-c_in, c_in);
    double worst = 0.0;
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
        RealSequence x(options.horizon);
        for (double& v : x) v = dist(rng);
        const ComplexSequence expected = reference_output(kind, params, x, options.horizon);
        const ComplexSequence got = run(spec, x, options.horizon).y;
        for (std::size_t t = 0; t < options.horizon; ++t) worst = std::max(worst, std::abs(got[t] - expected[t]));
    }

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return json{{"command", "verify"},
                {"kind", kind_name(kind)},
                {"params_digest", digest(params.dump())},
                {"spec_digest", digest(spec_file.dump())},
                {"trials", options.trials},
                {"horizon", options.horizon},
                {"seed", options.seed},
                {"input_bound", c_in},
                {"tolerance", tolerance},
                {"max_abs_deviation", worst},
                {"pass", worst <= tolerance},
                {"wall_time_s", wall}};
}

json entropy_report(double amplitude, double decay, const std::vector<double>& eps_list) {
    const ImpulseClass cls(amplitude, decay);
    json rows = json::array();
    for (double eps : eps_list) {
        const BitBudget b = bit_budget_report(cls, eps);
        rows.push_back(json{{"eps", eps},
                            {"M", b.truncation_length},
                            {"delta", b.delta},
                            {"total_bits", b.total_bits},
                            {"chain_bound", b.chain_bound},
                            {"main_term", b.main_term},
                            {"ratio", b.ratio()}});
    }
    return rows;
}

std::string entropy_report_csv(const json& rows) {
    std::ostringstream os;
    os.precision(17);
    os << "eps,M,delta,total_bits,chain_bound,main_term,ratio\n";
    for (const auto& r : rows)
        os << r.at("eps").get<double>() << ',' << r.at("M").get<std::size_t>() << ',' << r.at("delta").get<double>()
           << ',' << r.at("total_bits").get<std::size_t>() << ',' << r.at("chain_bound").get<double>() << ','
           << r.at("main_term").get<double>() << ',' << r.at("ratio").get<double>() << '\n';
    return os.str();
}

EncodedFir encode_fir(const json& quantized_fir) {
    const QuantizedFir q = io::quantized_fir_from_json(quantized_fir);
    return {encode(q).to_container(), io::sidecar_to_json(q.impulse_class(), q.eps())};
}

json decode_fir(const std::vector<std::uint8_t>& container, const json& sidecar) {
    const auto [cls, eps] = io::sidecar_from_json(sidecar);
    return io::quantized_fir_to_json(decode(Bitstring::from_container(container), cls, eps));
}

std::string digest(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace rnnlin::cli
