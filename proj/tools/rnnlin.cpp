// rnnlin: synthesize, verify, and encode RNN realizations of linear systems.
//
//   rnnlin synthesize --kind conv --params kernel.json --out spec.json
//   rnnlin verify --kind conv --params kernel.json --spec spec.json --trials 10 --horizon 64 --seed 1
//   rnnlin entropy-report --C 1 --a 0.6931471805599453 --eps 1e-2 1e-3 --format csv
//   rnnlin encode --taps qfir.json --out qfir.bin --sidecar qfir.class.json
//   rnnlin decode --in qfir.bin --sidecar qfir.class.json --out qfir.json
//
// Exit code 0 on success (verify: iff pass), 1 when verify fails, 2 on errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "rnnlin/cli.hpp"

namespace {

using rnnlin::cli::json;

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_text(path));
    } catch (const json::parse_error& e) {
        throw std::runtime_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
    const std::string s = read_text(path);
    return {s.begin(), s.end()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact RNN realizations of linear dynamical systems"};
    app.require_subcommand(1);

    std::string kind, params, spec, out, taps_out, report_out;
    auto* synth = app.add_subcommand("synthesize", "Build an RNN spec from system parameters");
    synth->add_option("--kind", kind, "conv|freqshift|ltv|rational|quantfir")->required();
    synth->add_option("--params", params, "System parameter JSON file")->required();
    synth->add_option("--out", out, "Spec output file")->required();
    synth->add_option("--taps-out", taps_out, "quantfir: also write the quantized tap file");
    synth->add_option("--report", report_out, "Report output file (default stdout)");

    rnnlin::cli::VerifyOptions vopts;
    double tolerance = 0.0;
    auto* verify = app.add_subcommand("verify", "Compare an RNN spec against the direct oracle");
    verify->add_option("--kind", kind, "System kind of the params file")->required();
    verify->add_option("--params", params, "System parameter JSON file")->required();
    verify->add_option("--spec", spec, "Spec JSON file")->required();
    verify->add_option("--trials", vopts.trials, "Number of random inputs")->capture_default_str();
    verify->add_option("--horizon", vopts.horizon, "Samples per trial")->capture_default_str();
    verify->add_option("--seed", vopts.seed, "RNG seed")->required();
    auto* tol_opt = verify->add_option("--tolerance", tolerance, "Max abs deviation per sample");
    verify->add_option("--out", out, "Report output file (default stdout)");

    double amplitude = 0.0, decay = 0.0;
    std::vector<double> eps_list;
    std::string format = "json";
    auto* entropy = app.add_subcommand("entropy-report", "Bit budget vs. metric-entropy main term");
    entropy->add_option("--C", amplitude, "Envelope amplitude C")->required();
    entropy->add_option("--a", decay, "Envelope decay rate a (nats per step)")->required();
    entropy->add_option("--eps", eps_list, "Target accuracies");
    entropy->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    entropy->add_option("--out", out, "Output file (default stdout)");

    std::string taps_in, sidecar, bits_in;
    auto* enc = app.add_subcommand("encode", "Encode a quantized FIR tap file into a bit container");
    enc->add_option("--taps", taps_in, "Quantized FIR JSON file")->required();
    enc->add_option("--out", out, "Bit container output")->required();
    enc->add_option("--sidecar", sidecar, "Class sidecar output (C, a, eps)")->required();

    auto* dec = app.add_subcommand("decode", "Decode a bit container into a quantized FIR tap file");
    dec->add_option("--in", bits_in, "Bit container")->required();
    dec->add_option("--sidecar", sidecar, "Class sidecar (C, a, eps)")->required();
    dec->add_option("--out", out, "Quantized FIR JSON output (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*synth) {
            const auto k = rnnlin::cli::parse_kind(kind);
            const auto result = rnnlin::cli::synthesize(k, read_json(params));
            write_text(out, rnnlin::cli::dump(result.spec_file));
            if (!taps_out.empty()) {
                if (!result.quantized) throw std::invalid_argument("--taps-out is only valid for --kind quantfir");
                write_text(taps_out, rnnlin::cli::dump(rnnlin::io::quantized_fir_to_json(*result.quantized)));
            }
            write_text(report_out, rnnlin::cli::dump(result.report));
            return 0;
        }
        if (*verify) {
            if (tol_opt->count() > 0) vopts.tolerance = tolerance;
            const auto report =
                rnnlin::cli::verify(rnnlin::cli::parse_kind(kind), read_json(params), read_json(spec), vopts);
            write_text(out, rnnlin::cli::dump(report));
            return report.at("pass").get<bool>() ? 0 : 1;
        }
        if (*entropy) {
            const auto rows = rnnlin::cli::entropy_report(amplitude, decay, eps_list);
            write_text(out, format == "csv" ? rnnlin::cli::entropy_report_csv(rows) : rnnlin::cli::dump(rows));
            return 0;
        }
        if (*enc) {
            const auto encoded = rnnlin::cli::encode_fir(read_json(taps_in));
            write_bytes(out, encoded.container);
            write_text(sidecar, rnnlin::cli::dump(encoded.sidecar));
            return 0;
        }
        if (*dec) {
            write_text(out, rnnlin::cli::dump(rnnlin::cli::decode_fir(read_bytes(bits_in), read_json(sidecar))));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "rnnlin: error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
