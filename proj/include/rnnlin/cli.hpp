#pragma once

// Command implementations behind the `rnnlin` executable. Kept in a library so
// the tests can drive them without spawning processes.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rnnlin/io.hpp"
#include "rnnlin/quantization.hpp"
#include "rnnlin/rnn.hpp"

namespace rnnlin::cli {

using io::json;

enum class SystemKind { conv, freqshift, ltv, rational, quantfir };

SystemKind parse_kind(std::string_view name);
std::string_view kind_name(SystemKind kind);

/// Complex-valued outputs (frequency shifts, LTV) get the looser default tolerance.
double default_tolerance(SystemKind kind);

struct Synthesis {
    RnnSpec spec;
    json spec_file;  // spec JSON plus "kind" and "input_bound"
    json report;
    std::optional<QuantizedFir> quantized;
};

/// Builds the network described by a params document of the given kind.
Synthesis synthesize(SystemKind kind, const json& params);

struct VerifyOptions {
    std::size_t trials = 10;
    std::size_t horizon = 64;
    std::uint64_t seed = 0;
    std::optional<double> tolerance;
};

/// Runs `spec` on seeded random inputs, uniform on [-C_in, C_in], against the
/// oracle for the system in `params`. Returns the run report; "pass" is true
/// iff the max deviation is within tolerance.
json verify(SystemKind kind, const json& params, const json& spec_file, const VerifyOptions& options);

/// Rows of (eps, M, delta, total_bits, chain_bound, main_term, ratio).
json entropy_report(double amplitude, double decay, const std::vector<double>& eps_list);
std::string entropy_report_csv(const json& rows);

struct EncodedFir {
    std::vector<std::uint8_t> container;
    json sidecar;
};

EncodedFir encode_fir(const json& quantized_fir);
json decode_fir(const std::vector<std::uint8_t>& container, const json& sidecar);

/// 64-bit FNV-1a digest as 16 hex digits.
std::string digest(std::string_view bytes);

/// Stable textual form used for every JSON file the tool writes.
std::string dump(const json& j);

}  // namespace rnnlin::cli
