#pragma once

// JSON representations of the library's value types.
//
//   sequence / kernel   {"taps": [x0, x1, ...]}, complex samples as {"re": .., "im": ..}
//   spreading function  {"D": .., "F": .., "S": [[s00, s01, ...], ...]}
//   rational tf         {"num": [a0, ...], "den": [b0, ...]}
//   rnn spec            {"state_dim", "hidden_width", "a1", "b1", "a_h", "w_out", "b2_state", "b2_out"}
//                       matrices as row-major lists of lists
//   quantized fir       {"C", "a", "eps", "M", "delta", "indices", "taps"}
//   codec sidecar       {"C", "a", "eps"}

#include "json.hpp"

#include "rnnlin/quantization.hpp"
#include "rnnlin/rnn.hpp"
#include "rnnlin/types.hpp"

namespace rnnlin::io {

using nlohmann::json;

json complex_to_json(Complex c);
Complex complex_from_json(const json& j);

json sequence_to_json(std::span<const double> x);
json sequence_to_json(std::span<const Complex> x);
RealSequence real_sequence_from_json(const json& j);
ComplexSequence complex_sequence_from_json(const json& j);

FirKernel kernel_from_json(const json& j);

json spreading_to_json(const SpreadingFunction& s);
SpreadingFunction spreading_from_json(const json& j);

json rational_to_json(const RationalTf& tf);
RationalTf rational_from_json(const json& j);

json spec_to_json(const RnnSpec& spec);
RnnSpec spec_from_json(const json& j);

json quantized_fir_to_json(const QuantizedFir& q);
QuantizedFir quantized_fir_from_json(const json& j);

json sidecar_to_json(const ImpulseClass& cls, double eps);
std::pair<ImpulseClass, double> sidecar_from_json(const json& j);

}  // namespace rnnlin::io
