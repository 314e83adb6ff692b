#pragma once

#include <cstddef>
#include <functional>
#include <utility>

#include "rnnlin/quantization.hpp"
#include "rnnlin/rnn.hpp"
#include "rnnlin/types.hpp"

namespace rnnlin {

/// Convolution y[t] = sum_l k_l x[t-(l-1)].
/// State dimension L-1 holding the sliding input window h_l[t] = x[t-(l-1)].
RnnSpec build_convolution(const FirKernel& k);

/// Frequency shift y[t] = x[t] e^{2 pi i f t / F}, exact for |x[t]| <= C_in.
/// State dimension F-1 holding the one-hot phase h_l[t] = [(t+1) mod F == l].
RnnSpec build_frequency_shift(std::size_t period, std::size_t shift, InputBound bound);

/// Superposition of time-frequency shifts
///   y[t] = sum_{tau<D} sum_{f<F} S(tau, f) x[t-tau] e^{2 pi i f t / F},
/// exact for |x[t]| <= C_in. The state concatenates the (D-1)-sample input
/// window and the (F-1)-dimensional one-hot phase.
RnnSpec build_ltv(const SpreadingFunction& s, InputBound bound);

/// Difference equation y[t] = sum_i c_i x[t-i] + sum_j d_j y[t-j] with
/// c_i = a_i / b_0 and d_j = -b_j / b_0. The state holds the last Q inputs
/// followed by the last P outputs.
RnnSpec build_rational(const RationalTf& tf);

/// Truncates and quantizes an impulse response from C(C, a) so that
/// ||K - K~||_inf <= eps, and realizes the result as a convolution network.
std::pair<QuantizedFir, RnnSpec> build_quantized_fir(const ImpulseClass& cls,
                                                     const std::function<double(std::size_t)>& impulse,
                                                     double eps);

}  // namespace rnnlin
