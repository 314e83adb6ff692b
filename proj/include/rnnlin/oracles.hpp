#pragma once

// Direct-evaluation references for the synthesized networks. Deliberately
// naive loops; this library shares nothing with the constructors or runtime.

#include <cstddef>
#include <span>

#include "rnnlin/types.hpp"

namespace rnnlin::oracle {

/// y[t] = sum_tau k[tau+1] x[t-tau] for t < T.
RealSequence conv_oracle(const FirKernel& k, std::span<const double> x, std::size_t horizon);

/// y[t] = x[t] e^{2 pi i f t / F}.
ComplexSequence modulation_oracle(std::size_t period, std::size_t shift, std::span<const double> x,
                                  std::size_t horizon);

/// y[t] = sum_tau sum_f S(tau, f) x[t-tau] e^{2 pi i f t / F}.
ComplexSequence ltv_oracle(const SpreadingFunction& s, std::span<const double> x, std::size_t horizon);

/// Same sum as ltv_oracle with the loop order swapped (Doppler outermost) and
/// the modulation evaluated from the unreduced exponent.
ComplexSequence ltv_oracle_doppler_first(const SpreadingFunction& s, std::span<const double> x,
                                         std::size_t horizon);

/// y[t] = sum_i (a_i/b_0) x[t-i] - sum_{j>=1} (b_j/b_0) y[t-j], zero initial conditions.
RealSequence recursion_oracle(const RationalTf& tf, std::span<const double> x, std::size_t horizon);

}  // namespace rnnlin::oracle
