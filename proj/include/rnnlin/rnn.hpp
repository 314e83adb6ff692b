#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "rnnlin/types.hpp"

namespace rnnlin {

/**
 * Recurrent network with a single ReLU hidden layer per step.
 *
 *   g[t] = relu(A1 (x[t]; h[t-1]) + b1)
 *   h[t] = A_h g[t] + b2_state
 *   y[t] = W_out g[t] + b2_out
 *
 * with h[-1] = 0. The state path (A1, b1, A_h, b2_state) is real, so ReLU only
 * ever sees real arguments. The output row W_out is the collapsed product of
 * the output weights and the virtual representation map and may be complex.
 */
struct RnnSpec {
    Eigen::MatrixXd a1;          // n x (m+1)
    Eigen::VectorXd b1;          // n
    Eigen::MatrixXd a_h;         // m x n
    Eigen::RowVectorXcd w_out;   // 1 x n
    Eigen::VectorXd b2_state;    // m
    Complex b2_out{0.0, 0.0};

    std::size_t state_dim() const noexcept { return static_cast<std::size_t>(a_h.rows()); }
    std::size_t hidden_width() const noexcept { return static_cast<std::size_t>(a1.rows()); }

    /// True when every output weight and the output bias are real.
    bool has_real_output() const;

    /// Number of nonzero entries across all weight matrices and bias vectors.
    std::size_t nonzero_weights() const;

    /// Throws std::invalid_argument on inconsistent shapes or non-finite entries.
    void validate() const;
};

struct RunResult {
    ComplexSequence y;
    std::vector<Eigen::VectorXd> states;  // states[t] = h[t], t = 0..T-1
};

/// Runs the network for `horizon` steps on a real input (zero beyond x.size()).
RunResult run(const RnnSpec& spec, std::span<const double> x, std::size_t horizon);

/// Real part of the output, for specs with real output weights.
RealSequence real_part(const ComplexSequence& y);

/// Canonical Elman network: h[t] = relu(U x[t] + W1 h[t-1] + bias1), y[t] = W2 h[t] + bias2.
struct ElmanSpec {
    Eigen::VectorXd u;        // m x 1
    Eigen::MatrixXd w1;       // m x m
    Eigen::RowVectorXd w2;    // 1 x m
    Eigen::VectorXd bias1;    // m
    double bias2 = 0.0;
    Eigen::VectorXd h_init;   // m

    std::size_t state_dim() const noexcept { return static_cast<std::size_t>(w1.rows()); }
    void validate() const;
};

/// Converts to the Elman form with the same input-output map. Requires a real
/// output row and b2_state = 0 (then h_init = 0 is a valid initial state).
ElmanSpec to_elman(const RnnSpec& spec);

RealSequence run_elman(const ElmanSpec& spec, std::span<const double> x, std::size_t horizon);

}  // namespace rnnlin
