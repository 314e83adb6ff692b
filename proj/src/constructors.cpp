#include "rnnlin/constructors.hpp"

#include <numbers>
#include <stdexcept>

namespace rnnlin {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// e^{2 pi i (num mod F) / F}; reducing the exponent first keeps the phase exact for large t.
Complex unit_root(std::size_t num, std::size_t period) {
    const double r = static_cast<double>(num % period);
    return std::polar(1.0, 2.0 * std::numbers::pi * r / static_cast<double>(period));
}

/// Period-position encoder: row 0 is all -1, rows 1..F-1 the identity.
MatrixXd period_matrix(std::size_t period) {
    const auto f = static_cast<Index>(period);
    MatrixXd a = MatrixXd::Zero(f, f - 1);
    a.row(0).setConstant(-1.0);
    a.bottomRows(f - 1).setIdentity();
    return a;
}

VectorXd period_bias(std::size_t period) {
    VectorXd b = VectorXd::Zero(static_cast<Index>(period));
    b(0) = 1.0;
    return b;
}

RnnSpec empty_spec(Index state_dim, Index width) {
    RnnSpec s;
    s.a1 = MatrixXd::Zero(width, state_dim + 1);
    s.b1 = VectorXd::Zero(width);
    s.a_h = MatrixXd::Zero(state_dim, width);
    s.w_out = Eigen::RowVectorXcd::Zero(width);
    s.b2_state = VectorXd::Zero(state_dim);
    return s;
}

}  // namespace

RnnSpec build_convolution(const FirKernel& k) {
    const auto len = static_cast<Index>(k.length());
    RnnSpec s = empty_spec(len - 1, 2 * len);

    s.a1.topRows(len).setIdentity();
    s.a1.bottomRows(len) = -MatrixXd::Identity(len, len);
    for (Index l = 0; l + 1 < len; ++l) {
        s.a_h(l, l) = 1.0;
        s.a_h(l, len + l) = -1.0;
    }
    for (Index l = 0; l < len; ++l) {
        s.w_out(l) = k[static_cast<std::size_t>(l)];
        s.w_out(len + l) = -k[static_cast<std::size_t>(l)];
    }
    return s;
}

RnnSpec build_frequency_shift(std::size_t period, std::size_t shift, InputBound bound) {
    if (period == 0) throw std::invalid_argument("build_frequency_shift: period F must be positive");
    if (shift >= period) throw std::invalid_argument("build_frequency_shift: shift f must lie in [0, F-1]");

    const auto f = static_cast<Index>(period);
    const double c = bound.value();
    const MatrixXd a_e = period_matrix(period);
    const VectorXd b_e = period_bias(period);

    RnnSpec s = empty_spec(f - 1, 2 * f);
    // Rows 0..F-1: gated input (x + C) [position == l]; rows F..2F-1: position one-hot e[t].
    s.a1.block(0, 0, f, 1).setOnes();
    s.a1.block(0, 1, f, f - 1) = 2.0 * c * a_e;
    s.a1.block(f, 1, f, f - 1) = a_e;
    s.b1.head(f) = 2.0 * c * b_e - c * VectorXd::Ones(f);
    s.b1.tail(f) = b_e;

    for (Index l = 0; l + 1 < f; ++l) s.a_h(l, f + l) = 1.0;

    for (Index n = 0; n < f; ++n) {
        const Complex w = unit_root(static_cast<std::size_t>(n) * shift, period);
        s.w_out(n) = w;
        s.w_out(f + n) = -c * w;
    }
    return s;
}

RnnSpec build_ltv(const SpreadingFunction& spread, InputBound bound) {
    const auto d = static_cast<Index>(spread.delays());
    const auto f = static_cast<Index>(spread.dopplers());
    const double c = bound.value();
    const MatrixXd a_e = period_matrix(spread.dopplers());
    const VectorXd b_e = period_bias(spread.dopplers());

    // Hidden layer: D blocks of F gated samples, 2D window rows, F phase rows.
    const Index gated = d * f;
    const Index window = gated;
    const Index phase = gated + 2 * d;
    // Input columns: x[t], D-1 window samples, F-1 phase bits.
    const Index phase_col = d;

    RnnSpec s = empty_spec((d - 1) + (f - 1), gated + 2 * d + f);

    for (Index tau = 0; tau < d; ++tau) {
        s.a1.block(tau * f, tau, f, 1).setOnes();
        s.a1.block(tau * f, phase_col, f, f - 1) = 2.0 * c * a_e;
        s.b1.segment(tau * f, f) = 2.0 * c * b_e - c * VectorXd::Ones(f);
    }
    s.a1.block(window, 0, d, d).setIdentity();
    s.a1.block(window + d, 0, d, d) = -MatrixXd::Identity(d, d);
    s.a1.block(phase, phase_col, f, f - 1) = a_e;
    s.b1.segment(phase, f) = b_e;

    for (Index l = 0; l + 1 < d; ++l) {
        s.a_h(l, window + l) = 1.0;
        s.a_h(l, window + d + l) = -1.0;
    }
    for (Index l = 0; l + 1 < f; ++l) s.a_h(d - 1 + l, phase + l) = 1.0;

    // Collapsed output row: S(tau, .)^T A_F on each gated block, -C sum_tau S(tau, .)^T A_F on the phase rows.
    for (Index n = 0; n < f; ++n) {
        Complex phase_weight{0.0, 0.0};
        for (Index tau = 0; tau < d; ++tau) {
            Complex w{0.0, 0.0};
            for (Index fr = 0; fr < f; ++fr)
                w += spread(static_cast<std::size_t>(tau), static_cast<std::size_t>(fr)) *
                     unit_root(static_cast<std::size_t>(fr * n), spread.dopplers());
            s.w_out(tau * f + n) = w;
            phase_weight += w;
        }
        s.w_out(phase + n) = -c * phase_weight;
    }
    return s;
}

RnnSpec build_rational(const RationalTf& tf) {
    const auto q = static_cast<Index>(tf.num_order());
    const auto p = static_cast<Index>(tf.den_order());
    const double b0 = tf.den().front();
    const Index dim = p + q + 1;

    // Row layout of W: y[t]; x[t..t-Q+1]; y[t..t-P+1]. Columns: x[t..t-Q]; y[t-1..t-P].
    MatrixXd w = MatrixXd::Zero(dim, dim);
    Eigen::RowVectorXd coeffs(dim);
    for (Index i = 0; i <= q; ++i) coeffs(i) = tf.num()[static_cast<std::size_t>(i)] / b0;
    for (Index j = 1; j <= p; ++j) coeffs(q + j) = -tf.den()[static_cast<std::size_t>(j)] / b0;

    w.row(0) = coeffs;
    for (Index i = 0; i < q; ++i) w(1 + i, i) = 1.0;
    if (p > 0) {
        w.row(q + 1) = coeffs;
        for (Index j = 1; j < p; ++j) w(q + 1 + j, q + j) = 1.0;
    }

    RnnSpec s = empty_spec(q + p, 2 * dim);
    s.a1.topRows(dim).setIdentity();
    s.a1.bottomRows(dim) = -MatrixXd::Identity(dim, dim);

    MatrixXd a2(dim, 2 * dim);
    a2 << w, -w;
    s.w_out = a2.row(0).cast<Complex>();
    s.a_h = a2.bottomRows(dim - 1);
    return s;
}

std::pair<QuantizedFir, RnnSpec> build_quantized_fir(const ImpulseClass& cls,
                                                     const std::function<double(std::size_t)>& impulse,
                                                     double eps) {
    QuantizedFir q = quantize_impulse_response(cls, impulse, eps);
    RnnSpec spec = build_convolution(FirKernel(q.taps()));
    return {std::move(q), std::move(spec)};
}

}  // namespace rnnlin
