#include "rnnlin/rnn.hpp"

#include <stdexcept>
#include <string>

namespace rnnlin {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

template <class Derived>
std::size_t count_nonzero(const Eigen::DenseBase<Derived>& m) {
    std::size_t n = 0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != typename Derived::Scalar(0)) ++n;
    return n;
}

}  // namespace

bool RnnSpec::has_real_output() const { return (w_out.imag().array() == 0.0).all() && b2_out.imag() == 0.0; }

std::size_t RnnSpec::nonzero_weights() const {
    return count_nonzero(a1) + count_nonzero(b1) + count_nonzero(a_h) + count_nonzero(w_out) +
           count_nonzero(b2_state) + (b2_out != Complex(0.0) ? 1 : 0);
}

void RnnSpec::validate() const {
    const auto n = a1.rows();
    const auto m = a_h.rows();
    require(n > 0, "RnnSpec: hidden width must be positive");
    require(a1.cols() == m + 1, "RnnSpec: A1 must have state_dim + 1 columns");
    require(b1.size() == n, "RnnSpec: b1 must have hidden_width entries");
    require(a_h.cols() == n, "RnnSpec: A_h must have hidden_width columns");
    require(w_out.size() == n, "RnnSpec: W_out must have hidden_width entries");
    require(b2_state.size() == m, "RnnSpec: b2_state must have state_dim entries");
    require(a1.allFinite() && b1.allFinite() && a_h.allFinite() && b2_state.allFinite(),
            "RnnSpec: state weights must be finite");
    require(w_out.real().allFinite() && w_out.imag().allFinite() && std::isfinite(b2_out.real()) &&
                std::isfinite(b2_out.imag()),
            "RnnSpec: output weights must be finite");
}

RunResult run(const RnnSpec& spec, std::span<const double> x, std::size_t horizon) {
    spec.validate();
    if (horizon == 0) throw std::invalid_argument("run: horizon must be at least 1");
    if (!all_finite(x)) throw std::invalid_argument("run: input must be finite");

    const auto m = static_cast<Eigen::Index>(spec.state_dim());
    RunResult out;
    out.y.reserve(horizon);
    out.states.reserve(horizon);

    Eigen::VectorXd h = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd in(m + 1);
    for (std::size_t t = 0; t < horizon; ++t) {
        in(0) = sample(x, static_cast<std::ptrdiff_t>(t));
        in.tail(m) = h;
        const Eigen::VectorXd g = (spec.a1 * in + spec.b1).cwiseMax(0.0);
        h = spec.a_h * g + spec.b2_state;
        const Complex y = (spec.w_out * g.cast<Complex>())(0) + spec.b2_out;
        if (!h.allFinite() || !std::isfinite(y.real()) || !std::isfinite(y.imag()))
            throw std::runtime_error("run: non-finite value at t = " + std::to_string(t));
        out.y.push_back(y);
        out.states.push_back(h);
    }
    return out;
}

RealSequence real_part(const ComplexSequence& y) {
    RealSequence r;
    r.reserve(y.size());
    for (const Complex& v : y) r.push_back(v.real());
    return r;
}

void ElmanSpec::validate() const {
    const auto m = w1.rows();
    require(m > 0, "ElmanSpec: state dimension must be positive");
    require(w1.cols() == m, "ElmanSpec: W1 must be square");
    require(u.size() == m && w2.size() == m && bias1.size() == m && h_init.size() == m,
            "ElmanSpec: inconsistent dimensions");
    require(u.allFinite() && w1.allFinite() && w2.allFinite() && bias1.allFinite() && h_init.allFinite() &&
                std::isfinite(bias2),
            "ElmanSpec: entries must be finite");
}

ElmanSpec to_elman(const RnnSpec& spec) {
    spec.validate();
    if (!spec.has_real_output()) throw std::invalid_argument("to_elman: output weights must be real");
    if (!(spec.b2_state.array() == 0.0).all())
        throw std::invalid_argument("to_elman: nonzero state bias b2_state is not supported");

    const auto m = static_cast<Eigen::Index>(spec.state_dim());
    const auto n = static_cast<Eigen::Index>(spec.hidden_width());
    const Eigen::MatrixXd a_g = spec.a1.rightCols(m);

    ElmanSpec e;
    e.u = spec.a1.col(0);
    e.w1 = a_g * spec.a_h;
    e.bias1 = a_g * spec.b2_state + spec.b1;
    e.w2 = spec.w_out.real();
    e.bias2 = spec.b2_out.real();
    e.h_init = Eigen::VectorXd::Zero(n);
    return e;
}

RealSequence run_elman(const ElmanSpec& spec, std::span<const double> x, std::size_t horizon) {
    spec.validate();
    if (horizon == 0) throw std::invalid_argument("run_elman: horizon must be at least 1");
    if (!all_finite(x)) throw std::invalid_argument("run_elman: input must be finite");

    RealSequence y;
    y.reserve(horizon);
    Eigen::VectorXd h = spec.h_init;
    for (std::size_t t = 0; t < horizon; ++t) {
        const double xt = sample(x, static_cast<std::ptrdiff_t>(t));
        h = (spec.u * xt + spec.w1 * h + spec.bias1).cwiseMax(0.0);
        y.push_back(spec.w2.dot(h) + spec.bias2);
    }
    return y;
}

}  // namespace rnnlin
