#include "rnnlin/io.hpp"

#include <stdexcept>
#include <string>

namespace rnnlin::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw std::invalid_argument("schema: " + what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object()) schema_error("expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema_error(std::string("missing field '") + key + "'");
    return *it;
}

double number(const json& j, const char* what) {
    if (!j.is_number()) schema_error(std::string(what) + " must be a number");
    return j.get<double>();
}

std::size_t count(const json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) schema_error(std::string(what) + " must be a nonnegative integer");
    return j.get<std::size_t>();
}

const json& array(const json& j, const char* what) {
    if (!j.is_array()) schema_error(std::string(what) + " must be an array");
    return j;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const char* what) {
    array(j, what);
    if (j.size() != rows) schema_error(std::string(what) + " has wrong number of rows");
    Eigen::MatrixXd m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = array(j[i], what);
        if (row.size() != cols) schema_error(std::string(what) + " has wrong number of columns");
        for (std::size_t k = 0; k < cols; ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = number(row[k], what);
    }
    return m;
}

Eigen::VectorXd vector_from_json(const json& j, std::size_t size, const char* what) {
    array(j, what);
    if (j.size() != size) schema_error(std::string(what) + " has wrong length");
    Eigen::VectorXd v(static_cast<Eigen::Index>(size));
    for (std::size_t i = 0; i < size; ++i) v(static_cast<Eigen::Index>(i)) = number(j[i], what);
    return v;
}

std::vector<double> reals(const json& j, const char* what) {
    array(j, what);
    std::vector<double> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(number(e, what));
    return v;
}

}  // namespace

json complex_to_json(Complex c) {
    if (c.imag() == 0.0) return c.real();
    return json{{"re", c.real()}, {"im", c.imag()}};
}

Complex complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_object()) return {number(field(j, "re"), "re"), number(field(j, "im"), "im")};
    schema_error("complex value must be a number or {\"re\", \"im\"}");
}

json sequence_to_json(std::span<const double> x) { return json{{"taps", std::vector<double>(x.begin(), x.end())}}; }

json sequence_to_json(std::span<const Complex> x) {
    json taps = json::array();
    for (const Complex& c : x) taps.push_back(complex_to_json(c));
    return json{{"taps", std::move(taps)}};
}

RealSequence real_sequence_from_json(const json& j) { return reals(field(j, "taps"), "taps"); }

ComplexSequence complex_sequence_from_json(const json& j) {
    const json& taps = array(field(j, "taps"), "taps");
    ComplexSequence out;
    for (const auto& e : taps) out.push_back(complex_from_json(e));
    return out;
}

FirKernel kernel_from_json(const json& j) { return FirKernel(real_sequence_from_json(j)); }

json spreading_to_json(const SpreadingFunction& s) {
    json rows = json::array();
    for (std::size_t tau = 0; tau < s.delays(); ++tau) {
        json row = json::array();
        for (std::size_t f = 0; f < s.dopplers(); ++f) row.push_back(complex_to_json(s(tau, f)));
        rows.push_back(std::move(row));
    }
    return json{{"D", s.delays()}, {"F", s.dopplers()}, {"S", std::move(rows)}};
}

SpreadingFunction spreading_from_json(const json& j) {
    const std::size_t d = count(field(j, "D"), "D");
    const std::size_t f = count(field(j, "F"), "F");
    const json& rows = array(field(j, "S"), "S");
    if (rows.size() != d) schema_error("S must have D rows");
    std::vector<Complex> values;
    for (const auto& row : rows) {
        array(row, "S row");
        if (row.size() != f) schema_error("every S row must have F entries");
        for (const auto& e : row) values.push_back(complex_from_json(e));
    }
    return SpreadingFunction(d, f, std::move(values));
}

json rational_to_json(const RationalTf& tf) { return json{{"num", tf.num()}, {"den", tf.den()}}; }

RationalTf rational_from_json(const json& j) {
    return RationalTf(reals(field(j, "num"), "num"), reals(field(j, "den"), "den"));
}

json spec_to_json(const RnnSpec& spec) {
    json w_out = json::array();
    for (Eigen::Index i = 0; i < spec.w_out.size(); ++i) w_out.push_back(complex_to_json(spec.w_out(i)));
    return json{{"state_dim", spec.state_dim()},
                {"hidden_width", spec.hidden_width()},
                {"a1", matrix_to_json(spec.a1)},
                {"b1", std::vector<double>(spec.b1.data(), spec.b1.data() + spec.b1.size())},
                {"a_h", matrix_to_json(spec.a_h)},
                {"w_out", std::move(w_out)},
                {"b2_state", std::vector<double>(spec.b2_state.data(), spec.b2_state.data() + spec.b2_state.size())},
                {"b2_out", complex_to_json(spec.b2_out)}};
}

RnnSpec spec_from_json(const json& j) {
    const std::size_t m = count(field(j, "state_dim"), "state_dim");
    const std::size_t n = count(field(j, "hidden_width"), "hidden_width");
    RnnSpec s;
    s.a1 = matrix_from_json(field(j, "a1"), n, m + 1, "a1");
    s.b1 = vector_from_json(field(j, "b1"), n, "b1");
    s.a_h = matrix_from_json(field(j, "a_h"), m, n, "a_h");
    const json& w = array(field(j, "w_out"), "w_out");
    if (w.size() != n) schema_error("w_out must have hidden_width entries");
    s.w_out.resize(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) s.w_out(static_cast<Eigen::Index>(i)) = complex_from_json(w[i]);
    s.b2_state = vector_from_json(field(j, "b2_state"), m, "b2_state");
    s.b2_out = complex_from_json(field(j, "b2_out"));
    s.validate();
    return s;
}

json quantized_fir_to_json(const QuantizedFir& q) {
    return json{{"C", q.impulse_class().amplitude()},
                {"a", q.impulse_class().decay()},
                {"eps", q.eps()},
                {"M", q.length()},
                {"delta", q.delta()},
                {"indices", q.indices()},
                {"taps", q.taps()}};
}

QuantizedFir quantized_fir_from_json(const json& j) {
    const ImpulseClass cls(number(field(j, "C"), "C"), number(field(j, "a"), "a"));
    const double eps = number(field(j, "eps"), "eps");
    const json& idx = array(field(j, "indices"), "indices");
    std::vector<std::int64_t> indices;
    for (const auto& e : idx) {
        if (!e.is_number_integer()) schema_error("indices must be integers");
        indices.push_back(e.get<std::int64_t>());
    }
    QuantizedFir q(cls, eps, std::move(indices));
    if (auto it = j.find("M"); it != j.end() && count(*it, "M") != q.length())
        schema_error("M does not match the class truncation length");
    return q;
}

json sidecar_to_json(const ImpulseClass& cls, double eps) {
    return json{{"C", cls.amplitude()}, {"a", cls.decay()}, {"eps", eps}};
}

std::pair<ImpulseClass, double> sidecar_from_json(const json& j) {
    return {ImpulseClass(number(field(j, "C"), "C"), number(field(j, "a"), "a")), number(field(j, "eps"), "eps")};
}

}  // namespace rnnlin::io
