#include "schurcoef/maps.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "schurcoef/errors.hpp"

namespace schurcoef {

namespace {

void require_nonempty(std::span<const complex> v, const char* op) {
    if (v.empty()) throw usage_error(std::string(op) + ": empty input");
}

// Values of a map on every contiguous sub-tuple (start, length) of one input.
// Created per call and discarded afterwards.
class SubtupleTable {
public:
    explicit SubtupleTable(std::size_t n) : n_(n), cells_((n + 1) * (n + 1), complex{}) {}

    complex& at(std::size_t start, std::size_t length) { return cells_[start * (n_ + 1) + length]; }
    complex at(std::size_t start, std::size_t length) const {
        return cells_[start * (n_ + 1) + length];
    }

private:
    std::size_t n_;
    std::vector<complex> cells_;
};

// 1 - |g|^2, exactly zero when g is unimodular to rounding.
double damping(complex g) {
    const double d = 1.0 - std::norm(g);
    return std::abs(d) <= 4 * std::numeric_limits<double>::epsilon() ? 0.0 : d;
}

// at(s, len) = F_len(gamma_s, ..., gamma_{s+len-1}).
SubtupleTable build_F_table(std::span<const complex> gamma) {
    const std::size_t n = gamma.size();
    SubtupleTable F(n);
    for (std::size_t s = 0; s < n; ++s) F.at(s, 1) = gamma[s];
    for (std::size_t len = 2; len <= n; ++len) {
        for (std::size_t s = 0; s + len <= n; ++s) {
            const complex g = gamma[s];
            complex conv{};
            for (std::size_t k = 2; k < len; ++k) conv += F.at(s + 1, len - k) * F.at(s, k);
            F.at(s, len) = damping(g) * F.at(s + 1, len - 1) - std::conj(g) * conv;
        }
    }
    return F;
}

// at(s, len) = T_len(gamma_s, ..., gamma_{s+len-1}), at(s, 0) = 1.
SubtupleTable build_T_table(std::span<const complex> gamma) {
    const std::size_t n = gamma.size();
    SubtupleTable T(n);
    for (std::size_t s = 0; s <= n; ++s) T.at(s, 0) = 1.0;
    for (std::size_t len = 1; len <= n; ++len) {
        for (std::size_t s = 0; s + len <= n; ++s) {
            const complex g = gamma[s];
            complex acc = g * T.at(s, len - 1);
            for (std::size_t k = 1; k < len; ++k) {
                acc += T.at(s + 1, k) *
                       ((1.0 + g) * T.at(s, len - k - 1) - (1.0 + std::conj(g)) * T.at(s, len - k));
            }
            T.at(s, len) = acc;
        }
    }
    return T;
}

// y_n = x_n + sign * sum_{k=1}^{n-1} x_{n-k} y_k.
std::vector<complex> convolution_recursion(std::span<const complex> x, double sign) {
    std::vector<complex> y(x.size());
    for (std::size_t n = 1; n <= x.size(); ++n) {
        complex acc{};
        for (std::size_t k = 1; k < n; ++k) acc += x[n - k - 1] * y[k - 1];
        y[n - 1] = x[n - 1] + sign * acc;
    }
    return y;
}

}  // namespace

complex eval_F(std::span<const complex> gamma) {
    require_nonempty(gamma, "eval_F");
    return build_F_table(gamma).at(0, gamma.size());
}

CoefficientPoint vec_F(std::span<const complex> gamma) {
    require_nonempty(gamma, "vec_F");
    const auto F = build_F_table(gamma);
    CoefficientPoint out{std::vector<complex>(gamma.size()), CoefficientClass::schur_U};
    for (std::size_t k = 1; k <= gamma.size(); ++k) out.values[k - 1] = F.at(0, k);
    return out;
}

complex eval_G(std::span<const complex> prefix, std::size_t n) {
    if (n < 2) throw usage_error("eval_G: n must be at least 2");
    if (prefix.size() != n - 1) throw usage_error("eval_G: prefix must have length n - 1");
    std::vector<complex> gamma(prefix.begin(), prefix.end());
    gamma.push_back(complex{});
    return eval_F(gamma);
}

complex eval_Q(std::span<const complex> x) {
    require_nonempty(x, "eval_Q");
    return convolution_recursion(x, +1.0).back();
}

CoefficientPoint vec_Q(std::span<const complex> x) {
    require_nonempty(x, "vec_Q");
    return {convolution_recursion(x, +1.0), CoefficientClass::caratheodory_V};
}

complex eval_R(std::span<const complex> x) {
    require_nonempty(x, "eval_R");
    return convolution_recursion(x, -1.0).back();
}

CoefficientPoint vec_R(std::span<const complex> x) {
    require_nonempty(x, "vec_R");
    return {convolution_recursion(x, -1.0), CoefficientClass::schur_U};
}

complex eval_T_composed(std::span<const complex> gamma) {
    return vec_T(gamma).values.back();
}

CoefficientPoint vec_T(std::span<const complex> gamma) {
    require_nonempty(gamma, "vec_T");
    return vec_Q(vec_F(gamma).values);
}

complex eval_T_recursive(std::span<const complex> gamma) {
    require_nonempty(gamma, "eval_T_recursive");
    return build_T_table(gamma).at(0, gamma.size());
}

CoefficientPoint vec_T_recursive(std::span<const complex> gamma) {
    require_nonempty(gamma, "vec_T_recursive");
    const auto T = build_T_table(gamma);
    CoefficientPoint out{std::vector<complex>(gamma.size()), CoefficientClass::caratheodory_V};
    for (std::size_t k = 1; k <= gamma.size(); ++k) out.values[k - 1] = T.at(0, k);
    return out;
}

double jacobian_F(std::span<const complex> gamma) {
    require_nonempty(gamma, "jacobian_F");
    for (std::size_t j = 0; j < gamma.size(); ++j) {
        if (!(std::abs(gamma[j]) < 1.0)) {
            std::ostringstream os;
            os << "jacobian_F: |gamma_" << j + 1 << "| >= 1, outside the open polydisk";
            throw domain_error(os.str());
        }
    }
    double delta = 1.0;
    double jac = 1.0;
    for (std::size_t j = 0; j + 1 < gamma.size(); ++j) {
        delta *= 1.0 - std::norm(gamma[j]);
        jac *= delta * delta;
    }
    return jac;
}

SchurVector invert_T(const CoefficientPoint& b) {
    require_nonempty(b.values, "invert_T");
    const auto c = vec_R(b.values);
    std::vector<complex> omega{complex{}};
    omega.insert(omega.end(), c.values.begin(), c.values.end());

    SchurVector gamma;
    try {
        gamma = extract_parameters(TruncatedSeries(std::move(omega)));
    } catch (const not_schur_function& e) {
        std::ostringstream os;
        os << "invert_T: point is not in the coefficient body, |gamma_" << e.index()
           << "| = " << e.modulus();
        throw not_in_body(os.str(), e.index(), e.modulus());
    }

    const auto image = vec_T(gamma.params());
    for (std::size_t k = 0; k < b.size(); ++k) {
        const double residual = std::abs(image[k] - b[k]);
        if (residual > kInversionResidualTol) {
            std::ostringstream os;
            os << "invert_T: point is not in the coefficient body, b_" << k + 1
               << " is not reproduced (residual " << residual << ")";
            throw not_in_body(os.str(), k + 1, residual);
        }
    }
    return gamma;
}

}  // namespace schurcoef
