#include "schurcoef/schur.hpp"

#include <cmath>
#include <sstream>

#include "schurcoef/errors.hpp"
#include "schurcoef/maps.hpp"

namespace schurcoef {

namespace {

bool on_boundary(complex z) { return std::abs(z) >= 1.0 - kBoundaryTol; }

}  // namespace

SchurVector::SchurVector(std::vector<complex> params, std::optional<std::size_t> blaschke_index)
    : params_(std::move(params)), blaschke_(blaschke_index) {
    for (std::size_t j = 0; j < params_.size(); ++j) {
        if (!std::isfinite(params_[j].real()) || !std::isfinite(params_[j].imag()))
            throw usage_error("SchurVector: non-finite parameter");
        if (std::abs(params_[j]) > 1.0 + kModulusTol) {
            std::ostringstream os;
            os << "SchurVector: |gamma_" << j + 1 << "| = " << std::abs(params_[j]) << " exceeds 1";
            throw usage_error(os.str());
        }
    }
    if (!blaschke_) {
        for (std::size_t j = 0; j < params_.size(); ++j) {
            if (on_boundary(params_[j])) {
                std::ostringstream os;
                os << "SchurVector: gamma_" << j + 1 << " is unimodular but no Blaschke index is set";
                throw usage_error(os.str());
            }
        }
        return;
    }
    const std::size_t m = *blaschke_;
    if (m < 1 || m > params_.size()) throw usage_error("SchurVector: Blaschke index out of range");
    for (std::size_t j = 0; j + 1 < m; ++j)
        if (on_boundary(params_[j]))
            throw usage_error("SchurVector: unimodular parameter before the Blaschke index");
    if (std::abs(std::abs(params_[m - 1]) - 1.0) > kBoundaryTol)
        throw usage_error("SchurVector: parameter at the Blaschke index is not unimodular");
    for (std::size_t j = m; j < params_.size(); ++j)
        if (params_[j] != complex{})
            throw usage_error("SchurVector: nonzero parameter after the Blaschke index");
}

SchurVector SchurVector::from_params(std::vector<complex> params) {
    std::optional<std::size_t> m;
    for (std::size_t j = 0; j < params.size(); ++j) {
        if (on_boundary(params[j])) {
            m = j + 1;
            break;
        }
    }
    return SchurVector(std::move(params), m);
}

SigmaStep sigma_step(const TruncatedSeries& f) {
    if (f.order() < 1) throw usage_error("sigma_step: series order must be at least 1");
    const complex gamma = f[0];
    const double modulus = std::abs(gamma);
    if (modulus > 1.0 + kModulusTol) {
        std::ostringstream os;
        os << "sigma_step: |f(0)| = " << modulus << " exceeds 1";
        throw not_schur_function(os.str(), 1, modulus);
    }
    const std::size_t m = f.order();
    if (modulus >= 1.0 - kBoundaryTol) return {gamma, TruncatedSeries(m - 1)};

    const auto numerator = f - TruncatedSeries::constant(gamma, m);
    const auto denominator = TruncatedSeries::constant(1.0, m) - f * std::conj(gamma);
    // numerator has a zero constant term, so the quotient divides by z exactly.
    return {gamma, div(numerator, denominator).shift_down()};
}

SchurVector extract_parameters(const TruncatedSeries& omega) {
    if (omega[0] != complex{}) throw usage_error("extract_parameters: omega(0) must be 0");
    const std::size_t n = omega.order();
    if (n == 0) return {};

    std::vector<complex> params;
    params.reserve(n);
    std::optional<std::size_t> blaschke;
    TruncatedSeries f = omega.shift_down();
    for (std::size_t k = 1; k <= n; ++k) {
        const complex gamma = f[0];
        const double modulus = std::abs(gamma);
        if (modulus > 1.0 + kModulusTol) {
            std::ostringstream os;
            os << "extract_parameters: |gamma_" << k << "| = " << modulus
               << " exceeds 1; input is not an S_0 truncation";
            throw not_schur_function(os.str(), k, modulus);
        }
        params.push_back(gamma);
        if (on_boundary(gamma)) {
            blaschke = k;
            params.resize(n, complex{});
            break;
        }
        if (k < n) f = sigma_step(f).next;
    }
    return SchurVector(std::move(params), blaschke);
}

TruncatedSeries reconstruct_coefficients(const SchurVector& gamma) {
    std::vector<complex> c;
    c.reserve(gamma.size() + 1);
    c.push_back(complex{});
    if (!gamma.empty()) {
        const auto point = vec_F(gamma.params());
        c.insert(c.end(), point.values.begin(), point.values.end());
    }
    return TruncatedSeries(std::move(c));
}

}  // namespace schurcoef
