#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "schurcoef/series.hpp"

namespace schurcoef {

// |f(0)| may exceed 1 by this much before a series is rejected as non-Schur.
inline constexpr double kModulusTol = 1e-9;
// |gamma| >= 1 - kBoundaryTol is treated as unimodular (Blaschke termination).
inline constexpr double kBoundaryTol = 1e-9;

// Schur parameters (gamma_1, ..., gamma_n) of an S_0 function, gamma_0 = 0 implied.
//
// When blaschke_index = m is set the parameters have the terminating shape
// |gamma_j| < 1 for j < m, |gamma_m| = 1, gamma_j = 0 for j > m.
class SchurVector {
public:
    SchurVector() = default;

    // Validates every invariant; throws usage_error on violation.
    SchurVector(std::vector<complex> params, std::optional<std::size_t> blaschke_index);

    // Infers blaschke_index from the first unimodular entry. The tail after it
    // must already be zero.
    static SchurVector from_params(std::vector<complex> params);

    std::size_t size() const noexcept { return params_.size(); }
    bool empty() const noexcept { return params_.empty(); }
    const complex& operator[](std::size_t j) const { return params_[j]; }
    std::span<const complex> params() const noexcept { return params_; }
    std::optional<std::size_t> blaschke_index() const noexcept { return blaschke_; }

private:
    std::vector<complex> params_;
    std::optional<std::size_t> blaschke_;
};

struct SigmaStep {
    complex gamma;
    TruncatedSeries next;
};

// One step of the Schur algorithm: gamma = f(0), next = (f - gamma)/(z (1 - conj(gamma) f)),
// or next = 0 when |gamma| is on the boundary. next has order f.order() - 1.
SigmaStep sigma_step(const TruncatedSeries& f);

// Schur parameters of omega = c_1 z + ... + c_n z^n (+ O(z^{n+1})).
SchurVector extract_parameters(const TruncatedSeries& omega);

// Inverse of extract_parameters: the truncation (0, c_1, ..., c_n).
TruncatedSeries reconstruct_coefficients(const SchurVector& gamma);

}  // namespace schurcoef
