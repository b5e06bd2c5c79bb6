#pragma once

#include <span>
#include <vector>

#include "schurcoef/schur.hpp"
#include "schurcoef/series.hpp"

namespace schurcoef {

enum class CoefficientClass { schur_U, caratheodory_V };

// A coefficient tuple (c_1..c_n) of an S_0 function or (b_1..b_n) = (p_1..p_n)/2
// of a Caratheodory function.
struct CoefficientPoint {
    std::vector<complex> values;
    CoefficientClass class_tag = CoefficientClass::schur_U;

    std::size_t size() const noexcept { return values.size(); }
    const complex& operator[](std::size_t k) const { return values[k]; }
};

// The coefficient maps below take raw parameter tuples so that points of the
// whole closed polydisk (including boundary points with arbitrary tails) can be
// evaluated. A SchurVector converts through params().

// c_n = F_n(gamma_1..gamma_n).
complex eval_F(std::span<const complex> gamma);
// (F_1(gamma_1), F_2(gamma_1, gamma_2), ..., F_n(gamma)).
CoefficientPoint vec_F(std::span<const complex> gamma);
// G_n(gamma_1..gamma_{n-1}) = F_n(gamma_1..gamma_{n-1}, 0); prefix.size() == n - 1.
complex eval_G(std::span<const complex> prefix, std::size_t n);

complex eval_Q(std::span<const complex> x);
CoefficientPoint vec_Q(std::span<const complex> x);
complex eval_R(std::span<const complex> x);
CoefficientPoint vec_R(std::span<const complex> x);

// T_n = Q_n(F_1, ..., F_n).
complex eval_T_composed(std::span<const complex> gamma);
CoefficientPoint vec_T(std::span<const complex> gamma);

// T_n from the direct recursion in (gamma_1, ...) and the shifted tuple (gamma_2, ...),
// anchored at T_0 = 1. Agrees with eval_T_composed.
complex eval_T_recursive(std::span<const complex> gamma);
CoefficientPoint vec_T_recursive(std::span<const complex> gamma);

// Real Jacobian determinant of vec_F on the open polydisk, prod_{j<n} delta_j^2
// with delta_j = prod_{i<=j} (1 - |gamma_i|^2).
double jacobian_F(std::span<const complex> gamma);

// Residual allowed between vec_T(invert_T(b)) and b before b is rejected.
inline constexpr double kInversionResidualTol = 1e-8;

// Schur parameters gamma with vec_T(gamma) == b. Throws not_in_body when the
// Schur algorithm leaves the closed disk or the reconstruction does not reproduce b.
SchurVector invert_T(const CoefficientPoint& b);

}  // namespace schurcoef
