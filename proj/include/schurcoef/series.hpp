#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace schurcoef {

using complex = std::complex<double>;

// Taylor coefficients (a_0, ..., a_m) of a function modulo z^{m+1}.
// Immutable once built; every operation returns a fresh series.
class TruncatedSeries {
public:
    // The zero series of the given order.
    explicit TruncatedSeries(std::size_t order = 0);
    explicit TruncatedSeries(std::vector<complex> coeffs);
    TruncatedSeries(std::initializer_list<complex> coeffs);

    static TruncatedSeries constant(complex value, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    const complex& operator[](std::size_t k) const { return coeffs_[k]; }
    std::span<const complex> coeffs() const noexcept { return coeffs_; }

    // Coefficients a_1..a_m shifted down by one: the truncation of (f - a_0)/z.
    TruncatedSeries shift_down() const;
    // z * f truncated to order + 1.
    TruncatedSeries shift_up() const;
    // Drop or zero-pad to a new order.
    TruncatedSeries truncated(std::size_t order) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<complex> coeffs_;
};

// Absolute value below which the constant term of a divisor is rejected.
inline constexpr double kDivisionGuard = 1e-12;

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, complex s);

// Cauchy product truncated at the common order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Quotient a/b by forward substitution; requires |b_0| >= kDivisionGuard.
TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b);

// Largest coefficient-wise modulus of a - b. Orders must agree.
double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b);

// g = (1 + omega) / (1 - omega), for omega with omega_0 == 0.
TruncatedSeries cayley_omega_to_g(const TruncatedSeries& omega);

// Inverse of cayley_omega_to_g; requires g_0 == 1.
TruncatedSeries cayley_g_to_omega(const TruncatedSeries& g);

}  // namespace schurcoef
