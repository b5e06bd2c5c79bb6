#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schurcoef/series.hpp"

namespace schurcoef::symbolic {

using Integer = boost::multiprecision::cpp_int;

// Exponent vector interleaved as (a_1, b_1, a_2, b_2, ...), a_j the power of
// gamma_j and b_j the power of conj(gamma_j). Trailing zeros are never stored.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint16_t> exponents);

    static Monomial variable(std::size_t j, unsigned power = 1);
    static Monomial conj_variable(std::size_t j, unsigned power = 1);

    // Power of gamma_j / conj(gamma_j), 1-based j.
    unsigned holo(std::size_t j) const;
    unsigned anti(std::size_t j) const;
    unsigned degree() const;
    // Largest variable index present.
    std::size_t max_index() const { return (exps_.size() + 1) / 2; }

    std::span<const std::uint16_t> exponents() const noexcept { return exps_; }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    void trim();
    std::vector<std::uint16_t> exps_;
};

// Graded reverse lexicographic order, largest monomial first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Integer-coefficient polynomial in gamma_1, conj(gamma_1), gamma_2, ...
// Stored canonically: no zero coefficients, monomials in MonomialOrder, so
// structural equality is polynomial equality.
class ConjPolynomial {
public:
    using Terms = std::map<Monomial, Integer, MonomialOrder>;

    ConjPolynomial() = default;
    ConjPolynomial(const Integer& c);  // NOLINT: constants convert implicitly
    ConjPolynomial(int c) : ConjPolynomial(Integer(c)) {}

    static ConjPolynomial variable(std::size_t j);
    static ConjPolynomial conj_variable(std::size_t j);
    static ConjPolynomial from_terms(Terms terms);

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(const Monomial& m) const;
    std::size_t max_index() const;

    ConjPolynomial& operator+=(const ConjPolynomial& o);
    ConjPolynomial& operator-=(const ConjPolynomial& o);
    ConjPolynomial& operator*=(const ConjPolynomial& o);
    friend ConjPolynomial operator+(ConjPolynomial a, const ConjPolynomial& b) { return a += b; }
    friend ConjPolynomial operator-(ConjPolynomial a, const ConjPolynomial& b) { return a -= b; }
    friend ConjPolynomial operator*(const ConjPolynomial& a, const ConjPolynomial& b);
    ConjPolynomial operator-() const;
    friend bool operator==(const ConjPolynomial&, const ConjPolynomial&) = default;

    ConjPolynomial pow(unsigned k) const;

    // Swap gamma_j <-> conj(gamma_j); coefficients are integers and stay put.
    ConjPolynomial conj() const;
    // gamma_j -> gamma_{j+offset} (and likewise for conjugates).
    ConjPolynomial shift_indices(std::size_t offset) const;
    // p(-gamma_1, ..., -gamma_n) with conjugates negated alongside.
    ConjPolynomial negate_arguments() const;
    // gamma_j -> 0 and conj(gamma_j) -> 0.
    ConjPolynomial set_zero(std::size_t j) const;
    // Sum of terms whose gamma_j-power is exactly k, with gamma_j^k divided out.
    ConjPolynomial coefficient_of_power(std::size_t j, unsigned k) const;
    unsigned max_holo_power(std::size_t j) const;
    unsigned max_anti_power(std::size_t j) const;

    // Replace gamma_j by holo[j-1] and conj(gamma_j) by anti[j-1]. Every
    // variable present must have an image.
    ConjPolynomial substitute(std::span<const ConjPolynomial> holo,
                              std::span<const ConjPolynomial> anti) const;

    // Numeric value with gamma_j = values[j-1] and conj(gamma_j) its conjugate.
    complex evaluate(std::span<const complex> values) const;

private:
    void add_term(const Monomial& m, const Integer& c);
    Terms terms_;
};

// Largest n accepted by the expansions below.
inline constexpr std::size_t kSymbolicCap = 8;

// F_1..F_n (index k-1 holds F_k).
std::vector<ConjPolynomial> sym_F_all(std::size_t n);
ConjPolynomial sym_F(std::size_t n);
// G_n = F_n with gamma_n -> 0; n >= 2.
ConjPolynomial sym_G(std::size_t n);
// Q_n / R_n in x_1..x_n, stored with the gamma_j slots (no conjugates occur).
std::vector<ConjPolynomial> sym_Q_all(std::size_t n);
ConjPolynomial sym_Q(std::size_t n);
std::vector<ConjPolynomial> sym_R_all(std::size_t n);
ConjPolynomial sym_R(std::size_t n);
// T_n = Q_n(F_1, ..., F_n) by substitution.
ConjPolynomial sym_T(std::size_t n);
// T_1..T_n from the direct T-recursion with T_0 = 1.
std::vector<ConjPolynomial> sym_T_recursive_all(std::size_t n);

enum class Alphabet { gamma, x };

// Plain text, e.g. "x1^4+3x1^2x2" or "g2-g1gbar1g2".
std::string render_plain(const ConjPolynomial& p, Alphabet alphabet = Alphabet::gamma);

// LaTeX. In grouped mode every gamma_j conj(gamma_j) pair is rewritten through
// (1-|gamma_j|^2), which gives a unique normal form.
std::string render_latex(const ConjPolynomial& p, Alphabet alphabet = Alphabet::gamma,
                         bool grouped = false);

// Parses the LaTeX subset used by the reference closed forms: integers,
// \gamma_k, \bar\gamma_k, |\gamma_k|^2, x_k / b_k / c_k, ^, parentheses, + and -.
// Alignment markup (&, \\, \quad) is ignored. Throws usage_error on bad input.
ConjPolynomial parse_latex(std::string_view text);

// Monomials where a and b differ, one line each: "<monomial>: <coef a> vs <coef b>".
std::vector<std::string> diff_terms(const ConjPolynomial& a, const ConjPolynomial& b,
                                    Alphabet alphabet = Alphabet::gamma);

struct IdentityCheck {
    std::string name;
    std::size_t n = 0;
    bool passed = false;
    std::vector<std::string> mismatches;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
};

// Exact checks for every n <= max_n:
//   R_n(x) == -Q_n(-x);
//   vec_Q o vec_R and vec_R o vec_Q are the identity;
//   F_n == prod_{j<n}(1 - gamma_j conj(gamma_j)) gamma_n + G_n;
//   the T-recursion reproduces sym_T(n).
IdentityReport sym_identity_suite(std::size_t max_n = kSymbolicCap);

}  // namespace schurcoef::symbolic
