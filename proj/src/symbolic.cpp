#include "schurcoef/symbolic.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "schurcoef/errors.hpp"

namespace schurcoef::symbolic {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint16_t> exponents) : exps_(std::move(exponents)) { trim(); }

Monomial Monomial::variable(std::size_t j, unsigned power) {
    if (j == 0) throw usage_error("Monomial: variable indices start at 1");
    std::vector<std::uint16_t> e(2 * j - 1, 0);
    e[2 * (j - 1)] = static_cast<std::uint16_t>(power);
    return Monomial(std::move(e));
}

Monomial Monomial::conj_variable(std::size_t j, unsigned power) {
    if (j == 0) throw usage_error("Monomial: variable indices start at 1");
    std::vector<std::uint16_t> e(2 * j, 0);
    e[2 * j - 1] = static_cast<std::uint16_t>(power);
    return Monomial(std::move(e));
}

unsigned Monomial::holo(std::size_t j) const {
    const std::size_t slot = 2 * (j - 1);
    return slot < exps_.size() ? exps_[slot] : 0;
}

unsigned Monomial::anti(std::size_t j) const {
    const std::size_t slot = 2 * (j - 1) + 1;
    return slot < exps_.size() ? exps_[slot] : 0;
}

unsigned Monomial::degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
}

void Monomial::trim() {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::uint16_t> e(std::max(a.exps_.size(), b.exps_.size()), 0);
    for (std::size_t i = 0; i < a.exps_.size(); ++i) e[i] += a.exps_[i];
    for (std::size_t i = 0; i < b.exps_.size(); ++i) e[i] += b.exps_[i];
    return Monomial(std::move(e));
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da > db;
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    for (std::size_t i = std::max(ea.size(), eb.size()); i-- > 0;) {
        const unsigned x = i < ea.size() ? ea[i] : 0;
        const unsigned y = i < eb.size() ? eb[i] : 0;
        if (x != y) return x < y;
    }
    return false;
}

// ---------------------------------------------------------------------------
// ConjPolynomial

ConjPolynomial::ConjPolynomial(const Integer& c) {
    if (c != 0) terms_.emplace(Monomial(), c);
}

ConjPolynomial ConjPolynomial::variable(std::size_t j) {
    ConjPolynomial p;
    p.terms_.emplace(Monomial::variable(j), Integer(1));
    return p;
}

ConjPolynomial ConjPolynomial::conj_variable(std::size_t j) {
    ConjPolynomial p;
    p.terms_.emplace(Monomial::conj_variable(j), Integer(1));
    return p;
}

ConjPolynomial ConjPolynomial::from_terms(Terms terms) {
    ConjPolynomial p;
    for (auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

Integer ConjPolynomial::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::size_t ConjPolynomial::max_index() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.max_index());
    return n;
}

void ConjPolynomial::add_term(const Monomial& m, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ConjPolynomial& ConjPolynomial::operator+=(const ConjPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ConjPolynomial& ConjPolynomial::operator-=(const ConjPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ConjPolynomial& ConjPolynomial::operator*=(const ConjPolynomial& o) {
    *this = *this * o;
    return *this;
}

ConjPolynomial operator*(const ConjPolynomial& a, const ConjPolynomial& b) {
    ConjPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

ConjPolynomial ConjPolynomial::operator-() const {
    ConjPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

ConjPolynomial ConjPolynomial::pow(unsigned k) const {
    ConjPolynomial result(1);
    ConjPolynomial base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

ConjPolynomial ConjPolynomial::conj() const {
    ConjPolynomial r;
    for (const auto& [m, c] : terms_) {
        std::vector<std::uint16_t> e(m.exponents().begin(), m.exponents().end());
        if (e.size() % 2) e.push_back(0);
        for (std::size_t i = 0; i < e.size(); i += 2) std::swap(e[i], e[i + 1]);
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

ConjPolynomial ConjPolynomial::shift_indices(std::size_t offset) const {
    ConjPolynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.exponents().empty()) {
            r.add_term(m, c);
            continue;
        }
        std::vector<std::uint16_t> e(2 * offset, 0);
        e.insert(e.end(), m.exponents().begin(), m.exponents().end());
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

ConjPolynomial ConjPolynomial::negate_arguments() const {
    ConjPolynomial r = *this;
    for (auto& [m, c] : r.terms_)
        if (m.degree() % 2) c = -c;
    return r;
}

ConjPolynomial ConjPolynomial::set_zero(std::size_t j) const {
    ConjPolynomial r;
    for (const auto& [m, c] : terms_)
        if (m.holo(j) == 0 && m.anti(j) == 0) r.add_term(m, c);
    return r;
}

ConjPolynomial ConjPolynomial::coefficient_of_power(std::size_t j, unsigned k) const {
    ConjPolynomial r;
    for (const auto& [m, c] : terms_) {
        if (m.holo(j) != k) continue;
        std::vector<std::uint16_t> e(m.exponents().begin(), m.exponents().end());
        if (2 * (j - 1) < e.size()) e[2 * (j - 1)] = 0;
        r.add_term(Monomial(std::move(e)), c);
    }
    return r;
}

unsigned ConjPolynomial::max_holo_power(std::size_t j) const {
    unsigned k = 0;
    for (const auto& [m, c] : terms_) k = std::max(k, m.holo(j));
    return k;
}

unsigned ConjPolynomial::max_anti_power(std::size_t j) const {
    unsigned k = 0;
    for (const auto& [m, c] : terms_) k = std::max(k, m.anti(j));
    return k;
}

ConjPolynomial ConjPolynomial::substitute(std::span<const ConjPolynomial> holo,
                                          std::span<const ConjPolynomial> anti) const {
    // powers[slot][e-1] = image(slot)^e, filled lazily.
    std::vector<std::vector<ConjPolynomial>> powers;
    auto image_power = [&](std::size_t slot, unsigned e) -> const ConjPolynomial& {
        if (powers.size() <= slot) powers.resize(slot + 1);
        auto& cache = powers[slot];
        const std::size_t j = slot / 2;
        const auto& images = slot % 2 ? anti : holo;
        if (j >= images.size()) throw usage_error("substitute: missing image for a variable");
        if (cache.empty()) cache.push_back(images[j]);
        while (cache.size() < e) cache.push_back(cache.back() * images[j]);
        return cache[e - 1];
    };

    ConjPolynomial r;
    for (const auto& [m, c] : terms_) {
        ConjPolynomial term(c);
        const auto e = m.exponents();
        for (std::size_t slot = 0; slot < e.size(); ++slot)
            if (e[slot] > 0) term *= image_power(slot, e[slot]);
        r += term;
    }
    return r;
}

complex ConjPolynomial::evaluate(std::span<const complex> values) const {
    complex sum{};
    for (const auto& [m, c] : terms_) {
        complex t = c.convert_to<double>();
        const auto e = m.exponents();
        for (std::size_t slot = 0; slot < e.size(); ++slot) {
            if (e[slot] == 0) continue;
            const std::size_t j = slot / 2;
            if (j >= values.size()) throw usage_error("evaluate: missing value for a variable");
            const complex v = slot % 2 ? std::conj(values[j]) : values[j];
            for (unsigned k = 0; k < e[slot]; ++k) t *= v;
        }
        sum += t;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// Expansions

namespace {

void require_symbolic_order(std::size_t n, const char* op) {
    if (n == 0) throw usage_error(std::string(op) + ": n must be at least 1");
    if (n > kSymbolicCap) {
        std::ostringstream os;
        os << op << ": n = " << n << " exceeds the symbolic cap " << kSymbolicCap;
        throw resource_error(os.str());
    }
}

using P = ConjPolynomial;

std::vector<P> convolution_recursion(std::size_t n, int sign) {
    std::vector<P> y;
    y.reserve(n);
    for (std::size_t m = 1; m <= n; ++m) {
        P acc;
        for (std::size_t k = 1; k < m; ++k) acc += P::variable(m - k) * y[k - 1];
        y.push_back(sign > 0 ? P::variable(m) + acc : P::variable(m) - acc);
    }
    return y;
}

}  // namespace

std::vector<ConjPolynomial> sym_F_all(std::size_t n) {
    require_symbolic_order(n, "sym_F");
    const P one_minus_mod1 = P(1) - P::variable(1) * P::conj_variable(1);
    const P conj1 = P::conj_variable(1);
    std::vector<P> F{P::variable(1)};
    std::vector<P> shifted{F[0].shift_indices(1)};  // shifted[k-1] = F_k(gamma_2, ...)
    for (std::size_t len = 2; len <= n; ++len) {
        P conv;
        for (std::size_t k = 2; k < len; ++k) conv += shifted[len - k - 1] * F[k - 1];
        F.push_back(one_minus_mod1 * shifted[len - 2] - conj1 * conv);
        shifted.push_back(F.back().shift_indices(1));
    }
    return F;
}

ConjPolynomial sym_F(std::size_t n) { return sym_F_all(n).back(); }

ConjPolynomial sym_G(std::size_t n) {
    if (n < 2) throw usage_error("sym_G: n must be at least 2");
    return sym_F(n).set_zero(n);
}

std::vector<ConjPolynomial> sym_Q_all(std::size_t n) {
    require_symbolic_order(n, "sym_Q");
    return convolution_recursion(n, +1);
}

ConjPolynomial sym_Q(std::size_t n) { return sym_Q_all(n).back(); }

std::vector<ConjPolynomial> sym_R_all(std::size_t n) {
    require_symbolic_order(n, "sym_R");
    return convolution_recursion(n, -1);
}

ConjPolynomial sym_R(std::size_t n) { return sym_R_all(n).back(); }

ConjPolynomial sym_T(std::size_t n) {
    require_symbolic_order(n, "sym_T");
    const auto F = sym_F_all(n);
    std::vector<P> conjF;
    conjF.reserve(n);
    for (const auto& f : F) conjF.push_back(f.conj());
    return sym_Q(n).substitute(F, conjF);
}

std::vector<ConjPolynomial> sym_T_recursive_all(std::size_t n) {
    require_symbolic_order(n, "sym_T_recursive");
    const P g1 = P::variable(1);
    const P one_plus_g1 = P(1) + g1;
    const P one_plus_conj1 = P(1) + P::conj_variable(1);
    std::vector<P> T{P(1)};   // T[k] = T_k, T_0 = 1
    std::vector<P> shifted{P(1)};  // shifted[k] = T_k(gamma_2, ..., gamma_{k+1})
    for (std::size_t len = 1; len <= n; ++len) {
        P acc = g1 * T[len - 1];
        for (std::size_t k = 1; k < len; ++k)
            acc += shifted[k] * (one_plus_g1 * T[len - k - 1] - one_plus_conj1 * T[len - k]);
        T.push_back(acc);
        shifted.push_back(T.back().shift_indices(1));
    }
    return {T.begin() + 1, T.end()};
}

// ---------------------------------------------------------------------------
// Identity suite

bool IdentityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

IdentityReport sym_identity_suite(std::size_t max_n) {
    require_symbolic_order(max_n, "sym_identity_suite");
    IdentityReport report;
    auto record = [&](std::string name, std::size_t n, const P& lhs, const P& rhs, Alphabet a) {
        IdentityCheck check{std::move(name), n, lhs == rhs, {}};
        if (!check.passed) check.mismatches = diff_terms(lhs, rhs, a);
        report.checks.push_back(std::move(check));
    };

    const auto Q = sym_Q_all(max_n);
    const auto R = sym_R_all(max_n);
    const auto F = sym_F_all(max_n);
    const auto T_rec = sym_T_recursive_all(max_n);
    const std::vector<P> no_conj;

    for (std::size_t n = 1; n <= max_n; ++n) {
        record("R_n(x) = -Q_n(-x)", n, R[n - 1], -Q[n - 1].negate_arguments(), Alphabet::x);
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
        const std::span<const P> r_images(R.data(), n);
        const std::span<const P> q_images(Q.data(), n);
        record("Q_n(R_1(x), ..., R_n(x)) = x_n", n, Q[n - 1].substitute(r_images, no_conj),
               P::variable(n), Alphabet::x);
        record("R_n(Q_1(x), ..., Q_n(x)) = x_n", n, R[n - 1].substitute(q_images, no_conj),
               P::variable(n), Alphabet::x);
    }
    P damping(1);
    for (std::size_t n = 1; n <= max_n; ++n) {
        if (n >= 2) {
            record("F_n = prod_{j<n}(1-|g_j|^2) g_n + G_n", n, F[n - 1],
                   damping * P::variable(n) + F[n - 1].set_zero(n), Alphabet::gamma);
        }
        damping *= P(1) - P::variable(n) * P::conj_variable(n);
    }
    for (std::size_t n = 1; n <= max_n; ++n) {
        std::vector<P> conjF;
        for (std::size_t k = 0; k < n; ++k) conjF.push_back(F[k].conj());
        const P composed = Q[n - 1].substitute(std::span<const P>(F.data(), n), conjF);
        record("T-recursion = Q_n(F_1, ..., F_n)", n, T_rec[n - 1], composed, Alphabet::gamma);
    }
    return report;
}

}  // namespace schurcoef::symbolic
