#include "schurcoef/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "schurcoef/errors.hpp"

namespace schurcoef {

namespace {

// Normalization checks on constant terms (omega_0 == 0, g_0 == 1).
constexpr double kNormalizationTol = 1e-12;

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.order() != b.order()) {
        std::ostringstream os;
        os << op << ": order mismatch (" << a.order() << " vs " << b.order() << ")";
        throw usage_error(os.str());
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1, complex{}) {}

TruncatedSeries::TruncatedSeries(std::vector<complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw usage_error("TruncatedSeries: at least one coefficient is required");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<complex> coeffs)
    : TruncatedSeries(std::vector<complex>(coeffs)) {}

TruncatedSeries TruncatedSeries::constant(complex value, std::size_t order) {
    std::vector<complex> c(order + 1, complex{});
    c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::shift_down() const {
    if (order() == 0) throw usage_error("shift_down: series of order 0 has no tail");
    return TruncatedSeries(std::vector<complex>(coeffs_.begin() + 1, coeffs_.end()));
}

TruncatedSeries TruncatedSeries::shift_up() const {
    std::vector<complex> c;
    c.reserve(coeffs_.size() + 1);
    c.push_back(complex{});
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
    std::vector<complex> c(new_order + 1, complex{});
    std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "add");
    std::vector<complex> c(a.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "sub");
    std::vector<complex> c(a.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, complex s) {
    std::vector<complex> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& x : c) x *= s;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "mul");
    std::vector<complex> c(a.size(), complex{});
    for (std::size_t k = 0; k < c.size(); ++k) {
        complex acc{};
        for (std::size_t j = 0; j <= k; ++j) acc += a[j] * b[k - j];
        c[k] = acc;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "div");
    if (std::abs(b[0]) < kDivisionGuard) {
        std::ostringstream os;
        os << "div: near-singular division, |b_0| = " << std::abs(b[0]);
        throw near_singular_division(os.str());
    }
    std::vector<complex> r(a.size(), complex{});
    for (std::size_t k = 0; k < r.size(); ++k) {
        complex acc = a[k];
        for (std::size_t j = 0; j < k; ++j) acc -= r[j] * b[k - j];
        r[k] = acc / b[0];
    }
    return TruncatedSeries(std::move(r));
}

double max_abs_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

// b_0 = 1, b_n = sum_{k<n} c_{n-k} b_k, g_n = 2 b_n.
TruncatedSeries cayley_omega_to_g(const TruncatedSeries& omega) {
    if (std::abs(omega[0]) > kNormalizationTol)
        throw usage_error("cayley_omega_to_g: omega(0) must be 0");
    const std::size_t m = omega.order();
    std::vector<complex> b(m + 1, complex{});
    b[0] = 1.0;
    for (std::size_t n = 1; n <= m; ++n) {
        complex acc{};
        for (std::size_t k = 0; k < n; ++k) acc += omega[n - k] * b[k];
        b[n] = acc;
    }
    std::vector<complex> g(m + 1);
    g[0] = 1.0;
    for (std::size_t n = 1; n <= m; ++n) g[n] = 2.0 * b[n];
    return TruncatedSeries(std::move(g));
}

// c_n = b_n - sum_{k=1}^{n-1} c_{n-k} b_k with b_n = g_n / 2.
TruncatedSeries cayley_g_to_omega(const TruncatedSeries& g) {
    if (std::abs(g[0] - 1.0) > kNormalizationTol)
        throw usage_error("cayley_g_to_omega: g(0) must be 1");
    const std::size_t m = g.order();
    std::vector<complex> b(m + 1);
    b[0] = 1.0;
    for (std::size_t n = 1; n <= m; ++n) b[n] = 0.5 * g[n];
    std::vector<complex> c(m + 1, complex{});
    for (std::size_t n = 1; n <= m; ++n) {
        complex acc = b[n];
        for (std::size_t k = 1; k < n; ++k) acc -= c[n - k] * b[k];
        c[n] = acc;
    }
    return TruncatedSeries(std::move(c));
}

}  // namespace schurcoef
