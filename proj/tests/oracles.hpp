#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library paths it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using complex = std::complex<double>;
using cvec = std::vector<complex>;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

    // Uniform in the disk of the given radius.
    complex disk(double radius = 1.0) {
        for (;;) {
            const double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0);
            if (x * x + y * y < 1.0) return radius * complex(x, y);
        }
    }

    complex circle() { return std::polar(1.0, uniform(0.0, 2.0 * M_PI)); }

    cvec polydisk(std::size_t n, double radius = 1.0) {
        cvec v(n);
        for (auto& z : v) z = disk(radius);
        return v;
    }

    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(gen_);
    }

private:
    std::mt19937_64 gen_;
};

// Truncated Cauchy product of equal-length coefficient vectors.
inline cvec series_mul(const cvec& a, const cvec& b) {
    cvec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// g = (1 + w) * sum_k w^k, valid for w(0) = 0.
inline cvec cayley_by_geometric_series(const cvec& w) {
    const std::size_t m = w.size();
    cvec sum(m), power(m);
    power[0] = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < m; ++i) sum[i] += power[i];
        power = series_mul(power, w);
    }
    cvec one_plus = w;
    one_plus[0] += 1.0;
    return series_mul(one_plus, sum);
}

// F_n straight from its defining recursion, no memoization (exponential; small n only).
inline complex F_naive(const cvec& g) {
    const std::size_t n = g.size();
    if (n == 1) return g[0];
    const cvec tail(g.begin() + 1, g.end());
    complex r = (1.0 - std::norm(g[0])) * F_naive(tail);
    for (std::size_t k = 2; k < n; ++k) {
        const cvec a(g.begin() + 1, g.begin() + 1 + (n - k));
        const cvec b(g.begin(), g.begin() + k);
        r -= std::conj(g[0]) * F_naive(a) * F_naive(b);
    }
    return r;
}

inline cvec vec_F_naive(const cvec& g) {
    cvec out;
    for (std::size_t k = 1; k <= g.size(); ++k) out.push_back(F_naive(cvec(g.begin(), g.begin() + k)));
    return out;
}

// b_n = c_n + sum c_{n-k} b_k by explicit loops.
inline cvec Q_naive(const cvec& c) {
    cvec b(c.size());
    for (std::size_t n = 0; n < c.size(); ++n) {
        b[n] = c[n];
        for (std::size_t k = 0; k < n; ++k) b[n] += c[n - k - 1] * b[k];
    }
    return b;
}

// Leibniz expansion over all permutations; dim <= 7 or so.
template <typename T>
T determinant_leibniz(const std::vector<T>& a, std::size_t dim) {
    std::vector<std::size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    T total{};
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j)
                if (perm[i] > perm[j]) ++inversions;
        T prod = T(1);
        for (std::size_t i = 0; i < dim; ++i) prod *= a[i * dim + perm[i]];
        total += inversions % 2 ? -prod : prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Real determinant by elimination with partial pivoting.
inline double determinant_real(std::vector<double> a, std::size_t dim) {
    double det = 1.0;
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < dim; ++r)
            if (std::abs(a[r * dim + c]) > std::abs(a[p * dim + c])) p = r;
        if (a[p * dim + c] == 0.0) return 0.0;
        if (p != c) {
            for (std::size_t k = 0; k < dim; ++k) std::swap(a[c * dim + k], a[p * dim + k]);
            det = -det;
        }
        det *= a[c * dim + c];
        for (std::size_t r = c + 1; r < dim; ++r) {
            const double f = a[r * dim + c] / a[c * dim + c];
            for (std::size_t k = c; k < dim; ++k) a[r * dim + k] -= f * a[c * dim + k];
        }
    }
    return det;
}

// Real Jacobian determinant of map: C^n -> C^n viewed as R^{2n} -> R^{2n},
// coordinates ordered (Re z_1, Im z_1, Re z_2, ...), central differences.
template <typename Map>
double fd_real_jacobian(Map&& map, const cvec& z, double h) {
    const std::size_t n = z.size();
    const std::size_t dim = 2 * n;
    std::vector<double> J(dim * dim);
    for (std::size_t col = 0; col < dim; ++col) {
        cvec plus = z, minus = z;
        const complex step = col % 2 ? complex(0.0, h) : complex(h, 0.0);
        plus[col / 2] += step;
        minus[col / 2] -= step;
        const cvec fp = map(plus), fm = map(minus);
        for (std::size_t k = 0; k < n; ++k) {
            const complex d = (fp[k] - fm[k]) / (2.0 * h);
            J[(2 * k) * dim + col] = d.real();
            J[(2 * k + 1) * dim + col] = d.imag();
        }
    }
    return determinant_real(J, dim);
}

inline double max_abs_diff(const cvec& a, const cvec& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace oracle
