#include "schurcoef/caratheodory.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "schurcoef/errors.hpp"

namespace schurcoef {

namespace {

// Hermitian determinants must come out real up to this fraction of their scale.
constexpr double kImagResidueTol = 1e-9;

// 53 random bits mapped to [0, 1); independent of the standard library's distributions.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1p-53;
}

complex uniform_disk(std::mt19937_64& rng) {
    for (;;) {
        const double x = 2.0 * unit_uniform(rng) - 1.0;
        const double y = 2.0 * unit_uniform(rng) - 1.0;
        if (x * x + y * y < 1.0) return {x, y};
    }
}

complex uniform_circle(std::mt19937_64& rng) {
    return std::polar(1.0, 2.0 * std::numbers::pi * unit_uniform(rng));
}

}  // namespace

const char* to_string(MembershipStatus s) {
    switch (s) {
        case MembershipStatus::interior: return "interior";
        case MembershipStatus::boundary: return "boundary";
        case MembershipStatus::rejected: return "rejected";
    }
    return "?";
}

std::vector<complex> toeplitz_matrix(std::span<const complex> p) {
    const std::size_t dim = p.size() + 1;
    std::vector<complex> m(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (i == j)
                m[i * dim + j] = 2.0;
            else if (j > i)
                m[i * dim + j] = p[j - i - 1];
            else
                m[i * dim + j] = std::conj(p[i - j - 1]);
        }
    }
    return m;
}

complex determinant(std::vector<complex> a, std::size_t dim) {
    if (a.size() != dim * dim) throw usage_error("determinant: matrix size does not match dim");
    complex det = 1.0;
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < dim; ++r)
            if (std::abs(a[r * dim + col]) > std::abs(a[pivot * dim + col])) pivot = r;
        if (a[pivot * dim + col] == complex{}) return 0.0;
        if (pivot != col) {
            for (std::size_t c = 0; c < dim; ++c) std::swap(a[col * dim + c], a[pivot * dim + c]);
            det = -det;
        }
        const complex d = a[col * dim + col];
        det *= d;
        for (std::size_t r = col + 1; r < dim; ++r) {
            const complex factor = a[r * dim + col] / d;
            if (factor == complex{}) continue;
            for (std::size_t c = col; c < dim; ++c) a[r * dim + c] -= factor * a[col * dim + c];
        }
    }
    return det;
}

ToeplitzMinorSequence toeplitz_minors(std::span<const complex> p) {
    ToeplitzMinorSequence out;
    out.p.assign(p.begin(), p.end());
    out.deltas.reserve(p.size() + 1);
    for (std::size_t k = 0; k <= p.size(); ++k) {
        const std::size_t dim = k + 1;
        auto m = toeplitz_matrix(p.first(k));
        // Hadamard bound on |det| sets the scale of acceptable rounding.
        double scale = 1.0;
        for (std::size_t i = 0; i < dim; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < dim; ++j) row += std::norm(m[i * dim + j]);
            scale *= std::sqrt(row);
        }
        const complex det = determinant(std::move(m), dim);
        if (std::abs(det.imag()) > kImagResidueTol * std::max(1.0, scale)) {
            std::ostringstream os;
            os << "toeplitz_minors: Delta_" << k << " has imaginary residue " << det.imag();
            throw std::runtime_error(os.str());
        }
        out.deltas.push_back(det.real());
    }
    return out;
}

MembershipVerdict is_caratheodory(std::span<const complex> p, double tol) {
    if (!(tol > 0.0)) throw usage_error("is_caratheodory: tol must be positive");
    MembershipVerdict v;
    v.minors = toeplitz_minors(p);
    bool all_positive = true;
    for (std::size_t k = 0; k < v.minors.deltas.size(); ++k) {
        const double d = v.minors.deltas[k];
        if (d < -tol) {
            v.status = MembershipStatus::rejected;
            v.first_failure = k;
            return v;
        }
        if (d <= tol) all_positive = false;
    }
    v.status = all_positive ? MembershipStatus::interior : MembershipStatus::boundary;
    return v;
}

std::pair<complex, complex> lz_parametrize(double p1, complex x, complex y) {
    if (!(p1 >= 0.0 && p1 <= 2.0)) throw domain_error("lz_parametrize: p1 must lie in [0, 2]");
    if (std::abs(x) > 1.0 + kModulusTol) throw domain_error("lz_parametrize: |x| must be <= 1");
    if (std::abs(y) > 1.0 + kModulusTol) throw domain_error("lz_parametrize: |y| must be <= 1");
    const double rest = 4.0 - p1 * p1;
    const complex p2 = 0.5 * (p1 * p1 + x * rest);
    const complex p3 =
        0.25 * (p1 * p1 * p1 + rest * (2.0 * p1 * x - p1 * x * x) + 2.0 * rest * (1.0 - std::norm(x)) * y);
    return {p2, p3};
}

std::vector<std::vector<complex>> sample_polydisk(std::size_t n, std::size_t count,
                                                  std::uint64_t seed, bool closed) {
    if (n < 1) throw usage_error("sample_body: n must be at least 1");
    if (count < 1) throw usage_error("sample_body: count must be at least 1");
    std::mt19937_64 rng(seed);
    const double boundary_probability = 1.0 / static_cast<double>(n + 1);
    std::vector<std::vector<complex>> draws(count, std::vector<complex>(n));
    for (auto& gamma : draws) {
        for (auto& g : gamma) {
            if (closed && unit_uniform(rng) < boundary_probability)
                g = uniform_circle(rng);
            else
                g = uniform_disk(rng);
        }
    }
    return draws;
}

std::vector<CoefficientPoint> sample_body(std::size_t n, std::size_t count, std::uint64_t seed,
                                          bool closed) {
    const auto draws = sample_polydisk(n, count, seed, closed);
    std::vector<CoefficientPoint> out;
    out.reserve(count);
    for (const auto& gamma : draws) out.push_back(vec_T(gamma));
    return out;
}

}  // namespace schurcoef
