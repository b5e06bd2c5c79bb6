#include <doctest.h>

#include "oracles.hpp"
#include "schurcoef/caratheodory.hpp"
#include "schurcoef/errors.hpp"
#include "schurcoef/maps.hpp"

using namespace schurcoef;
using cvec = std::vector<complex>;

namespace {

cvec doubled(const cvec& b) {
    cvec p = b;
    for (auto& z : p) z *= 2.0;
    return p;
}

}  // namespace

TEST_CASE("toeplitz_matrix is Hermitian with diagonal 2") {
    oracle::Rng rng(61);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = rng.polydisk(rng.index(0, 7), 2.0);
        const std::size_t dim = p.size() + 1;
        const auto m = toeplitz_matrix(p);
        REQUIRE(m.size() == dim * dim);
        for (std::size_t i = 0; i < dim; ++i) {
            CHECK(m[i * dim + i] == complex{2.0});
            for (std::size_t j = 0; j < dim; ++j) CHECK(m[i * dim + j] == std::conj(m[j * dim + i]));
            for (std::size_t j = i + 1; j < dim; ++j) CHECK(m[i * dim + j] == p[j - i - 1]);
        }
    }
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
    oracle::Rng rng(62);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dim = rng.index(1, 6);
        std::vector<complex> a(dim * dim);
        for (auto& z : a) z = rng.disk(3.0);
        const complex expected = oracle::determinant_leibniz(a, dim);
        CHECK(std::abs(determinant(a, dim) - expected) < 1e-11 * std::max(1.0, std::abs(expected)));
    }
    CHECK(determinant({1, 2, 2, 4}, 2) == complex{});
    CHECK(determinant({}, 0) == complex{1.0});
}

TEST_CASE("toeplitz_minors examples") {
    const auto one = toeplitz_minors(cvec{complex(0.6, 0.8)});
    REQUIRE(one.deltas.size() == 2u);
    CHECK(one.deltas[0] == doctest::Approx(2.0));
    CHECK(one.deltas[1] == doctest::Approx(3.0));
    CHECK(std::abs(toeplitz_minors(cvec{2.0}).deltas[1]) < 1e-15);

    const auto twos = toeplitz_minors(cvec{2, 2, 2});
    for (std::size_t k = 1; k <= 3; ++k) CHECK(std::abs(twos.deltas[k]) < 1e-12);

    const auto zeros = toeplitz_minors(cvec{0, 0});
    CHECK(zeros.deltas == std::vector<double>{2, 4, 8});
    CHECK(toeplitz_minors(cvec{}).deltas == std::vector<double>{2});
}

TEST_CASE("toeplitz_minors against Leibniz minors") {
    oracle::Rng rng(63);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = rng.polydisk(rng.index(1, 5), 2.0);
        const auto minors = toeplitz_minors(p);
        for (std::size_t k = 0; k <= p.size(); ++k) {
            const std::size_t dim = k + 1;
            std::vector<complex> m(dim * dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    m[i * dim + j] = i == j ? complex{2.0} : i < j ? p[j - i - 1] : std::conj(p[i - j - 1]);
            const complex expected = oracle::determinant_leibniz(m, dim);
            CHECK(std::abs(expected.imag()) < 1e-10);
            CHECK(std::abs(minors.deltas[k] - expected.real()) < 1e-10);
        }
    }
}

TEST_CASE("is_caratheodory verdicts") {
    auto v = is_caratheodory(cvec{3.0});
    CHECK(v.status == MembershipStatus::rejected);
    CHECK(v.first_failure == 1u);

    v = is_caratheodory(cvec(5));
    CHECK(v.status == MembershipStatus::interior);
    CHECK_FALSE(v.first_failure.has_value());

    CHECK(is_caratheodory(cvec{2, 2}).status == MembershipStatus::boundary);
    CHECK(is_caratheodory(cvec{2, 2, 2, 2, 2, 2}).status == MembershipStatus::boundary);
    CHECK(is_caratheodory(cvec{1, 1}).status == MembershipStatus::interior);

    // Delta_1 > 0 but Delta_2 < 0.
    v = is_caratheodory(cvec{1.9, -1.9});
    CHECK(v.status == MembershipStatus::rejected);
    CHECK(v.first_failure == 2u);
    CHECK(v.minors.deltas[2] < -kMembershipTol);

    CHECK(std::string(to_string(MembershipStatus::boundary)) == "boundary");
    CHECK(std::string(to_string(MembershipStatus::interior)) == "interior");
    CHECK(std::string(to_string(MembershipStatus::rejected)) == "rejected");
}

TEST_CASE("tolerance decides near-boundary verdicts") {
    const cvec p{2.0 - 1e-6};
    CHECK(is_caratheodory(p, 1e-8).status == MembershipStatus::interior);
    CHECK(is_caratheodory(p, 1e-4).status == MembershipStatus::boundary);
    const cvec q{2.0 + 1e-6};
    CHECK(is_caratheodory(q, 1e-8).status == MembershipStatus::rejected);
    CHECK(is_caratheodory(q, 1e-4).status == MembershipStatus::boundary);
}

TEST_CASE("images of the closed polydisk are never rejected") {
    oracle::Rng rng(64);
    for (int trial = 0; trial < 500; ++trial) {
        auto gamma = rng.polydisk(rng.index(1, 8));
        for (auto& g : gamma)
            if (rng.uniform(0, 1) < 0.2) g = rng.circle();
        const auto v = is_caratheodory(doubled(vec_T(gamma).values));
        CHECK(v.status != MembershipStatus::rejected);
    }
}

TEST_CASE("lz_parametrize examples") {
    oracle::Rng rng(65);
    for (int trial = 0; trial < 20; ++trial) {
        const auto [p2, p3] = lz_parametrize(2.0, rng.disk(), rng.disk());
        CHECK(std::abs(p2 - 2.0) < 1e-15);
        CHECK(std::abs(p3 - 2.0) < 1e-15);
        const auto [q2, q3] = lz_parametrize(0.0, 1.0, rng.disk());
        CHECK(q2 == complex{2.0});
        CHECK(q3 == complex{});
    }
    CHECK_THROWS_AS(lz_parametrize(-0.1, 0, 0), domain_error);
    CHECK_THROWS_AS(lz_parametrize(2.1, 0, 0), domain_error);
    CHECK_THROWS_AS(lz_parametrize(1.0, 1.1, 0), domain_error);
    CHECK_THROWS_AS(lz_parametrize(1.0, 0, complex(0, 1.1)), domain_error);
}

TEST_CASE("lz_parametrize matches twice T_2, T_3") {
    oracle::Rng rng(66);
    for (int trial = 0; trial < 300; ++trial) {
        const double p1 = rng.uniform(0.0, 2.0);
        const complex x = rng.disk(), y = rng.disk();
        const auto [p2, p3] = lz_parametrize(p1, x, y);
        const auto b = vec_T(cvec{p1 / 2.0, x, y}).values;
        CHECK(std::abs(p2 - 2.0 * b[1]) < 1e-12);
        CHECK(std::abs(p3 - 2.0 * b[2]) < 1e-12);
        // The parametrized point lies in the body and inverts to (p1/2, x, y).
        const auto back = invert_T({cvec{p1 / 2.0, p2 / 2.0, p3 / 2.0}, CoefficientClass::caratheodory_V});
        for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(back[j]) <= 1.0 + 1e-8);
    }
}

TEST_CASE("sampling is deterministic and lands in the body") {
    const auto a = sample_body(4, 200, 7, false);
    const auto b = sample_body(4, 200, 7, false);
    REQUIRE(a.size() == 200u);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].values == b[i].values);
    CHECK(sample_body(4, 5, 8, false)[0].values != a[0].values);

    for (bool closed : {false, true}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto params = sample_polydisk(n, 100, 11, closed);
            const auto points = sample_body(n, 100, 11, closed);
            for (std::size_t i = 0; i < points.size(); ++i) {
                CHECK(points[i].class_tag == CoefficientClass::caratheodory_V);
                CHECK(points[i].values == vec_T(params[i]).values);
                for (const auto& g : params[i]) CHECK(std::abs(g) <= 1.0 + 1e-15);
                CHECK(is_caratheodory(doubled(points[i].values)).status != MembershipStatus::rejected);
            }
        }
    }
    CHECK_THROWS_AS(sample_body(0, 1, 1, false), usage_error);
    CHECK_THROWS_AS(sample_body(1, 0, 1, false), usage_error);
}

TEST_CASE("closed sampling draws unimodular coordinates at rate 1/(n+1)") {
    const std::size_t n = 3, count = 4000;
    const auto params = sample_polydisk(n, count, 5, true);
    std::size_t hits = 0;
    for (const auto& g : params)
        for (const auto& z : g)
            if (std::abs(std::abs(z) - 1.0) < 1e-15) ++hits;
    const double rate = static_cast<double>(hits) / static_cast<double>(n * count);
    CHECK(rate == doctest::Approx(0.25).epsilon(0.1));

    for (const auto& g : sample_polydisk(n, 1000, 5, false))
        for (const auto& z : g) CHECK(std::abs(z) < 1.0);
}

TEST_CASE("n = 1 samples fill the unit disk") {
    const auto points = sample_body(1, 2000, 3, false);
    double max_r = 0.0, min_r = 1.0;
    int quadrants[4] = {0, 0, 0, 0};
    for (const auto& p : points) {
        const double r = std::abs(p.values[0]);
        max_r = std::max(max_r, r);
        min_r = std::min(min_r, r);
        quadrants[(p.values[0].real() < 0) * 2 + (p.values[0].imag() < 0)]++;
    }
    CHECK(max_r < 1.0);
    CHECK(max_r > 0.98);
    CHECK(min_r < 0.05);
    for (int q : quadrants) CHECK(q > 400);
}
