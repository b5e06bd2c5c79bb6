#include <doctest.h>

#include "oracles.hpp"
#include "schurcoef/errors.hpp"
#include "schurcoef/maps.hpp"

using namespace schurcoef;
using cvec = std::vector<complex>;

TEST_CASE("eval_F against closed forms") {
    CHECK(std::abs(eval_F(cvec{0.5, 0.5}) - 0.375) < 1e-15);
    CHECK(std::abs(eval_F(cvec{0.5, 0.5, 0.5}) - 0.1875) < 1e-15);
    const complex g{0.3, -0.7};
    CHECK(eval_F(cvec{0, 0, 0, g}) == g);
    CHECK(eval_F(cvec{g}) == g);
    CHECK_THROWS_AS(eval_F(cvec{}), usage_error);
}

TEST_CASE("eval_F agrees with the unmemoized recursion") {
    oracle::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto gamma = rng.polydisk(rng.index(1, 8));
        CHECK(oracle::max_abs_diff(vec_F(gamma).values, oracle::vec_F_naive(gamma)) < 1e-14);
    }
}

TEST_CASE("vec_F") {
    const auto p = vec_F(cvec{0.5, 0.5, 0.5});
    CHECK(p.class_tag == CoefficientClass::schur_U);
    CHECK(oracle::max_abs_diff(p.values, cvec{0.5, 0.375, 0.1875}) < 1e-15);
    CHECK(oracle::max_abs_diff(vec_F(cvec(5)).values, cvec(5)) == 0.0);
}

TEST_CASE("vec_F prefixes are vec_F of prefixes") {
    oracle::Rng rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const auto gamma = rng.polydisk(rng.index(2, 10));
        const auto full = vec_F(gamma).values;
        const std::size_t j = rng.index(1, gamma.size());
        const auto part = vec_F(std::span(gamma).first(j)).values;
        for (std::size_t k = 0; k < j; ++k) CHECK(part[k] == full[k]);
    }
}

TEST_CASE("eval_G") {
    CHECK(eval_G(cvec{complex(0.4, 0.1)}, 2) == complex{});
    CHECK(std::abs(eval_G(cvec{0.5, 0.5}, 3) + 0.09375) < 1e-16);
    CHECK_THROWS_AS(eval_G(cvec{}, 1), usage_error);
    CHECK_THROWS_AS(eval_G(cvec{0.1, 0.2}, 2), usage_error);

    oracle::Rng rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = rng.index(2, 9);
        const auto gamma = rng.polydisk(n);
        complex damping = 1.0;
        for (std::size_t j = 0; j + 1 < n; ++j) damping *= 1.0 - std::norm(gamma[j]);
        const auto prefix = std::span(gamma).first(n - 1);
        CHECK(std::abs(eval_F(gamma) - eval_G(prefix, n) - damping * gamma[n - 1]) < 1e-14);
    }
}

TEST_CASE("Q and R examples") {
    CHECK(eval_Q(cvec{1, 1, 1}) == complex{4.0});
    CHECK(eval_Q(cvec(6)) == complex{});
    CHECK(eval_Q(cvec{1, 0, 0, 0}) == complex{1.0});
    CHECK(eval_R(cvec{1, 1}) == complex{});
    CHECK_THROWS_AS(eval_Q(cvec{}), usage_error);
    CHECK_THROWS_AS(eval_R(cvec{}), usage_error);

    oracle::Rng rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = rng.polydisk(rng.index(1, 10));
        CHECK(oracle::max_abs_diff(vec_Q(x).values, oracle::Q_naive(x)) < 1e-13);
        CHECK(oracle::max_abs_diff(vec_Q(vec_R(x).values).values, x) < 1e-11);
        CHECK(oracle::max_abs_diff(vec_R(vec_Q(x).values).values, x) < 1e-11);
        cvec minus_x = x;
        for (auto& z : minus_x) z = -z;
        CHECK(std::abs(eval_R(x) + eval_Q(minus_x)) < 1e-12);
    }
}

TEST_CASE("T examples") {
    CHECK(std::abs(eval_T_composed(cvec{0.5, 0.5}) - 0.625) < 1e-15);
    CHECK(std::abs(eval_T_recursive(cvec{0.5, 0.5}) - 0.625) < 1e-15);
    const complex g{-0.2, 0.9};
    CHECK(eval_T_recursive(cvec{g}) == g);
    CHECK(eval_T_composed(cvec(4)) == complex{});
    CHECK(eval_T_recursive(cvec(4)) == complex{});

    // gamma_1 = 1 is g = (1+z)/(1-z), all b_n = 1, whatever the tail.
    oracle::Rng rng(35);
    for (int trial = 0; trial < 50; ++trial) {
        auto gamma = rng.polydisk(rng.index(1, 8));
        gamma[0] = 1.0;
        for (const auto& b : vec_T(gamma).values) CHECK(std::abs(b - 1.0) < 1e-14);
        for (const auto& b : vec_T_recursive(gamma).values) CHECK(std::abs(b - 1.0) < 1e-13);
    }
}

TEST_CASE("T recursion agrees with the composition") {
    oracle::Rng rng(36);
    for (int trial = 0; trial < 300; ++trial) {
        const auto gamma = rng.polydisk(rng.index(1, 10));
        const auto a = vec_T(gamma), b = vec_T_recursive(gamma);
        CHECK(a.class_tag == CoefficientClass::caratheodory_V);
        CHECK(oracle::max_abs_diff(a.values, b.values) < 1e-12);
        CHECK(oracle::max_abs_diff(a.values, oracle::Q_naive(oracle::vec_F_naive(gamma))) < 1e-13);
    }
}

TEST_CASE("vec_T range bound on the closed polydisk") {
    oracle::Rng rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        auto gamma = rng.polydisk(rng.index(1, 10));
        for (auto& g : gamma)
            if (rng.uniform(0, 1) < 0.2) g = rng.circle();
        for (const auto& b : vec_T(gamma).values) CHECK(std::abs(b) <= 1.0 + 1e-12);
    }
}

TEST_CASE("jacobian_F closed form") {
    CHECK(jacobian_F(cvec(4)) == 1.0);
    CHECK(jacobian_F(cvec{complex(0.3, 0.3)}) == 1.0);
    // n = 2: delta_1^2 = (3/4)^2; n = 3 adds delta_2^2 = (9/16)^2.
    CHECK(jacobian_F(cvec{0.5, 0.5}) == doctest::Approx(0.5625));
    CHECK(jacobian_F(cvec{0.5, 0.5, 0.1}) == doctest::Approx(0.177978515625));
    CHECK_THROWS_AS(jacobian_F(cvec{0.5, 1.0}), domain_error);
    CHECK_THROWS_AS(jacobian_F(cvec{}), usage_error);
}

TEST_CASE("jacobian_F matches finite differences") {
    auto F = [](const cvec& g) { return vec_F(g).values; };
    // Fixed points first.
    CHECK(oracle::fd_real_jacobian(F, cvec{0.5, 0.5}, 1e-5) == doctest::Approx(0.5625).epsilon(1e-6));
    CHECK(oracle::fd_real_jacobian(F, cvec{0.5, 0.5, 0.1}, 1e-5) ==
          doctest::Approx(0.177978515625).epsilon(1e-6));

    oracle::Rng rng(38);
    for (int trial = 0; trial < 40; ++trial) {
        const auto gamma = rng.polydisk(rng.index(2, 6), 0.8);
        const double closed = jacobian_F(gamma);
        const double fd = oracle::fd_real_jacobian(F, gamma, 1e-5);
        CHECK(closed > 0.0);
        CHECK(std::abs(fd - closed) <= 1e-6 * closed);
    }
}

TEST_CASE("boundary non-injectivity of vec_F") {
    oracle::Rng rng(39);
    for (int trial = 0; trial < 50; ++trial) {
        auto gamma = rng.polydisk(rng.index(2, 8));
        gamma[0] = rng.circle();
        cvec truncated(gamma.size());
        truncated[0] = gamma[0];
        CHECK(vec_F(gamma).values == vec_F(truncated).values);
    }
}

TEST_CASE("injectivity on the open polydisk via extraction") {
    oracle::Rng rng(40);
    for (int trial = 0; trial < 200; ++trial) {
        const auto gamma = rng.polydisk(rng.index(1, 8), 0.95);
        const auto c = vec_F(gamma).values;
        cvec omega{0.0};
        omega.insert(omega.end(), c.begin(), c.end());
        const auto back = extract_parameters(TruncatedSeries(omega));
        for (std::size_t j = 0; j < gamma.size(); ++j) CHECK(std::abs(back[j] - gamma[j]) < 1e-9);
    }
}

TEST_CASE("invert_T") {
    const auto g = invert_T({cvec{1, 1, 1}, CoefficientClass::caratheodory_V});
    CHECK(g.blaschke_index() == 1u);
    CHECK(g[0] == complex{1.0});
    CHECK(g[1] == complex{});
    CHECK(g[2] == complex{});

    const auto z = invert_T({cvec(3), CoefficientClass::caratheodory_V});
    for (std::size_t j = 0; j < 3; ++j) CHECK(z[j] == complex{});

    oracle::Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const auto gamma = rng.polydisk(rng.index(1, 10), 0.9);
        const auto back = invert_T(vec_T(gamma));
        for (std::size_t j = 0; j < gamma.size(); ++j) CHECK(std::abs(back[j] - gamma[j]) < 1e-8);
    }
}

TEST_CASE("invert_T rejects points outside the body") {
    try {
        invert_T({cvec{1.5}, CoefficientClass::caratheodory_V});
        FAIL("expected not_in_body");
    } catch (const not_in_body& e) {
        CHECK(e.index() == 1u);
        CHECK(e.modulus() == doctest::Approx(1.5));
    }
    // |b_1| = 1 forces b_2 = b_1^2; (1, 0.5) violates it without leaving the disk early.
    try {
        invert_T({cvec{1, 0.5}, CoefficientClass::caratheodory_V});
        FAIL("expected not_in_body");
    } catch (const not_in_body& e) {
        CHECK(e.index() == 2u);
    }
    // b = (0, 1.2): gamma_2 = 1.2.
    CHECK_THROWS_AS(invert_T({cvec{0, 1.2}, CoefficientClass::caratheodory_V}), not_in_body);
}
