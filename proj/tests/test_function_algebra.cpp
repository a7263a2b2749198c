#include <doctest.h>

#include <cmath>
#include <random>

#include "loctower/function_algebra.hpp"

using namespace loctower;

TEST_CASE("interval chain construction and nesting") {
    CHECK_THROWS_AS(IntervalChain(IntervalChain::Mode::Symmetric, 0), TowerError);
    CHECK_THROWS_AS(IntervalChain(IntervalChain::Mode::Symmetric, 3, 5), TowerError);
    CHECK_THROWS_AS(IntervalChain(IntervalChain::Mode::Halfline, 3, 11), TowerError);

    IntervalChain sym(IntervalChain::Mode::Symmetric, 3, 10);
    const auto [f1, l1] = sym.level_range(1);
    const auto [f3, l3] = sym.level_range(3);
    CHECK(f3 == 0);
    CHECK(l3 == sym.grid_size());
    CHECK(f1 > f3);
    CHECK(l1 < l3);
    CHECK(sym.grid()[f1] == doctest::Approx(-1.0));
    CHECK(sym.grid()[l1 - 1] == doctest::Approx(1.0));

    IntervalChain half(IntervalChain::Mode::Halfline, 4, 10);
    CHECK(half.grid().front() == doctest::Approx(0.5));
    CHECK(half.grid().back() == doctest::Approx(4.0));
    const auto [hf2, hl2] = half.level_range(2);
    CHECK(hf2 == 0);  // every halfline level starts at 1/2
    CHECK(half.grid()[hl2 - 1] == doctest::Approx(2.0));
}

TEST_CASE("seminorm_p golden values") {
    IntervalChain half(IntervalChain::Mode::Halfline, 5, 1000);
    for (int ell = 1; ell <= 3; ++ell) {
        const auto g = make_witness(half, ell);
        const double expected = 2.0 / (4.0 + ell * ell);
        for (int n = 1; n <= 5; ++n)
            CHECK(std::abs(seminorm_p(g, n) - expected) <= 1e-6);
    }
    const auto zero = make_const(half, {0, 0});
    const auto one = make_const(half, {1, 0});
    for (int n = 1; n <= 5; ++n) {
        CHECK(seminorm_p(zero, n) == 0.0);
        CHECK(seminorm_p(one, n) == 1.0);
    }
    CHECK_THROWS_AS(seminorm_p(one, 6), TowerError);
}

TEST_CASE("seminorm properties on sampled functions") {
    IntervalChain sym(IntervalChain::Mode::Symmetric, 4, 100);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = coeff(rng), b = coeff(rng), c = coeff(rng);
        const auto f = GridFunction::sample(
            sym, [&](double t) { return a * std::sin(t) + b * t + c; });
        const auto g = GridFunction::sample(sym, [&](double t) { return std::cos(b * t) - a; });
        for (int n = 1; n <= 4; ++n) {
            if (n > 1) CHECK(seminorm_p(f, n - 1) <= seminorm_p(f, n) + 1e-15);
            // C*-law is exact on a finite grid
            CHECK(seminorm_p(f.conj() * f, n) ==
                  doctest::Approx(seminorm_p(f, n) * seminorm_p(f, n)).epsilon(1e-12));
            CHECK(seminorm_p(f * g, n) <= seminorm_p(f, n) * seminorm_p(g, n) + 1e-12);
        }
    }
}

TEST_CASE("quotient equality: clamp counterexample") {
    IntervalChain sym(IntervalChain::Mode::Symmetric, 3, 1000);
    const auto f = make_identity(sym);
    const auto g = make_clamp1(sym);
    CHECK(quotient_equal(f, g, 1, 1e-9));      // identical on [-1, 1]
    CHECK_FALSE(quotient_equal(f, g, 2, 1e-9));
    const auto phi = evaluation_character(sym, 2.0);
    CHECK(phi.min_level == 2);
    CHECK(std::abs(phi(f) - Complex(2, 0)) <= 1e-12);
    CHECK(std::abs(phi(g) - Complex(1, 0)) <= 1e-12);
    CHECK(std::abs(phi(f) - phi(g)) == doctest::Approx(1.0));
}

TEST_CASE("quotient_equal is an equivalence that refines downward") {
    IntervalChain sym(IntervalChain::Mode::Symmetric, 3, 100);
    const auto f = make_identity(sym);
    const auto g = make_clamp1(sym);
    const auto h = make_exp(sym);
    for (int n = 1; n <= 3; ++n) {
        CHECK(quotient_equal(f, f, n, 1e-12));  // reflexive
        CHECK(quotient_equal(f, g, n, 1e-9) == quotient_equal(g, f, n, 1e-9));
    }
    // equality at level n implies equality at every lower level
    for (int n = 2; n <= 3; ++n)
        if (quotient_equal(f, g, n, 1e-9)) CHECK(quotient_equal(f, g, n - 1, 1e-9));
    // shifting by a constant breaks equality everywhere
    const auto shifted = f + make_const(sym, {1, 0});
    for (int n = 1; n <= 3; ++n) CHECK_FALSE(quotient_equal(f, shifted, n, 1e-9));
    IntervalChain other(IntervalChain::Mode::Symmetric, 2, 100);
    CHECK_THROWS_AS(quotient_equal(f, make_identity(other), 1, 1e-9), TowerError);
    (void)h;
}

TEST_CASE("evaluation characters and domain boundaries") {
    IntervalChain sym(IntervalChain::Mode::Symmetric, 3, 100);
    CHECK(evaluation_character(sym, 0.0).min_level == 1);
    CHECK(evaluation_character(sym, 2.0).min_level == 2);
    CHECK(evaluation_character(sym, -2.5).min_level == 3);
    CHECK_THROWS_AS(evaluation_character(sym, 4.0), TowerError);

    IntervalChain half(IntervalChain::Mode::Halfline, 3, 100);
    CHECK(evaluation_character(half, 0.5).min_level == 1);
    CHECK(evaluation_character(half, 2.5).min_level == 3);
    try {
        evaluation_character(half, 0.0);  // the seed of the non-continuity demo
        FAIL("expected OutOfDomain");
    } catch (const TowerError& e) {
        CHECK(e.code() == ErrorCode::OutOfDomain);
    }
}

TEST_CASE("noncontinuity witness") {
    IntervalChain half(IntervalChain::Mode::Halfline, 10, 1000);
    const auto report = noncontinuity_witness(half, 10);
    CHECK(report.pass);
    REQUIRE(report.rows.size() == 10);
    for (const auto& row : report.rows) {
        const double expected = 2.0 / (4.0 + row.ell * row.ell);
        CHECK(row.phi_value == doctest::Approx(0.5));
        CHECK(row.pass);
        REQUIRE(row.seminorms.size() == 10);
        for (double p : row.seminorms) {
            CHECK(std::abs(p - expected) <= 1e-6);
            CHECK(p < row.bound);
        }
    }
    // golden first rows
    CHECK(report.rows[0].seminorms[0] == doctest::Approx(0.4));
    CHECK(report.rows[1].seminorms[0] == doctest::Approx(0.25));
    CHECK(report.rows[2].seminorms[0] == doctest::Approx(2.0 / 13.0));

    IntervalChain sym(IntervalChain::Mode::Symmetric, 3, 100);
    CHECK_THROWS_AS(noncontinuity_witness(sym, 3), TowerError);
}

TEST_CASE("divergent point evaluations (non-compactness remark)") {
    // nu_n(g) = g(n) = n diverges for g = identity; the character family is
    // unbounded on a single element.
    IntervalChain sym(IntervalChain::Mode::Symmetric, 5, 100);
    const auto g = make_identity(sym);
    for (int n = 1; n <= 5; ++n)
        CHECK(std::abs(evaluation_character(sym, n)(g)) == doctest::Approx(n));
}
