#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "ramsum/series.hpp"

using namespace ramsum;

TEST_CASE("dirichlet_partial basics") {
    CHECK(dirichlet_partial(cplx{2.0, 0.0}, {1, 1}, 1) == cplx{1.0, 0.0});
    // c_q(1) = mu(q): partial at s=2 approaches 1/zeta(2) = 6/pi^2
    const double target = 6.0 / (std::numbers::pi * std::numbers::pi);
    const cplx partial = dirichlet_partial(cplx{2.0, 0.0}, {1, 1}, 100000);
    CHECK(std::abs(partial - target) < 1e-4);
}

TEST_CASE("Dirichlet identity at s = beta s0") {
    // sum c_q / q^{beta s0} = sigma_{1-s0}(n) / zeta(beta s0)
    for (int beta : {1, 2, 3}) {
        for (long long n : {1, 24}) {
            const SumParams p{n, beta};
            for (const cplx s0 : {cplx{1.5, 0.0}, cplx{2.0, 0.0}, cplx{2.0, 1.0}}) {
                const cplx s = static_cast<double>(beta) * s0;
                const cplx partial = dirichlet_partial(s, p, 20000);
                const cplx closed = sigma(1.0 - s0, p) / zeta_eval(s);
                CHECK(std::abs(partial - closed) < 1e-3);
            }
        }
    }
}

TEST_CASE("dirichlet_target special points") {
    CHECK(dirichlet_target(cplx{1.0, 0.0}, {24, 3}) == cplx{0.0, 0.0});
    // beta = 2, s = 2: sigma_0^(2)(24)/zeta(2); d^2 | 24 for d in {1, 2}
    const cplx t = dirichlet_target(cplx{2.0, 0.0}, {24, 2});
    CHECK(t.real() == doctest::Approx(2.0 / zeta_eval(cplx{2.0, 0.0}).real()));
    // near a zeta zero the target is rejected
    const double g1 = bundled_zero_table().ordinate(0);
    CHECK_THROWS_AS(dirichlet_target(cplx{0.5, g1}, {1, 1}), numeric_error);
}

TEST_CASE("convergence_sweep structure and trend") {
    const std::vector<long long> cutoffs{10, 100, 1000};
    const SeriesDiagnostic diag = convergence_sweep(cplx{2.0, 0.0}, {24, 2}, cutoffs);
    REQUIRE(diag.partials.size() == cutoffs.size());
    REQUIRE(diag.residuals.size() == cutoffs.size());
    for (double r : diag.residuals) CHECK(r >= 0.0);
    CHECK(diag.residuals.back() < diag.residuals.front());
    CHECK_THROWS_AS(convergence_sweep(cplx{2.0, 0.0}, {24, 2}, {100, 10}),
                    std::invalid_argument);
}

TEST_CASE("partial sums at s = 1 drift toward zero (slow oscillation)") {
    // running RMS over the second half is below the first half
    const SumParams p{24, 1};
    const auto c = cohen_sum_range(1000, p);
    KahanSum acc;
    std::vector<double> partials;
    for (long long q = 1; q <= 1000; ++q) {
        acc.add(static_cast<double>(c[static_cast<std::size_t>(q - 1)]) /
                static_cast<double>(q));
        partials.push_back(acc.value());
    }
    double early = 0, late = 0;
    for (int i = 0; i < 500; ++i) early += partials[i] * partials[i];
    for (int i = 500; i < 1000; ++i) late += partials[i] * partials[i];
    CHECK(std::sqrt(late / 500.0) < std::sqrt(early / 500.0));
}

TEST_CASE("mangoldt series check") {
    // classical: target at s=2 is -zeta'(2)/zeta(2)
    const auto classical = mangoldt_series_check(cplx{2.0, 0.0}, 1, 1, 20000);
    const cplx want = -zeta_prime(cplx{2.0, 0.0}) / zeta_eval(cplx{2.0, 0.0});
    CHECK(std::abs(classical.target - want) < 1e-12);
    CHECK(std::abs(classical.partial - classical.target) < 5e-3);

    const auto q1 = mangoldt_series_check(cplx{2.0, 0.0}, 1, 1, 1);
    CHECK(q1.partial == cplx{0.0, 0.0}); // Lambda(1) = 0

    CHECK_THROWS_AS(mangoldt_series_check(cplx{0.9, 0.0}, 1, 1, 10),
                    std::invalid_argument);

    // generalized case against its closed form
    const auto gen = mangoldt_series_check(cplx{3.0, 0.0}, 4, 2, 100000);
    CHECK(std::abs(gen.partial - gen.target) < 1e-3);
}

TEST_CASE("growth exponent probes") {
    const auto mertens = growth_exponent({1, 1}, 100000);
    REQUIRE(mertens.has_value());
    CHECK(*mertens > 0.0);
    CHECK(*mertens < 1.0);

    const auto n24 = growth_exponent({24, 1}, 100000);
    REQUIRE(n24.has_value());
    CHECK(*n24 < 1.0);

    // degenerate trajectory: identically zero summatory function
    CHECK(!fit_growth_exponent(std::vector<long long>(4096, 0)).has_value());
    CHECK_THROWS_AS(growth_exponent({1, 1}, 50), std::invalid_argument);
}
