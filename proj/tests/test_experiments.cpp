#include <doctest.h>

#include <cmath>

#include "bagraph/experiments.hpp"
#include "bagraph/formulas.hpp"

using namespace bagraph;

TEST_CASE("wilson interval") {
    const auto [lo, hi] = wilson_interval(0, 10);
    CHECK(lo == 0.0);
    CHECK(hi == doctest::Approx(0.27753).epsilon(1e-4));
    const auto [lo2, hi2] = wilson_interval(10, 10);
    CHECK(lo2 == doctest::Approx(1.0 - 0.27753).epsilon(1e-4));
    CHECK(hi2 == 1.0);
    const auto [lo3, hi3] = wilson_interval(50, 100);
    CHECK(lo3 == doctest::Approx(0.40383).epsilon(1e-4));
    CHECK(hi3 == doctest::Approx(0.59617).epsilon(1e-4));
}

TEST_CASE("sweep on complete graphs") {
    const auto cells = run_sweep({8}, {7}, 10, SeedSpec{1, 0}, ModelKind::bilateral);
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].frac_connected == 1.0);
    CHECK(cells[0].mean_degree == 7.0);
    CHECK(cells[0].mean_isolated == 0.0);
    CHECK(cells[0].trials == 10);
    CHECK(cells[0].master_seed == 1);
}

TEST_CASE("sweep cell invariants and thread independence") {
    const std::vector<std::uint32_t> ns{60, 200};
    const std::vector<std::uint32_t> ks{2, 5};
    for (auto kind : {ModelKind::bilateral, ModelKind::unilateral, ModelKind::erdos_renyi}) {
        RunOptions one;
        one.threads = 1;
        RunOptions many;
        many.threads = 8;
        const auto a = run_sweep(ns, ks, 40, SeedSpec{5, 0}, kind, one);
        const auto b = run_sweep(ns, ks, 40, SeedSpec{5, 0}, kind, many);
        REQUIRE(a.size() == 4);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].frac_connected == b[i].frac_connected);
            CHECK(a[i].mean_degree == b[i].mean_degree);
            CHECK(a[i].mean_isolated == b[i].mean_isolated);
            CHECK(a[i].mean_min_degree == b[i].mean_min_degree);
            CHECK(a[i].wilson_ci_low <= a[i].frac_connected);
            CHECK(a[i].frac_connected <= a[i].wilson_ci_high);
            if (kind == ModelKind::bilateral) CHECK(a[i].mean_degree <= a[i].k);
        }
        CHECK(a[0].n == 60);
        CHECK(a[1].k == 5);
    }
}

TEST_CASE("cell results depend only on their own parameters") {
    const auto alone = run_sweep({{100, 3}}, 30, SeedSpec{2, 0}, ModelKind::bilateral);
    const auto mixed = run_sweep({{50, 2}, {100, 3}}, 30, SeedSpec{2, 0}, ModelKind::bilateral);
    CHECK(alone[0].frac_connected == mixed[1].frac_connected);
    CHECK(alone[0].mean_degree == mixed[1].mean_degree);
}

TEST_CASE("resource guard") {
    RunOptions tight;
    tight.memory_budget_bytes = 1024;
    CHECK_THROWS_AS(run_sweep({1000}, {10}, 1, SeedSpec{}, ModelKind::bilateral, tight), ResourceError);
    CHECK_THROWS_AS(run_sweep({10}, {10}, 1, SeedSpec{}, ModelKind::bilateral), ParameterError);
    CHECK_THROWS_AS(run_sweep({10}, {2}, 0, SeedSpec{}, ModelKind::bilateral), ParameterError);
}

TEST_CASE("isolation estimates") {
    const auto two = estimate_isolation(2, 1, 100, SeedSpec{1, 0});
    CHECK(two.mean_isolated == 0.0);
    CHECK(two.p1_hat == 0.0);

    const auto k2 = estimate_isolation(500, 2, 10'000, SeedSpec{3, 0});
    const double scaled = 500.0 * k2.p1_hat;
    const double scaled_se = 500.0 * k2.p1_se;
    const double combined = std::sqrt(scaled_se * scaled_se + k2.mean_isolated_se * k2.mean_isolated_se);
    CHECK(std::abs(scaled - k2.mean_isolated) <= 3.0 * combined);

    const auto k6 = estimate_isolation(500, 6, 2'000, SeedSpec{3, 0});
    CHECK(k2.mean_isolated > k6.mean_isolated);
}

TEST_CASE("pair correlation") {
    const auto none = estimate_pair_correlation(2, 1, 100, SeedSpec{1, 0});
    CHECK(none.p1_hat == 0.0);
    CHECK_FALSE(none.ratio.has_value());
    CHECK_FALSE(none.ratio_se.has_value());

    const auto a = estimate_pair_correlation(200, 2, 20'000, SeedSpec{1, 0});
    const auto b = estimate_pair_correlation(200, 2, 20'000, SeedSpec{2, 0});
    REQUIRE(a.ratio.has_value());
    REQUIRE(b.ratio.has_value());
    CHECK(a.p1_hat > 0.0);
    CHECK(a.p12_hat <= a.p1_hat);
    CHECK(*a.ratio >= 0.0);
    const double combined = std::sqrt(*a.ratio_se * *a.ratio_se + *b.ratio_se * *b.ratio_se);
    CHECK(std::abs(*a.ratio - *b.ratio) <= 4.0 * combined);
}

TEST_CASE("concentration check bounds") {
    const double f = an_concentration_check(500, 1.0, 5, SeedSpec{1, 0});
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    CHECK(f == an_concentration_check(500, 1.0, 5, SeedSpec{1, 0}));
    CHECK_THROWS_AS(an_concentration_check(20, 0.1, 3, SeedSpec{1, 0}), ParameterError);
}

TEST_CASE("mean degree near the limit") {
    const auto est = estimate_mean_degree(2000, 5, 100, SeedSpec{4, 0});
    CHECK(std::abs(est.mean - mean_degree_limit(5)) <= std::max(0.05, 3.0 * est.se));
}

TEST_CASE("per-rank connection frequencies match the limit law") {
    const std::uint32_t k = 6;
    const auto est = estimate_rank_connection(4000, k, 2000, SeedSpec{2, 0});
    REQUIRE(est.size() == k);
    for (std::uint32_t i = 1; i <= k; ++i) {
        const double expected = conn_prob_by_rank(i, k).get_d();
        CHECK(std::abs(est[i - 1].mean - expected) <= 4.0 * est[i - 1].se);
    }
}
