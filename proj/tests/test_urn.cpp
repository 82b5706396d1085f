#include <doctest.h>

#include <cmath>

#include "bagraph/model.hpp"
#include "bagraph/urn.hpp"
#include "bagraph/verify.hpp"
#include "oracles.hpp"

using namespace bagraph;
using oracle_ref::Q;

namespace {

Q q(long num, long den) {
    Q r(num, den);
    r.canonicalize();
    return r;
}

std::vector<std::uint32_t> to_vec(const UrnSpec& spec) { return {spec.counts().begin(), spec.counts().end()}; }

}  // namespace

TEST_CASE("UrnSpec validation") {
    CHECK_THROWS_AS(UrnSpec({3}), ParameterError);
    CHECK_THROWS_AS(UrnSpec({3, 0}), ParameterError);
    const UrnSpec spec({3, 2, 2});
    CHECK(spec.s() == 2);
    CHECK(spec.total() == 7);
    CHECK(spec.type0() == 3);
    CHECK(spec.others() == 4);
    CHECK(to_vec(UrnSpec::balanced(3, 4)) == std::vector<std::uint32_t>{4, 4, 4, 4});
}

TEST_CASE("first window pmf examples") {
    CHECK(exact_first_window_pmf(UrnSpec({2, 2}), 2, 1) == q(2, 3));
    CHECK(exact_first_window_pmf(UrnSpec({2, 2}), 2, 1) == oracle_ref::hypergeometric(4, 2, 2, 1));
    CHECK(exact_first_window_pmf(UrnSpec({2, 2}), 0, 0) == 1);
    const auto law = oracle_ref::sequential_window_law({3, 2, 2}, 2);
    CHECK(exact_first_window_pmf(UrnSpec({3, 2, 2}), 2, 2) == law[2]);
    CHECK_THROWS_AS(exact_first_window_pmf(UrnSpec({2, 2}), 5, 0), ParameterError);
    CHECK_THROWS_AS(exact_first_window_pmf(UrnSpec({2, 2}), 3, 3), ParameterError);
}

TEST_CASE("first window pmf equals the draw-tree law for every urn up to 8 objects") {
    for (const auto& spec : verify::all_urn_specs(8)) {
        for (std::uint32_t m = 0; m <= spec.total(); ++m) {
            const auto law = oracle_ref::sequential_window_law(to_vec(spec), m);
            Q total = 0;
            for (std::uint32_t j = 0; j <= std::min(m, spec.type0()); ++j) {
                const auto value = exact_first_window_pmf(spec, m, j);
                REQUIRE(value == law[j]);
                REQUIRE(value == oracle_ref::hypergeometric(spec.total(), spec.type0(), m, j));
                total += value;
            }
            REQUIRE(total == 1);
            REQUIRE(exact_first_window_cdf(spec, m, std::min(m, spec.type0())) == 1);
        }
    }
}

TEST_CASE("before-first-type0 examples") {
    const std::vector<std::uint32_t> zero{0};
    CHECK(exact_before_first_type0_pmf(UrnSpec({1, 1}), zero) == q(1, 2));
    const std::vector<std::uint32_t> one{1};
    CHECK(exact_before_first_type0_pmf(UrnSpec({2, 2}), one) == q(1, 3));
    const std::vector<std::uint32_t> both{1, 1};
    const auto law = oracle_ref::sequential_before_first({2, 2, 1});
    CHECK(exact_before_first_type0_pmf(UrnSpec({2, 2, 1}), both) == law.at(both));
    const std::vector<std::uint32_t> too_many{3};
    CHECK_THROWS_AS(exact_before_first_type0_pmf(UrnSpec({2, 2}), too_many), ParameterError);
    CHECK_THROWS_AS(exact_before_first_type0_pmf(UrnSpec({2, 2}), both), ParameterError);
}

TEST_CASE("before-first-type0 pmf equals the draw-tree law for every urn up to 8 objects") {
    for (const auto& spec : verify::all_urn_specs(8)) {
        const auto law = oracle_ref::sequential_before_first(to_vec(spec));
        Q total = 0;
        for (const auto& [counts, value] : law) {
            REQUIRE(exact_before_first_type0_pmf(spec, counts) == value);
            total += value;
        }
        REQUIRE(total == 1);
    }
}

TEST_CASE("library enumeration agrees with the draw tree") {
    const UrnSpec spec({2, 3, 1});
    const auto en = verify::enumerate_urn(spec);
    CHECK(en.arrangements == 60);
    for (std::uint32_t m = 0; m <= spec.total(); ++m) {
        const auto law = oracle_ref::sequential_window_law(to_vec(spec), m);
        for (std::uint32_t j = 0; j <= std::min(m, spec.type0()); ++j) {
            Q frac(en.window[m][j], en.arrangements);
            frac.canonicalize();
            CHECK(frac == law[j]);
        }
    }
}

TEST_CASE("negative multinomial pmf") {
    const std::vector<std::uint32_t> zero{0};
    CHECK(negmulti_pmf(1, zero) == q(1, 2));
    const std::vector<std::uint32_t> ten{1, 0};
    CHECK(negmulti_pmf(2, ten) == q(1, 9));
    const std::vector<std::uint32_t> one_zero{0, 1};
    CHECK(negmulti_pmf(2, ten) + negmulti_pmf(2, one_zero) == q(2, 9));
    for (std::uint32_t k = 1; k <= 3; ++k) {
        for (std::uint32_t len = 0; len <= 5; ++len) {
            for (const auto& counts : oracle_ref::compositions(len, k))
                REQUIRE(negmulti_pmf(k, counts) == oracle_ref::iid_before_stop(k, counts));
        }
    }
}

TEST_CASE("negative multinomial shells") {
    CHECK(negmulti_shell_sum(1, 1) == q(1, 2));
    CHECK(negmulti_shell_sum(2, 2) == q(2, 9));
    for (std::uint32_t k = 1; k <= 4; ++k) {
        for (std::uint32_t n = 1; n <= 7; ++n) {
            Q sum = 0;
            for (const auto& counts : oracle_ref::compositions(n - 1, k)) sum += oracle_ref::iid_before_stop(k, counts);
            sum.canonicalize();
            REQUIRE(negmulti_shell_sum(k, n) == sum);
        }
    }
}

TEST_CASE("shell remainder beyond 4(k+1)^2") {
    for (std::uint32_t k = 1; k <= 6; ++k) {
        const std::uint32_t cut = 4 * (k + 1) * (k + 1);
        Q head = 0;
        for (std::uint32_t n = 1; n <= cut; ++n) head += negmulti_shell_sum(k, n);
        Q tail = 1 - head;
        tail.canonicalize();
        Q expected(oracle_ref::pow_z(k, cut), oracle_ref::pow_z(k + 1, cut));
        expected.canonicalize();
        CHECK(tail == expected);
        CHECK(std::log(tail.get_d()) <= -4.0 * (k + 1));
    }
}

TEST_CASE("before-first pmf tends to the negative multinomial") {
    const std::vector<std::vector<std::uint32_t>> cases{{0, 0}, {1, 0}, {2, 1}, {1, 1, 1}, {3, 2}, {0, 5}};
    for (const auto& counts : cases) {
        const auto s = static_cast<std::uint32_t>(counts.size());
        const auto limit = negmulti_pmf(s, counts);
        double prev_gap = 1e300;
        for (std::uint32_t mc : {100U, 1000U, 10000U}) {
            std::vector<std::uint32_t> types(s + 1, mc);
            const Q ratio = exact_before_first_type0_pmf(UrnSpec(types), counts) / limit;
            const double gap = std::abs(ratio.get_d() - 1.0);
            CHECK(gap <= prev_gap);
            prev_gap = gap;
        }
        CHECK(prev_gap <= 0.01);
    }
}

TEST_CASE("lower tail bound") {
    CHECK(lower_tail_bound(1, 4, 1) == doctest::Approx(std::exp(-1.0 + std::log(8.0))));
    CHECK(lower_tail_bound(1, 4, 1) == doctest::Approx(2.943).epsilon(1e-3));
    CHECK(lower_tail_bound(3, 30, 5) ==
          doctest::Approx(std::exp(-7.5 + 5.0 * std::log(2.0) + 5.0 + std::log(6.0))));
    CHECK_THROWS_AS(lower_tail_bound(3, 30, 11), ParameterError);
    CHECK_THROWS_AS(lower_tail_bound(3, 30, 0), ParameterError);
}
