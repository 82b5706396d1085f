#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bagraph/rational.hpp"
#include "bagraph/urn.hpp"

namespace bagraph::verify {

/// Exhaustive arrangement counts of one urn: every distinct type sequence
/// is visited once (each stands for the same number of object permutations).
struct UrnEnumeration {
    std::uint64_t arrangements = 0;
    /// window[m][j]: sequences with exactly j type-0 objects in the first m places.
    std::vector<std::vector<std::uint64_t>> window;
    /// Counts of the non-zero types preceding the first type-0 object.
    std::map<std::vector<std::uint32_t>, std::uint64_t> before_first;
};

UrnEnumeration enumerate_urn(const UrnSpec& spec);

/// Every UrnSpec (>= 2 types, all counts >= 1) with total at most max_total.
std::vector<UrnSpec> all_urn_specs(std::uint32_t max_total);

/// Evaluators under test. Defaults are the library implementations; tests
/// substitute corrupted ones to exercise the failure path.
struct FormulaSet {
    std::function<Rational(const UrnSpec&, std::uint32_t, std::uint32_t)> first_window_pmf;
    std::function<Rational(const UrnSpec&, std::span<const std::uint32_t>)> before_first_type0_pmf;
    std::function<Rational(std::uint32_t, std::span<const std::uint32_t>)> negmulti_pmf;
    std::function<Rational(std::uint32_t, std::uint32_t)> negmulti_shell_sum;
    std::function<Rational(std::uint32_t, std::uint32_t)> negbin_pmf;
    std::function<Rational(std::uint32_t)> negbin_partial_mean;
    std::function<Rational(std::uint32_t)> mean_degree_limit_exact;
    std::function<Rational(std::uint32_t, std::uint32_t)> conn_prob_by_rank;
    std::function<double(std::uint32_t)> erlang_integral_mean_degree;

    static FormulaSet library();
};

struct VerifyOptions {
    std::uint32_t max_m = 9;   ///< largest urn size enumerated
    std::uint32_t max_k = 64;  ///< largest k in the identity suites
};

struct SuiteResult {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t total = 0;
    std::optional<std::string> first_failure;

    bool ok() const noexcept { return passed == total; }
};

std::vector<SuiteResult> run_all(const VerifyOptions& options, const FormulaSet& formulas = FormulaSet::library());

}  // namespace bagraph::verify
