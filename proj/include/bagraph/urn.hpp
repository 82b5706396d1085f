#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bagraph/rational.hpp"

namespace bagraph {

/// Type counts of a finite urn: m_0 objects of type 0 followed by m_1..m_s.
class UrnSpec {
public:
    /// Requires at least two types and every count >= 1.
    explicit UrnSpec(std::vector<std::uint32_t> type_counts);

    std::span<const std::uint32_t> counts() const noexcept { return counts_; }
    std::uint32_t type0() const noexcept { return counts_.front(); }
    std::uint32_t others() const noexcept { return total_ - counts_.front(); }
    /// Number of non-zero types, s.
    std::size_t s() const noexcept { return counts_.size() - 1; }
    /// Total number of objects, M.
    std::uint32_t total() const noexcept { return total_; }

    /// s+1 equal counts of `each`.
    static UrnSpec balanced(std::size_t s, std::uint32_t each);

private:
    std::vector<std::uint32_t> counts_;
    std::uint32_t total_ = 0;
};

/// P{X = j} where X counts type-0 objects among the first m places of a
/// uniformly random arrangement. Order restrictions inside type 0 do not
/// change this law.
Rational exact_first_window_pmf(const UrnSpec& spec, std::uint32_t m, std::uint32_t j);

/// P{X <= t} for the same window variable.
Rational exact_first_window_cdf(const UrnSpec& spec, std::uint32_t m, std::uint32_t t);

/// P{exactly counts[j-1] objects of type j precede the first type-0 object,
/// for every j = 1..s}.
Rational exact_before_first_type0_pmf(const UrnSpec& spec, std::span<const std::uint32_t> counts);

/// Negative multinomial law: per-type counts of i.i.d. uniform draws over
/// k+1 types, stopped at the first draw of type k+1.
Rational negmulti_pmf(std::uint32_t k, std::span<const std::uint32_t> counts);

/// Mass of the shell where the stopping draw is the n-th: (1/(k+1)) (k/(k+1))^(n-1).
Rational negmulti_shell_sum(std::uint32_t k, std::uint32_t n);

/// Leading factor of the lower-tail bound for the window count with s
/// balanced non-zero types:
/// exp(-m/(s+1) + t log(m/(t s)) + t + log(t+1)). Requires 1 <= t <= m/s.
double lower_tail_bound(std::uint32_t s, std::uint32_t m, std::uint32_t t);

}  // namespace bagraph
