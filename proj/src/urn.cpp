#include "bagraph/urn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bagraph/model.hpp"

namespace bagraph {

UrnSpec::UrnSpec(std::vector<std::uint32_t> type_counts) : counts_(std::move(type_counts)) {
    if (counts_.size() < 2) throw ParameterError("UrnSpec needs at least two types");
    for (const auto c : counts_)
        if (c == 0) throw ParameterError("UrnSpec type counts must be positive");
    total_ = std::accumulate(counts_.begin(), counts_.end(), 0u);
}

UrnSpec UrnSpec::balanced(std::size_t s, std::uint32_t each) {
    return UrnSpec(std::vector<std::uint32_t>(s + 1, each));
}

Rational exact_first_window_pmf(const UrnSpec& spec, std::uint32_t m, std::uint32_t j) {
    const std::uint32_t total = spec.total();
    if (m > total) throw ParameterError("window length m exceeds the urn size");
    if (j > std::min(m, spec.type0()))
        throw ParameterError("j=" + std::to_string(j) + " outside [0, min(m, m0)]");
    // C(m,j) (m0)_j (M-m0)_{m-j} (M-m)!/M!, with (M-m)!/M! = 1/(M)_m.
    return make_rational(binomial(m, j) * falling_factorial(spec.type0(), j) * falling_factorial(spec.others(), m - j),
               falling_factorial(total, m));
}

Rational exact_first_window_cdf(const UrnSpec& spec, std::uint32_t m, std::uint32_t t) {
    Rational sum = 0;
    const std::uint32_t top = std::min({t, m, spec.type0()});
    for (std::uint32_t j = 0; j <= top; ++j) sum += exact_first_window_pmf(spec, m, j);
    return sum;
}

Rational exact_before_first_type0_pmf(const UrnSpec& spec, std::span<const std::uint32_t> counts) {
    if (counts.size() != spec.s()) throw ParameterError("expected one count per non-zero type");
    const auto types = spec.counts();
    Integer numerator = spec.type0();
    std::uint64_t prefix = 0;
    for (std::size_t t = 0; t < counts.size(); ++t) {
        if (counts[t] > types[t + 1]) throw ParameterError("count exceeds the number of objects of its type");
        numerator *= binomial(types[t + 1], counts[t]);
        prefix += counts[t];
    }
    numerator *= factorial(static_cast<std::uint32_t>(prefix));
    // (M - prefix - 1)!/M! = 1/(M)_{prefix+1}
    return make_rational(numerator, falling_factorial(spec.total(), prefix + 1));
}

Rational negmulti_pmf(std::uint32_t k, std::span<const std::uint32_t> counts) {
    if (k < 1) throw ParameterError("negmulti_pmf requires k >= 1");
    if (counts.size() != k) throw ParameterError("negmulti_pmf expects exactly k counts");
    std::uint64_t sum = 0;
    Integer denominator_parts = 1;
    for (const auto c : counts) {
        sum += c;
        denominator_parts *= factorial(c);
    }
    return make_rational(factorial(static_cast<std::uint32_t>(sum)), denominator_parts * power(k + 1, sum + 1));
}

Rational negmulti_shell_sum(std::uint32_t k, std::uint32_t n) {
    if (k < 1 || n < 1) throw ParameterError("negmulti_shell_sum requires k >= 1 and n >= 1");
    return make_rational(power(k, n - 1), power(k + 1, n));
}

double lower_tail_bound(std::uint32_t s, std::uint32_t m, std::uint32_t t) {
    if (s < 1 || t < 1) throw ParameterError("lower_tail_bound requires s >= 1 and t >= 1");
    if (std::uint64_t{t} * s > m) throw ParameterError("lower_tail_bound requires t <= m/s");
    const double md = m, sd = s, td = t;
    return std::exp(-md / (sd + 1.0) + td * std::log(md / (td * sd)) + td + std::log(td + 1.0));
}

}  // namespace bagraph
