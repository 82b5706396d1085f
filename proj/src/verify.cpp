#include "bagraph/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bagraph/formulas.hpp"

namespace bagraph::verify {
namespace {

std::string describe(std::span<const std::uint32_t> values) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << ']';
    return os.str();
}

class SuiteRecorder {
public:
    explicit SuiteRecorder(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe_case) {
        ++result_.total;
        if (ok) {
            ++result_.passed;
        } else if (!result_.first_failure) {
            result_.first_failure = describe_case();
        }
    }

    SuiteResult finish() && { return std::move(result_); }

private:
    SuiteResult result_;
};

void compositions(std::uint32_t total, std::uint32_t parts, std::vector<std::uint32_t>& current,
                  const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
    if (current.size() + 1 == parts) {
        current.push_back(total);
        visit(current);
        current.pop_back();
        return;
    }
    for (std::uint32_t first = 0; first <= total; ++first) {
        current.push_back(first);
        compositions(total - first, parts, current, visit);
        current.pop_back();
    }
}

SuiteResult urn_window_suite(const std::vector<UrnSpec>& specs, const std::vector<UrnEnumeration>& tables,
                             const FormulaSet& f) {
    SuiteRecorder rec("urn-first-window");
    for (std::size_t s = 0; s < specs.size(); ++s) {
        const auto& spec = specs[s];
        const auto& table = tables[s];
        for (std::uint32_t m = 0; m <= spec.total(); ++m) {
            for (std::uint32_t j = 0; j <= std::min(m, spec.type0()); ++j) {
                const Rational exact = f.first_window_pmf(spec, m, j);
                const Rational counted = make_rational(table.window[m][j], table.arrangements);
                rec.check(exact == counted, [&] {
                    return "spec=" + describe(spec.counts()) + " m=" + std::to_string(m) + " j=" + std::to_string(j) +
                           ": formula " + to_fraction_string(exact) + " != enumeration " +
                           to_fraction_string(counted);
                });
            }
        }
    }
    return std::move(rec).finish();
}

SuiteResult urn_normalization_suite(const std::vector<UrnSpec>& specs, const FormulaSet& f) {
    SuiteRecorder rec("urn-normalization");
    for (const auto& spec : specs) {
        for (std::uint32_t m = 0; m <= spec.total(); ++m) {
            Rational sum = 0;
            for (std::uint32_t j = 0; j <= std::min(m, spec.type0()); ++j) sum += f.first_window_pmf(spec, m, j);
            rec.check(sum == 1, [&] {
                return "spec=" + describe(spec.counts()) + " m=" + std::to_string(m) + ": sum " +
                       to_fraction_string(sum);
            });
        }
    }
    return std::move(rec).finish();
}

SuiteResult urn_before_first_suite(const std::vector<UrnSpec>& specs, const std::vector<UrnEnumeration>& tables,
                                   const FormulaSet& f) {
    SuiteRecorder rec("urn-before-first-type0");
    for (std::size_t s = 0; s < specs.size(); ++s) {
        const auto& spec = specs[s];
        const auto types = spec.counts().subspan(1);
        std::vector<std::uint32_t> counts(types.size(), 0);
        // Odometer over 0 <= counts[t] <= types[t].
        while (true) {
            const Rational exact = f.before_first_type0_pmf(spec, counts);
            const auto it = tables[s].before_first.find(counts);
            const std::uint64_t hits = it == tables[s].before_first.end() ? 0 : it->second;
            const Rational counted = make_rational(hits, tables[s].arrangements);
            rec.check(exact == counted, [&] {
                return "spec=" + describe(spec.counts()) + " counts=" + describe(counts) + ": formula " +
                       to_fraction_string(exact) + " != enumeration " + to_fraction_string(counted);
            });
            std::size_t pos = 0;
            while (pos < counts.size() && counts[pos] == types[pos]) counts[pos++] = 0;
            if (pos == counts.size()) break;
            ++counts[pos];
        }
    }
    return std::move(rec).finish();
}

SuiteResult negmulti_shell_suite(const VerifyOptions& options, const FormulaSet& f) {
    SuiteRecorder rec("negmulti-shell");
    for (std::uint32_t k = 1; k <= std::min<std::uint32_t>(4, options.max_k); ++k) {
        for (std::uint32_t n = 1; n <= 6; ++n) {
            Rational sum = 0;
            std::vector<std::uint32_t> current;
            compositions(n - 1, k, current, [&](const std::vector<std::uint32_t>& c) { sum += f.negmulti_pmf(k, c); });
            const Rational closed = f.negmulti_shell_sum(k, n);
            rec.check(sum == closed, [&] {
                return "k=" + std::to_string(k) + " n=" + std::to_string(n) + ": composition sum " +
                       to_fraction_string(sum) + " != closed form " + to_fraction_string(closed);
            });
        }
    }
    return std::move(rec).finish();
}

SuiteResult shell_remainder_suite(const VerifyOptions& options, const FormulaSet& f) {
    SuiteRecorder rec("negmulti-shell-remainder");
    for (std::uint32_t k = 1; k <= std::min<std::uint32_t>(6, options.max_k); ++k) {
        const std::uint32_t cutoff = 4 * (k + 1) * (k + 1);
        Rational head = 0;
        for (std::uint32_t n = 1; n <= cutoff; ++n) head += f.negmulti_shell_sum(k, n);
        const Rational tail = 1 - head;
        const Rational expected = make_rational(power(k, cutoff), power(k + 1, cutoff));
        const bool ok = tail == expected && sgn(tail) > 0 && log_of(tail) <= -4.0 * (k + 1);
        rec.check(ok, [&] {
            return "k=" + std::to_string(k) + ": tail " + to_fraction_string(tail) + " vs (k/(k+1))^" +
                   std::to_string(cutoff);
        });
    }
    return std::move(rec).finish();
}

SuiteResult negbin_half_suite(const VerifyOptions& options, const FormulaSet& f) {
    SuiteRecorder rec("negbin-half");
    for (std::uint32_t k = 1; k <= options.max_k; ++k) {
        Rational sum = 0;
        for (std::uint32_t j = 0; j < k; ++j) sum += f.negbin_pmf(k, j);
        rec.check(sum == Rational(1, 2),
                  [&] { return "k=" + std::to_string(k) + ": sum " + to_fraction_string(sum) + " != 1/2"; });
    }
    return std::move(rec).finish();
}

SuiteResult negbin_partial_mean_suite(const VerifyOptions& options, const FormulaSet& f) {
    SuiteRecorder rec("negbin-partial-mean");
    for (std::uint32_t k = 1; k <= options.max_k; ++k) {
        Rational sum = 0;
        for (std::uint32_t j = 0; j < k; ++j) sum += f.negbin_pmf(k, j) * j;
        const Rational closed = f.negbin_partial_mean(k);
        rec.check(sum == closed, [&] {
            return "k=" + std::to_string(k) + ": summation " + to_fraction_string(sum) + " != closed form " +
                   to_fraction_string(closed);
        });
    }
    return std::move(rec).finish();
}

SuiteResult rank_sum_suite(const VerifyOptions& options, const FormulaSet& f) {
    SuiteRecorder rec("rank-probabilities");
    for (std::uint32_t k = 1; k <= std::min(options.max_k, exact_k_limit); ++k) {
        Rational sum = 0;
        Rational previous = 1;
        bool monotone = true;
        for (std::uint32_t i = 1; i <= k; ++i) {
            const Rational p = f.conn_prob_by_rank(i, k);
            monotone = monotone && p <= previous;
            previous = p;
            sum += p;
        }
        const Rational mean = f.mean_degree_limit_exact(k);
        rec.check(monotone && sum == mean, [&] {
            return "k=" + std::to_string(k) + ": sum over ranks " + to_fraction_string(sum) + ", mean degree " +
                   to_fraction_string(mean) + (monotone ? "" : ", not monotone in rank");
        });
    }
    return std::move(rec).finish();
}

SuiteResult erlang_suite(const VerifyOptions& options, const FormulaSet& f) {
    SuiteRecorder rec("erlang-integral");
    for (std::uint32_t k = 1; k <= std::min<std::uint32_t>(30, options.max_k); ++k) {
        const double integral = f.erlang_integral_mean_degree(k);
        const double closed = f.mean_degree_limit_exact(k).get_d();
        rec.check(std::abs(integral - closed) <= 1e-8, [&] {
            std::ostringstream os;
            os.precision(17);
            os << "k=" << k << ": integral " << integral << " vs closed form " << closed;
            return os.str();
        });
    }
    return std::move(rec).finish();
}

}  // namespace

UrnEnumeration enumerate_urn(const UrnSpec& spec) {
    const auto types = spec.counts();
    const std::uint32_t total = spec.total();
    std::vector<std::uint32_t> sequence;
    for (std::uint32_t t = 0; t < types.size(); ++t) sequence.insert(sequence.end(), types[t], t);

    UrnEnumeration out;
    out.window.assign(total + 1, std::vector<std::uint64_t>(spec.type0() + 1, 0));
    // Mixed-radix index of the before-first vector.
    std::vector<std::uint64_t> stride(types.size(), 1);
    for (std::size_t t = 2; t < types.size(); ++t) stride[t] = stride[t - 1] * (types[t - 1] + 1);
    const std::uint64_t cells = stride.back() * (types.back() + 1);
    std::vector<std::uint64_t> before(cells, 0);

    do {
        ++out.arrangements;
        std::uint32_t zeros = 0;
        out.window[0][0] += 1;
        for (std::uint32_t pos = 0; pos < total; ++pos) {
            zeros += sequence[pos] == 0;
            ++out.window[pos + 1][zeros];
        }
        std::uint64_t index = 0;
        for (std::uint32_t pos = 0; sequence[pos] != 0; ++pos) index += stride[sequence[pos]];
        ++before[index];
    } while (std::next_permutation(sequence.begin(), sequence.end()));

    for (std::uint64_t index = 0; index < cells; ++index) {
        if (before[index] == 0) continue;
        std::vector<std::uint32_t> counts(types.size() - 1);
        for (std::size_t t = types.size() - 1; t >= 1; --t) {
            counts[t - 1] = static_cast<std::uint32_t>((index / stride[t]) % (types[t] + 1));
        }
        out.before_first.emplace(std::move(counts), before[index]);
    }
    return out;
}

std::vector<UrnSpec> all_urn_specs(std::uint32_t max_total) {
    std::vector<UrnSpec> specs;
    std::vector<std::uint32_t> current;
    // Depth-first over compositions with positive parts.
    std::function<void(std::uint32_t)> extend = [&](std::uint32_t remaining) {
        if (current.size() >= 2) specs.emplace_back(current);
        for (std::uint32_t c = 1; c <= remaining; ++c) {
            current.push_back(c);
            extend(remaining - c);
            current.pop_back();
        }
    };
    extend(max_total);
    return specs;
}

FormulaSet FormulaSet::library() {
    FormulaSet f;
    f.first_window_pmf = [](const UrnSpec& s, std::uint32_t m, std::uint32_t j) { return exact_first_window_pmf(s, m, j); };
    f.before_first_type0_pmf = [](const UrnSpec& s, std::span<const std::uint32_t> c) {
        return exact_before_first_type0_pmf(s, c);
    };
    f.negmulti_pmf = [](std::uint32_t k, std::span<const std::uint32_t> c) { return bagraph::negmulti_pmf(k, c); };
    f.negmulti_shell_sum = [](std::uint32_t k, std::uint32_t n) { return bagraph::negmulti_shell_sum(k, n); };
    f.negbin_pmf = [](std::uint32_t k, std::uint32_t j) { return bagraph::negbin_pmf(k, j); };
    f.negbin_partial_mean = [](std::uint32_t k) { return bagraph::negbin_partial_mean(k); };
    f.mean_degree_limit_exact = [](std::uint32_t k) { return bagraph::mean_degree_limit_exact(k); };
    f.conn_prob_by_rank = [](std::uint32_t i, std::uint32_t k) { return bagraph::conn_prob_by_rank(i, k); };
    f.erlang_integral_mean_degree = [](std::uint32_t k) { return bagraph::erlang_integral_mean_degree(k); };
    return f;
}

std::vector<SuiteResult> run_all(const VerifyOptions& options, const FormulaSet& formulas) {
    const auto specs = all_urn_specs(options.max_m);
    std::vector<UrnEnumeration> tables;
    tables.reserve(specs.size());
    for (const auto& spec : specs) tables.push_back(enumerate_urn(spec));

    std::vector<SuiteResult> results;
    results.push_back(urn_window_suite(specs, tables, formulas));
    results.push_back(urn_normalization_suite(specs, formulas));
    results.push_back(urn_before_first_suite(specs, tables, formulas));
    results.push_back(negmulti_shell_suite(options, formulas));
    results.push_back(shell_remainder_suite(options, formulas));
    results.push_back(negbin_half_suite(options, formulas));
    results.push_back(negbin_partial_mean_suite(options, formulas));
    results.push_back(rank_sum_suite(options, formulas));
    results.push_back(erlang_suite(options, formulas));
    return results;
}

}  // namespace bagraph::verify
