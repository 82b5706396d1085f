#include "bagraph/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <tbb/blocked_range.h>
#include <tbb/global_control.h>
#include <tbb/info.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include "bagraph/analysis.hpp"
#include "bagraph/formulas.hpp"
#include "bagraph/gen.hpp"

namespace bagraph {
namespace {

unsigned concurrency(const RunOptions& options) {
    if (options.threads > 0) return options.threads;
    return static_cast<unsigned>(std::max(1, tbb::info::default_concurrency()));
}

// Runs body(trial) for every trial and returns the per-trial results in trial
// order. Each trial writes only its own slot, so the output is independent of
// scheduling; reductions happen afterwards in index order.
template <typename Result, typename Body>
std::vector<Result> for_each_trial(std::uint64_t trials, const RunOptions& options, Body&& body) {
    std::vector<Result> results(trials);
    const auto workers = static_cast<std::size_t>(concurrency(options));
    tbb::global_control cap(tbb::global_control::max_allowed_parallelism,
                            std::max(workers, tbb::global_control::active_value(tbb::global_control::max_allowed_parallelism)));
    tbb::task_arena arena(static_cast<int>(workers));
    arena.execute([&] {
        tbb::parallel_for(tbb::blocked_range<std::uint64_t>(0, trials), [&](const tbb::blocked_range<std::uint64_t>& r) {
            for (std::uint64_t t = r.begin(); t != r.end(); ++t) results[t] = body(t);
        });
    });
    return results;
}

void check_memory(const ModelParams& params, const RunOptions& options) {
    const std::uint64_t per_trial = trial_memory_estimate(params);
    const std::uint64_t total = per_trial * concurrency(options);
    if (total > options.memory_budget_bytes)
        throw ResourceError("estimated working set of " + std::to_string(total) + " bytes for n=" +
                            std::to_string(params.n) + " exceeds the budget of " +
                            std::to_string(options.memory_budget_bytes) + " bytes");
}

void require_trials(std::uint64_t trials) {
    if (trials < 1) throw ParameterError("trials must be >= 1");
}

// Bilateral degree of every vertex, read off the top-k rows.
std::vector<std::uint32_t> mutual_degrees(const TopKSets& sets) {
    std::vector<std::uint32_t> degree(sets.vertex_count(), 0);
    for (std::uint32_t v = 0; v < sets.vertex_count(); ++v)
        for (const auto& r : sets.ranked(v))
            if (sets.proposes(r.vertex, r.key)) ++degree[v];
    return degree;
}

struct TrialOutcome {
    bool connected = false;
    std::uint32_t isolated = 0;
    std::uint64_t edges = 0;
    std::uint32_t min_degree = 0;
    std::uint32_t max_degree = 0;
};

double sample_se(double sum, double sum_sq, std::uint64_t count) {
    if (count < 2) return 0.0;
    const double c = static_cast<double>(count);
    const double mean = sum / c;
    const double var = std::max(0.0, (sum_sq - c * mean * mean) / (c - 1.0));
    return std::sqrt(var / c);
}

}  // namespace

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) throw ParameterError("wilson_interval requires trials >= 1");
    constexpr double z = 1.959963984540054;
    const double nt = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / nt;
    const double z2 = z * z;
    const double centre = (p + z2 / (2.0 * nt)) / (1.0 + z2 / nt);
    const double half = z * std::sqrt(p * (1.0 - p) / nt + z2 / (4.0 * nt * nt)) / (1.0 + z2 / nt);
    return {std::clamp(centre - half, 0.0, p), std::clamp(centre + half, p, 1.0)};
}

std::uint64_t trial_memory_estimate(const ModelParams& params) {
    const std::uint64_t n = params.n;
    if (params.kind == ModelKind::erdos_renyi) {
        const double expected_edges = params.p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
        return static_cast<std::uint64_t>(expected_edges * 32.0) + n * 16;
    }
    // Heap slots, the edge list and its canonical copy, and the CSR index.
    return n * params.k * 48 + n * 16;
}

std::vector<SweepCell> run_sweep(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& cells,
                                 std::uint64_t trials, const SeedSpec& seed, ModelKind kind,
                                 const RunOptions& options) {
    require_trials(trials);
    std::vector<ModelParams> params;
    for (const auto& [n, k] : cells) {
        ModelParams p{n, k, kind, 0.0};
        if (kind == ModelKind::erdos_renyi) {
            if (n < 2 || k < 1 || k > n - 1) throw ParameterError("ER cells need 1 <= k <= n-1 to set p = k/(n-1)");
            p.p = static_cast<double>(k) / static_cast<double>(n - 1);
        }
        p.validate();
        check_memory(p, options);
        params.push_back(p);
    }

    std::vector<SweepCell> out;
    for (const auto& p : params) {
        const SeedSpec cell_seed =
            derive_labelled_stream(seed, p.n, std::uint64_t{p.k} * 4 + static_cast<std::uint64_t>(p.kind));
        const auto outcomes = for_each_trial<TrialOutcome>(trials, options, [&](std::uint64_t trial) {
            const auto report = analyze(generate(p, derive_stream(cell_seed, trial)));
            return TrialOutcome{report.is_connected, report.isolated_count, report.edge_count, report.min_degree,
                                report.max_degree};
        });

        std::uint64_t connected = 0, has_isolated = 0, isolated = 0, edges = 0, min_degree = 0;
        for (const auto& o : outcomes) {
            if (p.kind == ModelKind::bilateral && o.max_degree > p.k)
                throw std::logic_error("bilateral trial produced a vertex of degree " + std::to_string(o.max_degree) +
                                       " > k=" + std::to_string(p.k));
            connected += o.connected;
            has_isolated += o.isolated > 0;
            isolated += o.isolated;
            edges += o.edges;
            min_degree += o.min_degree;
        }
        const double nt = static_cast<double>(trials);
        SweepCell cell;
        cell.n = p.n;
        cell.k = p.k;
        cell.trials = trials;
        cell.master_seed = seed.master_seed;
        cell.frac_connected = static_cast<double>(connected) / nt;
        std::tie(cell.wilson_ci_low, cell.wilson_ci_high) = wilson_interval(connected, trials);
        cell.mean_isolated = static_cast<double>(isolated) / nt;
        cell.frac_has_isolated = static_cast<double>(has_isolated) / nt;
        cell.mean_degree = 2.0 * static_cast<double>(edges) / (nt * p.n);
        cell.mean_min_degree = static_cast<double>(min_degree) / nt;
        out.push_back(cell);
    }
    return out;
}

std::vector<SweepCell> run_sweep(const std::vector<std::uint32_t>& n_list, const std::vector<std::uint32_t>& k_list,
                                 std::uint64_t trials, const SeedSpec& seed, ModelKind kind,
                                 const RunOptions& options) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
    for (const auto n : n_list)
        for (const auto k : k_list) cells.emplace_back(n, k);
    return run_sweep(cells, trials, seed, kind, options);
}

IsolationEstimate estimate_isolation(std::uint32_t n, std::uint32_t k, std::uint64_t trials, const SeedSpec& seed,
                                     const RunOptions& options) {
    require_trials(trials);
    const auto params = ModelParams::bilateral(n, k);
    check_memory(params, options);
    struct Outcome {
        bool first_isolated = false;
        std::uint32_t isolated = 0;
    };
    const auto outcomes = for_each_trial<Outcome>(trials, options, [&](std::uint64_t trial) {
        const auto degree = mutual_degrees(top_k_sets(params, derive_stream(seed, trial)));
        return Outcome{degree[0] == 0,
                       static_cast<std::uint32_t>(std::count(degree.begin(), degree.end(), 0u))};
    });
    double first = 0, count = 0, count_sq = 0;
    for (const auto& o : outcomes) {
        first += o.first_isolated;
        count += o.isolated;
        count_sq += static_cast<double>(o.isolated) * o.isolated;
    }
    IsolationEstimate est;
    est.p1_hat = first / static_cast<double>(trials);
    est.p1_se = sample_se(first, first, trials);
    est.mean_isolated = count / static_cast<double>(trials);
    est.mean_isolated_se = sample_se(count, count_sq, trials);
    return est;
}

CorrelationRecord estimate_pair_correlation(std::uint32_t n, std::uint32_t k, std::uint64_t trials,
                                            const SeedSpec& seed, const RunOptions& options) {
    require_trials(trials);
    const auto params = ModelParams::bilateral(n, k);
    check_memory(params, options);
    struct Outcome {
        bool first = false;
        bool second = false;
    };
    const auto outcomes = for_each_trial<Outcome>(trials, options, [&](std::uint64_t trial) {
        const auto sets = top_k_sets(params, derive_stream(seed, trial));
        auto isolated = [&](std::uint32_t v) {
            for (const auto& r : sets.ranked(v))
                if (sets.proposes(r.vertex, r.key)) return false;
            return true;
        };
        return Outcome{isolated(0), isolated(1)};
    });

    // a_t = I_1 I_2, b_t = (I_1 + I_2)/2 per trial.
    double sum_a = 0, sum_b = 0, sum_aa = 0, sum_bb = 0, sum_ab = 0;
    for (const auto& o : outcomes) {
        const double a = (o.first && o.second) ? 1.0 : 0.0;
        const double b = 0.5 * (static_cast<double>(o.first) + static_cast<double>(o.second));
        sum_a += a;
        sum_b += b;
        sum_aa += a * a;
        sum_bb += b * b;
        sum_ab += a * b;
    }
    const double nt = static_cast<double>(trials);
    CorrelationRecord rec;
    rec.n = n;
    rec.k = k;
    rec.trials = trials;
    rec.p12_hat = sum_a / nt;
    rec.p1_hat = sum_b / nt;
    rec.p12_se = sample_se(sum_a, sum_aa, trials);
    rec.p1_se = sample_se(sum_b, sum_bb, trials);
    if (rec.p1_hat > 0.0) {
        const double ratio = rec.p12_hat / (rec.p1_hat * rec.p1_hat);
        double cov_ab = 0.0;
        if (trials > 1) cov_ab = (sum_ab - nt * rec.p12_hat * rec.p1_hat) / (nt - 1.0) / nt;
        const double var_a = rec.p12_se * rec.p12_se;
        const double var_b = rec.p1_se * rec.p1_se;
        // Gradient of a / b^2.
        const double ga = 1.0 / (rec.p1_hat * rec.p1_hat);
        const double gb = -2.0 * rec.p12_hat / (rec.p1_hat * rec.p1_hat * rec.p1_hat);
        const double var_ratio = ga * ga * var_a + gb * gb * var_b + 2.0 * ga * gb * cov_ab;
        rec.ratio = ratio;
        rec.ratio_se = std::sqrt(std::max(0.0, var_ratio));
    }
    return rec;
}

double an_concentration_check(std::uint32_t n, double t, std::uint64_t trials, const SeedSpec& seed,
                              const RunOptions& options) {
    require_trials(trials);
    const auto window = an_window(n, t);
    const auto k = static_cast<std::int64_t>(std::floor(t * std::log(static_cast<double>(n))));
    if (k < 1 || k > static_cast<std::int64_t>(n) - 1)
        throw ParameterError("an_concentration_check requires 1 <= floor(t log n) <= n-1");
    const auto params = ModelParams::bilateral(n, static_cast<std::uint32_t>(k));
    check_memory(params, options);
    const auto inside = for_each_trial<char>(trials, options, [&](std::uint64_t trial) -> char {
        const auto sets = top_k_sets(params, derive_stream(seed, trial));
        for (std::uint32_t v = 0; v < n; ++v) {
            // Exponential(1) score through the monotone map u -> -log(1-u).
            const double score = -std::log1p(-sets.kth_key(v).uniform());
            if (!(score > window.lower && score < window.upper)) return 0;
        }
        return 1;
    });
    const auto hits = std::accumulate(inside.begin(), inside.end(), std::uint64_t{0});
    return static_cast<double>(hits) / static_cast<double>(trials);
}

MeanEstimate estimate_mean_degree(std::uint32_t n, std::uint32_t k, std::uint64_t trials, const SeedSpec& seed,
                                  const RunOptions& options) {
    require_trials(trials);
    const auto params = ModelParams::bilateral(n, k);
    check_memory(params, options);
    const auto degree_sums = for_each_trial<std::uint64_t>(trials, options, [&](std::uint64_t trial) {
        const auto degree = mutual_degrees(top_k_sets(params, derive_stream(seed, trial)));
        return std::accumulate(degree.begin(), degree.end(), std::uint64_t{0});
    });
    double sum = 0, sum_sq = 0;
    for (const auto s : degree_sums) {
        const double mean = static_cast<double>(s) / n;
        sum += mean;
        sum_sq += mean * mean;
    }
    return MeanEstimate{sum / static_cast<double>(trials), sample_se(sum, sum_sq, trials)};
}

std::vector<MeanEstimate> estimate_rank_connection(std::uint32_t n, std::uint32_t k, std::uint64_t trials,
                                                   const SeedSpec& seed, const RunOptions& options) {
    require_trials(trials);
    const auto params = ModelParams::bilateral(n, k);
    check_memory(params, options);
    const auto per_trial = for_each_trial<std::vector<std::uint32_t>>(trials, options, [&](std::uint64_t trial) {
        const auto sets = top_k_sets(params, derive_stream(seed, trial));
        std::vector<std::uint32_t> joined(k, 0);
        for (std::uint32_t v = 0; v < n; ++v) {
            const auto row = sets.ranked(v);
            for (std::uint32_t i = 0; i < k; ++i)
                if (sets.proposes(row[i].vertex, row[i].key)) ++joined[i];
        }
        return joined;
    });
    std::vector<MeanEstimate> out(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        double sum = 0, sum_sq = 0;
        for (const auto& joined : per_trial) {
            const double f = static_cast<double>(joined[i]) / n;
            sum += f;
            sum_sq += f * f;
        }
        out[i] = MeanEstimate{sum / static_cast<double>(trials), sample_se(sum, sum_sq, trials)};
    }
    return out;
}

}  // namespace bagraph
