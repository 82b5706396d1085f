#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bagraph/model.hpp"

namespace bagraph {

/// Execution knobs shared by every campaign. Results never depend on them.
struct RunOptions {
    /// Worker cap; 0 means "use the default concurrency".
    unsigned threads = 0;
    /// Upper bound on the estimated working set of concurrently running trials.
    std::uint64_t memory_budget_bytes = std::uint64_t{2} << 30;
};

/// Aggregated statistics of one (n, k) cell of a sweep.
struct SweepCell {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t trials = 0;
    std::uint64_t master_seed = 0;
    double frac_connected = 0.0;
    double wilson_ci_low = 0.0;
    double wilson_ci_high = 0.0;
    double mean_isolated = 0.0;
    double frac_has_isolated = 0.0;
    double mean_degree = 0.0;
    double mean_min_degree = 0.0;
};

/// 95% Wilson score interval for `successes` out of `trials`.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials);

/// Estimated bytes held by one trial of the given model.
std::uint64_t trial_memory_estimate(const ModelParams& params);

/// Runs `trials` generations per (n, k) pair and aggregates them.
///
/// Each cell draws from a stream labelled by (n, k), and each trial from a
/// stream derived from its index, so a cell's statistics depend only on
/// (n, k, trials, seed, kind). For Erdős–Rényi cells p = k/(n-1).
/// Throws ResourceError when the memory estimate exceeds the budget.
std::vector<SweepCell> run_sweep(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& cells,
                                 std::uint64_t trials, const SeedSpec& seed, ModelKind kind,
                                 const RunOptions& options = {});

/// Cartesian product of n_list and k_list, n-major.
std::vector<SweepCell> run_sweep(const std::vector<std::uint32_t>& n_list, const std::vector<std::uint32_t>& k_list,
                                 std::uint64_t trials, const SeedSpec& seed, ModelKind kind,
                                 const RunOptions& options = {});

struct IsolationEstimate {
    double p1_hat = 0.0;         ///< fraction of trials with vertex 0 isolated
    double p1_se = 0.0;
    double mean_isolated = 0.0;  ///< average isolated-vertex count
    double mean_isolated_se = 0.0;
};

/// Bilateral-model isolation statistics.
IsolationEstimate estimate_isolation(std::uint32_t n, std::uint32_t k, std::uint64_t trials, const SeedSpec& seed,
                                     const RunOptions& options = {});

struct CorrelationRecord {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t trials = 0;
    double p1_hat = 0.0;   ///< P{I_1 = 1}, pooled over vertices 0 and 1
    double p1_se = 0.0;
    double p12_hat = 0.0;  ///< P{I_1 I_2 = 1}
    double p12_se = 0.0;
    /// p12_hat / p1_hat^2 with its delta-method standard error; empty when
    /// no isolated vertex was observed.
    std::optional<double> ratio;
    std::optional<double> ratio_se;
};

CorrelationRecord estimate_pair_correlation(std::uint32_t n, std::uint32_t k, std::uint64_t trials,
                                            const SeedSpec& seed, const RunOptions& options = {});

/// Fraction of trials in which every vertex's k-th largest exponential(1)
/// edge score lies strictly inside the an_window band, k = floor(t log n).
double an_concentration_check(std::uint32_t n, double t, std::uint64_t trials, const SeedSpec& seed,
                              const RunOptions& options = {});

struct MeanEstimate {
    double mean = 0.0;
    double se = 0.0;
};

/// Bilateral mean degree with its standard error over trials.
MeanEstimate estimate_mean_degree(std::uint32_t n, std::uint32_t k, std::uint64_t trials, const SeedSpec& seed,
                                  const RunOptions& options = {});

/// Per-rank frequency that a vertex is joined to its i-th preferred
/// neighbour (i = 1..k), averaged over vertices; standard errors over trials.
std::vector<MeanEstimate> estimate_rank_connection(std::uint32_t n, std::uint32_t k, std::uint64_t trials,
                                                   const SeedSpec& seed, const RunOptions& options = {});

}  // namespace bagraph
