#pragma once

#include <cstdint>

#include "bagraph/rational.hpp"

namespace bagraph {

/// Largest k for which the exact-rational evaluators are used.
inline constexpr std::uint32_t exact_k_limit = 64;

/// P{X_k = j} for the fair negative binomial: C(k+j-1, j) 2^-(k+j).
Rational negbin_pmf(std::uint32_t k, std::uint32_t j);

/// sum_{j<k} j P{X_k = j}, via the closed form
/// k/2 - (2k-1) 2^-(2k-1) C(2k-2, k-1).
Rational negbin_partial_mean(std::uint32_t k);

/// Limiting mean degree k - (2k-1) 2^-(2k-1) C(2k-2, k-1), exact.
/// Requires k <= exact_k_limit.
Rational mean_degree_limit_exact(std::uint32_t k);

/// Limiting mean degree as a double; log-gamma above exact_k_limit.
double mean_degree_limit(std::uint64_t k);

/// Limiting probability that a vertex keeps the edge to its i-th preferred
/// neighbour: 1 - sum_{j<i} P{X_k = j}. Zero for i > k.
Rational conn_prob_by_rank(std::uint32_t i, std::uint32_t k);

/// k - sqrt(k/pi) + 1/(8 sqrt(pi k)).
double mean_degree_asymptotic(double k);

/// Adaptive Gauss–Kronrod evaluation of int_0^inf Fbar_k(x)^2 dx, where
/// Fbar_k is the Erlang(k,1) survival function. Requires 1 <= k <= 30.
double erlang_integral_mean_degree(std::uint32_t k);

/// Erlang(k,1) survival function e^-x sum_{i<k} x^i/i!.
double erlang_survival(std::uint32_t k, double x);

struct ThresholdParams {
    double t = 1.0;
    double t_prime = 0.0;
    double delta = 0.5;

    void validate() const;
};

enum class ThresholdForm { t_form, t_prime_form, disc_form };

struct ThresholdK {
    std::int64_t k = 1;
    /// The raw value was below 1 and has been raised to 1.
    bool clamped = false;
};

/// t_form: floor(t log n); t_prime_form: floor(log n + t' loglog n sqrt(log n));
/// disc_form: floor(log n - 3 sqrt(log n loglog n)). Natural logs; n >= 16.
ThresholdK threshold_k(std::uint64_t n, const ThresholdParams& params, ThresholdForm form);

/// e^{-k(1+delta)}; requires sqrt(6 log k / k) <= delta < 1 and delta > 0.
double isolated_prob_lower_bound(double k, double delta);

/// Order-statistic window of the exponential-score coupling.
struct AnWindow {
    double lower = 0.0;       ///< log((n-1)/(t log n)) - sqrt 2
    double upper = 0.0;       ///< lower + 2 sqrt 2
    double p_bar = 0.0;       ///< P{score > upper}
    double p_underbar = 0.0;  ///< P{score > lower}
};

/// Requires n >= 3, t > 0 and t log n < n - 1.
AnWindow an_window(std::uint64_t n, double t);

/// Upper bound on the probability of a component with size in
/// [ceil(8.24/t), floor(n/2)]:
///   sum_r C(n,r) r^(r-2) p_underbar^(r-1) (1 - p_bar)^(r(n-r)),
/// summed in log space. Returns +infinity if any term's log exceeds 700.
/// Requires 100 <= n <= component_bound_max_n and t > 0.
double component_bound_pi(std::uint64_t n, double t);

inline constexpr std::uint64_t component_bound_max_n = 100'000'000;

}  // namespace bagraph
