#include "bagraph/formulas.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bagraph/model.hpp"

namespace bagraph {
namespace {

// (2k-1) C(2k-2, k-1) / 2^(2k-1): the deficit of the mean degree below k.
Rational degree_deficit_exact(std::uint32_t k) {
    return make_rational(Integer(2 * k - 1) * binomial(2 * k - 2, k - 1), power(2, 2 * k - 1));
}

double degree_deficit_lgamma(double k) {
    const double log_term = std::lgamma(2.0 * k - 1.0) - 2.0 * std::lgamma(k) - (2.0 * k - 1.0) * std::numbers::ln2;
    return (2.0 * k - 1.0) * std::exp(log_term);
}

void require_k(std::uint64_t k) {
    if (k < 1) throw ParameterError("k must be >= 1");
}

}  // namespace

Rational negbin_pmf(std::uint32_t k, std::uint32_t j) {
    require_k(k);
    return make_rational(binomial(std::uint64_t{k} + j - 1, j), power(2, std::uint64_t{k} + j));
}

Rational negbin_partial_mean(std::uint32_t k) {
    require_k(k);
    return make_rational(k, 2) - degree_deficit_exact(k);
}

Rational mean_degree_limit_exact(std::uint32_t k) {
    require_k(k);
    if (k > exact_k_limit) throw ParameterError("exact mean degree is limited to k <= " + std::to_string(exact_k_limit));
    return Rational(k) - degree_deficit_exact(k);
}

double mean_degree_limit(std::uint64_t k) {
    require_k(k);
    if (k <= exact_k_limit) return mean_degree_limit_exact(static_cast<std::uint32_t>(k)).get_d();
    return static_cast<double>(k) - degree_deficit_lgamma(static_cast<double>(k));
}

Rational conn_prob_by_rank(std::uint32_t i, std::uint32_t k) {
    require_k(k);
    if (i < 1) throw ParameterError("rank i must be >= 1");
    if (i > k) return 0;
    Rational missed = 0;
    for (std::uint32_t j = 0; j < i; ++j) missed += negbin_pmf(k, j);
    return 1 - missed;
}

double mean_degree_asymptotic(double k) {
    if (!(k >= 1.0)) throw ParameterError("k must be >= 1");
    return k - std::sqrt(k / std::numbers::pi) + 1.0 / (8.0 * std::sqrt(std::numbers::pi * k));
}

double erlang_survival(std::uint32_t k, double x) {
    double term = std::exp(-x);
    double sum = term;
    for (std::uint32_t i = 1; i < k; ++i) {
        term *= x / i;
        sum += term;
    }
    return sum;
}

double erlang_integral_mean_degree(std::uint32_t k) {
    if (k < 1 || k > 30) throw ParameterError("erlang_integral_mean_degree supports 1 <= k <= 30");
    auto integrand = [k](double x) {
        const double f = erlang_survival(k, x);
        return f * f;
    };
    // The survival function is decreasing, so the first x past the mean with
    // a negligible integrand bounds the effective support.
    double upper = static_cast<double>(k);
    while (integrand(upper) >= 1e-16) upper += 1.0;
    using Quadrature = boost::math::quadrature::gauss_kronrod<double, 61>;
    return Quadrature::integrate(integrand, 0.0, upper, 20, 1e-15);
}

void ThresholdParams::validate() const {
    if (!(t > 0.0)) throw ParameterError("t must be positive");
    if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must lie in (0,1)");
    if (!std::isfinite(t_prime)) throw ParameterError("t' must be finite");
}

ThresholdK threshold_k(std::uint64_t n, const ThresholdParams& params, ThresholdForm form) {
    if (n < 16) throw ParameterError("threshold_k requires n >= 16");
    params.validate();
    const double log_n = std::log(static_cast<double>(n));
    const double loglog_n = std::log(log_n);
    double raw = 0.0;
    switch (form) {
    case ThresholdForm::t_form: raw = params.t * log_n; break;
    case ThresholdForm::t_prime_form: raw = log_n + params.t_prime * loglog_n * std::sqrt(log_n); break;
    case ThresholdForm::disc_form: raw = log_n - 3.0 * std::sqrt(log_n * loglog_n); break;
    }
    const auto k = static_cast<std::int64_t>(std::floor(raw));
    if (k < 1) return ThresholdK{1, true};
    return ThresholdK{k, false};
}

double isolated_prob_lower_bound(double k, double delta) {
    if (!(k >= 1.0)) throw ParameterError("k must be >= 1");
    if (!(delta > 0.0 && delta < 1.0) || delta < std::sqrt(6.0 * std::log(k) / k))
        throw ParameterError("delta must satisfy sqrt(6 log k / k) <= delta < 1");
    return std::exp(-k * (1.0 + delta));
}

AnWindow an_window(std::uint64_t n, double t) {
    if (n < 3) throw ParameterError("an_window requires n >= 3");
    if (!(t > 0.0)) throw ParameterError("an_window requires t > 0");
    const double nd = static_cast<double>(n);
    const double mean_degree = t * std::log(nd);
    if (!(mean_degree < nd - 1.0)) throw ParameterError("an_window requires t log n < n - 1");
    AnWindow w;
    w.lower = std::log((nd - 1.0) / mean_degree) - std::numbers::sqrt2;
    w.upper = w.lower + 2.0 * std::numbers::sqrt2;
    w.p_bar = mean_degree / (nd - 1.0) * std::exp(-std::numbers::sqrt2);
    w.p_underbar = mean_degree / (nd - 1.0) * std::exp(std::numbers::sqrt2);
    return w;
}

double component_bound_pi(std::uint64_t n, double t) {
    if (n < 100 || n > component_bound_max_n)
        throw ParameterError("component_bound_pi supports 100 <= n <= " + std::to_string(component_bound_max_n));
    const AnWindow w = an_window(n, t);
    const auto first = static_cast<std::uint64_t>(std::ceil(8.24 / t));
    const std::uint64_t last = n / 2;
    if (first > last) return 0.0;

    const double nd = static_cast<double>(n);
    const double log_n_fact = std::lgamma(nd + 1.0);
    const double log_p_under = std::log(w.p_underbar);
    const double log_keep_out = std::log1p(-w.p_bar);

    double running_max = -std::numeric_limits<double>::infinity();
    double scaled_sum = 0.0;
    for (std::uint64_t r = std::max<std::uint64_t>(first, 1); r <= last; ++r) {
        const double rd = static_cast<double>(r);
        const double log_term = log_n_fact - std::lgamma(rd + 1.0) - std::lgamma(nd - rd + 1.0) +
                                (rd - 2.0) * std::log(rd) + (rd - 1.0) * log_p_under +
                                rd * (nd - rd) * log_keep_out;
        if (log_term > 700.0) return std::numeric_limits<double>::infinity();
        if (log_term > running_max) {
            scaled_sum = scaled_sum * std::exp(running_max - log_term) + 1.0;
            running_max = log_term;
        } else {
            scaled_sum += std::exp(log_term - running_max);
        }
    }
    return scaled_sum * std::exp(running_max);
}

}  // namespace bagraph
