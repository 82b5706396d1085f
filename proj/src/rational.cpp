#include "bagraph/rational.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "bagraph/model.hpp"

namespace bagraph {
namespace {

class FactorialTable {
public:
    Integer get(std::uint32_t n) {
        {
            std::shared_lock lock(mutex_);
            if (n < table_.size()) return table_[n];
        }
        std::unique_lock lock(mutex_);
        while (table_.size() <= n) table_.push_back(table_.back() * static_cast<unsigned long>(table_.size()));
        return table_[n];
    }

private:
    std::shared_mutex mutex_;
    std::vector<Integer> table_{Integer(1)};
};

FactorialTable& factorials() {
    static FactorialTable table;
    return table;
}

double log_of(const Integer& z) {
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

}  // namespace

Integer factorial(std::uint32_t n) { return factorials().get(n); }

Integer binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out;
}

Integer falling_factorial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    Integer out = 1;
    for (std::uint64_t i = 0; i < r; ++i) out *= static_cast<unsigned long>(n - i);
    return out;
}

Integer power(std::uint64_t base, std::uint64_t exponent) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    return out;
}

std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double log_of(const Rational& q) {
    if (sgn(q) <= 0) throw ParameterError("log_of requires a positive rational");
    return log_of(q.get_num()) - log_of(q.get_den());
}

}  // namespace bagraph
