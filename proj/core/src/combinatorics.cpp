#include "aperylab/combinatorics.hpp"

#include <map>
#include <stdexcept>

namespace aperylab {

namespace {

std::uint64_t pack_key(std::int64_t n, std::int64_t k) {
    return (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(k);
}

} // namespace

Integer BinomialCache::binomial(std::int64_t n, std::int64_t k) {
    if (n < 0)
        throw std::invalid_argument("binomial: n must be >= 0");
    if (k < 0 || k > n)
        return 0;
    if (n >= (std::int64_t{1} << 32))
        throw std::invalid_argument("binomial: n too large for this suite");
    const std::uint64_t key = pack_key(n, k);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = table_.find(key);
    if (it != table_.end())
        return it->second;
    Integer value;
    mpz_bin_uiui(value.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    table_.emplace(key, value);
    return value;
}

std::size_t BinomialCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.size();
}

BinomialCache& shared_binomial_cache() {
    static BinomialCache cache;
    return cache;
}

Integer binomial(std::int64_t n, std::int64_t k) {
    return shared_binomial_cache().binomial(n, k);
}

Integer central_binomial(std::int64_t n) {
    return binomial(2 * n, n);
}

Rational harmonic_power_sum(std::int64_t n, int m) {
    if (n < 0 || m < 1)
        throw std::invalid_argument("harmonic_power_sum: need n >= 0, m >= 1");
    // prefix sums per power, extended on demand
    static std::mutex mutex;
    static std::map<int, std::vector<Rational>> sums;
    std::lock_guard<std::mutex> lock(mutex);
    auto& prefix = sums[m];
    if (prefix.empty())
        prefix.emplace_back(0);
    while (static_cast<std::int64_t>(prefix.size()) <= n) {
        const auto j = static_cast<unsigned long>(prefix.size());
        const Rational term = make_rational(1, pow_integer(Integer(j), static_cast<unsigned long>(m)));
        prefix.push_back(prefix.back() + term);
    }
    return prefix[static_cast<std::size_t>(n)];
}

} // namespace aperylab
