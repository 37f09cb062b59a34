#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "aperylab/numbers.hpp"

namespace aperylab {

/// Grow-on-demand memo table for exact binomial coefficients.
/// Out-of-range k yields 0, which several sequence formulas rely on.
/// Thread safe; concurrent lookups observe the same values as pure
/// recomputation.
class BinomialCache {
  public:
    Integer binomial(std::int64_t n, std::int64_t k);
    std::size_t size() const;

  private:
    mutable std::mutex mutex_;
    std::unordered_map<std::uint64_t, Integer> table_;
};

BinomialCache& shared_binomial_cache();

/// C(n, k) exactly; 0 for k outside [0, n]. Pre: n >= 0.
Integer binomial(std::int64_t n, std::int64_t k);

/// C(2n, n). Pre: n >= 0.
Integer central_binomial(std::int64_t n);

/// Sum of 1/j^m for j = 1..n, exact. Empty sum (n = 0) is 0.
/// Pre: n >= 0, m >= 1. Prefix sums are memoized per power.
Rational harmonic_power_sum(std::int64_t n, int m);

} // namespace aperylab
