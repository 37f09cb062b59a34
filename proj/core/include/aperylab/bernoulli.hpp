#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "aperylab/numbers.hpp"
#include "aperylab/residue.hpp"

namespace aperylab {

/// Memoized table of Bernoulli numbers with the generating-function
/// convention z/(e^z - 1), so B_1 = -1/2. The opposite sign convention
/// (+1/2) is common elsewhere and silently breaks the polynomial
/// expansion identities; everything in this library assumes -1/2.
///
/// Values are produced by the recurrence sum C(n+1, j) B_j = 0 (j = 0..n),
/// which is exact and fast at the index range this suite needs (n <~ 200).
class BernoulliTable {
  public:
    Rational number(std::size_t n);
    Rational polynomial(std::size_t n, const Rational& x);

  private:
    void extend_locked(std::size_t n);

    std::mutex mutex_;
    std::vector<Rational> table_;
};

BernoulliTable& shared_bernoulli_table();

/// B_n, exact.
Rational bernoulli_number(std::size_t n);

/// B_n(x) = sum C(n, k) B_k x^(n-k), exact.
Rational bernoulli_polynomial(std::size_t n, const Rational& x);

/// B_n reduced in the residue ring. Throws DenominatorNotCoprime when the
/// modulus prime divides the denominator of B_n (never happens for B_{p-3}
/// with p >= 5, by von Staudt-Clausen).
Residue bernoulli_mod(std::size_t n, const Modulus& m);

} // namespace aperylab
