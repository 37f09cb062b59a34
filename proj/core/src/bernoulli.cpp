#include "aperylab/bernoulli.hpp"

#include "aperylab/combinatorics.hpp"

namespace aperylab {

void BernoulliTable::extend_locked(std::size_t n) {
    if (table_.empty())
        table_.emplace_back(1); // B_0
    while (table_.size() <= n) {
        const std::size_t m = table_.size();
        // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m
        Rational sum(0);
        for (std::size_t j = 0; j < m; ++j)
            sum += Rational(binomial(static_cast<std::int64_t>(m) + 1,
                                     static_cast<std::int64_t>(j))) *
                   table_[j];
        table_.push_back(-sum / Rational(static_cast<unsigned long>(m) + 1));
    }
}

Rational BernoulliTable::number(std::size_t n) {
    std::lock_guard<std::mutex> lock(mutex_);
    extend_locked(n);
    return table_[n];
}

Rational BernoulliTable::polynomial(std::size_t n, const Rational& x) {
    std::lock_guard<std::mutex> lock(mutex_);
    extend_locked(n);
    // B_n(x) = sum_k C(n,k) B_k x^(n-k), Horner-style in x
    Rational acc(0);
    for (std::size_t k = 0; k <= n; ++k) {
        acc *= x;
        acc += Rational(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k))) *
               table_[k];
    }
    return acc;
}

BernoulliTable& shared_bernoulli_table() {
    static BernoulliTable table;
    return table;
}

Rational bernoulli_number(std::size_t n) {
    return shared_bernoulli_table().number(n);
}

Rational bernoulli_polynomial(std::size_t n, const Rational& x) {
    return shared_bernoulli_table().polynomial(n, x);
}

Residue bernoulli_mod(std::size_t n, const Modulus& m) {
    return reduce_rational(bernoulli_number(n), m);
}

} // namespace aperylab
