#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aperylab/bernoulli.hpp"
#include "aperylab/combinatorics.hpp"
#include "oracles.hpp"

using namespace aperylab;

TEST_CASE("small Bernoulli numbers, -1/2 convention") {
    CHECK(bernoulli_number(0) == 1);
    CHECK(bernoulli_number(1) == make_rational(-1, 2));
    CHECK(bernoulli_number(2) == make_rational(1, 6));
    CHECK(bernoulli_number(3) == 0);
    CHECK(bernoulli_number(4) == make_rational(-1, 30));
    CHECK(bernoulli_number(12) == make_rational(-691, 2730));
}

TEST_CASE("odd Bernoulli numbers vanish") {
    for (std::size_t k = 1; k <= 29; ++k)
        CHECK(bernoulli_number(2 * k + 1) == 0);
}

TEST_CASE("defining recurrence holds up to n = 60") {
    for (std::int64_t n = 1; n <= 60; ++n) {
        Rational sum(0);
        for (std::int64_t j = 0; j <= n; ++j)
            sum += Rational(binomial(n + 1, j)) * bernoulli_number(static_cast<std::size_t>(j));
        CAPTURE(n);
        CHECK(sum == 0);
    }
}

TEST_CASE("agrees with the Worpitzky-formula oracle") {
    for (int n = 0; n <= 40; ++n)
        CHECK(bernoulli_number(static_cast<std::size_t>(n)) == oracle::bernoulli_worpitzky(n));
}

TEST_CASE("von Staudt-Clausen denominators up to B_60") {
    for (std::int64_t n = 1; 2 * n <= 60; ++n) {
        Integer denom = 1;
        for (std::int64_t q = 2; q <= 2 * n + 1; ++q)
            if (is_prime(Integer(q)) && (2 * n) % (q - 1) == 0)
                denom *= q;
        CAPTURE(n);
        CHECK(bernoulli_number(static_cast<std::size_t>(2 * n)).get_den() == denom);
    }
}

TEST_CASE("polynomial values") {
    for (std::size_t n = 0; n <= 20; ++n)
        CHECK(bernoulli_polynomial(n, Rational(0)) == bernoulli_number(n));
    CHECK(bernoulli_polynomial(3, make_rational(1, 3)) == make_rational(1, 27));
    CHECK(bernoulli_polynomial(2, Rational(1)) == make_rational(1, 6));
    CHECK(bernoulli_polynomial(1, Rational(0)) == make_rational(-1, 2));
}

TEST_CASE("difference and reflection identities at random rational points") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::int64_t> num(-50, 50);
    std::uniform_int_distribution<std::int64_t> den(1, 30);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational x = make_rational(num(rng), den(rng));
        for (std::size_t n = 1; n <= 20; ++n) {
            CAPTURE(n);
            CAPTURE(to_string(x));
            CHECK(bernoulli_polynomial(n, x + 1) - bernoulli_polynomial(n, x) ==
                  Rational(static_cast<unsigned long>(n)) * pow_rational(x, n - 1));
            const Rational reflected = bernoulli_polynomial(n, Rational(1) - x);
            CHECK(reflected == (n % 2 == 0 ? bernoulli_polynomial(n, x)
                                           : -bernoulli_polynomial(n, x)));
        }
    }
}

TEST_CASE("bernoulli_mod") {
    CHECK(bernoulli_mod(2, Modulus(Integer(5), 1)).value() == 1);
    CHECK(bernoulli_mod(3, Modulus(Integer(7), 1)).value() == 0);
    // B_4 = -1/30 has the prime 5 in its denominator
    CHECK_THROWS_AS(bernoulli_mod(4, Modulus(Integer(5), 1)), DenominatorNotCoprime);
}

TEST_CASE("half-range cube sum meets -2 B_{p-3} mod p") {
    for (std::int64_t p = 5; p <= 199; ++p) {
        if (!is_prime(Integer(p)))
            continue;
        const Modulus m(Integer(p), 1);
        const Residue lhs = reduce_rational(harmonic_power_sum((p - 1) / 2, 3), m);
        const Residue rhs = reduce_rational(
            Rational(-2) * bernoulli_number(static_cast<std::size_t>(p - 3)), m);
        CAPTURE(p);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("central-binomial sum meets (1/2)(p/3) B_{p-2}(1/3) mod p") {
    for (std::int64_t p = 5; p <= 199; ++p) {
        if (!is_prime(Integer(p)))
            continue;
        const Modulus m(Integer(p), 1);
        Rational sum(0);
        for (std::int64_t j = 1; j < p; ++j)
            sum += make_rational(central_binomial(j), Integer(j) * j);
        const Rational target =
            make_rational(legendre(Integer(p), 3), 2) *
            bernoulli_polynomial(static_cast<std::size_t>(p - 2), make_rational(1, 3));
        CAPTURE(p);
        CHECK(reduce_rational(sum, m) == reduce_rational(target, m));
    }
}
