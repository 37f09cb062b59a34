#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aperylab/residue.hpp"
#include "oracles.hpp"

using namespace aperylab;

TEST_CASE("is_prime handles the usual suspects") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91)); // 7 * 13
    CHECK_FALSE(is_prime(561)); // Carmichael
    CHECK(is_prime(Integer("2305843009213693951"))); // 2^61 - 1
    CHECK_FALSE(is_prime(Integer("2305843009213693953")));
}

TEST_CASE("is_prime agrees with trial division below 2000") {
    for (std::int64_t n = 0; n < 2000; ++n) {
        bool expected = n >= 2;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                expected = false;
                break;
            }
        CAPTURE(n);
        CHECK(is_prime(Integer(n)) == expected);
    }
}

TEST_CASE("Modulus validates its parts") {
    const Modulus m(Integer(7), 2);
    CHECK(m.value() == 49);
    CHECK_THROWS_AS(Modulus(Integer(6), 1), InvalidModulus);
    CHECK_THROWS_AS(Modulus(Integer(7), 0), InvalidModulus);
}

TEST_CASE("Residue canonicalizes and refuses modulus mixing") {
    const Modulus m5(Integer(5), 1);
    const Modulus m7(Integer(7), 1);
    CHECK(Residue(-3, m5).value() == 2);
    CHECK(Residue(12, m5).value() == 2);
    CHECK((Residue(3, m5) + Residue(4, m5)).value() == 2);
    CHECK((Residue(3, m5) - Residue(4, m5)).value() == 4);
    CHECK((Residue(3, m5) * Residue(4, m5)).value() == 2);
    CHECK(Residue(2, m5).pow(4).value() == 1);
    CHECK_THROWS_AS(Residue(1, m5) + Residue(1, m7), ModulusMismatch);
    CHECK_THROWS_AS(Residue(1, m5) * Residue(1, Modulus(Integer(5), 2)), ModulusMismatch);
}

TEST_CASE("mod_inverse examples") {
    CHECK(mod_inverse(2, Modulus(Integer(5), 1)).value() == 3);
    CHECK(mod_inverse(1, Modulus(Integer(7), 2)).value() == 1);
    CHECK(mod_inverse(27, Modulus(Integer(5), 1)).value() == 3);
    CHECK_THROWS_AS(mod_inverse(10, Modulus(Integer(5), 2)), NotInvertible);
}

TEST_CASE("mod_inverse matches the extended-Euclid oracle") {
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
    const Modulus moduli[] = {Modulus(Integer(5), 3), Modulus(Integer(13), 2),
                              Modulus(Integer(101), 1), Modulus(Integer(2), 7)};
    for (int i = 0; i < 200; ++i) {
        const Modulus& m = moduli[i % 4];
        const Integer a(dist(rng));
        const auto [g, inv] = oracle::extended_euclid_inverse(a, m.value());
        if (g != 1) {
            CHECK_THROWS_AS(mod_inverse(a, m), NotInvertible);
        } else {
            const Residue r = mod_inverse(a, m);
            CHECK(r.value() == inv);
            CHECK((Residue(a, m) * r).value() == 1);
        }
    }
}

TEST_CASE("reduce_rational examples") {
    const Modulus m5(Integer(5), 1);
    CHECK(reduce_rational(make_rational(1, 27), m5).value() == 3);
    CHECK(reduce_rational(Rational(0), Modulus(Integer(7), 3)).value() == 0);
    CHECK(reduce_rational(make_rational(1, 6), m5).value() == 1);
    CHECK_THROWS_AS(reduce_rational(make_rational(1, 5), m5), DenominatorNotCoprime);
    CHECK_THROWS_AS(reduce_rational(make_rational(3, 10), Modulus(Integer(5), 2)),
                    DenominatorNotCoprime);
}

TEST_CASE("reduce_rational is a ring homomorphism away from p") {
    const Modulus m(Integer(13), 2);
    std::mt19937_64 rng(987654321);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<std::int64_t> den(1, 100'000);
    auto draw = [&]() {
        Integer d;
        do {
            d = den(rng);
        } while (d % 13 == 0);
        return make_rational(num(rng), d);
    };
    for (int i = 0; i < 100; ++i) {
        const Rational a = draw();
        const Rational b = draw();
        CHECK(reduce_rational(a + b, m) == reduce_rational(a, m) + reduce_rational(b, m));
        CHECK(reduce_rational(a * b, m) == reduce_rational(a, m) * reduce_rational(b, m));
    }
}

TEST_CASE("legendre examples and errors") {
    CHECK(legendre(1, 3) == 1);
    CHECK(legendre(5, 3) == -1);
    CHECK(legendre(7, 3) == 1);
    CHECK(legendre(21, 7) == 0);
    CHECK_THROWS_AS(legendre(2, 9), InvalidModulus);
    CHECK_THROWS_AS(legendre(1, 2), InvalidModulus);
}

TEST_CASE("legendre matches enumeration and is completely multiplicative") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        for (std::int64_t a = 0; a < p; ++a) {
            CAPTURE(p);
            CAPTURE(a);
            CHECK(legendre(a, p) == oracle::legendre_by_enumeration(a, p));
        }
        for (std::int64_t a = 0; a < p; ++a)
            for (std::int64_t b = 0; b < p; ++b)
                CHECK(legendre(Integer(a) * b, p) == legendre(a, p) * legendre(b, p));
    }
}

TEST_CASE("crt_symmetric examples") {
    const Modulus m5(Integer(5), 1);
    const Modulus m7(Integer(7), 1);
    CHECK(crt_symmetric({Residue(2, m5), Residue(3, m7)}) == 17);
    CHECK(crt_symmetric({Residue(0, m5)}) == 0);
    CHECK(crt_symmetric({Residue(4, m5), Residue(6, m7)}) == -1);
    CHECK_THROWS_AS(crt_symmetric({Residue(1, m5), Residue(2, Modulus(Integer(5), 2))}),
                    NonCoprimeModuli);
    CHECK_THROWS_AS(crt_symmetric({}), std::invalid_argument);
}

TEST_CASE("crt_symmetric matches brute force on random instances") {
    std::mt19937_64 rng(424242);
    const Modulus moduli[] = {Modulus(Integer(2), 3), Modulus(Integer(3), 2),
                              Modulus(Integer(5), 1), Modulus(Integer(7), 1)};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Residue> rs;
        std::vector<std::pair<Integer, Integer>> expected;
        Integer product = 1;
        for (const auto& m : moduli) {
            if (rng() % 2 == 0 && trial != 0)
                continue;
            const Integer v = Integer(static_cast<unsigned long>(rng() % 1000));
            rs.emplace_back(v, m);
            expected.emplace_back(rs.back().value(), m.value());
            product *= m.value();
        }
        if (rs.empty())
            continue;
        const Integer got = crt_symmetric(rs);
        CHECK(got == oracle::crt_bruteforce(expected));
        CHECK(2 * got < product);
        CHECK(-2 * got <= product);
        for (const auto& r : rs) {
            Integer rem = got % r.modulus().value();
            if (rem < 0)
                rem += r.modulus().value();
            CHECK(rem == r.value());
        }
    }
}

TEST_CASE("congruent_rationals uses p-adic valuation") {
    const Modulus m25(Integer(5), 2);
    // 5/9 vs -5: difference 50/9 has valuation 2
    CHECK(congruent_rationals(make_rational(5, 9), Rational(-5), m25));
    CHECK_FALSE(congruent_rationals(make_rational(1, 9), Rational(1 + 25), m25));
    CHECK(congruent_rationals(make_rational(1, 3), make_rational(1, 3), m25));
    // denominators divisible by p make the sides non-congruent mod p^2
    CHECK_FALSE(congruent_rationals(make_rational(1, 5), Rational(0), m25));
}

TEST_CASE("valuation helpers") {
    CHECK(integer_valuation(Integer(250), Integer(5)) == 3);
    CHECK(integer_valuation(Integer(7), Integer(5)) == 0);
    CHECK(rational_valuation(make_rational(50, 9), Integer(5)) == 2);
    CHECK(rational_valuation(make_rational(9, 50), Integer(5)) == -2);
    CHECK_THROWS_AS(integer_valuation(Integer(0), Integer(5)), std::domain_error);
}
