#include "aperylab/congruence.hpp"

#include <stdexcept>

#include "aperylab/bernoulli.hpp"
#include "aperylab/combinatorics.hpp"

namespace aperylab {

namespace {

void require_suite_prime(std::int64_t p) {
    if (p < 5 || !is_prime(Integer(p)))
        throw UnsupportedParameters("statement needs a prime p >= 5, got " + std::to_string(p));
}

using Params = std::vector<std::pair<std::string, Integer>>;

} // namespace

CongruenceReport make_report(std::string statement, std::string family, Params params,
                             Residue lhs, Residue rhs) {
    if (!(lhs.modulus() == rhs.modulus()))
        throw ModulusMismatch("report sides have different moduli");
    const bool holds = lhs.value() == rhs.value();
    return CongruenceReport{std::move(statement), std::move(family), std::move(params),
                            std::move(lhs), std::move(rhs), holds};
}

Rational mathcal_d(std::int64_t n, int r, int s) {
    if (r < 2)
        throw UnsupportedParameters("mathcal_d: needs r >= 2, got " + std::to_string(r));
    if (s < 1)
        throw UnsupportedParameters("mathcal_d: needs s >= 1, got " + std::to_string(s));
    if (n < 1)
        throw std::invalid_argument("mathcal_d: n must be >= 1");

    if (r == 2 && s == 1) {
        Integer first = 0;
        for (std::int64_t k = 0; k < n; ++k) {
            const Integer b = binomial(n, k);
            first += b * b * central_binomial(k) * binomial(2 * n - 2 * k - 2, n - k - 1) * n *
                     (n - k) * (n - k);
        }
        Integer second = 0;
        for (std::int64_t k = 0; k <= n; ++k) {
            const Integer b = binomial(n, k);
            const Integer weight = 2 * n * k * (n - k) + 2 * k * k * k +
                                   2 * (n - k) * (n - k) * (n - k);
            second += b * b * central_binomial(k) * central_binomial(n - k) * weight;
        }
        return Rational(8 * first) - make_rational(second, 3);
    }

    // r >= 2 and (r, s) != (2, 1) forces r + s >= 4, the single-sum case
    Integer sum = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
        const Integer pair = central_binomial(k) * central_binomial(n - k);
        const Integer weight = Integer(r) * n * k * (n - k) + 2 * s * k * k * k +
                               2 * s * (n - k) * (n - k) * (n - k);
        sum += pow_integer(binomial(n, k), static_cast<unsigned long>(r)) *
               pow_integer(pair, static_cast<unsigned long>(s)) * weight;
    }
    return make_rational(-sum, 3);
}

Rational mathcal_c_star(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("mathcal_c_star: n must be >= 1");
    Integer sum = 0;
    for (std::int64_t k = 0; k < n; ++k) {
        const Integer b = binomial(n, k);
        sum += b * b * central_binomial(k) * (n - k) * (n - k);
    }
    return make_rational(sum, 2);
}

CongruenceReport verify_theorem1(std::int64_t p, std::int64_t n, int r, int s) {
    require_suite_prime(p);
    if (n < 1)
        throw std::invalid_argument("verify_theorem1: n must be >= 1");
    const Rational correction = mathcal_d(n, r, s); // also validates r, s

    const SequenceFamily family = SequenceFamily::domb_general(r, s);
    const Modulus mod4(Integer(p), 4);
    const Modulus mod1(Integer(p), 1);

    const Residue lhs(term(family, n * p), mod4);
    const Integer lifted =
        reduce_rational(bernoulli_number(static_cast<std::size_t>(p - 3)) * correction, mod1)
            .value();
    const Residue rhs(term(family, n) + pow_integer(Integer(p), 3) * lifted, mod4);

    return make_report("theorem1", family.name(),
                       {{"p", Integer(p)}, {"n", Integer(n)}, {"r", Integer(r)}, {"s", Integer(s)}},
                       lhs, rhs);
}

CongruenceReport verify_theorem2(std::int64_t p, std::int64_t n) {
    require_suite_prime(p);
    if (n < 1)
        throw std::invalid_argument("verify_theorem2: n must be >= 1");

    const SequenceFamily family = SequenceFamily::c_star();
    const Modulus mod3(Integer(p), 3);
    const Modulus mod1(Integer(p), 1);

    const Residue lhs(term(family, n * p), mod3);
    const Rational factor = Rational(legendre(Integer(p), 3)) *
                            bernoulli_polynomial(static_cast<std::size_t>(p - 2),
                                                 make_rational(1, 3)) *
                            mathcal_c_star(n);
    const Integer lifted = reduce_rational(factor, mod1).value();
    const Residue rhs(term(family, n) + Integer(p) * p * lifted, mod3);

    return make_report("theorem2", family.name(), {{"p", Integer(p)}, {"n", Integer(n)}}, lhs,
                       rhs);
}

CongruenceReport verify_wolstenholme_binomial(std::int64_t p, std::int64_t n, std::int64_t k) {
    require_suite_prime(p);
    if (k < 0 || n < k)
        throw std::invalid_argument("verify_wolstenholme_binomial: need n >= k >= 0");

    const Modulus mod4(Integer(p), 4);
    const Residue lhs(binomial(n * p, k * p), mod4);
    const Rational corr = Rational(1) - make_rational(Integer(n) * k * (n - k), 3) *
                                            pow_integer(Integer(p), 3) *
                                            bernoulli_number(static_cast<std::size_t>(p - 3));
    const Residue rhs = reduce_rational(Rational(binomial(n, k)) * corr, mod4);
    return make_report("wolstenholme", "",
                       {{"p", Integer(p)}, {"n", Integer(n)}, {"k", Integer(k)}}, lhs, rhs);
}

std::vector<CongruenceReport> verify_harmonic(std::int64_t p) {
    require_suite_prime(p);
    const Modulus mod2(Integer(p), 2);
    const Modulus mod1(Integer(p), 1);
    const Rational b3 = bernoulli_number(static_cast<std::size_t>(p - 3));
    const std::int64_t half = (p - 1) / 2;
    const Params base{{"p", Integer(p)}};

    std::vector<CongruenceReport> out;
    out.push_back(make_report("harmonic-square-full", "", base,
                              reduce_rational(harmonic_power_sum(p - 1, 2), mod2),
                              reduce_rational(make_rational(2, 3) * p * b3, mod2)));
    out.push_back(make_report("harmonic-cube-full", "", base,
                              reduce_rational(harmonic_power_sum(p - 1, 3), mod1),
                              Residue(0, mod1)));
    out.push_back(make_report("harmonic-square-half", "", base,
                              reduce_rational(harmonic_power_sum(half, 2), mod2),
                              reduce_rational(make_rational(7, 3) * p * b3, mod2)));
    out.push_back(make_report("harmonic-cube-half", "", base,
                              reduce_rational(harmonic_power_sum(half, 3), mod1),
                              reduce_rational(Rational(-2) * b3, mod1)));

    Rational central(0);
    for (std::int64_t j = 1; j < p; ++j)
        central += make_rational(central_binomial(j), Integer(j) * j);
    const Rational target = make_rational(legendre(Integer(p), 3), 2) *
                            bernoulli_polynomial(static_cast<std::size_t>(p - 2),
                                                 make_rational(1, 3));
    out.push_back(make_report("harmonic-central-binomial", "", base,
                              reduce_rational(central, mod1), reduce_rational(target, mod1)));
    return out;
}

CongruenceReport verify_lemma_cc8(std::int64_t p, std::int64_t n, std::int64_t k, std::int64_t j) {
    require_suite_prime(p);
    if (k < 0 || n <= k)
        throw std::invalid_argument("verify_lemma_cc8: need n > k >= 0");
    if (j < 1 || j > p - 1)
        throw std::invalid_argument("verify_lemma_cc8: need 1 <= j <= p-1");

    const Modulus mod2(Integer(p), 2);
    const Residue lhs(binomial(2 * k * p + 2 * j, k * p + j) *
                          binomial(2 * n * p - 2 * k * p - 2 * j, n * p - k * p - j),
                      mod2);
    const std::int64_t branch = (j <= (p - 1) / 2) ? (2 * k + 1 - 2 * n) : (2 * k + 1);
    const Residue rhs = Residue(Integer(2) * p * central_binomial(k) *
                                    binomial(2 * n - 2 * k - 2, n - k - 1) * branch,
                                mod2) *
                        mod_inverse(Integer(j), mod2);
    return make_report(
        "cc8", "",
        {{"p", Integer(p)}, {"n", Integer(n)}, {"k", Integer(k)}, {"j", Integer(j)}}, lhs, rhs);
}

CongruenceReport verify_cc9(std::int64_t p, std::int64_t k, std::int64_t j) {
    require_suite_prime(p);
    if (k < 0 || j < 1 || j > p - 1)
        throw std::invalid_argument("verify_cc9: need k >= 0 and 1 <= j <= p-1");

    const Modulus mod2(Integer(p), 2);
    const Residue lhs(binomial(2 * k * p + 2 * j, k * p + j), mod2);
    // The harmonic difference may carry a single p in a denominator (when
    // j < p <= 2j); the 2kp factor restores p-integrality, so the product
    // is reduced as one rational.
    const Rational correction =
        Rational(1) + Rational(Integer(2) * k * p) *
                          (harmonic_power_sum(2 * j, 1) - harmonic_power_sum(j, 1));
    const Residue rhs =
        reduce_rational(Rational(central_binomial(k) * central_binomial(j)) * correction, mod2);
    return make_report("cc9", "",
                       {{"p", Integer(p)}, {"k", Integer(k)}, {"j", Integer(j)}}, lhs, rhs);
}

CongruenceReport verify_cc13_cc14(std::int64_t p, std::int64_t j) {
    require_suite_prime(p);
    if (j < 1 || j > p - 1)
        throw std::invalid_argument("verify_cc13_cc14: need 1 <= j <= p-1");

    const Modulus mod2(Integer(p), 2);
    // C(2p,2j) has p-valuation 1, so it cannot be inverted mod p^2; the
    // statement is checked between p-integral rationals instead.
    const Rational lhs_rat = make_rational(binomial(p, j) * binomial(p, j), binomial(2 * p, 2 * j));
    const Rational rhs_rat = (j <= (p - 1) / 2) ? make_rational(-Integer(p), j)
                                                : make_rational(Integer(p), j);
    const bool holds = congruent_rationals(lhs_rat, rhs_rat, mod2);

    auto report = make_report("cc13", "", {{"p", Integer(p)}, {"j", Integer(j)}},
                              reduce_rational(lhs_rat, mod2), reduce_rational(rhs_rat, mod2));
    if (report.holds != holds)
        throw std::logic_error("cc13: valuation check and residue check disagree");
    return report;
}

CongruenceReport verify_lifting(std::int64_t p, int m, std::int64_t n,
                                const SequenceFamily& family, std::int64_t index_cap) {
    require_suite_prime(p);
    if (m < 1 || n < 1)
        throw std::invalid_argument("verify_lifting: need m >= 1 and n >= 1");

    unsigned step;
    if (family == SequenceFamily::domb())
        step = 3;
    else if (family == SequenceFamily::c_star())
        step = 2;
    else
        throw UnsupportedParameters("verify_lifting covers the Domb and C* families only");

    const Integer high = Integer(n) * pow_integer(Integer(p), static_cast<unsigned long>(m));
    if (high > index_cap)
        throw IndexCapExceeded("lifting index " + high.get_str() + " exceeds cap " +
                               std::to_string(index_cap));
    const std::int64_t hi = high.get_si();
    const std::int64_t lo = hi / p;

    const Modulus mod(Integer(p), step * static_cast<unsigned>(m));
    return make_report("lifting", family.name(),
                       {{"p", Integer(p)}, {"m", Integer(m)}, {"n", Integer(n)}},
                       Residue(term(family, hi), mod), Residue(term(family, lo), mod));
}

} // namespace aperylab
