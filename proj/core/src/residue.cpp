#include "aperylab/residue.hpp"

#include <array>
#include <utility>

namespace aperylab {

namespace {

Integer powm(const Integer& base, const Integer& exp, const Integer& mod) {
    Integer out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return out;
}

} // namespace

bool is_prime(const Integer& n) {
    if (n < 2)
        return false;
    // Trial division by the witness primes settles small n and guarantees
    // the bases below are coprime to the candidate.
    static constexpr std::array<unsigned long, 12> witnesses = {2,  3,  5,  7,  11, 13,
                                                                17, 19, 23, 29, 31, 37};
    for (unsigned long w : witnesses) {
        if (n == w)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), w))
            return false;
    }
    // n - 1 = d * 2^r with d odd
    Integer d = n - 1;
    unsigned long r = integer_valuation(d, 2);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    const Integer n_minus_1 = n - 1;
    for (unsigned long w : witnesses) {
        Integer x = powm(Integer(w), d, n);
        if (x == 1 || x == n_minus_1)
            continue;
        bool composite = true;
        for (unsigned long i = 1; i < r; ++i) {
            x = (x * x) % n;
            if (x == n_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    // This witness set is a proven deterministic test below 3.3e24.
    return true;
}

Modulus::Modulus(Integer prime, unsigned exponent)
    : prime_(std::move(prime)), exponent_(exponent) {
    if (exponent_ == 0)
        throw InvalidModulus("modulus exponent must be >= 1");
    if (!is_prime(prime_))
        throw InvalidModulus("modulus base " + prime_.get_str() + " is not prime");
    value_ = pow_integer(prime_, exponent_);
}

Residue::Residue(const Integer& value, Modulus modulus) : modulus_(std::move(modulus)) {
    mpz_mod(value_.get_mpz_t(), value.get_mpz_t(), modulus_.value().get_mpz_t());
}

void Residue::require_same_modulus(const Residue& other) const {
    if (!(modulus_ == other.modulus_))
        throw ModulusMismatch("residue arithmetic between " + modulus_.value().get_str() +
                              " and " + other.modulus_.value().get_str());
}

Residue Residue::operator+(const Residue& other) const {
    require_same_modulus(other);
    Integer v = value_ + other.value_;
    if (v >= modulus_.value())
        v -= modulus_.value();
    return Residue(v, modulus_);
}

Residue Residue::operator-(const Residue& other) const {
    require_same_modulus(other);
    Integer v = value_ - other.value_;
    if (v < 0)
        v += modulus_.value();
    return Residue(v, modulus_);
}

Residue Residue::operator*(const Residue& other) const {
    require_same_modulus(other);
    return Residue(value_ * other.value_, modulus_);
}

Residue Residue::pow(unsigned long e) const {
    Integer out;
    mpz_powm_ui(out.get_mpz_t(), value_.get_mpz_t(), e, modulus_.value().get_mpz_t());
    return Residue(out, modulus_);
}

Residue mod_inverse(const Integer& a, const Modulus& m) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.value().get_mpz_t()) == 0)
        throw NotInvertible(a.get_str() + " is not invertible mod " + m.value().get_str());
    return Residue(inv, m);
}

Residue reduce_rational(const Rational& q, const Modulus& m) {
    const Integer& den = q.get_den();
    if (mpz_divisible_p(den.get_mpz_t(), m.prime().get_mpz_t()))
        throw DenominatorNotCoprime("denominator " + den.get_str() +
                                    " shares the modulus prime " + m.prime().get_str());
    return Residue(q.get_num(), m) * mod_inverse(den, m);
}

int legendre(const Integer& a, const Integer& p) {
    if (p == 2 || !is_prime(p))
        throw InvalidModulus("legendre symbol needs an odd prime, got " + p.get_str());
    const Integer e = powm(a, (p - 1) / 2, p);
    if (e == 0)
        return 0;
    return e == 1 ? 1 : -1;
}

Integer crt_symmetric(const std::vector<Residue>& residues) {
    if (residues.empty())
        throw std::invalid_argument("crt_symmetric: empty residue list");
    Integer x = residues.front().value();
    Integer modulus = residues.front().modulus().value();
    for (std::size_t i = 1; i < residues.size(); ++i) {
        const Integer& m = residues[i].modulus().value();
        Integer g;
        mpz_gcd(g.get_mpz_t(), modulus.get_mpz_t(), m.get_mpz_t());
        if (g != 1)
            throw NonCoprimeModuli("moduli share factor " + g.get_str());
        Integer inv;
        mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), m.get_mpz_t());
        Integer t = ((residues[i].value() - x) * inv) % m;
        if (t < 0)
            t += m;
        x += modulus * t;
        modulus *= m;
    }
    // into [-M/2, M/2)
    if (2 * x >= modulus)
        x -= modulus;
    return x;
}

bool congruent_rationals(const Rational& x, const Rational& y, const Modulus& m) {
    const Rational diff = x - y;
    if (diff == 0)
        return true;
    return rational_valuation(diff, m.prime()) >= static_cast<long>(m.exponent());
}

} // namespace aperylab
