#pragma once

#include <cstdint>
#include <vector>

#include "aperylab/errors.hpp"
#include "aperylab/numbers.hpp"

namespace aperylab {

/// Deterministic primality check (Miller-Rabin on a fixed witness base,
/// exact for every n below 3.3e24, far beyond the 64-bit inputs this
/// suite uses).
bool is_prime(const Integer& n);

/// A prime-power modulus p^e. The prime is validated on construction.
class Modulus {
  public:
    Modulus(Integer prime, unsigned exponent);

    const Integer& prime() const { return prime_; }
    unsigned exponent() const { return exponent_; }
    const Integer& value() const { return value_; }

    bool operator==(const Modulus& other) const {
        return prime_ == other.prime_ && exponent_ == other.exponent_;
    }

  private:
    Integer prime_;
    unsigned exponent_;
    Integer value_;
};

/// Canonical value in [0, m) together with its modulus. Arithmetic between
/// residues of different moduli throws ModulusMismatch rather than coercing.
class Residue {
  public:
    Residue(const Integer& value, Modulus modulus);

    const Integer& value() const { return value_; }
    const Modulus& modulus() const { return modulus_; }

    Residue operator+(const Residue& other) const;
    Residue operator-(const Residue& other) const;
    Residue operator*(const Residue& other) const;
    Residue pow(unsigned long e) const;

    bool operator==(const Residue& other) const {
        return modulus_ == other.modulus_ && value_ == other.value_;
    }

  private:
    void require_same_modulus(const Residue& other) const;

    Integer value_;
    Modulus modulus_;
};

/// r with a*r = 1 (mod m). Throws NotInvertible when gcd(a, m) > 1.
Residue mod_inverse(const Integer& a, const Modulus& m);

/// num * den^-1 in the residue ring. Throws DenominatorNotCoprime when the
/// modulus prime divides the denominator.
Residue reduce_rational(const Rational& q, const Modulus& m);

/// Legendre symbol (a/p) via the Euler criterion. Throws InvalidModulus
/// unless p is an odd prime.
int legendre(const Integer& a, const Integer& p);

/// The unique x in [-M/2, M/2), M = product of moduli, congruent to every
/// input residue. Throws NonCoprimeModuli if two moduli share a factor.
Integer crt_symmetric(const std::vector<Residue>& residues);

/// Congruence between rationals in the p-adic sense: x = y (mod p^e) iff
/// the difference, in lowest terms, has p-adic valuation >= e. Subsumes the
/// residue check when both sides are p-integral and also covers statements
/// whose naive residue form would require inverting a multiple of p.
bool congruent_rationals(const Rational& x, const Rational& y, const Modulus& m);

} // namespace aperylab
