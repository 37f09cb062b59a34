#include "aperylab/numbers.hpp"

#include <stdexcept>

namespace aperylab {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

Rational pow_rational(const Rational& base, unsigned long exp) {
    Rational out;
    mpz_pow_ui(mpq_numref(out.get_mpq_t()), mpq_numref(base.get_mpq_t()), exp);
    mpz_pow_ui(mpq_denref(out.get_mpq_t()), mpq_denref(base.get_mpq_t()), exp);
    // base was canonical, so num^e / den^e already is
    return out;
}

unsigned long integer_valuation(const Integer& x, const Integer& p) {
    if (x == 0)
        throw std::domain_error("integer_valuation: zero has no finite valuation");
    Integer stripped;
    return mpz_remove(stripped.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

long rational_valuation(const Rational& q, const Integer& p) {
    if (q == 0)
        throw std::domain_error("rational_valuation: zero has no finite valuation");
    const long vnum = static_cast<long>(integer_valuation(q.get_num(), p));
    const long vden = static_cast<long>(integer_valuation(q.get_den(), p));
    return vnum - vden;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

} // namespace aperylab
