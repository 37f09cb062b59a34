#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "aperylab/numbers.hpp"
#include "aperylab/residue.hpp"
#include "aperylab/sequences.hpp"

namespace aperylab {

/// Verdict for one congruence instance. holds is always the value
/// equality of the two residues, which share a modulus by construction.
struct CongruenceReport {
    std::string statement;
    std::string family; // empty when the statement has no family parameter
    std::vector<std::pair<std::string, Integer>> params;
    Residue lhs;
    Residue rhs;
    bool holds;

    const Modulus& modulus() const { return lhs.modulus(); }
};

/// Builds a report, enforcing the lhs/rhs modulus invariant.
CongruenceReport make_report(std::string statement, std::string family,
                             std::vector<std::pair<std::string, Integer>> params,
                             Residue lhs, Residue rhs);

/// Bernoulli-correction coefficient for the Domb-type supercongruence.
/// (2,1) uses the two-sum formula; r + s >= 4 uses the single-sum formula;
/// those two cases are exhaustive for r >= 2. Exact Rational (denominator
/// divides 3). Throws UnsupportedParameters when r < 2.
Rational mathcal_d(std::int64_t n, int r, int s);

/// Bernoulli-polynomial-correction coefficient for the C* supercongruence:
/// half the sum of C(n,k)^2 C(2k,k) (n-k)^2 over k < n. Pre: n >= 1.
Rational mathcal_c_star(std::int64_t n);

/// D_{np}^{(r,s)} = D_n^{(r,s)} + p^3 B_{p-3} D-coefficient  (mod p^4).
CongruenceReport verify_theorem1(std::int64_t p, std::int64_t n, int r, int s);

/// C*_{np} = C*_n + p^2 (p/3) B_{p-2}(1/3) C*-coefficient  (mod p^3).
CongruenceReport verify_theorem2(std::int64_t p, std::int64_t n);

/// C(np, kp) = C(n,k) (1 - (1/3) n k (n-k) p^3 B_{p-3})  (mod p^4).
CongruenceReport verify_wolstenholme_binomial(std::int64_t p, std::int64_t n, std::int64_t k);

/// The five harmonic-sum congruences at one prime: full-range and
/// half-range power sums against Bernoulli values, plus the central
/// binomial sum against B_{p-2}(1/3). Statement ids are
/// harmonic-square-full, harmonic-cube-full, harmonic-square-half,
/// harmonic-cube-half, harmonic-central-binomial.
std::vector<CongruenceReport> verify_harmonic(std::int64_t p);

/// Product of two shifted central binomials mod p^2, with the branch factor
/// (2k+1-2n) for j <= (p-1)/2 and (2k+1) for j >= (p+1)/2. Pre: n > k >= 0,
/// 1 <= j <= p-1.
CongruenceReport verify_lemma_cc8(std::int64_t p, std::int64_t n, std::int64_t k, std::int64_t j);

/// C(2kp+2j, kp+j) = C(2k,k) C(2j,j) (1 + 2kp (H_{2j} - H_j))  (mod p^2).
CongruenceReport verify_cc9(std::int64_t p, std::int64_t k, std::int64_t j);

/// C(p,j)^2 / C(2p,2j) = -p/j resp. +p/j (mod p^2), checked as p-integral
/// rationals via valuation (C(2p,2j) itself is not invertible mod p^2).
CongruenceReport verify_cc13_cc14(std::int64_t p, std::int64_t j);

/// Prime-power lifting: D_{np^m} = D_{np^(m-1)} (mod p^(3m)) for the Domb
/// family, C*_{np^m} = C*_{np^(m-1)} (mod p^(2m)) for C*. Throws
/// IndexCapExceeded when n p^m exceeds the cap, UnsupportedParameters for
/// other families.
CongruenceReport verify_lifting(std::int64_t p, int m, std::int64_t n,
                                const SequenceFamily& family, std::int64_t index_cap = 2000);

} // namespace aperylab
