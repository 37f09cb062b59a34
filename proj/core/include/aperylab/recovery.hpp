#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aperylab/congruence.hpp"
#include "aperylab/numbers.hpp"
#include "aperylab/sequences.hpp"

namespace aperylab {

struct PrimeResidue {
    std::int64_t prime;
    Integer residue; // the constant mod prime
};

struct SkippedPrime {
    std::int64_t prime;
    std::string reason;
};

/// One reconstructed constant for a conjectured supercongruence family.
/// A divisibility failure is a hard verdict (the congruence itself broke at
/// that prime); it is recorded, never thrown.
struct RecoveryReport {
    SequenceFamily family;
    std::int64_t n = 0;
    int conjecture = 0; // 1 for B/F, 2 for delta/zeta
    std::vector<PrimeResidue> residues;
    std::vector<SkippedPrime> skipped;
    std::vector<std::string> failures;
    Integer recovered;
    std::optional<Integer> expected;
    std::optional<bool> matches; // set only when an expected value exists

    bool ok() const { return failures.empty() && matches.value_or(true); }
};

/// 1 for the B and F families, 2 for delta and zeta; throws
/// UnsupportedParameters for the proven families.
int conjecture_id(const SequenceFamily& family);

/// Published constant for n <= 8, nothing beyond.
std::optional<Integer> conjecture_table_value(const SequenceFamily& family, std::int64_t n);

/// 10x the largest published constant magnitude.
const Integer& default_magnitude_bound();

/// Reconstructs the conjectured constant for (family, n) from residues at
/// the given primes: checks p^e | u_{np} - u_n (e = 2 or 3 by conjecture),
/// divides exactly over the integers, inverts the per-prime Bernoulli
/// factor mod p, and combines with symmetric CRT. Primes where the factor
/// vanishes mod p are skipped with a reason. Throws InsufficientPrimes when
/// the usable moduli cannot certify the requested magnitude bound (fewer
/// than 3 usable primes, or modulus product below twice the bound) and no
/// mathematical failure explains the shortfall.
///
/// expected_override, when set, replaces the builtin table value for the
/// match verdict (test fixtures use this).
RecoveryReport recover_constant(const SequenceFamily& family, std::int64_t n,
                                const std::vector<std::int64_t>& primes,
                                const Integer& magnitude_bound = default_magnitude_bound(),
                                const std::optional<Integer>& expected_override = std::nullopt);

/// Checks u_{np} = u_n + factor * U_n at the working modulus (p^3 for
/// conjecture 1, p^4 for conjecture 2, the displayed congruences print no
/// modulus) and reports in params the highest exponent k <= 6 at which the
/// congruence holds, so the modulus ambiguity stays visible. Pre: the
/// published table covers n (n <= 8).
CongruenceReport verify_conjecture(const SequenceFamily& family, std::int64_t n, std::int64_t p);

} // namespace aperylab
