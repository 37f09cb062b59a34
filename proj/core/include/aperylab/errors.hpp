#pragma once

#include <stdexcept>
#include <string>

namespace aperylab {

/// Element has no inverse in the requested residue ring.
struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

/// A rational cannot be reduced because its denominator shares a factor
/// with the modulus prime.
struct DenominatorNotCoprime : std::domain_error {
    using std::domain_error::domain_error;
};

/// Modulus construction rejected (composite prime field, zero exponent, ...).
struct InvalidModulus : std::domain_error {
    using std::domain_error::domain_error;
};

/// crt input moduli share a common factor.
struct NonCoprimeModuli : std::domain_error {
    using std::domain_error::domain_error;
};

/// Arithmetic attempted between residues of different moduli.
struct ModulusMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

/// A recurrence step did not divide exactly; the coefficients are wrong
/// for an integer solution.
struct NonIntegerStep : std::domain_error {
    using std::domain_error::domain_error;
};

/// Recurrence fitting found no integer coefficient triple, or validation
/// against directly computed terms failed.
struct NoIntegerFit : std::domain_error {
    using std::domain_error::domain_error;
};

/// Parameters outside the range a congruence statement covers.
struct UnsupportedParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A requested sequence index exceeds the configured cap.
struct IndexCapExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The usable prime set cannot support the requested reconstruction.
struct InsufficientPrimes : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace aperylab
