#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aperylab/errors.hpp"
#include "aperylab/numbers.hpp"

namespace aperylab {

enum class FamilyTag {
    AperyA,      // sum C(n,k)^2 C(n+k,k)^2
    AperyB,      // sum C(n,k)^2 C(n+k,k)
    CStar,       // sum C(n,k)^2 C(2k,k)
    DombGeneral, // sum C(n,k)^r (C(2k,k) C(2n-2k,n-k))^s; (2,1) is the Domb family
    ZagierB,     // sum (-1)^k 3^(n-3k) C(n,3k) C(3k,2k) C(2k,k)
    AZF,         // sum (-1)^k 8^(n-k) C(n,k) sum_j C(k,j)^3
    Delta,       // sum (-1)^k 3^(n-3k) C(n,3k) C(n+k,k) C(3k,2k) C(2k,k)
    Zeta,        // sum over k,l of C(n,k)^2 C(n,l) C(k,l) C(k+l,n)
};

/// One of the eight integer sequence families. DombGeneral carries its
/// (r, s) parameters; the other tags have none.
class SequenceFamily {
  public:
    static SequenceFamily apery_a() { return SequenceFamily(FamilyTag::AperyA); }
    static SequenceFamily apery_b() { return SequenceFamily(FamilyTag::AperyB); }
    static SequenceFamily c_star() { return SequenceFamily(FamilyTag::CStar); }
    static SequenceFamily domb() { return domb_general(2, 1); }
    static SequenceFamily domb_general(int r, int s);
    static SequenceFamily zagier_b() { return SequenceFamily(FamilyTag::ZagierB); }
    static SequenceFamily az_f() { return SequenceFamily(FamilyTag::AZF); }
    static SequenceFamily delta() { return SequenceFamily(FamilyTag::Delta); }
    static SequenceFamily zeta() { return SequenceFamily(FamilyTag::Zeta); }

    /// Accepts the CLI spellings: apery-a, apery-b, c-star, domb,
    /// d-general (with r, s), zagier-b, az-f, delta, zeta.
    static std::optional<SequenceFamily> parse(std::string_view name, int r = 2, int s = 1);

    FamilyTag tag() const { return tag_; }
    int r() const { return r_; }
    int s() const { return s_; }

    /// Display name; DombGeneral(2,1) renders as "domb".
    std::string name() const;
    /// Stable key used by caches and the on-disk store.
    std::string cache_key() const;

    bool operator==(const SequenceFamily& other) const {
        return tag_ == other.tag_ && r_ == other.r_ && s_ == other.s_;
    }
    bool operator<(const SequenceFamily& other) const {
        return cache_key() < other.cache_key();
    }

  private:
    explicit SequenceFamily(FamilyTag tag, int r = 0, int s = 0) : tag_(tag), r_(r), s_(s) {}

    FamilyTag tag_;
    int r_;
    int s_;
};

/// Three-term recurrence shapes with u_{-1} = 0, u_0 = 1:
///   Zagier2 (A, B, lambda): (n+1)^2 u_{n+1} - (A n^2 + A n + lambda) u_n + B n^2 u_{n-1} = 0
///   AZ3     (a, b, c):      (n+1)^3 u_{n+1} - (2n+1)(a n^2 + a n + b) u_n + c n^3 u_{n-1} = 0
struct RecurrenceShape {
    enum class Kind { Zagier2, AZ3 };

    Kind kind;
    std::array<Integer, 3> coeffs; // Zagier2: (A, B, lambda); AZ3: (a, b, c)

    static RecurrenceShape zagier2(Integer A, Integer B, Integer lambda) {
        return {Kind::Zagier2, {std::move(A), std::move(B), std::move(lambda)}};
    }
    static RecurrenceShape az3(Integer a, Integer b, Integer c) {
        return {Kind::AZ3, {std::move(a), std::move(b), std::move(c)}};
    }

    bool operator==(const RecurrenceShape& other) const {
        return kind == other.kind && coeffs == other.coeffs;
    }
};

/// Per-family memo of exact terms. Sparse by index (verifiers touch n, np,
/// np^m rather than dense ranges). Thread safe with the usual memo
/// contract: concurrent callers observe exactly the pure function values.
class TermCache {
  public:
    Integer term(const SequenceFamily& family, std::int64_t n);

    /// Seed terms 0..prefix.size()-1 (used by the on-disk cache).
    void preload(const SequenceFamily& family, const std::vector<Integer>& prefix);

    /// Compute any missing indices up to the highest cached one, then
    /// return the dense list 0..max. Used when persisting.
    std::vector<Integer> materialized_prefix(const SequenceFamily& family);

    std::vector<SequenceFamily> families() const;
    void clear();

  private:
    struct Entry {
        std::optional<SequenceFamily> family;
        std::map<std::int64_t, Integer> values;
    };

    mutable std::mutex mutex_;
    std::map<std::string, Entry> entries_;
};

TermCache& shared_term_cache();

/// Exact n-th term of a family, from its defining binomial sum (memoized).
/// Pre: n >= 0; DombGeneral needs r >= 1, s >= 1.
Integer term(const SequenceFamily& family, std::int64_t n);

/// u_n from a recurrence shape. Throws NonIntegerStep when the leading
/// (n+1)^2 or (n+1)^3 division is not exact, which signals coefficients
/// that do not belong to an integer solution.
Integer term_by_recurrence(const RecurrenceShape& shape, std::int64_t n);

/// Recover integer recurrence coefficients for a family known to satisfy
/// the shape: exact linear solve from terms u_0..u_3, then validation
/// against directly computed terms up to n = 100. Throws NoIntegerFit when
/// the solve is singular, non-integer, or validation fails.
RecurrenceShape fit_recurrence(const SequenceFamily& family, RecurrenceShape::Kind kind);

} // namespace aperylab
