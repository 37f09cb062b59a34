#include "aperylab/sequences.hpp"

#include <stdexcept>

#include "aperylab/combinatorics.hpp"

namespace aperylab {

namespace {

// ---- direct sum evaluators -------------------------------------------

Integer sum_apery_a(std::int64_t n) {
    Integer acc = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
        Integer t = binomial(n, k) * binomial(n + k, k);
        acc += t * t;
    }
    return acc;
}

Integer sum_apery_b(std::int64_t n) {
    Integer acc = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
        const Integer b = binomial(n, k);
        acc += b * b * binomial(n + k, k);
    }
    return acc;
}

Integer sum_c_star(std::int64_t n) {
    Integer acc = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
        const Integer b = binomial(n, k);
        acc += b * b * central_binomial(k);
    }
    return acc;
}

Integer sum_domb_general(std::int64_t n, int r, int s) {
    Integer acc = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
        const Integer pair = central_binomial(k) * central_binomial(n - k);
        acc += pow_integer(binomial(n, k), static_cast<unsigned long>(r)) *
               pow_integer(pair, static_cast<unsigned long>(s));
    }
    return acc;
}

// 3^(n-3k) is only a legal factor while 3k <= n; beyond that C(n,3k) = 0
// kills the term anyway, so the loop stops there.
Integer sum_zagier_b(std::int64_t n) {
    Integer acc = 0;
    for (std::int64_t k = 0; 3 * k <= n; ++k) {
        Integer t = pow_integer(3, static_cast<unsigned long>(n - 3 * k)) * binomial(n, 3 * k) *
                    binomial(3 * k, 2 * k) * central_binomial(k);
        acc += (k % 2 == 0) ? t : -t;
    }
    return acc;
}

Integer franel(std::int64_t k) {
    static std::mutex mutex;
    static std::vector<Integer> memo;
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<std::int64_t>(memo.size()) <= k) {
        const auto m = static_cast<std::int64_t>(memo.size());
        Integer acc = 0;
        for (std::int64_t j = 0; j <= m; ++j)
            acc += pow_integer(binomial(m, j), 3);
        memo.push_back(acc);
    }
    return memo[static_cast<std::size_t>(k)];
}

Integer sum_az_f(std::int64_t n) {
    Integer acc = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
        Integer t = pow_integer(8, static_cast<unsigned long>(n - k)) * binomial(n, k) * franel(k);
        acc += (k % 2 == 0) ? t : -t;
    }
    return acc;
}

Integer sum_delta(std::int64_t n) {
    Integer acc = 0;
    for (std::int64_t k = 0; 3 * k <= n; ++k) {
        Integer t = pow_integer(3, static_cast<unsigned long>(n - 3 * k)) * binomial(n, 3 * k) *
                    binomial(n + k, k) * binomial(3 * k, 2 * k) * central_binomial(k);
        acc += (k % 2 == 0) ? t : -t;
    }
    return acc;
}

Integer sum_zeta(std::int64_t n) {
    Integer acc = 0;
    for (std::int64_t k = 0; k <= n; ++k) {
        const Integer bk = binomial(n, k);
        const Integer bk2 = bk * bk;
        // C(k,l) needs l <= k and C(k+l,n) needs k+l >= n
        for (std::int64_t l = (n - k > 0 ? n - k : 0); l <= k; ++l)
            acc += bk2 * binomial(n, l) * binomial(k, l) * binomial(k + l, n);
    }
    return acc;
}

Integer compute_term(const SequenceFamily& family, std::int64_t n) {
    switch (family.tag()) {
    case FamilyTag::AperyA:
        return sum_apery_a(n);
    case FamilyTag::AperyB:
        return sum_apery_b(n);
    case FamilyTag::CStar:
        return sum_c_star(n);
    case FamilyTag::DombGeneral:
        return sum_domb_general(n, family.r(), family.s());
    case FamilyTag::ZagierB:
        return sum_zagier_b(n);
    case FamilyTag::AZF:
        return sum_az_f(n);
    case FamilyTag::Delta:
        return sum_delta(n);
    case FamilyTag::Zeta:
        return sum_zeta(n);
    }
    throw std::logic_error("compute_term: unknown family tag");
}

} // namespace

// ---- SequenceFamily ---------------------------------------------------

SequenceFamily SequenceFamily::domb_general(int r, int s) {
    if (r < 1 || s < 1)
        throw std::invalid_argument("domb_general: need r >= 1 and s >= 1");
    return SequenceFamily(FamilyTag::DombGeneral, r, s);
}

std::optional<SequenceFamily> SequenceFamily::parse(std::string_view name, int r, int s) {
    if (name == "apery-a")
        return apery_a();
    if (name == "apery-b")
        return apery_b();
    if (name == "c-star")
        return c_star();
    if (name == "domb")
        return domb();
    if (name == "d-general") {
        if (r < 1 || s < 1)
            return std::nullopt;
        return domb_general(r, s);
    }
    if (name == "zagier-b")
        return zagier_b();
    if (name == "az-f")
        return az_f();
    if (name == "delta")
        return delta();
    if (name == "zeta")
        return zeta();
    return std::nullopt;
}

std::string SequenceFamily::name() const {
    switch (tag_) {
    case FamilyTag::AperyA:
        return "apery-a";
    case FamilyTag::AperyB:
        return "apery-b";
    case FamilyTag::CStar:
        return "c-star";
    case FamilyTag::DombGeneral:
        return (r_ == 2 && s_ == 1) ? "domb" : "d-general";
    case FamilyTag::ZagierB:
        return "zagier-b";
    case FamilyTag::AZF:
        return "az-f";
    case FamilyTag::Delta:
        return "delta";
    case FamilyTag::Zeta:
        return "zeta";
    }
    return "?";
}

std::string SequenceFamily::cache_key() const {
    if (tag_ == FamilyTag::DombGeneral)
        return "d-general:" + std::to_string(r_) + ":" + std::to_string(s_);
    return name();
}

// ---- TermCache ---------------------------------------------------------

Integer TermCache::term(const SequenceFamily& family, std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("term: n must be >= 0");
    const std::string key = family.cache_key();
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = entries_.find(key);
        if (it != entries_.end()) {
            auto vit = it->second.values.find(n);
            if (vit != it->second.values.end())
                return vit->second;
        }
    }
    Integer value = compute_term(family, n);
    std::lock_guard<std::mutex> lock(mutex_);
    Entry& entry = entries_[key];
    if (!entry.family)
        entry.family = family;
    entry.values.emplace(n, value);
    return value;
}

void TermCache::preload(const SequenceFamily& family, const std::vector<Integer>& prefix) {
    std::lock_guard<std::mutex> lock(mutex_);
    Entry& entry = entries_[family.cache_key()];
    if (!entry.family)
        entry.family = family;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        entry.values.emplace(static_cast<std::int64_t>(i), prefix[i]);
}

std::vector<Integer> TermCache::materialized_prefix(const SequenceFamily& family) {
    std::int64_t max_index = -1;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = entries_.find(family.cache_key());
        if (it != entries_.end() && !it->second.values.empty())
            max_index = it->second.values.rbegin()->first;
    }
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>(max_index + 1));
    for (std::int64_t i = 0; i <= max_index; ++i)
        out.push_back(term(family, i));
    return out;
}

std::vector<SequenceFamily> TermCache::families() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<SequenceFamily> out;
    for (const auto& [key, entry] : entries_)
        if (entry.family)
            out.push_back(*entry.family);
    return out;
}

void TermCache::clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    entries_.clear();
}

TermCache& shared_term_cache() {
    static TermCache cache;
    return cache;
}

Integer term(const SequenceFamily& family, std::int64_t n) {
    return shared_term_cache().term(family, n);
}

// ---- recurrence evaluation and fitting ---------------------------------

Integer term_by_recurrence(const RecurrenceShape& shape, std::int64_t n) {
    if (n < 0)
        throw std::invalid_argument("term_by_recurrence: n must be >= 0");
    Integer prev = 0; // u_{-1}
    Integer cur = 1;  // u_0
    for (std::int64_t i = 0; i < n; ++i) {
        const Integer idx(i);
        Integer numerator;
        Integer leading;
        if (shape.kind == RecurrenceShape::Kind::Zagier2) {
            const Integer& A = shape.coeffs[0];
            const Integer& B = shape.coeffs[1];
            const Integer& lambda = shape.coeffs[2];
            numerator = (A * idx * idx + A * idx + lambda) * cur - B * idx * idx * prev;
            leading = (idx + 1) * (idx + 1);
        } else {
            const Integer& a = shape.coeffs[0];
            const Integer& b = shape.coeffs[1];
            const Integer& c = shape.coeffs[2];
            numerator = (2 * idx + 1) * (a * idx * idx + a * idx + b) * cur -
                        c * idx * idx * idx * prev;
            leading = (idx + 1) * (idx + 1) * (idx + 1);
        }
        if (!mpz_divisible_p(numerator.get_mpz_t(), leading.get_mpz_t()))
            throw NonIntegerStep("recurrence step at n = " + std::to_string(i) +
                                 " does not divide by " + leading.get_str());
        Integer next;
        mpz_divexact(next.get_mpz_t(), numerator.get_mpz_t(), leading.get_mpz_t());
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

// Exact 3x3 linear solve by Gaussian elimination over the rationals.
// Throws NoIntegerFit when singular.
std::array<Rational, 3> solve3(std::array<std::array<Rational, 4>, 3> m) {
    for (int col = 0; col < 3; ++col) {
        int pivot = -1;
        for (int row = col; row < 3; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0)
            throw NoIntegerFit("recurrence fit: singular system");
        std::swap(m[col], m[pivot]);
        const Rational scale = m[col][col];
        for (int j = col; j < 4; ++j)
            m[col][j] /= scale;
        for (int row = 0; row < 3; ++row) {
            if (row == col || m[row][col] == 0)
                continue;
            const Rational factor = m[row][col];
            for (int j = col; j < 4; ++j)
                m[row][j] -= factor * m[col][j];
        }
    }
    return {m[0][3], m[1][3], m[2][3]};
}

Integer require_integer(const Rational& q) {
    if (q.get_den() != 1)
        throw NoIntegerFit("recurrence fit: coefficient " + to_string(q) + " is not an integer");
    return q.get_num();
}

} // namespace

RecurrenceShape fit_recurrence(const SequenceFamily& family, RecurrenceShape::Kind kind) {
    std::array<Integer, 5> u; // u_{-1}..u_3 with u[i] = u_{i-1}
    u[0] = 0;
    for (std::int64_t n = 0; n <= 3; ++n)
        u[static_cast<std::size_t>(n + 1)] = term(family, n);

    // rows n = 0, 1, 2 of the recurrence, solved for the coefficient triple
    std::array<std::array<Rational, 4>, 3> system;
    for (std::int64_t n = 0; n <= 2; ++n) {
        const Rational un(u[static_cast<std::size_t>(n + 1)]);
        const Rational um1(u[static_cast<std::size_t>(n)]);
        const Rational unext(u[static_cast<std::size_t>(n + 2)]);
        auto& row = system[static_cast<std::size_t>(n)];
        if (kind == RecurrenceShape::Kind::Zagier2) {
            // A (n^2+n) u_n - B n^2 u_{n-1} + lambda u_n = (n+1)^2 u_{n+1}
            row[0] = Rational(n * n + n) * un;
            row[1] = Rational(-n * n) * um1;
            row[2] = un;
            row[3] = Rational((n + 1) * (n + 1)) * unext;
        } else {
            // a (2n+1)(n^2+n) u_n + b (2n+1) u_n - c n^3 u_{n-1} = (n+1)^3 u_{n+1}
            row[0] = Rational((2 * n + 1) * (n * n + n)) * un;
            row[1] = Rational(2 * n + 1) * un;
            row[2] = Rational(-n * n * n) * um1;
            row[3] = Rational((n + 1) * (n + 1) * (n + 1)) * unext;
        }
    }

    const auto sol = solve3(system);
    RecurrenceShape shape = kind == RecurrenceShape::Kind::Zagier2
                                ? RecurrenceShape::zagier2(require_integer(sol[0]),
                                                           require_integer(sol[1]),
                                                           require_integer(sol[2]))
                                : RecurrenceShape::az3(require_integer(sol[0]),
                                                       require_integer(sol[1]),
                                                       require_integer(sol[2]));

    for (std::int64_t n = 0; n <= 100; ++n) {
        Integer expected;
        try {
            expected = term_by_recurrence(shape, n);
        } catch (const NonIntegerStep& e) {
            throw NoIntegerFit(std::string("recurrence fit: validation failed: ") + e.what());
        }
        if (expected != term(family, n))
            throw NoIntegerFit("recurrence fit: validation failed at n = " + std::to_string(n));
    }
    return shape;
}

} // namespace aperylab
