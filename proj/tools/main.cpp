#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "aperylab/congruence.hpp"
#include "aperylab/recovery.hpp"
#include "aperylab/residue.hpp"
#include "cache_store.hpp"
#include "render.hpp"

namespace {

using namespace aperylab;
using namespace aperylab::cli;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::string spec() const { return std::to_string(lo) + ".." + std::to_string(hi); }
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const std::int64_t v = std::stoll(text);
            return {v, v};
        }
        Range r{std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
        if (r.lo > r.hi)
            throw std::invalid_argument("empty range " + text);
        return r;
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("range endpoint out of range in '" + text + "'");
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad range '" + text + "' (expected A..B or N)");
    }
}

std::vector<std::int64_t> primes_in(const Range& r) {
    if (r.lo < 5)
        throw std::invalid_argument("prime range endpoints must be >= 5, got " + r.spec());
    std::vector<std::int64_t> out;
    for (std::int64_t p = r.lo; p <= r.hi; ++p)
        if (is_prime(Integer(p)))
            out.push_back(p);
    if (out.empty())
        throw std::invalid_argument("prime range " + r.spec() + " contains no primes >= 5");
    return out;
}

// Fan a list of independent closures across jobs workers; results land in
// index order, so the output is independent of scheduling.
template <typename R>
std::vector<R> run_grid(const std::vector<std::function<R()>>& tasks, int jobs) {
    std::vector<std::optional<R>> slots(tasks.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            slots[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        std::vector<std::thread> workers;
        const int count = std::min<int>(jobs, static_cast<int>(tasks.size()));
        for (int t = 0; t < count; ++t)
            workers.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size())
                        return;
                    try {
                        slots[i] = tasks[i]();
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!first_error)
                            first_error = std::current_exception();
                        return;
                    }
                }
            });
        for (auto& w : workers)
            w.join();
        if (first_error)
            std::rethrow_exception(first_error);
    }
    std::vector<R> out;
    out.reserve(tasks.size());
    for (auto& slot : slots)
        out.push_back(std::move(*slot));
    return out;
}

struct CommonOptions {
    std::string format = "text";
    std::string cache_dir;
    std::int64_t index_cap = 2000;
    int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--format", opts.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--cache-dir", opts.cache_dir, "directory for the on-disk term cache");
    cmd->add_option("--index-cap", opts.index_cap,
                    "largest sequence index the run may request (default 2000)");
    cmd->add_option("--jobs", opts.jobs, "worker threads for grid evaluation (default 1)")
        ->check(CLI::PositiveNumber);
}

void check_index_cap(std::int64_t wanted, std::int64_t cap) {
    if (wanted > cap)
        throw IndexCapExceeded("run needs sequence index " + std::to_string(wanted) +
                               ", above the cap " + std::to_string(cap) +
                               " (raise --index-cap)");
}

ConfigEcho common_echo(const CommonOptions& opts) {
    ConfigEcho echo;
    echo.emplace_back("format", opts.format);
    echo.emplace_back("index_cap", opts.index_cap);
    echo.emplace_back("jobs", opts.jobs);
    if (!opts.cache_dir.empty())
        echo.emplace_back("cache_dir", opts.cache_dir);
    return echo;
}

void start_cache(const CommonOptions& opts) {
    if (!opts.cache_dir.empty())
        load_term_cache(opts.cache_dir);
}

void finish_cache(const CommonOptions& opts) {
    if (!opts.cache_dir.empty())
        save_term_cache(opts.cache_dir);
}

// ---- seq ---------------------------------------------------------------

struct SeqOptions {
    CommonOptions common;
    std::string family;
    int r = 2;
    int s = 1;
    std::string n_range = "0..10";
};

int run_seq(const SeqOptions& opts) {
    const auto family = SequenceFamily::parse(opts.family, opts.r, opts.s);
    if (!family)
        throw std::invalid_argument("unknown family '" + opts.family + "'");
    const Range n = parse_range(opts.n_range);
    if (n.lo < 0)
        throw std::invalid_argument("term indices must be >= 0");
    check_index_cap(n.hi, opts.common.index_cap);

    start_cache(opts.common);
    std::vector<SeqRecord> records;
    for (std::int64_t i = n.lo; i <= n.hi; ++i)
        records.push_back({family->name(), i, term(*family, i)});
    finish_cache(opts.common);

    ConfigEcho echo = common_echo(opts.common);
    echo.emplace_back("family", family->name());
    if (family->tag() == FamilyTag::DombGeneral) {
        echo.emplace_back("r", family->r());
        echo.emplace_back("s", family->s());
    }
    echo.emplace_back("n", n.spec());
    std::cout << render_seq(echo, records, parse_format(opts.common.format));
    return kExitOk;
}

// ---- verify ------------------------------------------------------------

struct VerifyOptions {
    CommonOptions common;
    std::string statement;
    std::string primes_range;
    std::string n_range;
    std::string k_range;
    std::string m_range;
    std::string family;
    std::vector<std::string> rs_pairs;
    int r = 0;
    int s = 0;
};

std::vector<std::pair<int, int>> resolve_rs(const VerifyOptions& opts) {
    std::vector<std::pair<int, int>> out;
    if (opts.r != 0 || opts.s != 0) {
        if (opts.r == 0 || opts.s == 0)
            throw std::invalid_argument("--r and --s must be given together");
        out.emplace_back(opts.r, opts.s);
    }
    for (const auto& pair : opts.rs_pairs) {
        int r = 0;
        int s = 0;
        if (std::sscanf(pair.c_str(), "%d,%d", &r, &s) != 2)
            throw std::invalid_argument("bad --rs '" + pair + "' (expected r,s)");
        out.emplace_back(r, s);
    }
    if (out.empty())
        out = {{2, 1}, {2, 2}, {3, 1}, {4, 1}};
    return out;
}

std::vector<SequenceFamily> family_filter(const std::string& requested,
                                          std::vector<SequenceFamily> fallback) {
    if (requested.empty())
        return fallback;
    const auto family = SequenceFamily::parse(requested);
    if (!family)
        throw std::invalid_argument("unknown family '" + requested + "'");
    return {*family};
}

int run_verify(const VerifyOptions& opts) {
    const std::string& st = opts.statement;
    const auto format = parse_format(opts.common.format);
    auto range_or = [&](const std::string& text, Range fallback) {
        return text.empty() ? fallback : parse_range(text);
    };

    std::vector<std::function<std::vector<CongruenceReport>()>> tasks;
    ConfigEcho echo = common_echo(opts.common);
    echo.emplace_back("statement", st);
    const std::int64_t cap = opts.common.index_cap;

    if (st == "theorem1") {
        const Range prange = range_or(opts.primes_range, {5, 47});
        const auto primes = primes_in(prange);
        const Range n = range_or(opts.n_range, {1, 3});
        const auto rs = resolve_rs(opts);
        for (const auto& [r, s] : rs)
            if (r < 2 || s < 1)
                throw std::invalid_argument("theorem1 needs r >= 2 and s >= 1, got (" +
                                            std::to_string(r) + "," + std::to_string(s) + ")");
        check_index_cap(n.hi * primes.back(), cap);
        std::string rs_echo;
        for (const auto& [r, s] : rs)
            rs_echo += (rs_echo.empty() ? "" : ";") + std::to_string(r) + "," + std::to_string(s);
        echo.emplace_back("primes", prange.spec());
        echo.emplace_back("n", n.spec());
        echo.emplace_back("rs", rs_echo);
        for (std::int64_t p : primes)
            for (std::int64_t i = n.lo; i <= n.hi; ++i)
                for (const auto& [r, s] : rs)
                    tasks.emplace_back([p, i, r = r, s = s] {
                        return std::vector{verify_theorem1(p, i, r, s)};
                    });
    } else if (st == "theorem2") {
        const Range prange = range_or(opts.primes_range, {5, 97});
        const auto primes = primes_in(prange);
        const Range n = range_or(opts.n_range, {1, 5});
        check_index_cap(n.hi * primes.back(), cap);
        echo.emplace_back("primes", prange.spec());
        echo.emplace_back("n", n.spec());
        for (std::int64_t p : primes)
            for (std::int64_t i = n.lo; i <= n.hi; ++i)
                tasks.emplace_back([p, i] { return std::vector{verify_theorem2(p, i)}; });
    } else if (st == "wolstenholme") {
        const Range prange = range_or(opts.primes_range, {5, 31});
        const auto primes = primes_in(prange);
        const Range n = range_or(opts.n_range, {0, 6});
        check_index_cap(n.hi * primes.back(), cap);
        echo.emplace_back("primes", prange.spec());
        echo.emplace_back("n", n.spec());
        for (std::int64_t p : primes)
            for (std::int64_t i = n.lo; i <= n.hi; ++i) {
                const Range k = range_or(opts.k_range, {0, i});
                for (std::int64_t kk = k.lo; kk <= std::min(k.hi, i); ++kk)
                    tasks.emplace_back([p, i, kk] {
                        return std::vector{verify_wolstenholme_binomial(p, i, kk)};
                    });
            }
    } else if (st == "harmonic") {
        const Range prange = range_or(opts.primes_range, {5, 199});
        const auto primes = primes_in(prange);
        echo.emplace_back("primes", prange.spec());
        for (std::int64_t p : primes)
            tasks.emplace_back([p] { return verify_harmonic(p); });
    } else if (st == "cc8") {
        const Range prange = range_or(opts.primes_range, {5, 13});
        const auto primes = primes_in(prange);
        const Range n = range_or(opts.n_range, {1, 3});
        echo.emplace_back("primes", prange.spec());
        echo.emplace_back("n", n.spec());
        for (std::int64_t p : primes)
            for (std::int64_t i = n.lo; i <= n.hi; ++i) {
                const Range k = range_or(opts.k_range, {0, i - 1});
                for (std::int64_t kk = k.lo; kk <= std::min(k.hi, i - 1); ++kk)
                    tasks.emplace_back([p, i, kk] {
                        std::vector<CongruenceReport> reports;
                        for (std::int64_t j = 1; j < p; ++j)
                            reports.push_back(verify_lemma_cc8(p, i, kk, j));
                        return reports;
                    });
            }
    } else if (st == "cc9") {
        const Range prange = range_or(opts.primes_range, {5, 13});
        const auto primes = primes_in(prange);
        const Range k = range_or(opts.k_range, {0, 3});
        echo.emplace_back("primes", prange.spec());
        echo.emplace_back("k", k.spec());
        for (std::int64_t p : primes)
            for (std::int64_t kk = k.lo; kk <= k.hi; ++kk)
                tasks.emplace_back([p, kk] {
                    std::vector<CongruenceReport> reports;
                    for (std::int64_t j = 1; j < p; ++j)
                        reports.push_back(verify_cc9(p, kk, j));
                    return reports;
                });
    } else if (st == "cc13") {
        const Range prange = range_or(opts.primes_range, {5, 31});
        const auto primes = primes_in(prange);
        echo.emplace_back("primes", prange.spec());
        for (std::int64_t p : primes)
            tasks.emplace_back([p] {
                std::vector<CongruenceReport> reports;
                for (std::int64_t j = 1; j < p; ++j)
                    reports.push_back(verify_cc13_cc14(p, j));
                return reports;
            });
    } else if (st == "lifting") {
        const Range prange = range_or(opts.primes_range, {5, 7});
        const auto primes = primes_in(prange);
        const Range n = range_or(opts.n_range, {1, 3});
        const Range m = range_or(opts.m_range, {1, 1});
        if (m.lo < 1)
            throw std::invalid_argument("lifting needs m >= 1");
        const auto families = family_filter(
            opts.family, {SequenceFamily::domb(), SequenceFamily::c_star()});
        echo.emplace_back("primes", prange.spec());
        echo.emplace_back("n", n.spec());
        echo.emplace_back("m", m.spec());
        if (!opts.family.empty())
            echo.emplace_back("family", opts.family);
        for (std::int64_t p : primes)
            for (int mm = static_cast<int>(m.lo); mm <= static_cast<int>(m.hi); ++mm)
                for (std::int64_t i = n.lo; i <= n.hi; ++i)
                    for (const auto& fam : families)
                        tasks.emplace_back([p, mm, i, fam, cap] {
                            return std::vector{verify_lifting(p, mm, i, fam, cap)};
                        });
    } else if (st == "conjecture") {
        const Range prange = range_or(opts.primes_range, {5, 23});
        const auto primes = primes_in(prange);
        const Range n = range_or(opts.n_range, {1, 8});
        check_index_cap(n.hi * primes.back(), cap);
        const auto families = family_filter(
            opts.family, {SequenceFamily::zagier_b(), SequenceFamily::az_f(),
                          SequenceFamily::delta(), SequenceFamily::zeta()});
        echo.emplace_back("primes", prange.spec());
        echo.emplace_back("n", n.spec());
        if (!opts.family.empty())
            echo.emplace_back("family", opts.family);
        for (std::int64_t p : primes)
            for (std::int64_t i = n.lo; i <= n.hi; ++i)
                for (const auto& fam : families)
                    tasks.emplace_back(
                        [p, i, fam] { return std::vector{verify_conjecture(fam, i, p)}; });
    } else {
        throw std::invalid_argument("unknown statement '" + st + "'");
    }

    start_cache(opts.common);
    const auto chunks = run_grid(tasks, opts.common.jobs);
    finish_cache(opts.common);

    std::vector<CongruenceReport> reports;
    for (const auto& chunk : chunks)
        reports.insert(reports.end(), chunk.begin(), chunk.end());
    const bool all_hold =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
    std::cout << render_congruence("verify", echo, std::move(reports), format);
    return all_hold ? kExitOk : kExitMathFailure;
}

// ---- recover -----------------------------------------------------------

struct RecoverOptions {
    CommonOptions common;
    std::string family;
    std::string n_range = "1..8";
    std::string primes_range = "5..60";
    std::string magnitude_bound;
    std::string table_file;
};

std::optional<Integer> fixture_value(const std::string& path, const std::string& family,
                                     std::int64_t n) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open table fixture '" + path + "'");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("bad fixture line '" + line + "'");
        if (line.substr(0, c1) != family)
            continue;
        if (std::stoll(line.substr(c1 + 1, c2 - c1 - 1)) != n)
            continue;
        Integer value;
        if (mpz_set_str(value.get_mpz_t(), line.substr(c2 + 1).c_str(), 10) != 0)
            throw std::invalid_argument("bad fixture value in '" + line + "'");
        return value;
    }
    return std::nullopt;
}

int run_recover(const RecoverOptions& opts) {
    const auto family = SequenceFamily::parse(opts.family);
    if (!family)
        throw std::invalid_argument("unknown family '" + opts.family + "'");
    conjecture_id(*family); // rejects the proven families early
    const Range n = parse_range(opts.n_range);
    if (n.lo < 1)
        throw std::invalid_argument("recover needs n >= 1");
    const Range prange = parse_range(opts.primes_range);
    const auto primes = primes_in(prange);
    check_index_cap(n.hi * primes.back(), opts.common.index_cap);
    Integer bound;
    if (opts.magnitude_bound.empty()) {
        bound = default_magnitude_bound();
    } else if (mpz_set_str(bound.get_mpz_t(), opts.magnitude_bound.c_str(), 10) != 0) {
        throw std::invalid_argument("bad --magnitude-bound '" + opts.magnitude_bound + "'");
    }

    ConfigEcho echo = common_echo(opts.common);
    echo.emplace_back("family", family->name());
    echo.emplace_back("n", n.spec());
    echo.emplace_back("primes", prange.spec());
    echo.emplace_back("magnitude_bound", bound.get_str());
    if (!opts.table_file.empty())
        echo.emplace_back("table", opts.table_file);

    std::vector<std::function<RecoveryReport()>> tasks;
    for (std::int64_t i = n.lo; i <= n.hi; ++i) {
        std::optional<Integer> expected;
        if (!opts.table_file.empty())
            expected = fixture_value(opts.table_file, family->name(), i);
        tasks.emplace_back([family = *family, i, primes, bound, expected] {
            return recover_constant(family, i, primes, bound, expected);
        });
    }

    start_cache(opts.common);
    const auto reports = run_grid(tasks, opts.common.jobs);
    finish_cache(opts.common);

    const bool all_ok =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.ok(); });
    std::cout << render_recovery("recover", echo, reports, parse_format(opts.common.format));
    return all_ok ? kExitOk : kExitMathFailure;
}

// ---- cache -------------------------------------------------------------

struct CacheOptions {
    std::string dir;
    std::string format = "text";
    bool clear = false;
};

int run_cache(const CacheOptions& opts) {
    if (opts.clear) {
        clear_term_cache(opts.dir);
        std::cout << "cache cleared\n";
        return kExitOk;
    }
    const auto stats = cache_statistics(opts.dir);
    if (opts.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : stats)
            arr.push_back({{"family", s.family},
                           {"params", s.params},
                           {"count", s.count},
                           {"bytes", s.bytes}});
        nlohmann::json doc{{"command", "cache"}, {"dir", opts.dir}, {"files", arr}};
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& s : stats)
            std::cout << s.family << (s.params.empty() ? "" : " (" + s.params + ")") << ": "
                      << s.count << " terms, " << s.bytes << " bytes\n";
        std::cout << stats.size() << " cache files\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Apery-like sequences, Bernoulli numbers, and their"
                 " prime-power supercongruences"};
    app.require_subcommand(1);

    SeqOptions seq_opts;
    auto* seq_cmd = app.add_subcommand("seq", "print exact terms of a sequence family");
    seq_cmd->add_option("--family", seq_opts.family,
                        "apery-a, apery-b, c-star, domb, d-general, zagier-b, az-f, delta, zeta")
        ->required();
    seq_cmd->add_option("--r", seq_opts.r, "r parameter for d-general (default 2)");
    seq_cmd->add_option("--s", seq_opts.s, "s parameter for d-general (default 1)");
    seq_cmd->add_option("--n", seq_opts.n_range, "index range A..B (default 0..10)");
    add_common(seq_cmd, seq_opts.common);

    VerifyOptions verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "verify a congruence statement on a grid");
    verify_cmd->add_option("--statement", verify_opts.statement,
                           "theorem1, theorem2, wolstenholme, harmonic, cc8, cc9, cc13, "
                           "lifting or conjecture")
        ->required();
    verify_cmd->add_option("--primes", verify_opts.primes_range, "prime range (inclusive)");
    verify_cmd->add_option("--n", verify_opts.n_range, "n range");
    verify_cmd->add_option("--k", verify_opts.k_range, "k range (wolstenholme, cc8, cc9)");
    verify_cmd->add_option("--m", verify_opts.m_range, "lifting power range");
    verify_cmd->add_option("--family", verify_opts.family, "family filter (lifting, conjecture)");
    verify_cmd->add_option("--rs", verify_opts.rs_pairs, "theorem1 (r,s) pair as r,s; repeatable");
    verify_cmd->add_option("--r", verify_opts.r, "theorem1 single r");
    verify_cmd->add_option("--s", verify_opts.s, "theorem1 single s");
    add_common(verify_cmd, verify_opts.common);

    RecoverOptions recover_opts;
    auto* recover_cmd =
        app.add_subcommand("recover", "reconstruct conjectured constants from prime residues");
    recover_cmd->add_option("--family", recover_opts.family, "zagier-b, az-f, delta or zeta")
        ->required();
    recover_cmd->add_option("--n", recover_opts.n_range, "constant indices (default 1..8)");
    recover_cmd->add_option("--primes", recover_opts.primes_range, "prime range (default 5..60)");
    recover_cmd->add_option("--magnitude-bound", recover_opts.magnitude_bound,
                            "largest magnitude the prime set must certify");
    recover_cmd->add_option("--table", recover_opts.table_file,
                            "expected-value fixture (family,n,value lines)");
    add_common(recover_cmd, recover_opts.common);

    CacheOptions cache_opts;
    auto* cache_cmd = app.add_subcommand("cache", "inspect or clear the on-disk term cache");
    cache_cmd->add_option("--dir", cache_opts.dir, "cache directory")->required();
    cache_cmd->add_option("--format", cache_opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cache_cmd->add_flag("--clear", cache_opts.clear, "remove all cached term lists");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*seq_cmd)
            return run_seq(seq_opts);
        if (*verify_cmd)
            return run_verify(verify_opts);
        if (*recover_cmd)
            return run_recover(recover_opts);
        if (*cache_cmd)
            return run_cache(cache_opts);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
