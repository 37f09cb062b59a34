#include "cache_store.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <tuple>

namespace aperylab::cli {

namespace fs = std::filesystem;

namespace {

std::string file_stem(const SequenceFamily& family) {
    std::string key = family.cache_key();
    std::replace(key.begin(), key.end(), ':', '-');
    return key;
}

std::string params_field(const SequenceFamily& family) {
    if (family.tag() != FamilyTag::DombGeneral)
        return "";
    return "r=" + std::to_string(family.r()) + ";s=" + std::to_string(family.s());
}

std::optional<SequenceFamily> family_from_header(const std::string& name,
                                                 const std::string& params) {
    int r = 2;
    int s = 1;
    if (!params.empty()) {
        if (std::sscanf(params.c_str(), "r=%d;s=%d", &r, &s) != 2)
            return std::nullopt;
    }
    return SequenceFamily::parse(name, r, s);
}

struct ParsedHeader {
    std::string family;
    std::string params;
    std::size_t count = 0;
};

std::optional<ParsedHeader> parse_header(const std::string& line) {
    const auto first = line.find(',');
    const auto second = line.rfind(',');
    if (first == std::string::npos || second == first)
        return std::nullopt;
    ParsedHeader header;
    header.family = line.substr(0, first);
    header.params = line.substr(first + 1, second - first - 1);
    const std::string count = line.substr(second + 1);
    if (count.empty() || count.find_first_not_of("0123456789") != std::string::npos)
        return std::nullopt;
    header.count = std::stoull(count);
    return header;
}

std::optional<std::vector<Integer>> read_terms(std::istream& in, std::size_t count) {
    std::vector<Integer> terms;
    terms.reserve(count);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            return std::nullopt;
        Integer value;
        if (mpz_set_str(value.get_mpz_t(), line.c_str(), 10) != 0)
            return std::nullopt;
        terms.push_back(std::move(value));
    }
    if (terms.size() != count)
        return std::nullopt;
    return terms;
}

} // namespace

void load_term_cache(const fs::path& dir) {
    if (!fs::is_directory(dir))
        return;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".terms")
            continue;
        std::ifstream in(entry.path());
        std::string header_line;
        bool ok = static_cast<bool>(std::getline(in, header_line));
        std::optional<SequenceFamily> family;
        std::optional<std::vector<Integer>> terms;
        if (ok) {
            if (const auto header = parse_header(header_line)) {
                family = family_from_header(header->family, header->params);
                if (family)
                    terms = read_terms(in, header->count);
            }
        }
        if (!family || !terms) {
            std::cerr << "warning: discarding corrupt cache file " << entry.path().string()
                      << " (terms will be recomputed)\n";
            continue;
        }
        shared_term_cache().preload(*family, *terms);
    }
}

void save_term_cache(const fs::path& dir) {
    fs::create_directories(dir);
    for (const auto& family : shared_term_cache().families()) {
        const auto terms = shared_term_cache().materialized_prefix(family);
        if (terms.empty())
            continue;
        const fs::path target = dir / (file_stem(family) + ".terms");
        const fs::path tmp = dir / (file_stem(family) + ".terms.tmp");
        {
            std::ofstream out(tmp, std::ios::trunc);
            out << family.name() << ',' << params_field(family) << ',' << terms.size() << '\n';
            for (const auto& t : terms)
                out << t.get_str() << '\n';
        }
        fs::rename(tmp, target); // last writer wins with identical content
    }
}

std::vector<CacheFileInfo> cache_statistics(const fs::path& dir) {
    std::vector<CacheFileInfo> out;
    if (!fs::is_directory(dir))
        return out;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file() || entry.path().extension() != ".terms")
            continue;
        std::ifstream in(entry.path());
        std::string header_line;
        CacheFileInfo info;
        info.bytes = entry.file_size();
        if (std::getline(in, header_line)) {
            if (const auto header = parse_header(header_line)) {
                info.family = header->family;
                info.params = header->params;
                info.count = header->count;
            }
        }
        if (info.family.empty())
            info.family = "(corrupt: " + entry.path().filename().string() + ")";
        out.push_back(std::move(info));
    }
    std::sort(out.begin(), out.end(), [](const CacheFileInfo& a, const CacheFileInfo& b) {
        return std::tie(a.family, a.params) < std::tie(b.family, b.params);
    });
    return out;
}

void clear_term_cache(const fs::path& dir) {
    if (!fs::is_directory(dir))
        return;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".terms")
            fs::remove(entry.path());
}

} // namespace aperylab::cli
