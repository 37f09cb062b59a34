#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "aperylab/sequences.hpp"

namespace aperylab::cli {

struct CacheFileInfo {
    std::string family;
    std::string params;
    std::size_t count = 0;
    std::uintmax_t bytes = 0;
};

// On-disk term lists, one file per family:
//   <key>.terms with a "family,params,count" header followed by count
//   decimal integers, one per line.
// Corrupt files are discarded with a warning and the terms recomputed.
void load_term_cache(const std::filesystem::path& dir);

// Materializes each family's dense prefix (filling any sparse gaps up to
// the highest computed index) and writes it out. Writes go through a temp
// file and a rename.
void save_term_cache(const std::filesystem::path& dir);

std::vector<CacheFileInfo> cache_statistics(const std::filesystem::path& dir);
void clear_term_cache(const std::filesystem::path& dir);

} // namespace aperylab::cli
