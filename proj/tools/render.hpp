#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "aperylab/congruence.hpp"
#include "aperylab/recovery.hpp"

namespace aperylab::cli {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name); // throws std::invalid_argument

struct SeqRecord {
    std::string family;
    std::int64_t n;
    Integer value;
};

// Effective configuration echoed into structured output.
using ConfigEcho = std::vector<std::pair<std::string, nlohmann::json>>;

// Every integer inside a report serializes as a decimal string; 64-bit
// consumers would silently truncate the big values otherwise.
std::string render_congruence(const std::string& command, const ConfigEcho& config,
                              std::vector<CongruenceReport> reports, Format format);
std::string render_recovery(const std::string& command, const ConfigEcho& config,
                            const std::vector<RecoveryReport>& reports, Format format);
std::string render_seq(const ConfigEcho& config, const std::vector<SeqRecord>& records,
                       Format format);

// Orders reports by (statement, family, p, n, k, j, r, s, m) so identical
// configs give byte-identical output regardless of worker scheduling.
void sort_reports(std::vector<CongruenceReport>& reports);

} // namespace aperylab::cli
