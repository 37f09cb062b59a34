#include "render.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace aperylab::cli {

namespace {

using nlohmann::json;

json config_json(const ConfigEcho& config) {
    json out = json::object();
    for (const auto& [key, value] : config)
        out[key] = value;
    return out;
}

Integer param_or_zero(const CongruenceReport& report, const std::string& name) {
    for (const auto& [key, value] : report.params)
        if (key == name)
            return value;
    return 0;
}

std::string params_field(const CongruenceReport& report) {
    std::map<std::string, std::string> sorted;
    for (const auto& [key, value] : report.params)
        sorted[key] = value.get_str();
    std::string out;
    for (const auto& [key, value] : sorted) {
        if (!out.empty())
            out += ';';
        out += key + "=" + value;
    }
    return out;
}

json report_json(const CongruenceReport& report) {
    json params = json::object();
    for (const auto& [key, value] : report.params)
        params[key] = value.get_str();
    json out = json::object();
    out["statement"] = report.statement;
    if (!report.family.empty())
        out["family"] = report.family;
    out["params"] = params;
    out["modulus"] = {{"prime", report.modulus().prime().get_str()},
                      {"exponent", std::to_string(report.modulus().exponent())},
                      {"value", report.modulus().value().get_str()}};
    out["lhs"] = report.lhs.value().get_str();
    out["rhs"] = report.rhs.value().get_str();
    out["holds"] = report.holds;
    return out;
}

json recovery_json(const RecoveryReport& report) {
    json residues = json::array();
    for (const auto& pr : report.residues)
        residues.push_back({{"prime", std::to_string(pr.prime)},
                            {"residue", pr.residue.get_str()}});
    json skipped = json::array();
    for (const auto& sp : report.skipped)
        skipped.push_back({{"prime", std::to_string(sp.prime)}, {"reason", sp.reason}});
    json out = json::object();
    out["family"] = report.family.name();
    out["n"] = std::to_string(report.n);
    out["conjecture"] = std::to_string(report.conjecture);
    out["residues"] = residues;
    out["skipped"] = skipped;
    out["failures"] = report.failures;
    out["recovered"] = report.recovered.get_str();
    if (report.expected.has_value())
        out["expected"] = report.expected->get_str();
    if (report.matches.has_value())
        out["matches"] = *report.matches;
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string wrap_document(const std::string& command, const ConfigEcho& config, json reports) {
    json doc = json::object();
    doc["command"] = command;
    doc["config"] = config_json(config);
    doc["reports"] = std::move(reports);
    return doc.dump(2) + "\n";
}

} // namespace

Format parse_format(const std::string& name) {
    if (name == "text")
        return Format::Text;
    if (name == "json")
        return Format::Json;
    if (name == "csv")
        return Format::Csv;
    throw std::invalid_argument("unknown format: " + name);
}

void sort_reports(std::vector<CongruenceReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CongruenceReport& a, const CongruenceReport& b) {
                         if (a.statement != b.statement)
                             return a.statement < b.statement;
                         if (a.family != b.family)
                             return a.family < b.family;
                         for (const char* key : {"p", "n", "k", "j", "r", "s", "m"}) {
                             const Integer av = param_or_zero(a, key);
                             const Integer bv = param_or_zero(b, key);
                             if (av != bv)
                                 return av < bv;
                         }
                         return false;
                     });
}

std::string render_congruence(const std::string& command, const ConfigEcho& config,
                              std::vector<CongruenceReport> reports, Format format) {
    sort_reports(reports);
    switch (format) {
    case Format::Json: {
        json arr = json::array();
        for (const auto& report : reports)
            arr.push_back(report_json(report));
        return wrap_document(command, config, std::move(arr));
    }
    case Format::Csv: {
        std::ostringstream out;
        out << "statement,family,params,prime,exponent,modulus,lhs,rhs,holds\n";
        for (const auto& r : reports)
            out << r.statement << ',' << r.family << ',' << csv_escape(params_field(r)) << ','
                << r.modulus().prime().get_str() << ',' << r.modulus().exponent() << ','
                << r.modulus().value().get_str() << ',' << r.lhs.value().get_str() << ','
                << r.rhs.value().get_str() << ',' << (r.holds ? "true" : "false") << '\n';
        return out.str();
    }
    case Format::Text: {
        std::ostringstream out;
        std::size_t failing = 0;
        for (const auto& r : reports) {
            out << r.statement;
            if (!r.family.empty())
                out << " family=" << r.family;
            for (const auto& [key, value] : r.params)
                out << ' ' << key << '=' << value.get_str();
            out << " mod=" << r.modulus().prime().get_str() << '^' << r.modulus().exponent()
                << " lhs=" << r.lhs.value().get_str() << " rhs=" << r.rhs.value().get_str()
                << " holds=" << (r.holds ? "yes" : "NO") << '\n';
            if (!r.holds)
                ++failing;
        }
        out << reports.size() << " reports, ";
        if (failing == 0)
            out << "all hold\n";
        else
            out << failing << " FAILING\n";
        return out.str();
    }
    }
    throw std::logic_error("unreachable");
}

std::string render_recovery(const std::string& command, const ConfigEcho& config,
                            const std::vector<RecoveryReport>& reports, Format format) {
    switch (format) {
    case Format::Json: {
        json arr = json::array();
        for (const auto& report : reports)
            arr.push_back(recovery_json(report));
        return wrap_document(command, config, std::move(arr));
    }
    case Format::Csv: {
        std::ostringstream out;
        out << "family,n,conjecture,recovered,expected,matches,residues,skipped,failures\n";
        for (const auto& r : reports) {
            std::string residues;
            for (const auto& pr : r.residues)
                residues += (residues.empty() ? "" : "|") + std::to_string(pr.prime) + ":" +
                            pr.residue.get_str();
            std::string skipped;
            for (const auto& sp : r.skipped)
                skipped += (skipped.empty() ? "" : "|") + std::to_string(sp.prime) + ":" +
                           sp.reason;
            std::string failures;
            for (const auto& f : r.failures)
                failures += (failures.empty() ? "" : "|") + f;
            out << r.family.name() << ',' << r.n << ',' << r.conjecture << ','
                << r.recovered.get_str() << ','
                << (r.expected ? r.expected->get_str() : std::string()) << ','
                << (r.matches ? (*r.matches ? "true" : "false") : "") << ','
                << csv_escape(residues) << ',' << csv_escape(skipped) << ','
                << csv_escape(failures) << '\n';
        }
        return out.str();
    }
    case Format::Text: {
        std::ostringstream out;
        std::size_t bad = 0;
        for (const auto& r : reports) {
            out << r.family.name() << " n=" << r.n << " conjecture=" << r.conjecture
                << " recovered=" << r.recovered.get_str();
            if (r.expected)
                out << " expected=" << r.expected->get_str()
                    << " match=" << (*r.matches ? "yes" : "NO");
            out << " usable=" << r.residues.size() << " skipped=" << r.skipped.size() << '\n';
            out << "  residues:";
            for (const auto& pr : r.residues)
                out << ' ' << pr.prime << ':' << pr.residue.get_str();
            out << '\n';
            for (const auto& sp : r.skipped)
                out << "  skipped " << sp.prime << ": " << sp.reason << '\n';
            for (const auto& f : r.failures)
                out << "  FAILURE: " << f << '\n';
            if (!r.ok())
                ++bad;
        }
        out << reports.size() << " recoveries, ";
        if (bad == 0)
            out << "all consistent\n";
        else
            out << bad << " FAILING\n";
        return out.str();
    }
    }
    throw std::logic_error("unreachable");
}

std::string render_seq(const ConfigEcho& config, const std::vector<SeqRecord>& records,
                       Format format) {
    switch (format) {
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : records) {
            json obj = json::object();
            obj["family"] = r.family;
            obj["n"] = std::to_string(r.n);
            obj["term"] = r.value.get_str();
            arr.push_back(std::move(obj));
        }
        return wrap_document("seq", config, std::move(arr));
    }
    case Format::Csv: {
        std::ostringstream out;
        out << "family,n,term\n";
        for (const auto& r : records)
            out << r.family << ',' << r.n << ',' << r.value.get_str() << '\n';
        return out.str();
    }
    case Format::Text: {
        std::ostringstream out;
        for (const auto& r : records)
            out << r.n << '\t' << r.value.get_str() << '\n';
        return out.str();
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace aperylab::cli
