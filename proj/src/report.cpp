#include "sptcrank/report.hpp"

#include <iomanip>

namespace sptcrank::report {

using nlohmann::ordered_json;

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records)
{
    out << "check,m,n,value,expected\n";
    for (const auto& r : records)
        out << csv_field(r.check) << ',' << csv_field(r.m) << ',' << csv_field(r.n) << ',' << csv_field(r.value) << ','
            << csv_field(r.expected) << '\n';
}

std::vector<OutputRecord> report_records(const std::vector<verify::VerificationReport>& reports)
{
    std::vector<OutputRecord> records;
    for (const auto& r : reports) {
        for (const auto& v : r.violations)
            records.push_back({OutputRecord::Kind::Violation, r.check_id, std::to_string(v.m), std::to_string(v.n),
                               v.value, v.expected});
        records.push_back({OutputRecord::Kind::Summary, r.check_id, "", "", std::string(verify::status_name(r.status)),
                           "violations=" + std::to_string(r.violation_count)});
    }
    return records;
}

namespace {

ordered_json tool_block()
{
    return {{"name", tool_name}, {"version", SPTCRANK_VERSION}};
}

ordered_json report_json(const verify::VerificationReport& r, bool with_timing)
{
    ordered_json violations = ordered_json::array();
    for (const auto& v : r.violations)
        violations.push_back(
            {{"m", std::to_string(v.m)}, {"n", std::to_string(v.n)}, {"value", v.value}, {"expected", v.expected}});
    ordered_json skipped = ordered_json::array();
    for (const auto& s : r.skipped)
        skipped.push_back({{"m", std::to_string(s.m)}, {"n", std::to_string(s.n)}, {"reason", s.reason}});

    ordered_json j;
    j["checkId"] = r.check_id;
    j["range"] = {{"mMin", std::to_string(r.range.m_min)},
                  {"mMax", std::to_string(r.range.m_max)},
                  {"nMin", std::to_string(r.range.n_min)},
                  {"nMax", std::to_string(r.range.n_max)},
                  {"description", r.range.description}};
    j["status"] = verify::status_name(r.status);
    j["violationCount"] = std::to_string(r.violation_count);
    j["violations"] = std::move(violations);
    j["skippedCount"] = std::to_string(r.skipped_count);
    j["skipped"] = std::move(skipped);
    j["notes"] = r.notes;
    j["toolVersion"] = r.tool_version;
    if (with_timing)
        j["elapsedMs"] = r.elapsed_ms;
    return j;
}

} // namespace

ordered_json envelope(const ordered_json& config, const char* key, ordered_json payload)
{
    ordered_json doc;
    doc["schemaVersion"] = schema_version;
    doc["tool"] = tool_block();
    doc["config"] = config;
    doc[key] = std::move(payload);
    return doc;
}

ordered_json report_document(const ordered_json& config, const std::vector<verify::VerificationReport>& reports,
                             bool with_timing)
{
    ordered_json list = ordered_json::array();
    for (const auto& r : reports)
        list.push_back(report_json(r, with_timing));
    return envelope(config, "reports", std::move(list));
}

void write_text(std::ostream& out, const std::vector<verify::VerificationReport>& reports, bool verbose)
{
    for (const auto& r : reports) {
        out << std::left << std::setw(5) << verify::status_name(r.status) << ' ' << std::setw(14) << r.check_id << ' '
            << r.range.description << "  violations=" << r.violation_count << " skipped=" << r.skipped_count << "  ("
            << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms)\n";
        out.unsetf(std::ios::floatfield);
        for (const auto& v : r.violations)
            out << "    m=" << v.m << " n=" << v.n << " value=" << v.value << "  expected: " << v.expected << '\n';
        if (r.violation_count > r.violations.size())
            out << "    ... " << r.violation_count - r.violations.size() << " more\n";
        if (verbose) {
            for (const auto& s : r.skipped)
                out << "    skipped m=" << s.m << " n=" << s.n << ": " << s.reason << '\n';
            for (const auto& note : r.notes)
                out << "    note: " << note << '\n';
        }
    }
}

} // namespace sptcrank::report
