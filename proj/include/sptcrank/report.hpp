#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sptcrank/verifier.hpp"

namespace sptcrank::report {

inline constexpr int schema_version = 1;
inline constexpr const char* tool_name = "sptcheck";

/// One CSV row. Integers are carried as exact decimal strings.
struct OutputRecord {
    enum class Kind { Coefficient, Violation, Summary };

    Kind kind = Kind::Coefficient;
    std::string check;
    std::string m;
    std::string n;
    std::string value;
    std::string expected;
};

/// Header "check,m,n,value,expected" followed by one line per record.
void write_csv(std::ostream& out, const std::vector<OutputRecord>& records);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& s);

/// Violation rows followed by one summary row per report.
std::vector<OutputRecord> report_records(const std::vector<verify::VerificationReport>& reports);

/// The report document: { schemaVersion, tool, config, reports: [...] }.
/// elapsedMs is included only when `with_timing` is set, so that identical
/// inputs give byte-identical documents.
nlohmann::ordered_json report_document(const nlohmann::ordered_json& config,
                                       const std::vector<verify::VerificationReport>& reports, bool with_timing);

/// { schemaVersion, tool, config, <key>: payload }
nlohmann::ordered_json envelope(const nlohmann::ordered_json& config, const char* key, nlohmann::ordered_json payload);

void write_text(std::ostream& out, const std::vector<verify::VerificationReport>& reports, bool verbose);

} // namespace sptcrank::report
