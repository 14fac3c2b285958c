#pragma once

/**
 * ReportDocument: the output of every CLI command.
 *
 * Two serializations exist. The text form is for people: indented
 * "key: value" lines, rationals printed exactly as p/q with an optional
 * "~"-prefixed approximation. The JSON form is for scripts and round-trips
 * losslessly: arbitrary-precision integers are decimal strings and every rational is a
 * {"num", "den"} pair of such strings.
 */

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "plurichern/catalog.hpp"
#include "plurichern/criteria.hpp"
#include "plurichern/surface.hpp"

namespace plurichern {

inline constexpr const char* kSchemaVersion = "1";

struct ChiResult {
    int n = 1;
    SurfaceInvariants surface;
    Rational chi;

    friend bool operator==(const ChiResult&, const ChiResult&) = default;
};

using ReportItem = std::variant<ChiResult, CriterionReport, ThresholdResult, FamilySurface>;

struct ReportDocument {
    std::string schema_version = kSchemaVersion;
    std::string command;
    std::vector<std::pair<std::string, std::string>> input_echo;
    std::vector<ReportItem> results;
    std::vector<std::string> warnings;

    friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

nlohmann::json to_json(const ReportDocument& doc);
/// Throws InvalidArgument on schema mismatch or malformed content.
ReportDocument report_from_json(const nlohmann::json& j);

std::string to_text(const ReportDocument& doc);

}  // namespace plurichern
