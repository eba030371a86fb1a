#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "bootperc/montecarlo.hpp"
#include "bootperc/verify.hpp"

namespace bootperc::io {

using Json = nlohmann::ordered_json;

// Serialized envelope for every CLI result line. Key order in the JSON form
// is fixed: schema_version, command, params, results, elapsed_seconds,
// tool_version. elapsed_seconds is the one volatile field; byte-identity
// guarantees exclude it.
struct ResultRecord {
    int schema_version = 1;
    std::string command;
    Json params = Json::object();
    Json results = Json::object();
    double elapsed_seconds = 0;
    std::string tool_version;

    bool operator==(const ResultRecord& other) const = default;
};

ResultRecord make_record(std::string command, Json params, Json results,
                         double elapsed_seconds = 0);

Json record_to_json(const ResultRecord& record);
ResultRecord record_from_json(const Json& j);

enum class RecordFormat { Jsonl, Csv };

// JSON Lines, UTF-8, LF endings, one record per line. Floats use the shortest
// round-trip decimal form.
std::string write_jsonl(const std::vector<ResultRecord>& records);
std::vector<ResultRecord> parse_jsonl(const std::string& text);

// Flattened CSV with a header row (params.* / results.* columns, RFC 4180
// quoting). Nested values inside a cell are serialized as JSON text; the
// export is a lossy convenience next to JSONL. Records must share identical
// flattened keys, else ValidationError.
std::string write_csv(const std::vector<ResultRecord>& records);

std::string write_records(const std::vector<ResultRecord>& records, RecordFormat format);

// Conversions for the core result types.
Json estimate_params_json(const mc::TrialPlan& plan);
ResultRecord record_from_estimate(const std::string& command, const mc::EstimateRecord& estimate);
ResultRecord record_from_verification(const mc::VerificationReport& report);

}  // namespace bootperc::io
