#pragma once

#include "lagrange3/numeric.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lagrange3::report {

using Json = nlohmann::ordered_json;

enum class Status { Ok, Undecided, Failed };
const char* to_string(Status status);
/// 0 ok, 2 undecided, 1 failed.
int exit_code(Status status);
/// Worst of the two; Failed beats Undecided beats Ok.
Status combine(Status a, Status b);

enum class Format { Json, Csv, Text };
Format parse_format(const std::string& name);

struct Report {
    std::string command;
    Json input = Json::object();
    std::vector<Json> results;
    Json summary;  // null when the command has none
    Status status = Status::Ok;
    double timing_ms = 0;
    Json error;  // null unless the command threw
};

/// {"p","q","r","d"} as decimal strings.
Json exact_json(const Quad& x);
Quad quad_from_json(const Json& j);
/// Exact form of a two-term sum: a single (p,q,r,d) when the radicands
/// agree, otherwise {"terms": [..., ...]}.
Json exact_json(const QuadSum& x);

/// Adds value_lo/value_hi (30 significant digits) and exact_lo/exact_hi.
void put_interval(Json& record, const Interval& enclosure);
void put_value(Json& record, const std::string& key, const Quad& x);

Json to_json(const Report& r);
/// Records flattened with dotted keys; one header row.
std::string to_csv(const std::vector<Json>& records);
std::string to_text(const Report& r);
std::string render(const Report& r, Format format);

/// Flattens nested objects and arrays: {"a":{"b":1}} -> {"a.b":1}.
Json flatten(const Json& record);

}  // namespace lagrange3::report
