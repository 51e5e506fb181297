#include "report.hpp"

#include "lagrange3/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lagrange3::report {

const char* to_string(Status status)
{
    switch (status) {
    case Status::Ok: return "ok";
    case Status::Undecided: return "undecided";
    case Status::Failed: return "failed";
    }
    return "failed";
}

int exit_code(Status status)
{
    switch (status) {
    case Status::Ok: return 0;
    case Status::Undecided: return 2;
    case Status::Failed: return 1;
    }
    return 1;
}

Status combine(Status a, Status b)
{
    if (a == Status::Failed || b == Status::Failed) {
        return Status::Failed;
    }
    if (a == Status::Undecided || b == Status::Undecided) {
        return Status::Undecided;
    }
    return Status::Ok;
}

Format parse_format(const std::string& name)
{
    if (name == "json") {
        return Format::Json;
    }
    if (name == "csv") {
        return Format::Csv;
    }
    if (name == "text") {
        return Format::Text;
    }
    throw Error(ErrorKind::BadArgument, "unknown format " + name);
}

Json exact_json(const Quad& x)
{
    return Json{{"p", x.p().get_str()}, {"q", x.q().get_str()}, {"r", x.r().get_str()}, {"d", x.d().get_str()}};
}

Quad quad_from_json(const Json& j)
{
    return Quad(Integer(j.at("p").get<std::string>()), Integer(j.at("q").get<std::string>()),
                Integer(j.at("r").get<std::string>()), Integer(j.at("d").get<std::string>()));
}

Json exact_json(const QuadSum& x)
{
    if (x.single_field()) {
        return exact_json(x.collapse());
    }
    return Json{{"terms", Json::array({exact_json(x.first), exact_json(x.second)})}};
}

void put_interval(Json& record, const Interval& enclosure)
{
    record["value_lo"] = to_decimal(enclosure.lo);
    record["value_hi"] = to_decimal(enclosure.hi);
    record["exact_lo"] = exact_json(enclosure.lo);
    record["exact_hi"] = exact_json(enclosure.hi);
}

void put_value(Json& record, const std::string& key, const Quad& x)
{
    record[key] = to_decimal(x);
    record[key + "_exact"] = exact_json(x);
}

Json to_json(const Report& r)
{
    Json out;
    out["command"] = r.command;
    out["input"] = r.input;
    out["results"] = Json::array();
    for (const Json& rec : r.results) {
        out["results"].push_back(rec);
    }
    if (!r.summary.is_null()) {
        out["summary"] = r.summary;
    }
    out["status"] = to_string(r.status);
    if (!r.error.is_null()) {
        out["error"] = r.error;
    }
    out["timing_ms"] = r.timing_ms;
    return out;
}

namespace {

void flatten_into(const Json& value, const std::string& prefix, Json& out)
{
    if (value.is_object()) {
        for (auto it = value.begin(); it != value.end(); ++it) {
            flatten_into(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
        }
    } else if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            flatten_into(value[i], prefix + "." + std::to_string(i), out);
        }
    } else {
        out[prefix] = value;
    }
}

std::string cell(const Json& v)
{
    std::string s;
    if (v.is_null()) {
        return "";
    }
    if (v.is_string()) {
        s = v.get<std::string>();
    } else {
        s = v.dump();
    }
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + "\"";
}

}  // namespace

Json flatten(const Json& record)
{
    Json out = Json::object();
    flatten_into(record, "", out);
    return out;
}

std::string to_csv(const std::vector<Json>& records)
{
    std::vector<Json> flat;
    std::vector<std::string> header;
    for (const Json& rec : records) {
        flat.push_back(flatten(rec));
        for (auto it = flat.back().begin(); it != flat.back().end(); ++it) {
            if (std::find(header.begin(), header.end(), it.key()) == header.end()) {
                header.push_back(it.key());
            }
        }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) {
        os << (i ? "," : "") << cell(Json(header[i]));
    }
    os << '\n';
    for (const Json& rec : flat) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            os << (i ? "," : "");
            if (rec.contains(header[i])) {
                os << cell(rec[header[i]]);
            }
        }
        os << '\n';
    }
    return os.str();
}

std::string to_text(const Report& r)
{
    std::ostringstream os;
    os << r.command << ": " << to_string(r.status) << '\n';
    if (!r.error.is_null()) {
        os << "error: " << r.error.value("kind", "") << ": " << r.error.value("message", "") << '\n';
    }
    auto line = [&](const Json& rec) {
        Json flat = flatten(rec);
        bool first = true;
        for (auto it = flat.begin(); it != flat.end(); ++it) {
            // exact forms are noise in the text view
            if (it.key().find("exact") != std::string::npos) {
                continue;
            }
            os << (first ? "" : "  ") << it.key() << '=' << (it->is_string() ? it->get<std::string>() : it->dump());
            first = false;
        }
        os << '\n';
    };
    for (const Json& rec : r.results) {
        line(rec);
    }
    if (!r.summary.is_null()) {
        os << "summary: ";
        line(r.summary);
    }
    return os.str();
}

std::string render(const Report& r, Format format)
{
    switch (format) {
    case Format::Json: return to_json(r).dump(2) + "\n";
    case Format::Csv: return to_csv(r.results);
    case Format::Text: return to_text(r);
    }
    return "";
}

}  // namespace lagrange3::report
