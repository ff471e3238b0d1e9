#include "tfn/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <set>
#include <sstream>
#include <system_error>

#include <json.hpp>

namespace fuzzy::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view field, std::size_t line) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (field.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError(line, "not a number: '" + std::string(field) + "'");
    }
    return value;
}

Tfn make_record_value(double a, double b, double c, std::size_t line) {
    try {
        return Tfn(a, b, c);
    } catch (const ValidationError& e) {
        throw RecordError(line, e.what());
    }
}

TfnRecord parse_csv_line(std::string_view text, std::size_t line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        fields.push_back(trim(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }

    TfnRecord r;
    r.line = line;
    std::size_t first_number = 0;
    if (fields.size() == 4) {
        if (fields[0].empty()) throw ParseError(line, "empty id");
        r.id = std::string(fields[0]);
        first_number = 1;
    } else if (fields.size() != 3) {
        throw ParseError(line, "expected 3 or 4 comma-separated fields, got " + std::to_string(fields.size()));
    }
    const double a = parse_number(fields[first_number], line);
    const double b = parse_number(fields[first_number + 1], line);
    const double c = parse_number(fields[first_number + 2], line);
    r.value = make_record_value(a, b, c, line);
    return r;
}

TfnRecord parse_json_line(std::string_view text, std::size_t line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error&) {
        throw ParseError(line, "malformed JSON");
    }
    if (!j.is_object()) throw ParseError(line, "expected a JSON object");

    auto component = [&](const char* key) {
        const auto it = j.find(key);
        if (it == j.end()) throw ParseError(line, std::string("missing field \"") + key + "\"");
        if (!it->is_number()) throw ParseError(line, std::string("field \"") + key + "\" is not a number");
        return it->get<double>();
    };

    TfnRecord r;
    r.line = line;
    if (const auto it = j.find("id"); it != j.end()) {
        if (!it->is_string()) throw ParseError(line, "field \"id\" is not a string");
        r.id = it->get<std::string>();
    }
    const double a = component("a");
    const double b = component("b");
    const double c = component("c");
    r.value = make_record_value(a, b, c, line);
    return r;
}

}  // namespace

Dataset parse_input(std::istream& in) {
    Dataset out;
    std::optional<Format> format;
    std::set<std::string> ids;
    std::string raw;
    std::size_t line = 0;

    while (std::getline(in, raw)) {
        ++line;
        std::string_view text = raw;
        if (line == 1 && text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
        text = trim(text);
        if (text.empty() || text.front() == '#') continue;

        if (!format) format = text.front() == '{' ? Format::json : Format::csv;
        if (*format == Format::json && text.front() != '{') {
            throw ParseError(line, "expected a JSON object (input format is JSON lines)");
        }

        TfnRecord r = *format == Format::json ? parse_json_line(text, line) : parse_csv_line(text, line);
        if (r.id && !ids.insert(*r.id).second) {
            throw RecordError(line, "duplicate id '" + *r.id + "'");
        }
        out.records.push_back(std::move(r));
    }
    out.format = format.value_or(Format::csv);
    return out;
}

Dataset parse_input(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_input(in);
}

std::optional<Format> parse_format(std::string_view name) noexcept {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    return std::nullopt;
}

std::string format_number(double x, Precision p) {
    char buf[32];
    if (p == Precision::rounded) {
        std::snprintf(buf, sizeof buf, "%.12g", x + 0.0);
    } else {
        std::snprintf(buf, sizeof buf, "%.17g", x);
    }
    return buf;
}

std::string format_triple(const Tfn& A, Precision p) {
    return format_number(A.a(), p) + ',' + format_number(A.b(), p) + ',' + format_number(A.c(), p);
}

std::string format_interval(const Interval& I, Precision p) {
    return '[' + format_number(I.lo, p) + ',' + format_number(I.hi, p) + ']';
}

std::string json_quote(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

std::string format_record(const TfnRecord& r, Format f, Precision p) {
    if (f == Format::csv) {
        return r.id ? *r.id + ',' + format_triple(r.value, p) : format_triple(r.value, p);
    }
    std::string s = "{";
    if (r.id) s += "\"id\":" + json_quote(*r.id) + ',';
    s += "\"a\":" + format_number(r.value.a(), p) + ",\"b\":" + format_number(r.value.b(), p) +
         ",\"c\":" + format_number(r.value.c(), p) + '}';
    return s;
}

}  // namespace fuzzy::io
