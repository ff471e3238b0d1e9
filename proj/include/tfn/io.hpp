#ifndef TFN_IO_HPP
#define TFN_IO_HPP

// Line-oriented TFN datasets.
//
// Accepted record lines (UTF-8, one record per line):
//
//   a,b,c
//   id,a,b,c
//   {"id": "x", "a": 1, "b": 2, "c": 3}     (id optional)
//
// Blank lines and lines whose first non-blank character is '#' are skipped.
// The format (CSV or JSON lines) is fixed per input by its first record line.
// Ids, when present, must be unique within one input.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfn/core.hpp"

namespace fuzzy::io {

enum class Format { csv, json };

/// Rejected record value (ordering, finiteness, duplicate id) at a known line.
class RecordError : public ValidationError {
public:
    RecordError(std::size_t line, const std::string& what) : ValidationError(what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct TfnRecord {
    std::optional<std::string> id;
    Tfn value;
    std::size_t line = 0;  // 1-based source line, 0 when not parsed from text
};

struct Dataset {
    Format format = Format::csv;
    std::vector<TfnRecord> records;
};

/// Throws ParseError on malformed lines and RecordError on invalid values,
/// both carrying the 1-based line number.
Dataset parse_input(std::istream& in);
Dataset parse_input(std::string_view text);

std::optional<Format> parse_format(std::string_view name) noexcept;

enum class Precision {
    rounded,  // 12 significant digits, -0 printed as 0
    exact,    // 17 significant digits, round-trips every double
};

std::string format_number(double x, Precision p);

/// "a,b,c"
std::string format_triple(const Tfn& A, Precision p);

/// "[lo,hi]"
std::string format_interval(const Interval& I, Precision p);

/// A record as it would appear in an input file of the given format.
std::string format_record(const TfnRecord& r, Format f, Precision p);

/// JSON string literal with escapes, quotes included.
std::string json_quote(std::string_view s);

}  // namespace fuzzy::io

#endif  // TFN_IO_HPP
