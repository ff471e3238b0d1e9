#ifndef TFN_ERRORS_HPP
#define TFN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuzzy {

/// Rejected input: a triple violating a <= b <= c, a non-finite component,
/// an invalid weight vector, a duplicate record id.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside an operation's domain (e.g. alpha not in ]0,1]).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An arithmetic result left the finite doubles.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operands of different length, or an empty vector where n >= 1 is required.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace fuzzy

#endif  // TFN_ERRORS_HPP
