#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace xtp {

// Two operands were built over different indeterminate sets.
struct ContextMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnknownVariable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MissingAssignment : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operation that must stay inside the polynomial ring left it: inexact
// division, narrowing a rational function with a nontrivial denominator,
// reciprocal of a non-unit series.
struct NotPolynomial : std::domain_error {
    using std::domain_error::domain_error;
};

// Located parse failure. what() reads "file:line:col: message" when the file
// is known and "message at line:col" otherwise.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column, std::string file = {})
        : std::runtime_error(file.empty() ? message + " at " + std::to_string(line) + ":" + std::to_string(column)
                                          : file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                                                message),
          message_(message),
          file_(std::move(file)),
          line_(line),
          column_(column) {}

    [[nodiscard]] const std::string& message() const { return message_; }
    [[nodiscard]] const std::string& file() const { return file_; }
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::string message_;
    std::string file_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace xtp
