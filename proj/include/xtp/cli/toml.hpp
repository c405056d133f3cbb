#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace xtp::cli {

// Subset of TOML used by plan and spec files: comments, bare and quoted
// keys, basic and literal strings, integers, booleans, (multi-line) arrays,
// inline tables, [table] and [[array-of-tables]] headers. Dotted names are
// accepted in headers only. Every value remembers where it started so later
// validation can point at it.
class Value {
public:
    enum class Kind { String, Integer, Boolean, Array, Table };
    using Entry = std::pair<std::string, Value>;

    Value() = default;
    static Value string(std::string s, std::size_t line, std::size_t column);
    static Value integer(std::int64_t v, std::size_t line, std::size_t column);
    static Value boolean(bool v, std::size_t line, std::size_t column);
    static Value array(std::size_t line, std::size_t column);
    static Value table(std::size_t line, std::size_t column);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is(Kind k) const { return kind_ == k; }
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

    // Accessors throw ParseError at the value's position on a type mismatch.
    [[nodiscard]] const std::string& as_string() const;
    [[nodiscard]] std::int64_t as_integer() const;
    [[nodiscard]] bool as_boolean() const;
    [[nodiscard]] const std::vector<Value>& as_array() const;
    [[nodiscard]] const std::vector<Entry>& as_table() const;

    // Table lookup; nullptr when absent.
    [[nodiscard]] const Value* find(std::string_view key) const;
    std::vector<Value>& array_items() { return array_; }
    std::vector<Entry>& table_entries() { return table_; }

    // Column of the first character of string content (after the quote).
    [[nodiscard]] std::size_t content_column() const { return column_ + 1; }

private:
    Kind kind_ = Kind::Table;
    std::string string_;
    std::int64_t integer_ = 0;
    bool boolean_ = false;
    std::vector<Value> array_;
    std::vector<Entry> table_;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

const char* kind_name(Value::Kind k);

// Throws ParseError with line and column.
Value parse_toml(std::string_view text);

}  // namespace xtp::cli
