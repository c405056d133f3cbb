#include "xtp/cli/toml.hpp"

#include <charconv>

#include "xtp/polyring/errors.hpp"

namespace xtp::cli {

Value Value::string(std::string s, std::size_t line, std::size_t column) {
    Value v;
    v.kind_ = Kind::String;
    v.string_ = std::move(s);
    v.line_ = line;
    v.column_ = column;
    return v;
}

Value Value::integer(std::int64_t x, std::size_t line, std::size_t column) {
    Value v;
    v.kind_ = Kind::Integer;
    v.integer_ = x;
    v.line_ = line;
    v.column_ = column;
    return v;
}

Value Value::boolean(bool b, std::size_t line, std::size_t column) {
    Value v;
    v.kind_ = Kind::Boolean;
    v.boolean_ = b;
    v.line_ = line;
    v.column_ = column;
    return v;
}

Value Value::array(std::size_t line, std::size_t column) {
    Value v;
    v.kind_ = Kind::Array;
    v.line_ = line;
    v.column_ = column;
    return v;
}

Value Value::table(std::size_t line, std::size_t column) {
    Value v;
    v.kind_ = Kind::Table;
    v.line_ = line;
    v.column_ = column;
    return v;
}

const char* kind_name(Value::Kind k) {
    switch (k) {
        case Value::Kind::String: return "string";
        case Value::Kind::Integer: return "integer";
        case Value::Kind::Boolean: return "boolean";
        case Value::Kind::Array: return "array";
        case Value::Kind::Table: return "table";
    }
    return "value";
}

namespace {

[[noreturn]] void mismatch(const Value& v, Value::Kind want) {
    throw ParseError(std::string("expected ") + kind_name(want) + ", found " + kind_name(v.kind()), v.line(),
                     v.column());
}

}  // namespace

const std::string& Value::as_string() const {
    if (kind_ != Kind::String) mismatch(*this, Kind::String);
    return string_;
}

std::int64_t Value::as_integer() const {
    if (kind_ != Kind::Integer) mismatch(*this, Kind::Integer);
    return integer_;
}

bool Value::as_boolean() const {
    if (kind_ != Kind::Boolean) mismatch(*this, Kind::Boolean);
    return boolean_;
}

const std::vector<Value>& Value::as_array() const {
    if (kind_ != Kind::Array) mismatch(*this, Kind::Array);
    return array_;
}

const std::vector<Value::Entry>& Value::as_table() const {
    if (kind_ != Kind::Table) mismatch(*this, Kind::Table);
    return table_;
}

const Value* Value::find(std::string_view key) const {
    if (kind_ != Kind::Table) return nullptr;
    for (const auto& [k, v] : table_) {
        if (k == key) return &v;
    }
    return nullptr;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Value run() {
        Value root = Value::table(1, 1);
        Value* current = &root;
        while (true) {
            skip_blank_lines();
            if (eof()) break;
            if (peek() == '[') {
                current = header(root);
            } else {
                key_value(*current);
            }
            end_of_line();
        }
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

    bool eof() const { return pos_ >= s_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0'; }

    char get() {
        const char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_spaces() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) get();
    }

    void skip_comment() {
        if (peek() == '#') {
            while (!eof() && peek() != '\n') get();
        }
    }

    void skip_blank_lines() {
        while (true) {
            skip_spaces();
            skip_comment();
            if (!eof() && (peek() == '\n' || peek() == '\r')) {
                get();
                continue;
            }
            return;
        }
    }

    // Whitespace, comments and newlines inside arrays.
    void skip_array_space() { skip_blank_lines(); }

    void end_of_line() {
        skip_spaces();
        skip_comment();
        if (eof()) return;
        if (peek() == '\r') get();
        if (eof()) return;
        if (peek() != '\n') fail(std::string("unexpected character '") + peek() + "' after value");
        get();
    }

    static bool bare_key_char(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
    }

    std::string key() {
        skip_spaces();
        if (peek() == '"' || peek() == '\'') return quoted();
        std::string k;
        while (!eof() && bare_key_char(peek())) k += get();
        if (k.empty()) fail("expected a key");
        return k;
    }

    // [a.b.c] and [[a.b.c]]; intermediate names are created as tables, and
    // an intermediate array of tables resolves to its last element.
    Value* header(Value& root) {
        const std::size_t line = line_;
        const std::size_t col = col_;
        get();
        const bool array_of_tables = peek() == '[';
        if (array_of_tables) get();
        std::vector<std::string> path{key()};
        skip_spaces();
        while (peek() == '.') {
            get();
            path.push_back(key());
            skip_spaces();
        }
        if (peek() != ']') fail("expected ']'");
        get();
        if (array_of_tables) {
            if (peek() != ']') fail("expected ']]'");
            get();
        }
        Value* parent = &root;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            Value* next = const_cast<Value*>(parent->find(path[i]));
            if (!next) {
                parent->table_entries().emplace_back(path[i], Value::table(line, col));
                next = &parent->table_entries().back().second;
            } else if (next->is(Value::Kind::Array) && !next->array_items().empty() &&
                       next->array_items().back().is(Value::Kind::Table)) {
                next = &next->array_items().back();
            } else if (!next->is(Value::Kind::Table)) {
                throw ParseError("'" + path[i] + "' is not a table", line, col);
            }
            parent = next;
        }
        const std::string& name = path.back();
        Value* slot = const_cast<Value*>(parent->find(name));
        if (array_of_tables) {
            if (!slot) {
                parent->table_entries().emplace_back(name, Value::array(line, col));
                slot = &parent->table_entries().back().second;
            } else if (!slot->is(Value::Kind::Array)) {
                throw ParseError("'" + name + "' is not an array of tables", line, col);
            }
            slot->array_items().push_back(Value::table(line, col));
            return &slot->array_items().back();
        }
        if (slot) throw ParseError("duplicate table '" + name + "'", line, col);
        parent->table_entries().emplace_back(name, Value::table(line, col));
        return &parent->table_entries().back().second;
    }

    void key_value(Value& table) {
        const std::size_t line = line_;
        const std::size_t col = col_;
        const std::string k = key();
        skip_spaces();
        if (peek() == '.') fail("dotted keys are not supported");
        if (peek() != '=') fail("expected '=' after key '" + k + "'");
        get();
        skip_spaces();
        Value v = value();
        if (table.find(k)) throw ParseError("duplicate key '" + k + "'", line, col);
        table.table_entries().emplace_back(k, std::move(v));
    }

    std::string quoted() {
        const char q = get();
        std::string out;
        while (true) {
            if (eof() || peek() == '\n') fail("unterminated string");
            const char c = get();
            if (c == q) break;
            if (c == '\\' && q == '"') {
                if (eof()) fail("unterminated string");
                const char e = get();
                switch (e) {
                    case '"': out += '"'; break;
                    case '\\': out += '\\'; break;
                    case 'n': out += '\n'; break;
                    case 't': out += '\t'; break;
                    default: fail(std::string("unsupported escape '\\") + e + "'");
                }
                continue;
            }
            out += c;
        }
        return out;
    }

    Value value() {
        const std::size_t line = line_;
        const std::size_t col = col_;
        const char c = peek();
        if (c == '"' || c == '\'') return Value::string(quoted(), line, col);
        if (c == '[') return array();
        if (c == '{') return inline_table();
        if (s_.substr(pos_, 4) == "true") {
            for (int i = 0; i < 4; ++i) get();
            return Value::boolean(true, line, col);
        }
        if (s_.substr(pos_, 5) == "false") {
            for (int i = 0; i < 5; ++i) get();
            return Value::boolean(false, line, col);
        }
        if (c == '-' || c == '+' || (c >= '0' && c <= '9')) {
            std::string digits;
            if (c == '+' || c == '-') digits += get();
            while (!eof() && ((peek() >= '0' && peek() <= '9') || peek() == '_')) {
                const char d = get();
                if (d != '_') digits += d;
            }
            if (!eof() && (peek() == '.' || peek() == 'e' || peek() == 'E')) {
                throw ParseError("floating-point values are not supported; use a quoted rational", line, col);
            }
            std::int64_t v = 0;
            const char* first = digits.data() + (digits[0] == '+' ? 1 : 0);
            auto [end, ec] = std::from_chars(first, digits.data() + digits.size(), v);
            if (ec != std::errc() || end != digits.data() + digits.size()) {
                throw ParseError("malformed integer", line, col);
            }
            return Value::integer(v, line, col);
        }
        fail("expected a value");
    }

    Value array() {
        Value arr = Value::array(line_, col_);
        get();
        while (true) {
            skip_array_space();
            if (eof()) fail("unterminated array");
            if (peek() == ']') {
                get();
                return arr;
            }
            arr.array_items().push_back(value());
            skip_array_space();
            if (peek() == ',') {
                get();
                continue;
            }
            if (peek() == ']') {
                get();
                return arr;
            }
            fail("expected ',' or ']' in array");
        }
    }

    Value inline_table() {
        Value t = Value::table(line_, col_);
        get();
        skip_spaces();
        if (peek() == '}') {
            get();
            return t;
        }
        while (true) {
            key_value(t);
            skip_spaces();
            if (peek() == ',') {
                get();
                continue;
            }
            if (peek() == '}') {
                get();
                return t;
            }
            fail("expected ',' or '}' in inline table");
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace

Value parse_toml(std::string_view text) { return Parser(text).run(); }

}  // namespace xtp::cli
