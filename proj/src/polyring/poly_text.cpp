#include "xtp/polyring/poly_text.hpp"

#include <cctype>
#include <string>

#include "xtp/polyring/errors.hpp"

namespace xtp {

std::string monomial_str(const VarContext& ctx, const Monomial& m) {
    std::string out;
    for (std::size_t v = 0; v < ctx.size(); ++v) {
        const unsigned e = m.e[v];
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += ctx.name(static_cast<VarId>(v));
        if (e > 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out.empty() ? "1" : out;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
        const Rational& c = coeffs_[i];
        const bool negative = c.sign() < 0;
        if (i == 0) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = negative ? -c : c;
        if (degs_[i] == 0) {
            out += mag.str();
            continue;
        }
        if (!mag.is_one()) {
            out += mag.str();
            out += '*';
        }
        out += monomial_str(*ctx_, monos_[i]);
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const ContextPtr& ctx, std::string_view text, std::size_t line, std::size_t column)
        : ctx_(ctx), text_(text), line_(line), column_(column) {}

    Poly run() {
        skip_space();
        if (at_end()) fail("empty polynomial");
        Poly p = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_ + pos_); }

    [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Poly expr() {
        Poly acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Poly term() {
        Poly acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                const std::size_t at = pos_;
                Poly d = unary();
                if (!d.is_constant() || d.is_zero()) {
                    pos_ = at;
                    fail("division only by a nonzero constant");
                }
                acc *= Rational(1) / d.constant_value();
            } else {
                return acc;
            }
        }
    }

    Poly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Poly power() {
        Poly base = atom();
        if (!accept('^')) return base;
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
        if (start == pos_) fail("expected a nonnegative integer exponent");
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 4) {
            pos_ = start;
            fail("exponent too large");
        }
        return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }

    Poly atom() {
        skip_space();
        if (at_end()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
            return Poly(ctx_, Rational::parse(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            const std::size_t start = pos_;
            while (!at_end() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0 || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            const auto v = ctx_ ? ctx_->find(name) : std::nullopt;
            if (!v) {
                pos_ = start;
                fail("unknown indeterminate '" + std::string(name) + "'");
            }
            return Poly::variable(ctx_, *v);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const ContextPtr& ctx_;
    std::string_view text_;
    std::size_t line_;
    std::size_t column_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const ContextPtr& ctx, std::string_view text, std::size_t line, std::size_t column) {
    Poly p = Parser(ctx, text, line, column).run();
    return p.is_zero() ? Poly(ctx) : p.with_context(ctx);
}

}  // namespace xtp
