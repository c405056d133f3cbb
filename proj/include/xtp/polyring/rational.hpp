#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace xtp {

// Exact rational number. Values that are integers in the int64 range are kept
// inline; everything else lives in a GMP rational. Triangle entries are almost
// always small integers, so the inline path carries most of the arithmetic.
class Rational {
public:
    Rational() = default;
    Rational(int v) : small_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long v) : small_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long long v) : small_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den);
    explicit Rational(const mpq_class& q);
    explicit Rational(const mpz_class& z);

    Rational(const Rational& o) : small_(o.small_), big_(o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr) {}
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    // Accepts "-12", "3/4", "+5". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return !big_ && small_ == 0; }
    [[nodiscard]] bool is_one() const { return !big_ && small_ == 1; }
    [[nodiscard]] int sign() const;
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] bool is_small() const { return !big_; }
    [[nodiscard]] std::int64_t small_value() const { return small_; }

    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] std::string str() const;
    [[nodiscard]] std::size_t hash() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);  // throws std::domain_error on zero

    // *this += a * b without a temporary on the fast path.
    void add_product(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void assign(mpq_class&& q);  // demotes to inline storage when possible

    // Invariant: big_ is null iff the value is an integer in [-(2^63-1), 2^63-1].
    std::int64_t small_ = 0;
    std::unique_ptr<mpq_class> big_;
};

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace xtp
