#pragma once

#include <string>

#include "xtp/polyring/poly.hpp"

namespace xtp {

// Quotient of two polynomials, kept in a light normal form: a constant
// denominator is folded into the numerator, exact polynomial quotients are
// taken, and otherwise the rational content and the common monomial factor
// are removed and the denominator's leading coefficient is made positive.
// Without a multivariate gcd the form is not canonical, so equality is
// decided by cross multiplication.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(Poly num);  // NOLINT(google-explicit-constructor)
    // Throws std::domain_error when den is zero.
    RatFunc(Poly num, Poly den);

    [[nodiscard]] const Poly& num() const { return num_; }
    [[nodiscard]] const Poly& den() const { return den_; }
    [[nodiscard]] ContextPtr context() const;
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const { return den_.is_constant(); }
    // Narrowing: throws NotPolynomial if the denominator is not constant.
    [[nodiscard]] Poly to_poly() const;

    RatFunc operator-() const { return RatFunc(-num_, den_); }
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);  // throws std::domain_error on zero

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc& a, const RatFunc& b);

    [[nodiscard]] RatFunc specialize(const Assignment& values) const;
    [[nodiscard]] std::string str() const;

private:
    void normalize();

    Poly num_{0};
    Poly den_{1};
};

// Ring-homomorphic substitution var := value. The result has denominator 1
// whenever value is a polynomial.
RatFunc substitute(const Poly& p, VarId var, const RatFunc& value);
RatFunc substitute(const Poly& p, std::string_view var, const RatFunc& value);

}  // namespace xtp
