#include "xtp/polyring/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

#include "xtp/polyring/errors.hpp"

namespace xtp {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(num_.context(), Rational(1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    unify_context(num_.context(), den_.context());
    normalize();
}

ContextPtr RatFunc::context() const { return unify_context(num_.context(), den_.context()); }

void RatFunc::normalize() {
    const ContextPtr ctx = context();
    if (num_.is_zero()) {
        num_ = Poly(ctx);
        den_ = Poly(ctx, Rational(1));
        return;
    }
    if (den_.is_constant()) {
        num_ *= Rational(1) / den_.constant_value();
        den_ = Poly(ctx, Rational(1));
        return;
    }
    if (auto q = num_.try_divide(den_)) {
        num_ = std::move(*q);
        den_ = Poly(ctx, Rational(1));
        return;
    }
    // Strip the shared monomial factor.
    Monomial g = num_.monomial_gcd();
    const Monomial gd = den_.monomial_gcd();
    bool nontrivial = false;
    for (std::size_t v = 0; v < simd::kMaxVars; ++v) {
        g.e[v] = std::min(g.e[v], gd.e[v]);
        nontrivial = nontrivial || g.e[v] != 0;
    }
    if (nontrivial) {
        num_ = num_.divide_monomial(g);
        den_ = den_.divide_monomial(g);
    }
    // Make the denominator primitive with a positive leading coefficient.
    Rational scale = den_.content();
    if (den_.leading_coeff().sign() < 0) scale = -scale;
    const Rational inv = Rational(1) / scale;
    num_ *= inv;
    den_ *= inv;
}

Poly RatFunc::to_poly() const {
    if (!is_polynomial()) throw NotPolynomial("rational function " + str() + " is not a polynomial");
    return num_ * (Rational(1) / den_.constant_value());
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        *this = RatFunc(num_ + o.num_, den_);
    } else {
        *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    // Cancel across before multiplying when one side divides the other.
    Poly a = num_;
    Poly b = den_;
    Poly c = o.num_;
    Poly d = o.den_;
    if (!d.is_constant()) {
        if (auto q = a.try_divide(d)) {
            a = std::move(*q);
            d = Poly(d.context(), Rational(1));
        }
    }
    if (!b.is_constant()) {
        if (auto q = c.try_divide(b)) {
            c = std::move(*q);
            b = Poly(b.context(), Rational(1));
        }
    }
    *this = RatFunc(a * c, b * d);
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return *this *= RatFunc(o.den_, o.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFunc RatFunc::specialize(const Assignment& values) const {
    return RatFunc(num_.specialize(values), den_.specialize(values));
}

std::string RatFunc::str() const {
    if (is_polynomial()) return to_poly().str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc substitute(const Poly& p, VarId var, const RatFunc& value) {
    const ContextPtr ctx = unify_context(p.context(), value.context());
    if (!ctx || var >= ctx->size()) throw UnknownVariable("substitute: variable index out of range");
    if (value.is_polynomial()) return RatFunc(p.substitute(var, value.to_poly()));
    // sum_j c_j n^j d^(top-j) / d^top
    const unsigned top = p.degree_in(var);
    std::vector<Poly> num_pows{Poly(ctx, Rational(1))};
    std::vector<Poly> den_pows{Poly(ctx, Rational(1))};
    for (unsigned j = 1; j <= top; ++j) {
        num_pows.push_back(num_pows.back() * value.num());
        den_pows.push_back(den_pows.back() * value.den());
    }
    Poly acc(ctx);
    for (unsigned j = 0; j <= top; ++j) {
        Poly cj = p.coefficient_of(var, j);
        if (cj.is_zero()) continue;
        acc += cj * num_pows[j] * den_pows[top - j];
    }
    return RatFunc(acc, den_pows[top]);
}

RatFunc substitute(const Poly& p, std::string_view var, const RatFunc& value) {
    const ContextPtr ctx = unify_context(p.context(), value.context());
    if (!ctx) throw UnknownVariable("substitute: no indeterminate '" + std::string(var) + "'");
    return substitute(p, ctx->index(var), value);
}

}  // namespace xtp
