#include "xtp/polyring/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "xtp/polyring/errors.hpp"

namespace xtp {

namespace {

// Descending graded-lex comparison. Positive when (da, ma) sorts first.
inline int order(const simd::KernelTable& k, std::uint32_t da, const Monomial& ma, std::uint32_t db,
                 const Monomial& mb) {
    if (da != db) return da < db ? -1 : 1;
    return k.compare_lex(ma, mb);
}

std::uint32_t degree_of(const Monomial& m) {
    std::uint32_t d = 0;
    simd::active_kernels().degrees(&m, &d, 1);
    return d;
}

}  // namespace

class PolyBuilder {
public:
    // a + sign * b
    static Poly merge(const Poly& a, const Poly& b, int sign) {
        const auto& k = simd::active_kernels();
        Poly out(unify_context(a.ctx_, b.ctx_));
        const std::size_t na = a.size();
        const std::size_t nb = b.size();
        out.monos_.reserve(na + nb);
        out.degs_.reserve(na + nb);
        out.coeffs_.reserve(na + nb);
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < na && j < nb) {
            const int c = order(k, a.degs_[i], a.monos_[i], b.degs_[j], b.monos_[j]);
            if (c > 0) {
                out.push_back(a.monos_[i], a.degs_[i], a.coeffs_[i]);
                ++i;
            } else if (c < 0) {
                out.push_back(b.monos_[j], b.degs_[j], sign > 0 ? b.coeffs_[j] : -b.coeffs_[j]);
                ++j;
            } else {
                Rational s = a.coeffs_[i];
                if (sign > 0) {
                    s += b.coeffs_[j];
                } else {
                    s -= b.coeffs_[j];
                }
                if (!s.is_zero()) out.push_back(a.monos_[i], a.degs_[i], std::move(s));
                ++i;
                ++j;
            }
        }
        for (; i < na; ++i) out.push_back(a.monos_[i], a.degs_[i], a.coeffs_[i]);
        for (; j < nb; ++j) out.push_back(b.monos_[j], b.degs_[j], sign > 0 ? b.coeffs_[j] : -b.coeffs_[j]);
        return out;
    }

    // (c * m) * p. Term order is preserved because the monomial order is
    // compatible with multiplication.
    static Poly shifted(const Poly& p, const Monomial& m, std::uint32_t mdeg, const Rational& c) {
        Poly out(p.ctx_);
        const std::size_t n = p.size();
        out.monos_.resize(n);
        if (!simd::active_kernels().add_row(m, p.monos_.data(), out.monos_.data(), n)) {
            throw std::overflow_error("Poly: exponent exceeds " + std::to_string(simd::kMaxExponent));
        }
        out.degs_.resize(n);
        out.coeffs_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            out.degs_[j] = p.degs_[j] + mdeg;
            out.coeffs_[j] = c;
            out.coeffs_[j] *= p.coeffs_[j];
        }
        return out;
    }

    static Poly multiply(const Poly& a, const Poly& b) {
        ContextPtr ctx = unify_context(a.ctx_, b.ctx_);
        if (a.is_zero() || b.is_zero()) return Poly(ctx);
        const Poly& outer = a.size() <= b.size() ? a : b;
        const Poly& inner = a.size() <= b.size() ? b : a;
        std::vector<Poly> rows;
        rows.reserve(outer.size());
        for (std::size_t i = 0; i < outer.size(); ++i) {
            rows.push_back(shifted(inner, outer.monos_[i], outer.degs_[i], outer.coeffs_[i]));
        }
        while (rows.size() > 1) {
            std::vector<Poly> next;
            next.reserve((rows.size() + 1) / 2);
            for (std::size_t i = 0; i + 1 < rows.size(); i += 2) next.push_back(merge(rows[i], rows[i + 1], 1));
            if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
            rows = std::move(next);
        }
        Poly out = std::move(rows.front());
        out.ctx_ = ctx;
        return out;
    }

    static Poly sorted(const ContextPtr& ctx, std::vector<std::pair<Monomial, Rational>> terms) {
        const auto& k = simd::active_kernels();
        std::vector<std::uint32_t> degs(terms.size());
        for (std::size_t i = 0; i < terms.size(); ++i) k.degrees(&terms[i].first, &degs[i], 1);
        std::vector<std::size_t> idx(terms.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
            return order(k, degs[x], terms[x].first, degs[y], terms[y].first) > 0;
        });
        Poly out(ctx);
        std::size_t i = 0;
        while (i < idx.size()) {
            Rational sum = terms[idx[i]].second;
            std::size_t j = i + 1;
            while (j < idx.size() && terms[idx[j]].first == terms[idx[i]].first) {
                sum += terms[idx[j]].second;
                ++j;
            }
            if (!sum.is_zero()) out.push_back(terms[idx[i]].first, degs[idx[i]], std::move(sum));
            i = j;
        }
        return out;
    }
};

ContextPtr unify_context(const ContextPtr& a, const ContextPtr& b) {
    if (!a) return b;
    if (!b || a == b) return a;
    if (*a == *b) return a;
    throw ContextMismatch("polynomials over different indeterminate sets");
}

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) push_back(Monomial{}, 0, c);
}

Poly::Poly(ContextPtr ctx) : ctx_(std::move(ctx)) {}

Poly::Poly(ContextPtr ctx, const Rational& c) : ctx_(std::move(ctx)) {
    if (!c.is_zero()) push_back(Monomial{}, 0, c);
}

Poly Poly::variable(const ContextPtr& ctx, VarId v) {
    if (!ctx || v >= ctx->size()) throw UnknownVariable("variable index out of range");
    Monomial m;
    m.e[v] = 1;
    return monomial(ctx, m, Rational(1));
}

Poly Poly::variable(const ContextPtr& ctx, std::string_view name) { return variable(ctx, ctx->index(name)); }

Poly Poly::monomial(const ContextPtr& ctx, const Monomial& m, const Rational& c) {
    Poly p(ctx);
    if (!c.is_zero()) p.push_back(m, degree_of(m), c);
    return p;
}

Poly Poly::from_terms(const ContextPtr& ctx, std::vector<std::pair<Monomial, Rational>> terms) {
    return PolyBuilder::sorted(ctx, std::move(terms));
}

void Poly::push_back(const Monomial& m, std::uint32_t d, Rational c) {
    monos_.push_back(m);
    degs_.push_back(d);
    coeffs_.push_back(std::move(c));
}

void Poly::adopt_context(const ContextPtr& ctx) { ctx_ = unify_context(ctx_, ctx); }

bool Poly::is_constant() const { return is_zero() || (size() == 1 && degs_[0] == 0); }

Rational Poly::constant_term() const {
    if (!is_zero() && degs_.back() == 0) return coeffs_.back();
    return Rational(0);
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw std::domain_error("expected a constant, got " + str());
    return constant_term();
}

Rational Poly::coeff(const Monomial& m) const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (monos_[i] == m) return coeffs_[i];
    }
    return Rational(0);
}

unsigned Poly::degree_in(VarId v) const {
    unsigned d = 0;
    for (const auto& m : monos_) d = std::max<unsigned>(d, m.e[v]);
    return d;
}

Poly Poly::coefficient_of(VarId v, unsigned j) const {
    Poly out(ctx_);
    for (std::size_t i = 0; i < size(); ++i) {
        if (monos_[i].e[v] != j) continue;
        Monomial m = monos_[i];
        m.e[v] = 0;
        out.push_back(m, degs_[i] - j, coeffs_[i]);
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) { return *this = PolyBuilder::merge(*this, o, 1); }
Poly& Poly::operator-=(const Poly& o) { return *this = PolyBuilder::merge(*this, o, -1); }
Poly& Poly::operator*=(const Poly& o) { return *this = PolyBuilder::multiply(*this, o); }

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        monos_.clear();
        degs_.clear();
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Poly operator+(const Poly& a, const Poly& b) { return PolyBuilder::merge(a, b, 1); }
Poly operator-(const Poly& a, const Poly& b) { return PolyBuilder::merge(a, b, -1); }
Poly operator*(const Poly& a, const Poly& b) { return PolyBuilder::multiply(a, b); }

Poly Poly::pow(unsigned e) const {
    Poly result(ctx_, Rational(1));
    Poly base = *this;
    while (e > 0) {
        if ((e & 1U) != 0) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

std::optional<Poly> Poly::try_divide(const Poly& d) const {
    ContextPtr ctx = unify_context(ctx_, d.ctx_);
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    const auto& k = simd::active_kernels();
    if (d.is_constant()) {
        Poly q = *this;
        q.ctx_ = ctx;
        q *= Rational(1) / d.leading_coeff();
        return q;
    }
    Poly quotient(ctx);
    Poly rem = *this;
    while (!rem.is_zero()) {
        if (rem.degs_[0] < d.degs_[0] || !k.divides(d.monos_[0], rem.monos_[0])) return std::nullopt;
        Monomial t;
        k.quotient(d.monos_[0], rem.monos_[0], t);
        const std::uint32_t tdeg = rem.degs_[0] - d.degs_[0];
        Rational c = rem.coeffs_[0] / d.coeffs_[0];
        rem = PolyBuilder::merge(rem, PolyBuilder::shifted(d, t, tdeg, c), -1);
        quotient.push_back(t, tdeg, std::move(c));
    }
    return quotient;
}

Poly Poly::divide_exact(const Poly& d) const {
    if (auto q = try_divide(d)) return std::move(*q);
    throw NotPolynomial("inexact division of " + str() + " by " + d.str());
}

Poly Poly::specialize(VarId v, const Rational& value) const {
    if (!ctx_) return *this;  // context-free constant
    if (v >= ctx_->size()) throw UnknownVariable("specialize: variable index out of range");
    if (!mentions(v)) return *this;
    std::vector<Rational> powers{Rational(1)};
    std::vector<std::pair<Monomial, Rational>> terms;
    terms.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        const unsigned e = monos_[i].e[v];
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        Monomial m = monos_[i];
        m.e[v] = 0;
        terms.emplace_back(m, coeffs_[i] * powers[e]);
    }
    return from_terms(ctx_, std::move(terms));
}

Poly Poly::specialize(const Assignment& values) const {
    if (!ctx_) return *this;
    std::vector<std::pair<VarId, Rational>> vs;
    for (const auto& [name, val] : values) {
        if (auto v = ctx_->find(name)) vs.emplace_back(*v, val);
    }
    if (vs.empty()) return *this;
    std::vector<std::pair<Monomial, Rational>> terms;
    terms.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        Monomial m = monos_[i];
        Rational c = coeffs_[i];
        for (const auto& [v, val] : vs) {
            for (unsigned e = 0; e < m.e[v]; ++e) c *= val;
            m.e[v] = 0;
        }
        terms.emplace_back(m, std::move(c));
    }
    return from_terms(ctx_, std::move(terms));
}

Poly Poly::substitute(VarId v, const Poly& value) const {
    ContextPtr ctx = unify_context(ctx_, value.context());
    if (!ctx || v >= ctx->size()) throw UnknownVariable("substitute: variable index out of range");
    const unsigned top = degree_in(v);
    Poly acc(ctx);
    for (unsigned j = top + 1; j-- > 0;) {
        acc = acc * value + coefficient_of(v, j);
    }
    acc.ctx_ = ctx;
    return acc;
}

Rational Poly::evaluate(const Assignment& values) const {
    Rational total;
    if (is_zero()) return total;
    std::vector<const Rational*> slot(ctx_ ? ctx_->size() : 0, nullptr);
    for (std::size_t v = 0; v < slot.size(); ++v) {
        auto it = values.find(ctx_->name(static_cast<VarId>(v)));
        if (it != values.end()) slot[v] = &it->second;
    }
    for (std::size_t i = 0; i < size(); ++i) {
        Rational t = coeffs_[i];
        for (std::size_t v = 0; v < slot.size(); ++v) {
            const unsigned e = monos_[i].e[v];
            if (e == 0) continue;
            if (slot[v] == nullptr) throw MissingAssignment("no value for '" + ctx_->name(static_cast<VarId>(v)) + "'");
            for (unsigned r = 0; r < e; ++r) t *= *slot[v];
        }
        total += t;
    }
    return total;
}

bool Poly::is_coeff_nonneg() const { return !first_negative_term().has_value(); }

std::optional<std::size_t> Poly::first_negative_term() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (coeffs_[i].sign() < 0) return i;
    }
    return std::nullopt;
}

Rational Poly::content() const {
    if (is_zero()) return Rational(1);
    mpz_class g = 0;
    mpz_class l = 1;
    for (const auto& c : coeffs_) {
        mpz_class num = c.numerator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        mpz_class den = c.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    return Rational(mpq_class(g, l));
}

Monomial Poly::monomial_gcd() const {
    Monomial g;
    if (is_zero()) return g;
    g = monos_[0];
    for (const auto& m : monos_) {
        for (std::size_t v = 0; v < simd::kMaxVars; ++v) g.e[v] = std::min(g.e[v], m.e[v]);
    }
    return g;
}

Poly Poly::divide_monomial(const Monomial& m) const {
    const auto& k = simd::active_kernels();
    const std::uint32_t md = degree_of(m);
    Poly out(ctx_);
    for (std::size_t i = 0; i < size(); ++i) {
        if (!k.divides(m, monos_[i])) throw NotPolynomial("monomial does not divide " + str());
        Monomial q;
        k.quotient(m, monos_[i], q);
        out.push_back(q, degs_[i] - md, coeffs_[i]);
    }
    return out;
}

Poly Poly::with_context(const ContextPtr& ctx) const {
    if (!ctx_ || ctx_ == ctx || (ctx && *ctx_ == *ctx)) {
        Poly p = *this;
        p.ctx_ = ctx;
        return p;
    }
    std::vector<VarId> map(ctx_->size());
    for (std::size_t v = 0; v < ctx_->size(); ++v) {
        if (!mentions(static_cast<VarId>(v))) continue;
        map[v] = ctx->index(ctx_->name(static_cast<VarId>(v)));
    }
    std::vector<std::pair<Monomial, Rational>> terms;
    for (std::size_t i = 0; i < size(); ++i) {
        Monomial m;
        for (std::size_t v = 0; v < ctx_->size(); ++v) {
            if (monos_[i].e[v] != 0) m.e[map[v]] = monos_[i].e[v];
        }
        terms.emplace_back(m, coeffs_[i]);
    }
    return from_terms(ctx, std::move(terms));
}

std::size_t Poly::hash() const {
    std::size_t h = size();
    for (std::size_t i = 0; i < size(); ++i) {
        for (auto e : monos_[i].e) h = h * 1099511628211ULL + e;
        h ^= coeffs_[i].hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_ && !(*a.ctx_ == *b.ctx_)) return false;
    return a.monos_ == b.monos_ && a.coeffs_ == b.coeffs_;
}

Monomial make_monomial(const VarContext& ctx, const std::vector<std::pair<std::string, unsigned>>& powers) {
    Monomial m;
    for (const auto& [name, e] : powers) {
        const unsigned total = m.e[ctx.index(name)] + e;
        if (total > simd::kMaxExponent) throw std::overflow_error("exponent too large");
        m.e[ctx.index(name)] = static_cast<std::uint8_t>(total);
    }
    return m;
}

}  // namespace xtp
