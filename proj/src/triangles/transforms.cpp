#include "xtp/triangles/transforms.hpp"

#include <stdexcept>

#include "xtp/polyring/ratfunc.hpp"

namespace xtp::tri {

namespace {

Poly var(const ContextPtr& ctx, std::string_view name) { return Poly::variable(ctx, name); }

Triangle derived(const Triangle& t, std::string provenance) {
    Triangle out;
    out.provenance = std::move(provenance);
    out.ctx = t.ctx;
    out.row_var = t.row_var;
    out.denominator = t.denominator;
    return out;
}

}  // namespace

Triangle reciprocal(const Triangle& t) {
    Triangle out = derived(t, "reciprocal(" + t.provenance + ")");
    for (const auto& row : t.rows) out.rows.emplace_back(row.rbegin(), row.rend());
    return out;
}

Triangle gamma_binomial_transform(const Triangle& t, const Poly& gamma) {
    Triangle out = derived(t, "gamma-binomial(" + t.provenance + ", " + gamma.str() + ")");
    std::vector<Poly> gpow{Poly(t.ctx, Rational(1))};
    for (std::size_t i = 1; i <= t.depth(); ++i) gpow.push_back(gpow.back() * gamma);
    for (std::size_t n = 0; n <= t.depth(); ++n) {
        std::vector<Poly> row(n + 1, Poly(t.ctx));
        for (std::size_t i = 0; i <= n; ++i) {
            const Poly w = gpow[n - i] * binomial(static_cast<unsigned>(n), static_cast<unsigned>(i));
            for (std::size_t k = 0; k <= i; ++k) {
                if (!t.rows[i][k].is_zero()) row[k] += w * t.rows[i][k];
            }
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

Triangle shift_row_gf(const Triangle& t, const Poly& shift) {
    const VarId q = t.ctx->index(t.row_var);
    const Poly arg = var(t.ctx, t.row_var) + shift;
    PolySeq shifted;
    for (std::size_t n = 0; n <= t.depth(); ++n) shifted.push_back(row_gf(t, n).substitute(q, arg));
    Triangle out = triangle_from_row_gfs(t.ctx, t.row_var, shifted, "shift(" + t.provenance + ", " + shift.str() + ")");
    out.denominator = t.denominator;
    return out;
}

RecurrenceSpec four_term_spec(const ContextPtr& ctx, const FourTermParams& p, std::string name) {
    const Poly n = var(ctx, "n");
    const Poly k = var(ctx, "k");
    const Poly c0 = p.lambda * p.lambda * (p.a0 * n + p.a1 * k + p.a2);
    const Poly c1 = p.lambda * (p.b0 * n + p.b1 * k + p.b2);
    const Poly c2 = p.d * (p.d * p.a1 - p.b1) * (n - k + Poly(1));
    RecurrenceSpec s = RecurrenceSpec::row_shift(ctx, std::move(name), c0, c1, c2);
    s.denominator = p.lambda.with_context(ctx);
    return s;
}

RecurrenceSpec companion_spec(const ContextPtr& ctx, const FourTermParams& p, std::string name) {
    const Poly n = var(ctx, "n");
    const Poly k = var(ctx, "k");
    const Poly c0 = p.a0 * n + p.a1 * k + p.a2;
    const Poly c1 = (p.b0 + p.d * (p.a1 - p.a0)) * n + (p.b1 - Poly(2) * p.d * p.a1) * k + p.b2 +
                    p.d * (p.a1 - p.a2);
    return RecurrenceSpec::row_shift(ctx, std::move(name), c0, c1);
}

std::optional<std::size_t> companion_relation_mismatch(const Triangle& tT, const Triangle& tA, const Poly& lambda,
                                                       const Poly& d, std::size_t upto) {
    if (upto > tT.depth() || upto > tA.depth()) throw std::invalid_argument("companion relation: depth too small");
    const Poly q = var(tT.ctx, tT.row_var);
    const Poly base = lambda + d * q;
    Poly dpow(tT.ctx, Rational(1));
    for (std::size_t n = 0; n <= upto; ++n) {
        Poly rhs(tT.ctx);
        Poly qpow(tT.ctx, Rational(1));
        for (std::size_t k = 0; k <= n; ++k) {
            const Poly& a = tA.rows[n][k];
            if (!a.is_zero()) rhs += a * qpow * base.pow(static_cast<unsigned>(n - k));
            qpow *= q;
        }
        if (!(row_gf(tT, n) == rhs * dpow)) return n;
        dpow *= tT.denominator;
    }
    return std::nullopt;
}

PolySeq convolution(const Triangle& m, const PolySeq& x, const PolySeq& y, std::size_t upto) {
    if (upto > m.depth() || x.size() <= upto || y.size() <= upto) {
        throw std::invalid_argument("convolution: inputs shorter than requested length");
    }
    PolySeq z;
    for (std::size_t n = 0; n <= upto; ++n) {
        Poly acc(m.ctx);
        for (std::size_t k = 0; k <= n; ++k) {
            if (!m.rows[n][k].is_zero()) acc += m.rows[n][k] * x[k] * y[n - k];
        }
        z.push_back(std::move(acc));
    }
    return z;
}

std::optional<std::size_t> product_formula_mismatch(const PolySeq& seq, const Poly& factor, VarId level_var,
                                                    const Poly& denominator, std::size_t upto) {
    if (seq.size() <= upto) throw std::invalid_argument("product formula: sequence too short");
    Poly expect(factor.context(), Rational(1));
    Poly dpow(factor.context(), Rational(1));
    for (std::size_t n = 0; n <= upto; ++n) {
        if (n > 0) {
            expect *= factor.specialize(level_var, Rational(static_cast<long long>(n)));
            dpow *= denominator;
        }
        if (!(seq[n] == expect * dpow)) return n;
    }
    return std::nullopt;
}

PolySeq evaluate_rows(const Triangle& t, const Poly& value) {
    const VarId q = t.ctx->index(t.row_var);
    PolySeq out;
    for (std::size_t n = 0; n <= t.depth(); ++n) out.push_back(row_gf(t, n).substitute(q, value));
    return out;
}

PolySeq scale_by_power(const PolySeq& seq, const Poly& base) {
    PolySeq out;
    Poly power(base.context(), Rational(1));
    for (const auto& p : seq) {
        out.push_back(p * power);
        power *= base;
    }
    return out;
}

std::optional<std::size_t> quadratic_substitution_mismatch(const Triangle& tE, const Triangle& tS, const Poly& a1,
                                                           const Poly& b0, std::size_t upto) {
    if (upto > tE.depth() || upto > tS.depth()) throw std::invalid_argument("substitution claim: depth too small");
    const Poly x = var(tE.ctx, tE.row_var);
    const Poly one_plus_x = Poly(1) + x;
    const Poly lam = Poly(2) * a1;
    for (std::size_t n = 0; n <= upto; ++n) {
        Poly rhs(tE.ctx);
        for (std::size_t k = 0; k <= n; ++k) {
            const Poly& s = tS.rows[n][k];
            if (s.is_zero()) continue;
            if (2 * k > n) return n;
            rhs += s * lam.pow(static_cast<unsigned>(k)) * b0.pow(static_cast<unsigned>(n - k)) *
                   x.pow(static_cast<unsigned>(k)) * one_plus_x.pow(static_cast<unsigned>(n - 2 * k));
        }
        if (!(row_gf(tE, n) * b0.pow(static_cast<unsigned>(n)) == rhs)) return n;
    }
    return std::nullopt;
}

}  // namespace xtp::tri
