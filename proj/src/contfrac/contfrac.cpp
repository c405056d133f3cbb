#include "xtp/contfrac/contfrac.hpp"

#include <stdexcept>

#include "xtp/polyring/errors.hpp"

namespace xtp::cf {

namespace {

// Finite list read as zero past its end: a terminating fraction.
CoeffSeq zero_padded(std::vector<Poly> values, long first, const char* what) {
    return CoeffSeq::generator(
        [values = std::move(values), first](long i) {
            const long j = i - first;
            return j >= 0 && j < static_cast<long>(values.size()) ? values[static_cast<std::size_t>(j)] : Poly(0);
        },
        what);
}

}  // namespace

SFraction sfraction(std::vector<Poly> alphas) { return SFraction{zero_padded(std::move(alphas), 0, "alpha list")}; }

SFraction sfraction(LevelFn even, LevelFn odd, const std::string& label) {
    return SFraction{CoeffSeq::generator(
        [even = std::move(even), odd = std::move(odd)](long i) { return i % 2 == 0 ? even(i / 2) : odd(i / 2); },
        label)};
}

JFraction jfraction(std::vector<Poly> s, std::vector<Poly> r_from_1) {
    return JFraction{zero_padded(std::move(s), 0, "s list"), zero_padded(std::move(r_from_1), 1, "r list")};
}

JFraction jfraction(LevelFn s, LevelFn r_next, const std::string& label) {
    return JFraction{CoeffSeq::generator(std::move(s), label + ".s"),
                     CoeffSeq::generator([r_next = std::move(r_next)](long m) { return r_next(m - 1); }, label + ".r")};
}

namespace {

Poly alpha_at(const CoeffSeq& alpha, long i) { return i < 0 ? Poly(0) : alpha.at(i); }

}  // namespace

JFraction contract(const SFraction& s) {
    const CoeffSeq alpha = s.alpha;
    return JFraction{
        CoeffSeq::generator([alpha](long m) { return alpha_at(alpha, 2 * m - 1) + alpha_at(alpha, 2 * m); },
                            "contract.s"),
        CoeffSeq::generator([alpha](long m) { return alpha_at(alpha, 2 * m - 2) * alpha_at(alpha, 2 * m - 1); },
                            "contract.r")};
}

JFraction contract_with_shift(const SFraction& s, const CoeffSeq& beta) {
    JFraction j = contract(s);
    const CoeffSeq base = j.s;
    j.s = CoeffSeq::generator([base, beta](long m) { return base.at(m) + beta.at(m); }, "contract+beta.s");
    return j;
}

JFraction scaled(const JFraction& j, const Poly& f) {
    const CoeffSeq s = j.s;
    const CoeffSeq r = j.r;
    const Poly f2 = f * f;
    return JFraction{CoeffSeq::generator([s, f](long m) { return s.at(m) * f; }, "scaled.s"),
                     CoeffSeq::generator([r, f2](long m) { return r.at(m) * f2; }, "scaled.r")};
}

SeriesPoly j_expand(const JFraction& j, std::size_t depth, const ContextPtr& ctx) {
    const std::size_t top = depth / 2 + 1;
    std::vector<Poly> s(top + 1);
    std::vector<Poly> r(top + 2);
    std::vector<bool> have_s(top + 1, false);
    std::vector<bool> have_r(top + 2, false);
    auto s_at = [&](std::size_t k) -> const Poly& {
        if (!have_s[k]) {
            s[k] = j.s.at(static_cast<long>(k));
            have_s[k] = true;
        }
        return s[k];
    };
    auto r_at = [&](std::size_t k) -> const Poly& {
        if (!have_r[k]) {
            r[k] = j.r.at(static_cast<long>(k));
            have_r[k] = true;
        }
        return r[k];
    };
    std::vector<Poly> out;
    out.reserve(depth + 1);
    std::vector<Poly> cur{Poly(ctx, Rational(1))};
    out.push_back(cur[0]);
    for (std::size_t n = 1; n <= depth; ++n) {
        const std::size_t width = std::min(n, depth - n) + 1;
        std::vector<Poly> next(width, Poly(ctx));
        for (std::size_t k = 0; k < width; ++k) {
            Poly acc(ctx);
            if (k >= 1 && k - 1 < cur.size()) acc += cur[k - 1];
            if (k < cur.size() && !cur[k].is_zero()) acc += s_at(k) * cur[k];
            if (k + 1 < cur.size() && !cur[k + 1].is_zero()) acc += r_at(k + 1) * cur[k + 1];
            next[k] = std::move(acc);
        }
        cur = std::move(next);
        out.push_back(cur[0]);
    }
    return SeriesPoly(std::move(out));
}

SeriesPoly s_expand(const SFraction& s, std::size_t depth, const ContextPtr& ctx) {
    return j_expand(contract(s), depth, ctx);
}

bool ExtractedJFraction::polynomial() const {
    for (const auto& v : s) {
        if (!v.is_polynomial()) return false;
    }
    for (const auto& v : r) {
        if (!v.is_polynomial()) return false;
    }
    return true;
}

JFraction ExtractedJFraction::to_jfraction() const {
    std::vector<Poly> sp;
    std::vector<Poly> rp;
    for (const auto& v : s) sp.push_back(v.to_poly());
    for (const auto& v : r) rp.push_back(v.to_poly());
    return jfraction(std::move(sp), std::move(rp));
}

ExtractedJFraction extract_jfraction(const SeriesPoly& f, std::size_t levels) {
    if (f.depth() < 2 * levels) {
        throw std::invalid_argument("extract_jfraction: depth " + std::to_string(f.depth()) + " is below 2*levels = " +
                                    std::to_string(2 * levels));
    }
    if (!(f[0] == Poly(1))) throw std::invalid_argument("extract_jfraction: constant term must be 1");
    std::vector<RatFunc> cur;
    for (const auto& c : f.coeffs()) cur.emplace_back(c);
    ExtractedJFraction out;
    for (std::size_t i = 0; i <= levels && cur.size() >= 2; ++i) {
        const SeriesRat g = SeriesRat(cur).reciprocal();
        out.s.push_back(-g[1]);
        if (i == levels || cur.size() < 3) break;
        RatFunc rnext = -g[2];
        if (rnext.is_zero()) {
            out.terminated_at = i + 1;
            break;
        }
        std::vector<RatFunc> tail;
        for (std::size_t k = 2; k < cur.size(); ++k) tail.push_back(-g[k] / rnext);
        out.r.push_back(std::move(rnext));
        cur = std::move(tail);
    }
    return out;
}

SeriesPoly gauss_series(const Poly& a, const Poly& b, const Poly& c, std::size_t depth) {
    const ContextPtr ctx = unify_context(unify_context(a.context(), b.context()), c.context());
    SeriesPoly total = SeriesPoly::one(depth);
    SeriesPoly term = SeriesPoly::one(depth);
    for (std::size_t n = 1; n <= depth; ++n) {
        // term <- term * (a + b (n-1)) z / (1 - c n z)
        const Poly lin = a + b * Rational(static_cast<long long>(n - 1));
        std::vector<Poly> shifted(depth + 1, Poly(ctx));
        for (std::size_t i = 0; i + 1 <= depth; ++i) shifted[i + 1] = term[i] * lin;
        std::vector<Poly> geo(depth + 1, Poly(ctx));
        const Poly ratio = c * Rational(static_cast<long long>(n));
        Poly power(ctx, Rational(1));
        for (std::size_t i = 0; i <= depth; ++i) {
            geo[i] = power;
            power *= ratio;
        }
        term = SeriesPoly(std::move(shifted)) * SeriesPoly(std::move(geo));
        total += term;
    }
    return total;
}

JFraction triangle_jfraction(const tri::RecurrenceSpec& walk) {
    if (walk.kind != tri::Kind::ColumnWalk) throw std::invalid_argument("triangle_jfraction: not a column walk");
    const CoeffSeq r = walk.r;
    const CoeffSeq t = walk.t;
    return JFraction{walk.s, CoeffSeq::generator([r, t](long m) { return r.at(m - 1) * t.at(m); }, "walk.r")};
}

SeriesPoly row_series(const tri::Triangle& t) { return SeriesPoly(tri::row_gfs(t)); }

SeriesPoly first_column_series(const tri::Triangle& t) { return SeriesPoly(t.column(0)); }

}  // namespace xtp::cf
