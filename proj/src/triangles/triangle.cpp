#include "xtp/triangles/triangle.hpp"

#include <sstream>
#include <stdexcept>

#include "xtp/polyring/poly_text.hpp"

namespace xtp::tri {

RecurrenceSpec RecurrenceSpec::row_shift(ContextPtr ctx, std::string name, Poly c0, Poly c1, Poly c2) {
    RecurrenceSpec s;
    s.kind = Kind::RowShift;
    s.name = std::move(name);
    s.ctx = std::move(ctx);
    s.c0 = c0.with_context(s.ctx);
    s.c1 = c1.with_context(s.ctx);
    s.c2 = c2.with_context(s.ctx);
    s.denominator = Poly(s.ctx, Rational(1));
    return s;
}

RecurrenceSpec RecurrenceSpec::column_walk(ContextPtr ctx, std::string name, CoeffSeq r, CoeffSeq s, CoeffSeq t) {
    RecurrenceSpec out;
    out.kind = Kind::ColumnWalk;
    out.name = std::move(name);
    out.ctx = std::move(ctx);
    out.r = std::move(r);
    out.s = std::move(s);
    out.t = std::move(t);
    out.denominator = Poly(out.ctx, Rational(1));
    return out;
}

RecurrenceSpec RecurrenceSpec::specialize(const Assignment& values) const {
    RecurrenceSpec out = *this;
    out.c0 = c0.specialize(values);
    out.c1 = c1.specialize(values);
    out.c2 = c2.specialize(values);
    out.r = r.specialize(values);
    out.s = s.specialize(values);
    out.t = t.specialize(values);
    out.denominator = denominator.specialize(values);
    return out;
}

void RecurrenceSpec::validate() const {
    if (!ctx) throw std::invalid_argument("recurrence '" + name + "' has no indeterminate context");
    if (kind == Kind::RowShift) {
        if (auto q = ctx->find(row_var)) {
            for (const Poly* c : {&c0, &c1, &c2}) {
                if (c->mentions(*q)) {
                    throw std::invalid_argument("recurrence '" + name + "': coefficient " + c->str() +
                                                " mentions the row indeterminate " + row_var);
                }
            }
        }
    }
    if (denominator.is_zero()) throw std::invalid_argument("recurrence '" + name + "': zero denominator");
}

Poly Triangle::entry(long n, long k) const {
    if (n < 0 || static_cast<std::size_t>(n) > depth()) {
        throw std::out_of_range("Triangle: row " + std::to_string(n) + " beyond depth " + std::to_string(depth()));
    }
    if (k < 0 || k > n) return Poly(ctx);
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::vector<Poly> Triangle::column(long k) const {
    std::vector<Poly> out;
    for (std::size_t n = 0; n < rows.size(); ++n) out.push_back(entry(static_cast<long>(n), k));
    return out;
}

namespace {

Poly at_nk(const Poly& c, std::optional<VarId> nv, std::optional<VarId> kv, long n, long k) {
    Poly out = c;
    if (nv) out = out.specialize(*nv, Rational(static_cast<long long>(n)));
    if (kv) out = out.specialize(*kv, Rational(static_cast<long long>(k)));
    return out;
}

// One row of the recurrence from the previous row.
std::vector<Poly> next_row(const RecurrenceSpec& spec, const std::vector<Poly>& prev, long n) {
    const ContextPtr& ctx = spec.ctx;
    auto get = [&](long k) -> const Poly* {
        if (k < 0 || k >= static_cast<long>(prev.size())) return nullptr;
        if (prev[static_cast<std::size_t>(k)].is_zero()) return nullptr;
        return &prev[static_cast<std::size_t>(k)];
    };
    std::vector<Poly> row(static_cast<std::size_t>(n + 1), Poly(ctx));
    if (spec.kind == Kind::RowShift) {
        const auto nv = ctx->find(spec.n_var);
        const auto kv = ctx->find(spec.k_var);
        const Poly c0n = nv ? spec.c0.specialize(*nv, Rational(static_cast<long long>(n))) : spec.c0;
        const Poly c1n = nv ? spec.c1.specialize(*nv, Rational(static_cast<long long>(n))) : spec.c1;
        const Poly c2n = nv ? spec.c2.specialize(*nv, Rational(static_cast<long long>(n))) : spec.c2;
        for (long k = 0; k <= n; ++k) {
            Poly acc(ctx);
            if (const Poly* p = get(k)) acc += at_nk(c0n, std::nullopt, kv, n, k) * *p;
            if (const Poly* p = get(k - 1)) acc += at_nk(c1n, std::nullopt, kv, n, k) * *p;
            if (const Poly* p = get(k - 2); p != nullptr && !c2n.is_zero()) {
                acc += at_nk(c2n, std::nullopt, kv, n, k) * *p;
            }
            row[static_cast<std::size_t>(k)] = std::move(acc);
        }
    } else {
        for (long k = 0; k <= n; ++k) {
            Poly acc(ctx);
            if (const Poly* p = get(k - 1)) acc += spec.r.at(k - 1) * *p;
            if (const Poly* p = get(k)) acc += spec.s.at(k) * *p;
            if (const Poly* p = get(k + 1)) acc += spec.t.at(k + 1) * *p;
            row[static_cast<std::size_t>(k)] = std::move(acc);
        }
    }
    return row;
}

}  // namespace

Triangle build_triangle(const RecurrenceSpec& spec, std::size_t depth) {
    spec.validate();
    Triangle t;
    t.spec = std::make_shared<const RecurrenceSpec>(spec);
    t.provenance = spec.name;
    t.ctx = spec.ctx;
    t.row_var = spec.row_var;
    t.denominator = spec.denominator;
    t.rows.push_back({Poly(spec.ctx, Rational(1))});
    for (std::size_t n = 1; n <= depth; ++n) t.rows.push_back(next_row(spec, t.rows.back(), static_cast<long>(n)));
    return t;
}

Poly row_gf(const Triangle& t, std::size_t n) {
    if (n > t.depth()) throw std::out_of_range("row_gf: row " + std::to_string(n) + " beyond depth");
    const Poly q = Poly::variable(t.ctx, t.row_var);
    Poly acc(t.ctx);
    Poly power(t.ctx, Rational(1));
    for (const auto& e : t.rows[n]) {
        if (!e.is_zero()) acc += e * power;
        power *= q;
    }
    return acc;
}

PolySeq row_gfs(const Triangle& t) {
    PolySeq out;
    for (std::size_t n = 0; n <= t.depth(); ++n) out.push_back(row_gf(t, n));
    return out;
}

Triangle triangle_from_row_gfs(const ContextPtr& ctx, const std::string& row_var, const PolySeq& seq,
                               std::string provenance) {
    Triangle t;
    t.provenance = std::move(provenance);
    t.ctx = ctx;
    t.row_var = row_var;
    t.denominator = Poly(ctx, Rational(1));
    const VarId q = ctx->index(row_var);
    for (std::size_t n = 0; n < seq.size(); ++n) {
        const Poly p = seq[n].with_context(ctx);
        if (p.degree_in(q) > n) {
            throw std::invalid_argument("row " + std::to_string(n) + " has degree " +
                                        std::to_string(p.degree_in(q)) + " in " + row_var);
        }
        std::vector<Poly> row;
        for (unsigned k = 0; k <= n; ++k) row.push_back(p.coefficient_of(q, k));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::optional<std::pair<std::size_t, std::size_t>> recurrence_residual(const RecurrenceSpec& spec,
                                                                        const Triangle& t) {
    if (t.rows.empty() || t.rows[0].size() != 1 || !(t.rows[0][0] == Poly(1))) return std::pair<std::size_t, std::size_t>{0, 0};
    const auto nv = spec.ctx->find(spec.n_var);
    const auto kv = spec.ctx->find(spec.k_var);
    for (std::size_t n = 1; n <= t.depth(); ++n) {
        if (t.rows[n].size() != n + 1) return std::pair<std::size_t, std::size_t>{n, 0};
        const long nn = static_cast<long>(n);
        for (long k = 0; k <= nn; ++k) {
            Poly expect(spec.ctx);
            if (spec.kind == Kind::RowShift) {
                expect += at_nk(spec.c0, nv, kv, nn, k) * t.entry(nn - 1, k);
                expect += at_nk(spec.c1, nv, kv, nn, k) * t.entry(nn - 1, k - 1);
                expect += at_nk(spec.c2, nv, kv, nn, k) * t.entry(nn - 1, k - 2);
            } else {
                if (k >= 1) expect += spec.r.at(k - 1) * t.entry(nn - 1, k - 1);
                expect += spec.s.at(k) * t.entry(nn - 1, k);
                if (k + 1 <= nn - 1) expect += spec.t.at(k + 1) * t.entry(nn - 1, k + 1);
            }
            if (!(expect == t.entry(nn, k))) return std::pair<std::size_t, std::size_t>{n, static_cast<std::size_t>(k)};
        }
    }
    return std::nullopt;
}

std::string to_golden(const Triangle& t) {
    std::string out;
    for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k != 0) out += '\t';
            out += row[k].str();
        }
        out += '\n';
    }
    return out;
}

Triangle from_golden(const ContextPtr& ctx, const std::string& text) {
    Triangle t;
    t.ctx = ctx;
    t.provenance = "golden";
    t.denominator = Poly(ctx, Rational(1));
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<Poly> row;
        std::size_t start = 0;
        for (;;) {
            const std::size_t tab = line.find('\t', start);
            const std::string cell = line.substr(start, tab == std::string::npos ? std::string::npos : tab - start);
            row.push_back(parse_poly(ctx, cell, lineno, start + 1));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace xtp::tri
