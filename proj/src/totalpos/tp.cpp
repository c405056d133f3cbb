#include "xtp/totalpos/tp.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>
#include <unordered_map>

#include "xtp/polyring/var_context.hpp"

namespace xtp::tp {
namespace {

using Subset = std::vector<std::size_t>;

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Subset> subsets(std::size_t n, std::size_t k) {
    std::vector<Subset> out;
    if (k > n) return out;
    Subset cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::vector<Subset> windows(std::size_t n, std::size_t k) {
    std::vector<Subset> out;
    for (std::size_t start = 0; start + k <= n; ++start) {
        Subset s(k);
        for (std::size_t i = 0; i < k; ++i) s[i] = start + i;
        out.push_back(std::move(s));
    }
    return out;
}

std::uint32_t mask_of(const Subset& s) {
    std::uint32_t m = 0;
    for (std::size_t i : s) m |= 1u << i;
    return m;
}

std::uint64_t key(std::uint32_t rows, std::uint32_t cols) { return (std::uint64_t{rows} << 32) | cols; }

using Memo = std::unordered_map<std::uint64_t, Poly>;

// Laplace expansion along the first row, with minors of one order lower
// looked up in `lower`.
Poly expand(const PolyMatrix& m, const Subset& rows, const Subset& cols, const Memo& lower) {
    if (rows.size() == 1) return m(rows[0], cols[0]);
    const std::uint32_t sub_rows = mask_of(rows) & ~(1u << rows[0]);
    const std::uint32_t all_cols = mask_of(cols);
    Poly acc(m.context());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const Poly& e = m(rows[0], cols[j]);
        if (e.is_zero()) continue;
        const Poly& sub = lower.at(key(sub_rows, all_cols & ~(1u << cols[j])));
        if (sub.is_zero()) continue;
        if (j % 2 == 0) {
            acc += e * sub;
        } else {
            acc -= e * sub;
        }
    }
    return acc;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count == 0 ? 1 : count)));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (count + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

std::string render_term(const Poly& p, std::size_t i) {
    Poly t = Poly::monomial(p.context(), p.term_monomial(i), p.term_coeff(i));
    return t.str();
}

constexpr std::size_t kLaplaceMaxOrder = 4;

}  // namespace

TPReport is_x_tp_r(const PolyMatrix& m, std::size_t r, const TPOptions& opts) {
    if (r == 0) throw std::invalid_argument("is_x_tp_r: order must be at least 1");
    if (m.rows() > 32 || m.cols() > 32) throw std::invalid_argument("is_x_tp_r: at most 32 rows and columns");
    TPReport rep;
    rep.rows = m.rows();
    rep.cols = m.cols();
    rep.order = r;
    rep.contiguous_only = opts.contiguous_only;
    const std::size_t top = std::min({r, m.rows(), m.cols()});
    Memo lower;
    for (std::size_t k = 1; k <= top; ++k) {
        const auto rs = opts.contiguous_only ? windows(m.rows(), k) : subsets(m.rows(), k);
        const auto cs = opts.contiguous_only ? windows(m.cols(), k) : subsets(m.cols(), k);
        const std::size_t total = rs.size() * cs.size();
        std::vector<Poly> values(total);
        const bool laplace = !opts.contiguous_only && k <= kLaplaceMaxOrder;
        parallel_for(total, opts.jobs, [&](std::size_t idx) {
            const Subset& rows = rs[idx / cs.size()];
            const Subset& cols = cs[idx % cs.size()];
            values[idx] = laplace ? expand(m, rows, cols, lower) : minor(m, rows, cols);
        });
        rep.minors_checked += total;
        for (std::size_t idx = 0; idx < total; ++idx) {
            if (auto neg = values[idx].first_negative_term()) {
                rep.passed = false;
                rep.witness = TPWitness{k, rs[idx / cs.size()], cs[idx % cs.size()], values[idx],
                                        render_term(values[idx], *neg)};
                return rep;
            }
        }
        if (laplace && k < std::min(top, kLaplaceMaxOrder)) {
            Memo next;
            next.reserve(total);
            for (std::size_t idx = 0; idx < total; ++idx) {
                next.emplace(key(mask_of(rs[idx / cs.size()]), mask_of(cs[idx % cs.size()])), std::move(values[idx]));
            }
            lower = std::move(next);
        } else {
            lower.clear();
        }
    }
    return rep;
}

namespace {

nlohmann::json subset_json(const Subset& s) { return nlohmann::json(s); }

}  // namespace

nlohmann::json TPReport::to_json() const {
    nlohmann::json j{{"truncation", {{"rows", rows}, {"cols", cols}}},
                     {"order", order},
                     {"contiguous_only", contiguous_only},
                     {"result", passed ? "pass" : "fail"},
                     {"minors_checked", minors_checked}};
    if (witness) {
        j["witness"] = {{"order", witness->order},
                        {"rows", subset_json(witness->rows)},
                        {"cols", subset_json(witness->cols)},
                        {"minor", witness->minor.str()},
                        {"negative_term", witness->negative_term}};
    }
    return j;
}

std::string TPReport::summary() const {
    std::string s = std::string(passed ? "pass" : "fail") + ": " + std::to_string(rows) + "x" + std::to_string(cols) +
                    " order <= " + std::to_string(order) + (contiguous_only ? " (contiguous)" : "") + ", " +
                    std::to_string(minors_checked) + " minors";
    if (witness) {
        s += "; minor rows " + nlohmann::json(witness->rows).dump() + " cols " + nlohmann::json(witness->cols).dump() +
             " has term " + witness->negative_term;
    }
    return s;
}

TridiagCriteria check_tridiag_criteria(const PolySeq& s, const PolySeq& r, const PolySeq& t, std::size_t upto) {
    if (s.size() <= upto || r.size() <= upto || t.size() <= upto + 1) {
        throw std::invalid_argument("check_tridiag_criteria: sequences too short for index " + std::to_string(upto));
    }
    const Poly one(1);
    TridiagCriteria out;
    auto ge = [](const Poly& a, const Poly& b) { return (a - b).is_coeff_nonneg(); };
    for (int c = 0; c < 4; ++c) {
        for (std::size_t n = 0; n <= upto && !out.first_failure[c]; ++n) {
            bool ok = false;
            if (n == 0) {
                switch (c) {
                    case 0: ok = ge(s[0], r[0]); break;
                    case 1: ok = ge(s[0], t[1]); break;
                    case 2: ok = ge(s[0], one); break;
                    default: ok = ge(s[0], r[0] * t[1]); break;
                }
            } else {
                switch (c) {
                    case 0: ok = ge(s[n], r[n] + t[n]); break;
                    case 1: ok = ge(s[n], r[n - 1] + t[n + 1]); break;
                    case 2: ok = ge(s[n], r[n - 1] * t[n] + one); break;
                    default: ok = ge(s[n], r[n] * t[n + 1] + one); break;
                }
            }
            if (!ok) out.first_failure[c] = n;
        }
        out.criterion[c] = !out.first_failure[c].has_value();
    }
    return out;
}

TPReport check_perturbation(const PolySeq& a, const PolySeq& b, const PolySeq& c, const PolySeq& da,
                            const PolySeq& db, const PolySeq& dc, std::size_t size, std::size_t order,
                            const TPOptions& opts) {
    if (a.size() < size || da.size() < size || (size > 1 && (b.size() < size - 1 || c.size() < size - 1 ||
                                                              db.size() < size - 1 || dc.size() < size - 1))) {
        throw std::invalid_argument("check_perturbation: sequences too short for size " + std::to_string(size));
    }
    for (std::size_t n = 0; n < size; ++n) {
        if (!da[n].is_coeff_nonneg()) throw HypothesisViolation("diagonal perturbation " + std::to_string(n) + " is not nonnegative");
        if (n + 1 >= size) continue;
        if (!db[n].is_coeff_nonneg() || !dc[n].is_coeff_nonneg()) {
            throw HypothesisViolation("off-diagonal perturbation " + std::to_string(n) + " is not nonnegative");
        }
        if (!(b[n] - db[n]).is_coeff_nonneg() || !(c[n] - dc[n]).is_coeff_nonneg()) {
            throw HypothesisViolation("off-diagonal perturbation " + std::to_string(n) + " exceeds the base entry");
        }
    }
    auto build = [&](bool perturbed) {
        ContextPtr ctx;
        for (const auto* seq : {&a, &b, &c, &da, &db, &dc}) {
            for (const Poly& p : *seq) ctx = unify_context(ctx, p.context());
        }
        PolyMatrix m(size, size, ctx);
        for (std::size_t n = 0; n < size; ++n) {
            m(n, n) = perturbed ? a[n] + da[n] : a[n];
            if (n + 1 < size) {
                m(n, n + 1) = perturbed ? b[n] - db[n] : b[n];
                m(n + 1, n) = perturbed ? c[n] - dc[n] : c[n];
            }
        }
        return m;
    };
    const TPReport base = is_x_tp_r(build(false), order, opts);
    if (!base.passed) throw HypothesisViolation("base matrix is not x-TP: " + base.summary());
    return is_x_tp_r(build(true), order, opts);
}

PolyMatrix starred_tridiag(const PolySeq& s, const PolySeq& r, const PolySeq& t, std::size_t size) {
    if (s.size() < size || (size > 1 && (r.size() < size - 1 || t.size() < size))) {
        throw std::invalid_argument("starred_tridiag: sequences too short for size " + std::to_string(size));
    }
    PolySeq ones(size, Poly(1));
    PolySeq sub(size, Poly(0));
    for (std::size_t n = 1; n < size; ++n) sub[n] = r[n - 1] * t[n];
    return tridiag(s, ones, sub, size);
}

}  // namespace xtp::tp
