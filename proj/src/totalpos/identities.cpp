#include "xtp/totalpos/identities.hpp"

#include <stdexcept>

namespace xtp::tp {

FactorizationResult fundamental_identity_check(const tri::RecurrenceSpec& walk, std::size_t size) {
    if (walk.kind != tri::Kind::ColumnWalk) throw std::invalid_argument("fundamental_identity_check: not a column walk");
    if (size == 0) throw std::invalid_argument("fundamental_identity_check: size must be positive");
    const ContextPtr& ctx = walk.ctx;
    const tri::Triangle d = tri::build_triangle(walk, 2 * size - 2);

    // Down-step weights of the starred walk and the diagonal V*.
    PolySeq down(size + 1, Poly(ctx));
    PolySeq v(size, Poly(ctx, Rational(1)));
    for (std::size_t k = 1; k <= size; ++k) down[k] = walk.r.at(static_cast<long>(k) - 1) * walk.t.at(static_cast<long>(k));
    for (std::size_t k = 1; k < size; ++k) v[k] = v[k - 1] * down[k];

    const Poly one(ctx, Rational(1));
    const CoeffSeq s = walk.s;
    tri::RecurrenceSpec starred = tri::RecurrenceSpec::column_walk(
        ctx, walk.name + "*", CoeffSeq::constant(one), s,
        CoeffSeq::generator([down](long k) { return k >= 0 && k < static_cast<long>(down.size()) ? down[k] : Poly(0); },
                            "r(k-1) t(k)"));
    const tri::Triangle ds = tri::build_triangle(starred, size - 1);

    PolyMatrix dm(size, size, ctx);
    PolyMatrix vm(size, size, ctx);
    for (std::size_t i = 0; i < size; ++i) {
        vm(i, i) = v[i];
        for (std::size_t k = 0; k <= i; ++k) dm(i, k) = ds.entry(static_cast<long>(i), static_cast<long>(k));
    }
    FactorizationResult out;
    out.size = size;
    out.product = dm * vm * dm.transpose();
    out.hankel = hankel(d.column(0), size);
    for (std::size_t i = 0; i < size && !out.mismatch; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            if (!(out.product(i, j) == out.hankel(i, j))) {
                out.mismatch = std::make_pair(i, j);
                break;
            }
        }
    }
    out.holds = !out.mismatch.has_value();
    return out;
}

PolySeq L_operator(const PolySeq& seq) {
    if (seq.size() < 3) throw std::invalid_argument("L_operator: need at least 3 terms");
    PolySeq out;
    out.reserve(seq.size() - 2);
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) out.push_back(seq[i - 1] * seq[i + 1] - seq[i] * seq[i]);
    return out;
}

namespace {

Poly window_det(const PolySeq& seq, std::size_t start, std::size_t order) {
    PolyMatrix m(order, order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) m(i, j) = seq[start + i + j];
    }
    return det(m);
}

}  // namespace

LcxResult check_k_lcx(const PolySeq& seq, unsigned k) {
    if (k < 1 || k > 3) throw std::invalid_argument("check_k_lcx: k must be 1, 2 or 3");
    if (seq.size() < 2 * k + 1) {
        throw std::invalid_argument("check_k_lcx: need " + std::to_string(2 * k + 1) + " terms for k = " +
                                    std::to_string(k));
    }
    LcxResult out;
    out.k = k;
    std::vector<PolySeq> levels{seq};
    for (unsigned m = 1; m <= k; ++m) {
        levels.push_back(L_operator(levels.back()));
        const PolySeq& cur = levels.back();
        for (std::size_t j = 0; j < cur.size() && out.holds; ++j) {
            if (auto neg = cur[j].first_negative_term()) {
                out.holds = false;
                out.failed_level = m;
                out.failed_center = j + m;
                out.failed_value = cur[j];
                out.negative_term =
                    Poly::monomial(cur[j].context(), cur[j].term_monomial(*neg), cur[j].term_coeff(*neg)).str();
            }
        }
        if (!out.holds) break;
    }
    // Hankel-window forms of L^2 and L^3 (centre c of the original sequence).
    if (levels.size() > 2) {
        for (std::size_t j = 0; j < levels[2].size(); ++j) {
            const std::size_t c = j + 2;
            if (!(levels[2][j] == seq[c] * window_det(seq, c - 2, 3))) out.identities_agree = false;
        }
    }
    if (levels.size() > 3) {
        for (std::size_t j = 0; j < levels[3].size(); ++j) {
            const std::size_t c = j + 3;
            const Poly l1 = seq[c + 1] * seq[c - 1] - seq[c] * seq[c];
            const Poly rhs = l1 * seq[c] * seq[c] * window_det(seq, c - 3, 4) +
                             l1 * window_det(seq, c - 3, 3) * window_det(seq, c - 1, 3);
            if (!(levels[3][j] == rhs)) out.identities_agree = false;
        }
    }
    return out;
}

}  // namespace xtp::tp
