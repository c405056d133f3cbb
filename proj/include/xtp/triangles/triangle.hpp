#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xtp/polyring/coeff_seq.hpp"
#include "xtp/polyring/poly.hpp"

namespace xtp::tri {

using PolySeq = std::vector<Poly>;

enum class Kind { RowShift, ColumnWalk };

// Declarative triangle recurrence with T(0,0) = 1 and T(n,k) = 0 unless
// 0 <= k <= n.
//
//   RowShift:   T(n,k) = c0 T(n-1,k) + c1 T(n-1,k-1) + c2 T(n-1,k-2)
//               with c0, c1, c2 polynomials in n, k and parameters.
//   ColumnWalk: D(n,k) = r(k-1) D(n-1,k-1) + s(k) D(n-1,k) + t(k+1) D(n-1,k+1)
//               with r, s, t sequences indexed by column.
//
// `denominator` records a constant-in-n factor D that was cleared from the
// coefficients: the materialized rows are D^n times the rows of the
// recurrence as originally stated. Checks that compare against external
// formulas multiply through by it.
struct RecurrenceSpec {
    Kind kind = Kind::RowShift;
    std::string name;
    ContextPtr ctx;
    std::string row_var = "q";
    std::string n_var = "n";
    std::string k_var = "k";

    Poly c0;
    Poly c1;
    Poly c2;

    CoeffSeq r;
    CoeffSeq s;
    CoeffSeq t;

    Poly denominator{1};

    static RecurrenceSpec row_shift(ContextPtr ctx, std::string name, Poly c0, Poly c1, Poly c2 = Poly(0));
    static RecurrenceSpec column_walk(ContextPtr ctx, std::string name, CoeffSeq r, CoeffSeq s, CoeffSeq t);

    [[nodiscard]] RecurrenceSpec specialize(const Assignment& values) const;
    // Throws std::invalid_argument if RowShift coefficients mention the row
    // indeterminate or a ColumnWalk closed form mentions n.
    void validate() const;
};

struct Triangle {
    std::shared_ptr<const RecurrenceSpec> spec;  // null for derived triangles
    std::string provenance;
    ContextPtr ctx;
    std::string row_var = "q";
    Poly denominator{1};
    std::vector<std::vector<Poly>> rows;

    [[nodiscard]] std::size_t depth() const { return rows.empty() ? 0 : rows.size() - 1; }
    // Zero outside 0 <= k <= n; throws std::out_of_range if n > depth.
    [[nodiscard]] Poly entry(long n, long k) const;
    [[nodiscard]] std::vector<Poly> column(long k) const;
};

Triangle build_triangle(const RecurrenceSpec& spec, std::size_t depth);

// Sum_k T(n,k) q^k with q the triangle's row indeterminate.
Poly row_gf(const Triangle& t, std::size_t n);
PolySeq row_gfs(const Triangle& t);

// Triangle whose row n holds the coefficients of seq[n] in `row_var`;
// throws std::invalid_argument if seq[n] has degree above n.
Triangle triangle_from_row_gfs(const ContextPtr& ctx, const std::string& row_var, const PolySeq& seq,
                               std::string provenance);

// First (n, k) at which the triangle fails to reproduce the spec's
// recurrence from its previous row, recomputed independently of
// build_triangle; nullopt if every entry matches.
std::optional<std::pair<std::size_t, std::size_t>> recurrence_residual(const RecurrenceSpec& spec,
                                                                        const Triangle& t);

// Canonical golden text: one row per line, entries tab-separated.
std::string to_golden(const Triangle& t);
Triangle from_golden(const ContextPtr& ctx, const std::string& text);

}  // namespace xtp::tri
