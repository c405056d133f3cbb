#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xtp/polyring/coeff_seq.hpp"
#include "xtp/polyring/ratfunc.hpp"
#include "xtp/polyring/series.hpp"
#include "xtp/triangles/triangle.hpp"

namespace xtp::cf {

using LevelFn = std::function<Poly(long)>;

// 1 / (1 - alpha_0 z / (1 - alpha_1 z / (1 - ...)))
struct SFraction {
    CoeffSeq alpha;  // alpha_0, alpha_1, ...
};

// 1 / (1 - s_0 z - r_1 z^2 / (1 - s_1 z - r_2 z^2 / (1 - ...)))
struct JFraction {
    CoeffSeq s;  // s_0, s_1, ...
    CoeffSeq r;  // r_1, r_2, ... (index 0 unused)
};

// Finite lists are read as zero past their end.
SFraction sfraction(std::vector<Poly> alphas);
// alpha_{2n} = even(n), alpha_{2n+1} = odd(n).
SFraction sfraction(LevelFn even, LevelFn odd, const std::string& label);
JFraction jfraction(std::vector<Poly> s, std::vector<Poly> r_from_1);
// s_n = s(n), r_{n+1} = r_next(n).
JFraction jfraction(LevelFn s, LevelFn r_next, const std::string& label);

// s_0 = alpha_0, s_n = alpha_{2n-1} + alpha_{2n}, r_n = alpha_{2n-2} alpha_{2n-1}.
JFraction contract(const SFraction& s);
// The contraction with an extra diagonal term: s_n = beta_n + alpha_{2n-1} + alpha_{2n}.
JFraction contract_with_shift(const SFraction& s, const CoeffSeq& beta);
// s_n -> f s_n, r_n -> f^2 r_n: the n-th series coefficient scales by f^n.
JFraction scaled(const JFraction& j, const Poly& f);

// Series coefficients 0..depth, computed by walking the unit-up-step
// triangle D*(n,k) = D*(n-1,k-1) + s_k D*(n-1,k) + r_{k+1} D*(n-1,k+1) and
// reading its first column. Only columns that can still return to 0 by
// row `depth` are kept.
SeriesPoly j_expand(const JFraction& j, std::size_t depth, const ContextPtr& ctx = nullptr);
SeriesPoly s_expand(const SFraction& s, std::size_t depth, const ContextPtr& ctx = nullptr);

struct ExtractedJFraction {
    std::vector<RatFunc> s;  // s_0, s_1, ...
    std::vector<RatFunc> r;  // r_1, r_2, ... stored from position 0
    // Level at which r vanished: the fraction terminates and the prefix is exact.
    std::optional<std::size_t> terminated_at;

    [[nodiscard]] bool polynomial() const;
    // Throws NotPolynomial when a level is not polynomial.
    [[nodiscard]] JFraction to_jfraction() const;
};

// Inverts j_expand by repeated reciprocal-and-strip: with f_0 = f,
// 1/f_i = 1 - s_i z - r_{i+1} z^2 f_{i+1}. Returns s_0..s_levels and
// r_1..r_levels; s_levels is omitted when depth = 2*levels. Requires
// f[0] = 1 and depth >= 2*levels. A zero r stops the extraction.
ExtractedJFraction extract_jfraction(const SeriesPoly& f, std::size_t levels);

// 1 + sum_{n>=1} z^n prod_{k=0}^{n-1} (a + b k) / (1 - c (k+1) z), truncated.
SeriesPoly gauss_series(const Poly& a, const Poly& b, const Poly& c, std::size_t depth);

// The J-fraction of a column walk's first column: s_n = s(n),
// r_n = r(n-1) t(n).
JFraction triangle_jfraction(const tri::RecurrenceSpec& walk);

// Series sum_n T_n(q) z^n from a materialized triangle (as stored).
SeriesPoly row_series(const tri::Triangle& t);
SeriesPoly first_column_series(const tri::Triangle& t);

}  // namespace xtp::cf
