#pragma once

#include <optional>
#include <string>

#include "xtp/totalpos/tp.hpp"
#include "xtp/triangles/triangle.hpp"

namespace xtp::tp {

struct FactorizationResult {
    bool holds = false;
    std::size_t size = 0;
    std::optional<std::pair<std::size_t, std::size_t>> mismatch;  // first differing entry
    PolyMatrix product;  // D* V* D*^T
    PolyMatrix hankel;   // Hankel matrix of the walk's first column
};

// For a column walk D, checks D* V* D*^T = H on the leading size x size
// block, where D* is the walk with unit up-steps, level steps s_k and
// down-steps r(k-1) t(k), V* = diag(prod_{i<=k} r(i-1) t(i)) and H is the
// Hankel matrix of D's first column.
FactorizationResult fundamental_identity_check(const tri::RecurrenceSpec& walk, std::size_t size);

// out[i-1] = seq[i-1] seq[i+1] - seq[i]^2 for 1 <= i <= |seq| - 2.
PolySeq L_operator(const PolySeq& seq);

struct LcxResult {
    bool holds = true;
    std::size_t k = 0;
    // On failure: the iteration (1..k), the index of the original sequence at
    // which the failing entry is centred, the entry and its negative term.
    std::size_t failed_level = 0;
    std::size_t failed_center = 0;
    Poly failed_value;
    std::string negative_term;
    // L^2 and L^3 recomputed through Hankel-window determinants agree with
    // the direct iteration wherever both are defined.
    bool identities_agree = true;
};

// k-x-log-convexity for k in 1..3: L^m(seq) has nonnegative coefficients for
// m = 1..k. Throws std::invalid_argument if |seq| < 2k + 1 or k is outside 1..3.
LcxResult check_k_lcx(const PolySeq& seq, unsigned k);

}  // namespace xtp::tp
