#pragma once

#include "xtp/triangles/transforms.hpp"
#include "xtp/triangles/triangle.hpp"

namespace xtp::tri {

// Shared indeterminate set for the built-in families:
// a0 a1 a2 b0 b1 b2 d lambda mu gamma m r p x q n k.
const ContextPtr& family_context();

// Classical triangles.
RecurrenceSpec pascal_spec();
RecurrenceSpec eulerian_spec();       // column k counts permutations with k-1 descents
RecurrenceSpec stirling2_spec();      // set partitions by block count
RecurrenceSpec stirling1_spec();      // permutations by cycle count
RecurrenceSpec whitney_spec();        // r-Whitney numbers of the first kind in (m, r)

// The seven two-term families in (a0, a1, a2, b0, b1, b2) with row
// indeterminate q, indexed 1..7. Families 6 and 7 carry a rational
// coefficient in a1 and are stored with denominator a1.
RecurrenceSpec two_term_family(int which);

// The three four-term families in (a0, a1, a2, b0, b1, b2, d, lambda), indexed
// 1..3, stored with denominator lambda.
FourTermParams four_term_family_params(int which);
RecurrenceSpec four_term_family(int which);

// T(n,k) = (a0 n - mu b1 k + a2) T(n-1,k) + (b0 n + b1 k + b2) T(n-1,k-1);
// its rows evaluated at q = mu have a product form.
RecurrenceSpec evaluated_product_spec();
Poly evaluated_product_factor();  // in the level variable k

// Factor of the product form of family 1: row n is prod_{k=1..n} factor(k).
Poly family1_product_factor();
// Family 2 rows are (q + a0)^n prod_{k=0..n-1} (b2 + (b0 + b1) k); the
// returned factor is evaluated at k = 1..n.
Poly family2_product_factor();

// Argument shift pair: A(n,k) = (a0 n - lambda b1 k + a2) A(n-1,k) + (b0 n + b1 k + b2) A(n-1,k-1)
// and the recurrence its shift by lambda is expected to satisfy.
RecurrenceSpec shift_source_spec();
RecurrenceSpec shift_target_spec();

// Pair for the quadratic-substitution identity of family 6: S is
// (a1 k + a2 | b0 (n - 2k + 1)) and E is (a1 k + a2 | a1 (n - k) + a2), both in x.
RecurrenceSpec substitution_s_spec();
RecurrenceSpec substitution_e_spec();

// Stirling permutations by ascent plateaus.
RecurrenceSpec stirling_permutation_spec();
// Interior peaks shifted by one row: row n is W_{n+1}.
RecurrenceSpec interior_peak_spec();
// Left peaks.
RecurrenceSpec left_peak_spec();
// Minimax trees in (p, q) with row indeterminate x.
RecurrenceSpec minimax_spec();

// Set-partition walk: r = 1, s_k = k + 1, t_k = k, whose first column is
// the Bell numbers.
RecurrenceSpec bell_walk_spec();
// Walk with r0..r(L-1), s0..s(L-1), t1..tL as independent indeterminates
// in their own context; coefficients outside those ranges are zero, so the
// first column is exact up to row 2L - 1.
RecurrenceSpec symbolic_walk_spec(std::size_t levels);

}  // namespace xtp::tri
