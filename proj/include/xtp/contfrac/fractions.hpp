#pragma once

#include "xtp/contfrac/contfrac.hpp"

namespace xtp::cf {

// Continued fractions of the built-in triangle families, over
// tri::family_context() and in the same scaling as the stored rows: when a
// family is stored with denominator D, the fraction here has s scaled by D
// and r by D^2.

// Row generating functions of two-term family 1..7.
JFraction family_jfraction(int which);
// S-fractions for the families that have one (1 and 2).
SFraction family_sfraction(int which);

// Family 5 collapses to an S-fraction when one of b2, a2 vanishes.
enum class Family5Branch { B2Zero, A2Zero, B2EqB0, A2EqA1 };
// The branch's parameter restriction as an assignment-free substitution:
// returns the J-fraction of family 5 rewritten through an S-fraction plus a
// level-0 diagonal term (zero for the first two branches).
JFraction family5_branch_jfraction(Family5Branch branch);
// Parameter values imposing the branch restriction (b2 := 0, a2 := 0,
// b2 := b0, a2 := a1 respectively), applied by substitution.
Poly family5_branch_substitute(Family5Branch branch, const Poly& p);

// Four-term family 1..3, scaled by lambda.
JFraction four_term_jfraction(int which);

JFraction factorial_jfraction();         // sum n! z^n
JFraction double_factorial_jfraction();    // sum (2n-1)!! z^n
JFraction whitney_jfraction();
SFraction whitney_sfraction();
SFraction stirling_permutation_sfraction();
JFraction interior_peak_jfraction();
JFraction left_peak_jfraction();
JFraction minimax_jfraction();

// S-fraction of gauss_series(a, b, c): alpha_{2n} = a + n b, alpha_{2n+1} = (b + c)(n + 1).
SFraction gauss_sfraction(const Poly& a, const Poly& b, const Poly& c);

}  // namespace xtp::cf
