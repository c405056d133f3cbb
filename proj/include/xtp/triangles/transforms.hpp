#pragma once

#include <optional>
#include <string>

#include "xtp/triangles/triangle.hpp"

namespace xtp::tri {

// T*(n,k) = T(n, n-k).
Triangle reciprocal(const Triangle& t);

// A°(n,k) = sum_i C(n,i) A(i,k) gamma^(n-i).
Triangle gamma_binomial_transform(const Triangle& t, const Poly& gamma);

// Coefficient triangle of B_n(q) = A_n(q + shift).
Triangle shift_row_gf(const Triangle& t, const Poly& shift);

// Parameters of the general four-term recurrence
//   T(n,k) = lambda (a0 n + a1 k + a2) T(n-1,k) + (b0 n + b1 k + b2) T(n-1,k-1)
//            + d (d a1 - b1) / lambda (n-k+1) T(n-1,k-2).
struct FourTermParams {
    Poly a0{0};
    Poly a1{0};
    Poly a2{0};
    Poly b0{0};
    Poly b1{0};
    Poly b2{0};
    Poly d{0};
    Poly lambda{1};
};

// The four-term recurrence with lambda cleared: the stored rows are
// lambda^n T(n,k) and the spec's denominator is lambda.
RecurrenceSpec four_term_spec(const ContextPtr& ctx, const FourTermParams& p, std::string name);

// Two-term companion array A whose row polynomials satisfy
// T_n(q) = (lambda + d q)^n A_n(q / (lambda + d q)).
RecurrenceSpec companion_spec(const ContextPtr& ctx, const FourTermParams& p, std::string name);

// Checks T_n(q) = sum_k A(n,k) q^k (lambda + d q)^(n-k) for n <= upto, with
// the left side divided by tT's declared denominator to the n-th power.
// Returns the first failing n, or nullopt on success.
std::optional<std::size_t> companion_relation_mismatch(const Triangle& tT, const Triangle& tA, const Poly& lambda,
                                                       const Poly& d, std::size_t upto);
inline bool check_companion_relation(const Triangle& tT, const Triangle& tA, const Poly& lambda, const Poly& d,
                                     std::size_t upto) {
    return !companion_relation_mismatch(tT, tA, lambda, d, upto).has_value();
}

// z_n = sum_k M(n,k) x_k y_(n-k) for n <= upto.
PolySeq convolution(const Triangle& m, const PolySeq& x, const PolySeq& y, std::size_t upto);

// Checks seq[n] = D^n prod_{j=1..n} factor(k := j) for n <= upto, where D is
// `denominator`. Returns the first failing n, or nullopt on success.
std::optional<std::size_t> product_formula_mismatch(const PolySeq& seq, const Poly& factor, VarId level_var,
                                                    const Poly& denominator, std::size_t upto);

// Row polynomials evaluated at row_var := value.
PolySeq evaluate_rows(const Triangle& t, const Poly& value);

// seq'[n] = D^n seq[n].
PolySeq scale_by_power(const PolySeq& seq, const Poly& base);

// Checks D^n E_n(x) = sum_k S(n,k) (2 a1)^k D^(n-k) x^k (1+x)^(n-2k) with
// D = b0, where E and S are materialized triangles in row indeterminate x.
// S(n,k) must vanish for 2k > n. Returns the first failing n.
std::optional<std::size_t> quadratic_substitution_mismatch(const Triangle& tE, const Triangle& tS, const Poly& a1,
                                                           const Poly& b0, std::size_t upto);

}  // namespace xtp::tri
