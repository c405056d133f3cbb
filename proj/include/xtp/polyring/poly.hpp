#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xtp/polyring/rational.hpp"
#include "xtp/polyring/var_context.hpp"
#include "xtp/simd/monomial_kernels.hpp"

namespace xtp {

using simd::Monomial;

// Full or partial numeric assignment of indeterminates, keyed by name.
using Assignment = std::map<std::string, Rational, std::less<>>;

// Sparse multivariate polynomial with exact rational coefficients.
//
// Terms are kept in descending graded-lexicographic order with no zero
// coefficients, so structural equality is polynomial equality. Storage is
// split into parallel monomial/degree/coefficient arrays so that the
// monomial kernels see contiguous exponent vectors.
//
// A Poly built without a context is a context-free constant; it combines with
// a polynomial over any context. Two polynomials over different contexts
// throw ContextMismatch.
class Poly {
public:
    Poly() = default;
    Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    explicit Poly(ContextPtr ctx);
    Poly(ContextPtr ctx, const Rational& c);

    static Poly variable(const ContextPtr& ctx, VarId v);
    static Poly variable(const ContextPtr& ctx, std::string_view name);
    static Poly monomial(const ContextPtr& ctx, const Monomial& m, const Rational& c);
    // Sums duplicate monomials and drops zeros.
    static Poly from_terms(const ContextPtr& ctx, std::vector<std::pair<Monomial, Rational>> terms);

    [[nodiscard]] const ContextPtr& context() const { return ctx_; }
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] bool is_monomial() const { return size() == 1; }
    [[nodiscard]] Rational constant_term() const;
    // Value of a constant polynomial; throws NotPolynomial-style
    // std::domain_error if the polynomial mentions an indeterminate.
    [[nodiscard]] Rational constant_value() const;

    [[nodiscard]] const Monomial& term_monomial(std::size_t i) const { return monos_[i]; }
    [[nodiscard]] const Rational& term_coeff(std::size_t i) const { return coeffs_[i]; }
    [[nodiscard]] std::uint32_t term_degree(std::size_t i) const { return degs_[i]; }
    [[nodiscard]] Rational coeff(const Monomial& m) const;
    [[nodiscard]] const Rational& leading_coeff() const { return coeffs_.front(); }

    [[nodiscard]] unsigned total_degree() const { return is_zero() ? 0 : degs_.front(); }
    [[nodiscard]] unsigned degree_in(VarId v) const;
    [[nodiscard]] bool mentions(VarId v) const { return degree_in(v) > 0; }
    // Coefficient of v^j, a polynomial in the remaining indeterminates.
    [[nodiscard]] Poly coefficient_of(VarId v, unsigned j) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    [[nodiscard]] Poly pow(unsigned e) const;

    // Exact multivariate division; nullopt when d does not divide *this.
    [[nodiscard]] std::optional<Poly> try_divide(const Poly& d) const;
    // Throws NotPolynomial when the division is inexact.
    [[nodiscard]] Poly divide_exact(const Poly& d) const;

    [[nodiscard]] Poly specialize(VarId v, const Rational& value) const;
    // Specializes every named indeterminate present in the assignment.
    [[nodiscard]] Poly specialize(const Assignment& values) const;
    [[nodiscard]] Poly substitute(VarId v, const Poly& value) const;
    // Throws MissingAssignment if a mentioned indeterminate is unassigned.
    [[nodiscard]] Rational evaluate(const Assignment& values) const;

    // The >=_x relation: every coefficient is nonnegative.
    [[nodiscard]] bool is_coeff_nonneg() const;
    // Index of the first (largest) term with a negative coefficient.
    [[nodiscard]] std::optional<std::size_t> first_negative_term() const;

    // Positive rational c such that *this / c has coprime integer coefficients.
    [[nodiscard]] Rational content() const;
    // Componentwise minimum exponent over all terms.
    [[nodiscard]] Monomial monomial_gcd() const;
    [[nodiscard]] Poly divide_monomial(const Monomial& m) const;

    // Re-embeds the polynomial into another context by indeterminate name.
    [[nodiscard]] Poly with_context(const ContextPtr& ctx) const;

    // Canonical text, e.g. "a0*q^2 - 4*q + 1/2".
    [[nodiscard]] std::string str() const;
    [[nodiscard]] std::size_t hash() const;

    friend bool operator==(const Poly& a, const Poly& b);

private:
    friend class PolyBuilder;
    void push_back(const Monomial& m, std::uint32_t d, Rational c);
    void adopt_context(const ContextPtr& ctx);

    ContextPtr ctx_;
    std::vector<Monomial> monos_;
    std::vector<std::uint32_t> degs_;
    std::vector<Rational> coeffs_;
};

// Returns the shared context of two operands (either may be context-free).
// Throws ContextMismatch.
ContextPtr unify_context(const ContextPtr& a, const ContextPtr& b);

// Canonical text of a monomial over a context ("1" for the empty monomial).
std::string monomial_str(const VarContext& ctx, const Monomial& m);

Monomial make_monomial(const VarContext& ctx, const std::vector<std::pair<std::string, unsigned>>& powers);

}  // namespace xtp
