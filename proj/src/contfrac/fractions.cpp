#include "xtp/contfrac/fractions.hpp"

#include <stdexcept>

#include "xtp/polyring/poly_text.hpp"
#include "xtp/triangles/families.hpp"

namespace xtp::cf {
namespace {

Poly P(std::string_view s) { return parse_poly(tri::family_context(), s); }

LevelFn level(std::string_view form) {
    const Poly f = P(form);
    const VarId n = tri::family_context()->index("n");
    return [f, n](long i) { return f.specialize(n, Rational(static_cast<long long>(i))); };
}

SFraction sform(std::string_view even, std::string_view odd, const std::string& label) {
    return sfraction(level(even), level(odd), label);
}

JFraction jform(std::string_view s, std::string_view r_next, const std::string& label) {
    return jfraction(level(s), level(r_next), label);
}

// Contraction of an S-fraction plus a constant diagonal term at every level.
JFraction shifted(const SFraction& s, std::string_view beta) {
    return contract_with_shift(s, CoeffSeq::constant(P(beta)));
}

}  // namespace

SFraction family_sfraction(int which) {
    switch (which) {
        case 1:
            return sform("a2 + b2*q + n*(a0 + b0*q)", "(a0 + b0*q)*(n + 1)", "family1");
        case 2:
            return sform("(b2 + n*(b0 + b1))*(q + a0)", "(b0 + b1)*(q + a0)*(n + 1)", "family2");
        default:
            throw std::invalid_argument("family_sfraction: only families 1 and 2 have an S-fraction");
    }
}

JFraction family_jfraction(int which) {
    switch (which) {
        case 1:
        case 2:
            return contract(family_sfraction(which));
        case 3:
            return shifted(sform("(n*b1 + b2)*q", "(n + 1)*(a1 + b1*q)", "family3"), "a2");
        case 4:
            return shifted(sform("n*a0 + a2", "(n + 1)*(a0 + b0*q)", "family4"), "b2*q");
        case 5:
            return jform("n*(a1 + b0*q) + a2 + b2*q", "(n + 1)*(n*a1*b0 + a2*b0 + a1*b2)*q", "family5");
        case 6:
            return jform("(a1*n + a2)*(a1*q + 2*b0)", "a1*b0*(a1*n + 2*a2)*(n + 1)*(a1*q + 2*b0)/2", "family6");
        case 7:
            return jform("(a1*n + a2)*(a1 + 2*b0*q)", "a1*b0*(a1*n + 2*a2)*(n + 1)*(a1 + 2*b0*q)*q/2", "family7");
        default:
            throw std::invalid_argument("family_jfraction: index must be 1..7");
    }
}

Poly family5_branch_substitute(Family5Branch branch, const Poly& p) {
    const auto& ctx = tri::family_context();
    switch (branch) {
        case Family5Branch::B2Zero:
            return p.specialize(ctx->index("b2"), Rational(0));
        case Family5Branch::A2Zero:
            return p.specialize(ctx->index("a2"), Rational(0));
        case Family5Branch::B2EqB0:
            return p.substitute(ctx->index("b2"), P("b0"));
        case Family5Branch::A2EqA1:
            return p.substitute(ctx->index("a2"), P("a1"));
    }
    throw std::invalid_argument("family5_branch_substitute: bad branch");
}

JFraction family5_branch_jfraction(Family5Branch branch) {
    switch (branch) {
        case Family5Branch::B2Zero:
            return contract(sform("n*a1 + a2", "(n + 1)*b0*q", "family5.b2=0"));
        case Family5Branch::A2Zero:
            return contract(sform("(n*b0 + b2)*q", "(n + 1)*a1", "family5.a2=0"));
        case Family5Branch::B2EqB0: {
            // The S-fraction alone misses a2 on level 0.
            const Poly beta0 = P("a2");
            return contract_with_shift(sform("(n + 1)*b0*q", "n*a1 + a1 + a2", "family5.b2=b0"),
                                       CoeffSeq::generator([beta0](long i) { return i == 0 ? beta0 : Poly(0); },
                                                           "a2 at level 0"));
        }
        case Family5Branch::A2EqA1: {
            const Poly beta0 = P("b2*q");
            return contract_with_shift(sform("(n + 1)*a1", "(n*b0 + b0 + b2)*q", "family5.a2=a1"),
                                       CoeffSeq::generator([beta0](long i) { return i == 0 ? beta0 : Poly(0); },
                                                           "b2*q at level 0"));
        }
    }
    throw std::invalid_argument("family5_branch_jfraction: bad branch");
}

JFraction four_term_jfraction(int which) {
    const Poly lambda = P("lambda");
    switch (which) {
        case 1:
            return scaled(shifted(sform("(n*b1 + b2)*q", "(n + 1)*((a1*d + b1)*q + lambda*a1)", "four-term1"),
                                  "a2*(lambda + d*q)"),
                          lambda);
        case 2:
            return scaled(shifted(sform("(n*a0 + a2)*(lambda + d*q)", "(n + 1)*((a0*d + b0)*q + lambda*a0)",
                                        "four-term2"),
                                  "b2*q"),
                          lambda);
        case 3:
            return scaled(jform("n*(a1*(lambda + d*q) + b0*q) + a2*(lambda + d*q) + b2*q",
                                "(n + 1)*(n*a1*b0 + a2*b0 + a1*b2)*q*(lambda + d*q)", "four-term3"),
                          lambda);
        default:
            throw std::invalid_argument("four_term_jfraction: index must be 1..3");
    }
}

JFraction factorial_jfraction() { return contract(sform("n + 1", "n + 1", "factorial")); }
JFraction double_factorial_jfraction() { return contract(sform("2*n + 1", "2*(n + 1)", "double factorial")); }
JFraction whitney_jfraction() { return jform("r + q + 2*m*n", "(r + q + m*n)*m*(n + 1)", "whitney"); }
SFraction whitney_sfraction() { return sform("r + q + m*n", "m*(n + 1)", "whitney"); }
SFraction stirling_permutation_sfraction() { return sform("(2*n + 1)*q", "2*(n + 1)", "stirling permutations"); }
JFraction interior_peak_jfraction() { return jform("2*(n + 1)", "(n + 2)*(n + 1)*q", "interior peaks"); }
JFraction left_peak_jfraction() { return jform("2*n + 1", "(n + 1)^2*q", "left peaks"); }
JFraction minimax_jfraction() {
    return jform("(1 + p)*(1 + q)*(n + 1)", "(1 + p)*(1 + q)*(n + 2)*(n + 1)*x/2", "minimax");
}

SFraction gauss_sfraction(const Poly& a, const Poly& b, const Poly& c) {
    return sfraction([a, b](long n) { return a + b * Rational(static_cast<long long>(n)); },
                     [b, c](long n) { return (b + c) * Rational(static_cast<long long>(n + 1)); }, "gauss");
}

}  // namespace xtp::cf
