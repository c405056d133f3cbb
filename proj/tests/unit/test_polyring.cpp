#include <gtest/gtest.h>

#include <random>

#include "../support/reference_poly.hpp"
#include "xtp/polyring/coeff_seq.hpp"
#include "xtp/polyring/errors.hpp"
#include "xtp/polyring/poly_text.hpp"
#include "xtp/polyring/ratfunc.hpp"
#include "xtp/polyring/series.hpp"

using namespace xtp;
using xtp::testing::random_poly;
using xtp::testing::ref_add;
using xtp::testing::ref_mul;
using xtp::testing::to_ref;

namespace {

ContextPtr ctx() {
    static const ContextPtr c = VarContext::make({"a0", "a1", "a2", "b0", "b2", "d", "lambda", "q", "n", "k", "z"});
    return c;
}

Poly P(const char* s) { return parse_poly(ctx(), s); }

}  // namespace

TEST(Rational, InlineAndBigPaths) {
    Rational big = Rational(std::numeric_limits<std::int64_t>::max());
    big += Rational(1);
    EXPECT_FALSE(big.is_small());
    big -= Rational(1);
    EXPECT_TRUE(big.is_small());
    EXPECT_EQ(Rational(6, 4), Rational::parse("3/2"));
    EXPECT_EQ((Rational(1, 3) + Rational(2, 3)), Rational(1));
    EXPECT_EQ(Rational::parse("-7").str(), "-7");
    EXPECT_EQ(binomial(10, 3), Rational(120));
    EXPECT_EQ(factorial(20).str(), "2432902008176640000");
    EXPECT_EQ(factorial(25).str(), "15511210043330985984000000");
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    Rational acc(5);
    acc.add_product(Rational(3), Rational(-4));
    EXPECT_EQ(acc, Rational(-7));
}

TEST(VarContext, Validation) {
    EXPECT_THROW(VarContext::make({"q", "q"}), std::invalid_argument);
    EXPECT_THROW(VarContext::make({"1q"}), std::invalid_argument);
    std::vector<std::string> many;
    for (int i = 0; i < 33; ++i) many.push_back("x" + std::to_string(i));
    EXPECT_THROW(VarContext::make(many), std::invalid_argument);
    EXPECT_THROW((void)ctx()->index("zz"), UnknownVariable);
}

TEST(PolyAdd, Examples) {
    EXPECT_EQ(P("(q+1) + (q-1)"), P("2*q"));
    EXPECT_EQ(P("q^2 + a0") + Poly(ctx()), P("q^2 + a0"));
    EXPECT_EQ((P("a0*n") + P("a1*k")).str(), "a0*n + a1*k");
}

TEST(PolyMul, Examples) {
    EXPECT_EQ(P("1+q") * P("1+q"), P("1 + 2*q + q^2"));
    EXPECT_EQ(P("a0*q - 3") * Poly(1), P("a0*q - 3"));
    EXPECT_EQ(P("lambda + d*q") * P("lambda - d*q"), P("lambda^2 - d^2*q^2"));
}

TEST(PolyText, CanonicalRendering) {
    EXPECT_EQ(P("1/2 - 4*q + a0*q^2").str(), "a0*q^2 - 4*q + 1/2");
    EXPECT_EQ(P("-q").str(), "-q");
    EXPECT_EQ(P("0").str(), "0");
    EXPECT_EQ(P("q*q*a0 - 3/6").str(), "a0*q^2 - 1/2");
    EXPECT_EQ(P("(a0 + q)^3").str(), "a0^3 + 3*a0^2*q + 3*a0*q^2 + q^3");
}

TEST(PolyText, RoundTripRandom) {
    std::mt19937 rng(5);
    for (int i = 0; i < 200; ++i) {
        Poly p = random_poly(rng, ctx(), 6, 3, 9);
        p *= Rational(1, 1 + i % 4);
        EXPECT_EQ(parse_poly(ctx(), p.str()), p) << p.str();
    }
}

TEST(PolyText, ParseErrorsCarryLocation) {
    try {
        (void)parse_poly(ctx(), "q + * 2", 3, 10);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3U);
        EXPECT_EQ(e.column(), 14U);
    }
    try {
        (void)parse_poly(ctx(), "a0 + bogus");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 6U);
    }
    EXPECT_THROW((void)parse_poly(ctx(), "q/(q+1)"), ParseError);
    EXPECT_THROW((void)parse_poly(ctx(), "(q+1"), ParseError);
    EXPECT_THROW((void)parse_poly(ctx(), ""), ParseError);
    EXPECT_THROW((void)parse_poly(ctx(), "q^"), ParseError);
}

TEST(PolyRing, MatchesReferenceArithmetic) {
    auto small = VarContext::make({"x", "y", "w"});
    std::mt19937 rng(17);
    for (int i = 0; i < 300; ++i) {
        Poly a = random_poly(rng, small, 5, 3, 9);
        Poly b = random_poly(rng, small, 5, 3, 9);
        EXPECT_EQ(to_ref(a + b, 3), ref_add(to_ref(a, 3), to_ref(b, 3)));
        EXPECT_EQ(to_ref(a * b, 3), ref_mul(to_ref(a, 3), to_ref(b, 3)));
    }
}

TEST(PolyRing, AxiomsOnRandomInstances) {
    auto small = VarContext::make({"x", "y", "w"});
    std::mt19937 rng(23);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, small, 5, 3, 9);
        Poly b = random_poly(rng, small, 5, 3, 9);
        Poly c = random_poly(rng, small, 5, 3, 9);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_TRUE((a - a).is_zero());
    }
}

TEST(PolyRing, KernelPathsAgree) {
    auto small = VarContext::make({"x", "y", "w", "v"});
    std::mt19937 rng(29);
    const std::string before(simd::active_kernels().name);
    for (int i = 0; i < 50; ++i) {
        Poly a = random_poly(rng, small, 8, 4, 9);
        Poly b = random_poly(rng, small, 8, 4, 9);
        ASSERT_TRUE(simd::select_kernels("scalar"));
        const Poly p1 = a * b;
        const std::string s1 = p1.str();
        if (simd::select_kernels("avx2")) {
            const Poly p2 = a * b;
            EXPECT_EQ(p2.str(), s1);
        }
    }
    simd::select_kernels(before);
}

TEST(PolyRing, NonnegativityClosedUnderRingOps) {
    auto small = VarContext::make({"x", "y", "w"});
    std::mt19937 rng(31);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng, small, 5, 3, 9);
        Poly b = random_poly(rng, small, 5, 3, 9);
        if (!a.is_coeff_nonneg() || !b.is_coeff_nonneg()) continue;
        EXPECT_TRUE((a + b).is_coeff_nonneg());
        EXPECT_TRUE((a * b).is_coeff_nonneg());
    }
}

TEST(PolyRing, ExponentOverflowThrows) {
    Poly q = P("q");
    EXPECT_THROW((void)q.pow(256), std::overflow_error);
    EXPECT_NO_THROW((void)q.pow(255));
}

TEST(PolyRing, ContextMismatchThrows) {
    auto other = VarContext::make({"q"});
    EXPECT_THROW((void)(P("q") + Poly::variable(other, "q")), ContextMismatch);
    EXPECT_EQ(P("q") + Poly(3), P("q + 3"));
}

TEST(PolyPredicates, CoefficientNonnegativity) {
    EXPECT_TRUE(P("1+2*q+q^2").is_coeff_nonneg());
    EXPECT_TRUE(Poly(ctx()).is_coeff_nonneg());
    // W2*W4 - W3^2 from the interior-peak rows 2, 2+0q; 4+2q; 8+16q.
    const Poly w = P("2") * P("8 + 16*q") - P("4 + 2*q").pow(2);
    EXPECT_EQ(w, P("16*q - 4*q^2"));
    EXPECT_FALSE(w.is_coeff_nonneg());
    EXPECT_EQ(w.term_coeff(*w.first_negative_term()), Rational(-4));
}

TEST(PolyEval, Examples) {
    EXPECT_EQ(P("1+2*q+q^2").evaluate({{"q", Rational(1)}}), Rational(4));
    EXPECT_EQ(P("a0*n + a2").evaluate({{"a0", Rational(1)}, {"a2", Rational(0)}, {"n", Rational(3)}}), Rational(3));
    EXPECT_EQ(P("(lambda + d*q)^2").evaluate({{"lambda", Rational(1)}, {"d", Rational(1)}, {"q", Rational(2)}}),
              Rational(9));
    EXPECT_THROW((void)P("q + a0").evaluate({{"q", Rational(1)}}), MissingAssignment);
}

TEST(PolyEval, HomomorphismOnRandomInstances) {
    auto small = VarContext::make({"x", "y", "w"});
    std::mt19937 rng(37);
    const Assignment at{{"x", Rational(2, 3)}, {"y", Rational(-5)}, {"w", Rational(7, 2)}};
    for (int i = 0; i < 100; ++i) {
        Poly a = random_poly(rng, small, 5, 3, 9);
        Poly b = random_poly(rng, small, 5, 3, 9);
        EXPECT_EQ((a * b).evaluate(at), a.evaluate(at) * b.evaluate(at));
        EXPECT_EQ((a + b).evaluate(at), a.evaluate(at) + b.evaluate(at));
    }
}

TEST(PolySubstitute, Examples) {
    EXPECT_EQ(substitute(P("q^2"), "q", RatFunc(P("q + lambda"))).to_poly(), P("q^2 + 2*lambda*q + lambda^2"));
    const RatFunc frac(P("q"), P("lambda + d*q"));
    EXPECT_EQ(substitute(P("q"), "q", frac), frac);
    EXPECT_EQ(substitute(P("1+q"), "q", RatFunc(Poly(1))).to_poly(), Poly(2));
    EXPECT_THROW((void)substitute(P("q"), "zz", RatFunc(Poly(1))), UnknownVariable);
}

TEST(PolySubstitute, HomomorphicOnRandomInstances) {
    auto small = VarContext::make({"x", "y", "w"});
    std::mt19937 rng(41);
    const RatFunc value(parse_poly(small, "x + 2*w"), parse_poly(small, "1 + y^2"));
    for (int i = 0; i < 60; ++i) {
        Poly a = random_poly(rng, small, 4, 2, 9);
        Poly b = random_poly(rng, small, 4, 2, 9);
        EXPECT_EQ(substitute(a * b, 0, value), substitute(a, 0, value) * substitute(b, 0, value));
        EXPECT_EQ(substitute(a + b, 0, value), substitute(a, 0, value) + substitute(b, 0, value));
    }
}

TEST(PolyDivision, ExactAndInexact) {
    const Poly a = P("q^2 - 1");
    EXPECT_EQ(a.divide_exact(P("q - 1")), P("q + 1"));
    EXPECT_FALSE(a.try_divide(P("q - 2")).has_value());
    EXPECT_THROW((void)a.divide_exact(P("a0 + q")), NotPolynomial);
    EXPECT_EQ(P("6*a0*q + 3").divide_exact(Poly(3)), P("2*a0*q + 1"));
    std::mt19937 rng(43);
    auto small = VarContext::make({"x", "y", "w"});
    for (int i = 0; i < 100; ++i) {
        Poly f = random_poly(rng, small, 4, 2, 9);
        Poly g = random_poly(rng, small, 4, 2, 9);
        if (g.is_zero()) continue;
        EXPECT_EQ((f * g).divide_exact(g), f);
    }
}

TEST(PolySpecialize, PartialAssignment) {
    const Poly p = P("a0*q^2 + a1*q + n");
    EXPECT_EQ(p.specialize({{"q", Rational(2)}}), P("4*a0 + 2*a1 + n"));
    EXPECT_EQ(p.specialize(ctx()->index("n"), Rational(1, 2)), P("a0*q^2 + a1*q + 1/2"));
    EXPECT_EQ(p.coefficient_of(ctx()->index("q"), 2), P("a0"));
}

TEST(RatFunc, Normalization) {
    const RatFunc r(P("2*q^2 + 2*q"), P("4*q"));
    EXPECT_TRUE(r.is_polynomial());
    EXPECT_EQ(r.to_poly(), P("1/2*q + 1/2"));
    const RatFunc s(P("q"), P("-2*a0 - 2*q"));
    EXPECT_EQ(s.den().leading_coeff().sign(), 1);
    EXPECT_EQ(s.num(), P("-1/2*q"));
    EXPECT_EQ(s.den(), P("a0 + q"));
    EXPECT_THROW(RatFunc(P("q"), Poly(ctx())), std::domain_error);
    EXPECT_THROW((void)s.to_poly(), NotPolynomial);
    const RatFunc sum = RatFunc(P("1"), P("a0 + q")) + RatFunc(P("q"), P("a0 + q"));
    EXPECT_EQ(sum, RatFunc(P("1 + q"), P("a0 + q")));
    EXPECT_EQ(RatFunc(P("a0 + q"), P("1 + q")) * RatFunc(P("1 + q"), P("a0 + q")), RatFunc(Poly(1)));
}

TEST(Series, Examples) {
    const SeriesPoly one_minus_z({P("1"), P("-1"), P("0"), P("0"), P("0")});
    const SeriesPoly geo = one_minus_z.reciprocal();
    for (std::size_t i = 0; i <= 4; ++i) EXPECT_EQ(geo[i], Poly(1));
    const SeriesPoly a({P("1"), P("1"), P("0")});
    const SeriesPoly b({P("1"), P("-1"), P("0")});
    EXPECT_EQ(a * b, SeriesPoly({P("1"), P("0"), P("-1")}));
    const SeriesPoly bad({P("q"), P("1")});
    EXPECT_THROW((void)bad.reciprocal(), NotPolynomial);
    EXPECT_THROW((void)(a + SeriesPoly({P("1")})), std::invalid_argument);
}

TEST(Series, ReciprocalIdentityRandom) {
    std::mt19937 rng(47);
    auto small = VarContext::make({"x", "y"});
    for (int i = 0; i < 30; ++i) {
        std::vector<Poly> c{Poly(small, Rational(1 + i % 3))};
        for (int j = 0; j < 6; ++j) c.push_back(random_poly(rng, small, 3, 2, 5));
        const SeriesPoly s(c);
        const SeriesPoly prod = s * s.reciprocal();
        EXPECT_EQ(prod, SeriesPoly::one(6));
    }
    const SeriesRat r({RatFunc(parse_poly(small, "x")), RatFunc(parse_poly(small, "y")), RatFunc(Poly(1))});
    EXPECT_EQ(r * r.reciprocal(), SeriesRat::one(2));
}

TEST(CoeffSeq, FormsAndLists) {
    const auto s = CoeffSeq::closed_form(P("2*n + 1"), "n");
    EXPECT_EQ(s.at(3), Poly(7));
    const auto shifted = CoeffSeq::closed_form(P("n^2"), "n", 1);
    EXPECT_EQ(shifted.at(3), Poly(4));
    const auto l = CoeffSeq::list({P("q"), P("a0")}, 1);
    EXPECT_EQ(l.at(2), P("a0"));
    EXPECT_THROW((void)l.at(0), std::out_of_range);
    EXPECT_EQ(l.specialize({{"q", Rational(3)}}).at(1), Poly(3));
}
