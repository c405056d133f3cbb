#include <gtest/gtest.h>

#include <random>

#include "../support/triangle_helpers.hpp"
#include "xtp/polyring/poly_text.hpp"
#include "xtp/totalpos/identities.hpp"
#include "xtp/triangles/families.hpp"

using namespace xtp;
using namespace xtp::tp;

namespace {

Poly P(const char* s) { return parse_poly(tri::family_context(), s); }

PolySeq nums(std::initializer_list<long> v) {
    PolySeq out;
    for (long x : v) out.emplace_back(Rational(static_cast<long long>(x)));
    return out;
}

PolyMatrix numeric(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Poly>> r;
    for (const auto& row : rows) r.push_back(nums(row));
    return PolyMatrix::from_rows(r);
}

PolySeq peak_sequence(std::size_t count) {
    return tri::row_gfs(tri::build_triangle(tri::interior_peak_spec(), count - 1));
}

ContextPtr small_ctx() {
    static const ContextPtr c = VarContext::make({"x", "y", "z"});
    return c;
}

PolyMatrix random_matrix(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> expo(0, 2);
    std::uniform_int_distribution<int> terms(0, 3);
    PolyMatrix m(n, n, small_ctx());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Poly p(small_ctx());
            for (int t = terms(rng); t > 0; --t) {
                Monomial mono{};
                for (int v = 0; v < 3; ++v) mono.e[v] = static_cast<std::uint8_t>(expo(rng));
                p += Poly::monomial(small_ctx(), mono, Rational(coef(rng)));
            }
            m(i, j) = p;
        }
    }
    return m;
}

}  // namespace

TEST(Matrix, HankelAndMinorExamples) {
    const PolyMatrix h = hankel(nums({1, 1, 2, 6, 24}), 3);
    EXPECT_EQ(h, numeric({{1, 1, 2}, {1, 2, 6}, {2, 6, 24}}));
    EXPECT_EQ(minor(h, {0, 1, 2}, {0, 1, 2}), Poly(4));
    EXPECT_EQ(minor(numeric({{1, 1}, {1, 2}}), {0, 1}, {0, 1}), Poly(1));
    EXPECT_EQ(minor(h, {2}, {1}), Poly(6));
    EXPECT_EQ(hankel(nums({1, 1, 1, 1, 1}), 3), numeric({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
    EXPECT_THROW(hankel(nums({1, 1, 2}), 3), std::invalid_argument);
    EXPECT_THROW(minor(h, {0, 1}, {0}), std::invalid_argument);
}

TEST(Matrix, TridiagPlacement) {
    const PolyMatrix m = tridiag(nums({1, 3, 5}), nums({1, 1}), nums({0, 1, 4}), 3);
    EXPECT_EQ(m, numeric({{1, 1, 0}, {1, 3, 1}, {0, 4, 5}}));
    EXPECT_EQ(tridiag(nums({2, 3}), nums({0}), nums({0, 0}), 2), numeric({{2, 0}, {0, 3}}));
}

TEST(Matrix, CofactorAgreesWithElimination) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const PolyMatrix m = random_matrix(rng, n);
        EXPECT_EQ(det_cofactor(m), det_bareiss(m)) << "trial " << trial;
    }
    // Singular and pivot-swapping cases.
    EXPECT_TRUE(det_bareiss(numeric({{1, 2}, {2, 4}})).is_zero());
    EXPECT_EQ(det_bareiss(numeric({{0, 1}, {1, 0}})), Poly(-1));
}

TEST(TotalPositivity, PascalBlockIsTP) {
    const tri::Triangle t = tri::build_triangle(tri::pascal_spec(), 4);
    PolyMatrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) m(i, j) = t.entry(static_cast<long>(i), static_cast<long>(j));
    }
    const TPReport rep = is_x_tp_r(m, 5);
    EXPECT_TRUE(rep.passed) << rep.summary();
    EXPECT_EQ(rep.minors_checked, 251u);
}

TEST(TotalPositivity, SmallFailureWitness) {
    const TPReport rep = is_x_tp_r(numeric({{1, 2}, {2, 1}}), 2);
    ASSERT_FALSE(rep.passed);
    ASSERT_TRUE(rep.witness.has_value());
    EXPECT_EQ(rep.witness->order, 2u);
    EXPECT_EQ(rep.witness->minor, Poly(-3));
    EXPECT_EQ(rep.to_json()["result"], "fail");
    EXPECT_EQ(rep.to_json()["witness"]["minor"], "-3");
    EXPECT_TRUE(is_x_tp_r(numeric({{1, 2}, {2, 1}}), 1).passed);
}

TEST(TotalPositivity, PeakHankelFailsAtOrderTwo) {
    const TPReport rep = is_x_tp_r(hankel(peak_sequence(7), 4), 2);
    ASSERT_FALSE(rep.passed);
    EXPECT_EQ(rep.witness->order, 2u);
    EXPECT_FALSE(rep.witness->minor.is_coeff_nonneg());
}

TEST(TotalPositivity, WitnessIndependentOfJobs) {
    const PolyMatrix h = hankel(peak_sequence(9), 5);
    const TPReport one = is_x_tp_r(h, 3, {1, false});
    const TPReport many = is_x_tp_r(h, 3, {4, false});
    ASSERT_FALSE(one.passed);
    EXPECT_EQ(one.to_json(), many.to_json());
    const PolyMatrix ok = hankel(tri::row_gfs(tri::build_triangle(tri::eulerian_spec(), 8)), 5);
    EXPECT_EQ(is_x_tp_r(ok, 4, {1, false}).to_json(), is_x_tp_r(ok, 4, {3, false}).to_json());
}

TEST(TotalPositivity, ContiguousModeIsAPrefilter) {
    // Every contiguous minor vanishes; rows {0,2} x cols {0,2} gives -1.
    const PolyMatrix n = numeric({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}});
    const TPReport fast = is_x_tp_r(n, 2, {1, true});
    EXPECT_TRUE(fast.passed);
    EXPECT_TRUE(fast.contiguous_only);
    EXPECT_EQ(fast.minors_checked, 9u + 4u);
    const TPReport full = is_x_tp_r(n, 2);
    ASSERT_FALSE(full.passed);
    EXPECT_EQ(full.witness->rows, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(full.witness->cols, (std::vector<std::size_t>{0, 2}));
}

TEST(TotalPositivity, MonotoneInOrder) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(0, 4);
    for (int trial = 0; trial < 30; ++trial) {
        PolyMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = Poly(d(rng));
        }
        for (std::size_t r = 2; r <= 4; ++r) {
            if (is_x_tp_r(m, r).passed) EXPECT_TRUE(is_x_tp_r(m, r - 1).passed);
        }
    }
}

TEST(TridiagonalCriteria, Examples) {
    const PolySeq s = nums({1, 3, 5, 7, 9, 11});
    const PolySeq r = nums({1, 2, 3, 4, 5, 6});
    const PolySeq t = nums({0, 1, 2, 3, 4, 5, 6});
    const TridiagCriteria ok = check_tridiag_criteria(s, r, t, 5);
    EXPECT_TRUE(ok.criterion[0]);
    const TridiagCriteria none = check_tridiag_criteria(nums({0, 0, 0, 0}), nums({1, 1, 1, 1}), nums({0, 1, 1, 1, 1}), 3);
    EXPECT_FALSE(none.any());
}

TEST(TridiagonalCriteria, SplitInstanceSatisfiesFirstCriterion) {
    // Diagonal beta_n + alpha_{2n-1} + alpha_{2n}, superdiagonal alpha_{2n},
    // subdiagonal alpha_{2n-1}, with symbolic nonnegative alpha and beta.
    const ContextPtr ctx = VarContext::make({"a0", "a1", "a2", "a3", "a4", "a5", "a6", "a7", "a8", "a9", "b0", "b1", "b2",
                                             "b3", "b4"});
    auto v = [&](const std::string& name) { return Poly::variable(ctx, name); };
    PolySeq s;
    PolySeq r;
    PolySeq t{Poly(0)};
    for (int n = 0; n <= 4; ++n) {
        Poly diag = v("b" + std::to_string(n)) + v("a" + std::to_string(2 * n));
        if (n > 0) diag += v("a" + std::to_string(2 * n - 1));
        s.push_back(diag);
        r.push_back(v("a" + std::to_string(2 * n)));
        t.push_back(v("a" + std::to_string(2 * n + 1)));
    }
    const TridiagCriteria res = check_tridiag_criteria(s, r, t, 3);
    EXPECT_TRUE(res.criterion[0]);
    EXPECT_TRUE(is_x_tp_r(tridiag(s, r, t, 4), 3).passed);
}

TEST(TridiagonalCriteria, TransferToHankel) {
    // Walks certified by a criterion give TP first-column Hankel blocks.
    for (int which = 1; which <= 3; ++which) {
        const Poly q = P("q");
        CoeffSeq rr, ss, tt;
        if (which == 1) {  // s_k = 2k + 1 + q, r = 1, t_k = k
            rr = CoeffSeq::constant(Poly(1));
            ss = CoeffSeq::generator([q](long k) { return q + Rational(2 * k + 1); }, "s");
            tt = CoeffSeq::generator([](long k) { return Poly(Rational(k)); }, "t");
        } else if (which == 2) {
            rr = CoeffSeq::generator([q](long k) { return q * Rational(k + 1); }, "r");
            ss = CoeffSeq::generator([q](long k) { return (q + 1) * Rational(2 * k + 1); }, "s");
            tt = CoeffSeq::generator([](long k) { return Poly(Rational(k)); }, "t");
        } else {
            rr = CoeffSeq::constant(Poly(1));
            ss = CoeffSeq::generator([q](long k) { return q * Rational(k) + Rational(k * k + 1); }, "s");
            tt = CoeffSeq::generator([](long k) { return Poly(Rational(k * k)); }, "t");
        }
        PolySeq s, r, t{Poly(0)};
        for (long k = 0; k <= 6; ++k) {
            s.push_back(ss.at(k));
            r.push_back(rr.at(k));
            t.push_back(tt.at(k + 1));
        }
        const TridiagCriteria crit = check_tridiag_criteria(s, r, t, 5);
        ASSERT_TRUE(crit.any()) << which;
        const auto walk = tri::RecurrenceSpec::column_walk(tri::family_context(), "walk", rr, ss, tt);
        const tri::Triangle d = tri::build_triangle(walk, 8);
        EXPECT_TRUE(is_x_tp_r(hankel(d.column(0), 5), 4).passed) << which;
    }
}

TEST(TridiagonalCriteria, StarredEquivalence) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> num(0, 4);
    std::uniform_int_distribution<int> den(1, 3);
    int passes = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t size = 3 + trial % 3;
        PolySeq s, r, t{Poly(0)};
        for (std::size_t i = 0; i < size; ++i) {
            s.emplace_back(Rational(num(rng), den(rng)));
            r.emplace_back(Rational(num(rng), den(rng)));
            t.emplace_back(Rational(num(rng), den(rng)));
        }
        for (std::size_t order = 2; order <= size; ++order) {
            const bool plain = is_x_tp_r(tridiag(s, r, t, size), order).passed;
            const bool starred = is_x_tp_r(starred_tridiag(s, r, t, size), order).passed;
            EXPECT_EQ(plain, starred) << "trial " << trial << " order " << order;
            passes += plain ? 1 : 0;
        }
    }
    EXPECT_GT(passes, 0);
}

TEST(Perturbation, Checks) {
    const PolySeq a = nums({2, 2, 2, 2, 2});
    const PolySeq b = nums({1, 1, 1, 1});
    const PolySeq c = nums({1, 1, 1, 1});
    const PolySeq zero = nums({0, 0, 0, 0, 0});
    EXPECT_EQ(check_perturbation(a, b, c, zero, zero, zero, 5, 5).to_json(),
              is_x_tp_r(tridiag(a, b, PolySeq{Poly(0), 1, 1, 1, 1}, 5), 5).to_json());
    const PolySeq eps(5, P("x"));
    EXPECT_TRUE(check_perturbation(a, b, c, eps, zero, zero, 5, 5).passed);
    const PolySeq db = nums({2, 0, 0, 0});
    EXPECT_THROW(check_perturbation(a, b, c, zero, db, zero, 5, 5), HypothesisViolation);
}

TEST(FundamentalIdentity, BellWalk) {
    const FactorizationResult res = fundamental_identity_check(tri::bell_walk_spec(), 5);
    EXPECT_TRUE(res.holds);
    EXPECT_EQ(res.hankel(4, 4), Poly(4140));
}

TEST(FundamentalIdentity, ZeroDownSteps) {
    const ContextPtr ctx = tri::family_context();
    const auto walk = tri::RecurrenceSpec::column_walk(ctx, "no down", CoeffSeq::constant(Poly(1)),
                                                       CoeffSeq::constant(P("q")), CoeffSeq::constant(Poly(0)));
    EXPECT_TRUE(fundamental_identity_check(walk, 4).holds);
}

TEST(FundamentalIdentity, SymbolicWalk) {
    EXPECT_TRUE(fundamental_identity_check(tri::symbolic_walk_spec(4), 4).holds);
}

TEST(LogConvexity, LOperator) {
    EXPECT_EQ(L_operator(nums({1, 1, 2, 6, 24})), nums({1, 2, 12}));
    EXPECT_EQ(L_operator(nums({3, 3, 3, 3})), nums({0, 0}));
    EXPECT_EQ(L_operator(nums({1, 2, 4, 8, 16})), nums({0, 0, 0}));
    EXPECT_THROW(L_operator(nums({1, 2})), std::invalid_argument);
}

TEST(LogConvexity, Factorials) {
    const LcxResult r = check_k_lcx(nums({1, 1, 2, 6, 24, 120, 720}), 3);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.identities_agree);
    EXPECT_TRUE(check_k_lcx(nums({5, 5, 5, 5, 5, 5, 5}), 3).holds);
    EXPECT_THROW(check_k_lcx(nums({1, 1, 2, 6}), 2), std::invalid_argument);
}

TEST(LogConvexity, PeaksFail) {
    const LcxResult r = check_k_lcx(peak_sequence(7), 1);
    ASSERT_FALSE(r.holds);
    EXPECT_EQ(r.failed_level, 1u);
    EXPECT_EQ(r.failed_center, 2u);
    EXPECT_EQ(r.failed_value, P("16*q - 4*q^2"));
    EXPECT_EQ(r.negative_term, "-4*q^2");
}

TEST(LogConvexity, IdentitiesOnSymbolicSequence) {
    const PolySeq seq = tri::row_gfs(tri::build_triangle(tri::two_term_family(3), 7));
    EXPECT_TRUE(check_k_lcx(seq, 3).identities_agree);
}
