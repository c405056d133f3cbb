#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "xtp/simd/monomial_kernels.hpp"

using xtp::simd::KernelTable;
using xtp::simd::Monomial;

namespace {

Monomial random_monomial(std::mt19937& rng, unsigned max_exp, std::size_t vars) {
    std::uniform_int_distribution<unsigned> d(0, max_exp);
    Monomial m;
    for (std::size_t i = 0; i < vars; ++i) m.e[i] = static_cast<std::uint8_t>(d(rng));
    return m;
}

int sign(int v) { return (v > 0) - (v < 0); }

class KernelEquivalence : public ::testing::Test {
protected:
    void SetUp() override {
        vec_ = xtp::simd::avx2_kernels();
        if (vec_ == nullptr) GTEST_SKIP() << "AVX2 kernels unavailable on this host";
    }
    const KernelTable& ref_ = xtp::simd::scalar_kernels();
    const KernelTable* vec_ = nullptr;
};

}  // namespace

TEST(ScalarKernels, AddRowAndOverflow) {
    const auto& k = xtp::simd::scalar_kernels();
    Monomial a;
    a.e[0] = 2;
    a.e[31] = 1;
    std::vector<Monomial> b(3);
    b[1].e[0] = 7;
    b[2].e[5] = 3;
    std::vector<Monomial> out(3);
    ASSERT_TRUE(k.add_row(a, b.data(), out.data(), 3));
    EXPECT_EQ(out[0], a);
    EXPECT_EQ(out[1].e[0], 9);
    EXPECT_EQ(out[2].e[5], 3);
    EXPECT_EQ(out[2].e[31], 1);
    b[0].e[0] = 254;
    EXPECT_FALSE(k.add_row(a, b.data(), out.data(), 1));
}

TEST(ScalarKernels, LexAndDivision) {
    const auto& k = xtp::simd::scalar_kernels();
    Monomial a;
    Monomial b;
    a.e[0] = 1;
    b.e[1] = 5;
    EXPECT_GT(k.compare_lex(a, b), 0);
    EXPECT_LT(k.compare_lex(b, a), 0);
    EXPECT_EQ(k.compare_lex(a, a), 0);
    Monomial c = a;
    c.e[1] = 5;
    EXPECT_TRUE(k.divides(a, c));
    EXPECT_FALSE(k.divides(c, a));
    Monomial q;
    k.quotient(a, c, q);
    EXPECT_EQ(q, b);
    std::uint32_t d = 0;
    k.degrees(&c, &d, 1);
    EXPECT_EQ(d, 6U);
}

TEST_F(KernelEquivalence, AddRowMatchesScalar) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const unsigned max_exp = trial % 2 == 0 ? 20 : 200;
        Monomial a = random_monomial(rng, max_exp, 32);
        std::vector<Monomial> b(37);
        for (auto& m : b) m = random_monomial(rng, max_exp, 32);
        std::vector<Monomial> r1(b.size());
        std::vector<Monomial> r2(b.size());
        const bool ok1 = ref_.add_row(a, b.data(), r1.data(), b.size());
        const bool ok2 = vec_->add_row(a, b.data(), r2.data(), b.size());
        ASSERT_EQ(ok1, ok2);
        if (ok1) {
            EXPECT_EQ(r1, r2);
        }
    }
}

TEST_F(KernelEquivalence, DegreesMatchScalar) {
    std::mt19937 rng(11);
    std::vector<Monomial> m(101);
    for (auto& x : m) x = random_monomial(rng, 255, 32);
    std::vector<std::uint32_t> d1(m.size());
    std::vector<std::uint32_t> d2(m.size());
    ref_.degrees(m.data(), d1.data(), m.size());
    vec_->degrees(m.data(), d2.data(), m.size());
    EXPECT_EQ(d1, d2);
}

TEST_F(KernelEquivalence, ComparisonsMatchScalar) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t vars = 1 + static_cast<std::size_t>(trial % 32);
        Monomial a = random_monomial(rng, 3, vars);
        Monomial b = trial % 5 == 0 ? a : random_monomial(rng, 3, vars);
        EXPECT_EQ(sign(ref_.compare_lex(a, b)), sign(vec_->compare_lex(a, b)));
        EXPECT_EQ(ref_.divides(a, b), vec_->divides(a, b));
        if (ref_.divides(a, b)) {
            Monomial q1;
            Monomial q2;
            ref_.quotient(a, b, q1);
            vec_->quotient(a, b, q2);
            EXPECT_EQ(q1, q2);
        }
    }
}

TEST(KernelDispatch, SelectionRoundTrip) {
    const auto& before = xtp::simd::active_kernels();
    ASSERT_TRUE(xtp::simd::select_kernels("scalar"));
    EXPECT_EQ(xtp::simd::active_kernels().name, "scalar");
    EXPECT_FALSE(xtp::simd::select_kernels("sse9"));
    xtp::simd::select_kernels(before.name);
    EXPECT_EQ(xtp::simd::active_kernels().name, before.name);
}
