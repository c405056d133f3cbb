#include <gtest/gtest.h>

#include "xtp/oracles/enumerate.hpp"

using namespace xtp::oracle;

namespace {

mpz_class fact(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

mpz_class double_fact_odd(unsigned n) {  // (2n-1)!!
    mpz_class f = 1;
    for (unsigned i = 1; i <= n; ++i) f *= 2 * i - 1;
    return f;
}

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Oracle, PermutationTotals) {
    for (unsigned n = 0; n <= 7; ++n) {
        EXPECT_EQ(perms_by_descents(n).total(), fact(n)) << n;
        EXPECT_EQ(perms_by_cycles(n).total(), fact(n)) << n;
        EXPECT_EQ(perms_by_interior_peaks(n).total(), fact(n)) << n;
        EXPECT_EQ(perms_by_left_peaks(n).total(), fact(n)) << n;
    }
}

TEST(Oracle, PartitionTotalsAreBell) {
    const long bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    const long no_single[] = {1, 0, 1, 1, 4, 11, 41, 162, 715};
    for (unsigned n = 0; n <= 8; ++n) {
        EXPECT_EQ(set_partitions_by_blocks(n).total(), bell[n]) << n;
        EXPECT_EQ(set_partitions_without_singletons(n).total(), no_single[n]) << n;
    }
}

TEST(Oracle, DoubleFactorialTotals) {
    for (unsigned n = 0; n <= 5; ++n) {
        EXPECT_EQ(stirling_perms_by_ascent_plateau(n).total(), double_fact_odd(n)) << n;
        EXPECT_EQ(matchings_by_odd_smaller(n).total(), double_fact_odd(n)) << n;
    }
}

TEST(Oracle, KnownRows) {
    EXPECT_TRUE(perms_by_descents(4).matches(ints({0, 1, 11, 11, 1})));
    EXPECT_TRUE(set_partitions_by_blocks(4).matches(ints({0, 1, 7, 6, 1})));
    EXPECT_TRUE(perms_by_cycles(4).matches(ints({0, 6, 11, 6, 1})));
    EXPECT_TRUE(perms_by_interior_peaks(4).matches(ints({8, 16})));
    EXPECT_TRUE(perms_by_left_peaks(3).matches(ints({1, 5})));
    EXPECT_TRUE(matchings_by_odd_smaller(2).matches(ints({0, 2, 1})));
}

TEST(Oracle, MatchesPadsWithZeros) {
    const CountVector c = perms_by_descents(2);
    EXPECT_TRUE(c.matches(ints({0, 1, 1, 0, 0})));
    EXPECT_FALSE(c.matches(ints({0, 1})));
    EXPECT_FALSE(c.matches(ints({0, 1, 1, 1})));
}

TEST(Oracle, SizeGuards) {
    EXPECT_THROW(perms_by_descents(8), SizeGuard);
    EXPECT_THROW(set_partitions_by_blocks(9), SizeGuard);
    EXPECT_THROW(stirling_perms_by_ascent_plateau(6), SizeGuard);
    EXPECT_THROW(matchings_by_odd_smaller(6), SizeGuard);
}
