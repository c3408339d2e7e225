#include <cmath>

#include <gtest/gtest.h>

#include "sptcrank/bounds.hpp"
#include "sptcrank/divisors.hpp"
#include "sptcrank/real_check.hpp"

using namespace sptcrank;
using namespace sptcrank::bounds;

// mpmath at 30 digits: ((12 + 2 sqrt(36 + (m+2) ln 2)) / ln 2)^2
TEST(Threshold, HighPrecisionValues)
{
    EXPECT_NEAR(f_of_m(0), 1221.84263180562605854, 1e-9 * 1221.8);
    EXPECT_NEAR(f_of_m(1), 1233.25018376397522933, 1e-9 * 1233.3);
    EXPECT_NEAR(f_of_m(50), 1747.49985309377270550, 1e-9 * 1747.5);
    EXPECT_NEAR(f_of_m(120), 2400.45033205218776851, 1e-9 * 2400.5);
    EXPECT_NEAR(f_of_m(121), 2409.36997810928747247, 1e-9 * 2409.4);
}

TEST(Threshold, CrossoverBetween120And121)
{
    for (long m = 0; m <= 120; ++m)
        EXPECT_TRUE(threshold_profile(m).f_exceeds_20m) << m;
    for (long m = 121; m <= 400; ++m)
        EXPECT_FALSE(threshold_profile(m).f_exceeds_20m) << m;
    const auto table = threshold_table(130);
    EXPECT_EQ(table.size(), 131u);
    for (const auto& p : table)
        EXPECT_FALSE(p.near_tie);
}

TEST(Threshold, RootOfTheQuadratic)
{
    for (long m : {0L, 7L, 120L}) {
        const double u = std::sqrt(f_of_m(m));
        EXPECT_NEAR(std::log(2.0) / 4 * u * u - 6 * u - (m + 2), 0, 1e-9 * u * u);
    }
}

TEST(LowerBound, RejectsOddOrSmallN)
{
    EXPECT_THROW(theorem2_lower_bound(0, 3), std::invalid_argument);
    EXPECT_THROW(theorem2_lower_bound(0, 0), std::invalid_argument);
    EXPECT_THROW(m2_minus_m1_bound(0, 5), std::invalid_argument);
}

TEST(LowerBound, SmallCase)
{
    EXPECT_TRUE(m2_minus_m1_bound_check(0, 2));
    EXPECT_LT(theorem2_lower_bound(0, 2), 0);
}

TEST(LowerBound, CombinedBoundHoldsWithMargin)
{
    for (long m = 0; m <= 30; ++m)
        for (std::int64_t n = 2; n <= 3000; n += 2) {
            const auto c = m2_minus_m1_bound(m, n);
            EXPECT_TRUE(c.holds);
            EXPECT_FALSE(c.near_tie);
            EXPECT_NEAR(c.lhs - c.rhs, 0.1 * std::sqrt(n + 1.0), 1e-8 * n);
        }
}

TEST(LowerBound, XExceedsIt)
{
    for (long m = 0; m <= 5; ++m)
        for (std::int64_t n = 2; n <= 400; n += 2)
            EXPECT_GT(static_cast<double>(divisors::x_direct(m, n)), theorem2_lower_bound(m, n));
}

TEST(RealCheck, NearTies)
{
    EXPECT_TRUE(compare(1, Relation::Less, 2).holds);
    auto strict = compare(1, Relation::Less, 1 + 1e-12);
    EXPECT_FALSE(strict.holds);
    EXPECT_TRUE(strict.near_tie);
    auto loose = compare(1, Relation::LessEqual, 1);
    EXPECT_TRUE(loose.holds);
    EXPECT_FALSE(loose.near_tie);
    auto slightly_off = compare(1 + 1e-12, Relation::LessEqual, 1);
    EXPECT_FALSE(slightly_off.holds);
    EXPECT_TRUE(slightly_off.near_tie);
    EXPECT_FALSE(compare(5, Relation::Greater, 6).near_tie);
    EXPECT_EQ(format_real(0.1), "0.1");
    EXPECT_EQ(relation_symbol(Relation::GreaterEqual), ">=");
}
