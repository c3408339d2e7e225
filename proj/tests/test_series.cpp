#include <random>

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"
#include "sptcrank/qproducts.hpp"
#include "sptcrank/series.hpp"

using namespace sptcrank;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order)
{
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::vector<Integer> c(order + 1);
    for (auto& v : c)
        v = coeff(rng);
    return {order, c};
}

TruncatedSeries random_unit(std::mt19937_64& rng, std::size_t order)
{
    auto s = random_series(rng, order);
    std::vector<Integer> c(s.coeffs().begin(), s.coeffs().end());
    c[0] = rng() % 2 ? 1 : -1;
    return {order, c};
}

} // namespace

TEST(Series, ZeroIsAdditiveIdentity)
{
    const TruncatedSeries a(3, {1, 1});
    EXPECT_EQ(a + TruncatedSeries(3), a);
}

TEST(Series, Cancellation)
{
    EXPECT_EQ(TruncatedSeries(2, {1, -1}) + TruncatedSeries(2, {0, 1}), TruncatedSeries::one(2));
}

TEST(Series, AddTruncatesToSmallerOrder)
{
    const auto sum = TruncatedSeries(2, {1, 2, 3}) + TruncatedSeries(1, {1, 1});
    EXPECT_EQ(sum.order(), 1u);
    EXPECT_EQ(sum, TruncatedSeries(1, {2, 3}));
}

TEST(Series, Telescoping)
{
    EXPECT_EQ(TruncatedSeries(3, {1, -1}) * TruncatedSeries(3, {1, 1, 1, 1}), TruncatedSeries::one(3));
}

TEST(Series, Square)
{
    const TruncatedSeries a(2, {1, 1});
    EXPECT_EQ(a * a, TruncatedSeries(2, {1, 2, 1}));
}

TEST(Series, PochhammerTimesInverse)
{
    const auto p = qseries::euler_product(1, 1, 5);
    EXPECT_EQ(p * invert_unit(p), TruncatedSeries::one(5));
}

TEST(Series, InverseOfOneMinusQ)
{
    EXPECT_EQ(invert_unit(TruncatedSeries(4, {1, -1})), TruncatedSeries(4, {1, 1, 1, 1, 1}));
}

TEST(Series, InverseOfEulerProductIsPartitionCounts)
{
    const auto inv = invert_unit(qseries::euler_product(1, 1, 4));
    EXPECT_EQ(inv, TruncatedSeries(4, {1, 1, 2, 3, 5}));
    const auto longer = invert_unit(qseries::euler_product(1, 1, 30));
    for (int n = 0; n <= 30; ++n)
        EXPECT_EQ(longer[n], oracle::partitions(n)) << "n=" << n;
}

TEST(Series, InverseOfOnePlusQ)
{
    EXPECT_EQ(invert_unit(TruncatedSeries(3, {1, 1})), TruncatedSeries(3, {1, -1, 1, -1}));
}

TEST(Series, InverseRejectsNonUnit)
{
    EXPECT_THROW(invert_unit(TruncatedSeries(3, {2, 1})), std::domain_error);
    EXPECT_THROW(invert_unit(TruncatedSeries(3, {0, 1})), std::domain_error);
    EXPECT_NO_THROW(invert_unit(TruncatedSeries(3, {-1, 1})));
}

TEST(Series, GeometricTerm)
{
    EXPECT_EQ(geometric_term(3, 2, 8), TruncatedSeries(8, {0, 0, 0, 1, 0, 1, 0, 1, 0}));
    EXPECT_EQ(geometric_term(0, 1, 3), TruncatedSeries(3, {1, 1, 1, 1}));
    EXPECT_TRUE(geometric_term(9, 4, 8).is_zero());
    EXPECT_THROW(geometric_term(1, 0, 8), std::invalid_argument);
}

TEST(Series, GeometricTermTimesDenominatorIsMonomial)
{
    for (std::size_t a = 0; a < 12; ++a)
        for (std::size_t b = 1; b < 7; ++b) {
            const auto den = TruncatedSeries::one(20) - TruncatedSeries::monomial(b, 1, 20);
            EXPECT_EQ(geometric_term(a, b, 20) * den, TruncatedSeries::monomial(a, 1, 20)) << a << ' ' << b;
        }
}

TEST(Series, RingAxiomsOnRandomSeries)
{
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t order = 1 + rng() % 25;
        const auto a = random_series(rng, order);
        const auto b = random_series(rng, order);
        const auto c = random_series(rng, order + rng() % 5);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a + b) - b, a);
        EXPECT_EQ(a + (-a), TruncatedSeries(order));
        EXPECT_EQ(scale(a, 3), a + a + a);
        EXPECT_EQ((a * c).order(), std::min(a.order(), c.order()));
    }
}

TEST(Series, InverseOnRandomUnits)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t order = rng() % 30;
        const auto u = random_unit(rng, order);
        EXPECT_EQ(u * invert_unit(u), TruncatedSeries::one(order));
        EXPECT_EQ(invert_unit(invert_unit(u)), u);
    }
}

TEST(Series, ExactArithmeticBeyondMachineWords)
{
    // coefficients of 1/(1-q)^40 grow past 2^64 by q^60
    TruncatedSeries s = TruncatedSeries::one(60);
    const auto g = invert_unit(TruncatedSeries(60, {1, -1}));
    for (int i = 0; i < 40; ++i)
        s = s * g;
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), 99, 39);
    EXPECT_EQ(s[60], binom);
    EXPECT_EQ(to_decimal(s[60]), binom.get_str());
}

TEST(Series, CoeffAndTruncation)
{
    const TruncatedSeries a(3, {4, 5, 6, 7});
    EXPECT_EQ(a.coeff(2), 6);
    EXPECT_EQ(a.coeff(9), 0);
    EXPECT_EQ(a.truncated(1), TruncatedSeries(1, {4, 5}));
    EXPECT_THROW(a.truncated(4), std::invalid_argument);
    EXPECT_EQ(a.coeffs().size(), 4u);
}
