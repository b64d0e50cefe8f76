#include <random>

#include <gtest/gtest.h>

#include "hgenus/characteristic_series.hpp"
#include "hgenus/power_series.hpp"
#include "hgenus/rational.hpp"
#include "oracles.hpp"

using namespace hgenus;

namespace {

Rational q(long p, long r = 1) { return Rational(p, r); }

PowerSeries random_series(std::mt19937_64& rng, int order, bool zero_constant)
{
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int m = 0; m <= order; ++m) {
        long num = static_cast<long>(rng() % 21) - 10;
        long den = static_cast<long>(rng() % 6) + 1;
        c[static_cast<std::size_t>(m)] = Rational(num, den);
    }
    if (zero_constant) {
        c[0] = Rational{};
    } else if (c[0].is_zero()) {
        c[0] = Rational(3, 2);
    }
    return PowerSeries(std::move(c), order);
}

PowerSeries from(const std::vector<Rational>& c) { return PowerSeries(c, static_cast<int>(c.size()) - 1); }

} // namespace

TEST(Rational, CanonicalForm)
{
    EXPECT_EQ(Rational(2, 4).to_string(), "1/2");
    EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
    EXPECT_EQ(Rational(0, -7).to_string(), "0");
    EXPECT_EQ(Rational(0, 5).denominator(), 1);
    EXPECT_EQ(Rational(-8, 4).to_string(), "-2");
    EXPECT_TRUE(Rational(-8, 4).is_integer());
}

TEST(Rational, ParseAndErrors)
{
    EXPECT_EQ(Rational::parse("-31/967680"), q(-31, 967680));
    EXPECT_EQ(Rational::parse("6/4"), q(3, 2));
    EXPECT_EQ(Rational::parse("+7"), q(7));
    for (const char* bad : {"", "1/", "/2", "1.5", "1/0", "1/-2", "x", "--1"}) {
        EXPECT_THROW(Rational::parse(bad), Error) << bad;
    }
    EXPECT_THROW(Rational(1) / Rational(0), Error);
    EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, ExactBeyondMachineWords)
{
    Rational big = pow(Rational(3, 7), 60);
    EXPECT_EQ(big * pow(Rational(7, 3), 60), Rational(1));
    EXPECT_EQ(Rational::parse(big.to_string()), big);
}

TEST(SeriesArithmetic, Examples)
{
    EXPECT_EQ(series_mul(PowerSeries{1, 1, 0}, PowerSeries{1, -1, 0}), (PowerSeries{1, 0, -1}));
    EXPECT_EQ(series_mul(PowerSeries{1, 1, 1}, PowerSeries::constant(1, 2)), (PowerSeries{1, 1, 1}));
    PowerSeries half_x{0, q(1, 2), 0};
    EXPECT_EQ(series_mul(half_x, half_x)[2], q(1, 4));
    EXPECT_EQ(series_add(PowerSeries{1, 2}, PowerSeries{3, 4}), (PowerSeries{4, 6}));
}

TEST(SeriesArithmetic, MismatchedOrdersTruncateToMinimum)
{
    PowerSeries a{1, 1, 1, 1, 1};
    PowerSeries b{1, 2};
    EXPECT_EQ(series_mul(a, b).order(), 1);
    EXPECT_EQ(series_add(a, b).order(), 1);
    EXPECT_EQ(series_add(a, b), (PowerSeries{2, 3}));
    // equality only looks at the common order
    EXPECT_EQ((PowerSeries{1, 2, 3}), (PowerSeries{1, 2}));
    EXPECT_NE((PowerSeries{1, 2, 3}), (PowerSeries{1, 5}));
}

TEST(SeriesArithmetic, NegativeOrderRejected)
{
    EXPECT_THROW(PowerSeries(-1), Error);
    EXPECT_THROW(todd_series(-1), Error);
}

TEST(SeriesInverse, Examples)
{
    EXPECT_EQ(series_inverse(PowerSeries{1, -1, 0, 0, 0}), (PowerSeries{1, 1, 1, 1, 1}));
    EXPECT_EQ(series_inverse(PowerSeries::constant(1, 3)), PowerSeries::constant(1, 3));

    // (1 - e^{-x})/x = Σ (-1)^m x^m/(m+1)!
    std::vector<Rational> c;
    for (int m = 0; m <= 4; ++m) {
        c.push_back(Rational(m % 2 == 0 ? 1 : -1) / Rational(factorial(static_cast<unsigned long>(m + 1))));
    }
    PowerSeries inv = series_inverse(from(c));
    EXPECT_EQ(inv, from(oracle::todd_coefficients(4)));
    EXPECT_EQ(inv, (PowerSeries{1, q(1, 2), q(1, 12), 0, q(-1, 720)}));
}

TEST(SeriesInverse, ZeroConstantTerm)
{
    try {
        series_inverse(PowerSeries{0, 1, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::zero_constant_term);
    }
}

TEST(SeriesExp, Examples)
{
    EXPECT_EQ(series_exp(PowerSeries(5)), PowerSeries::constant(1, 5));
    EXPECT_EQ(series_exp(PowerSeries{0, 1, 0, 0}), (PowerSeries{1, 1, q(1, 2), q(1, 6)}));
    long k = 2;
    EXPECT_EQ(series_exp(PowerSeries{0, q(k, 2), 0}), (PowerSeries{1, 1, q(1, 2)}));
    try {
        series_exp(PowerSeries{1, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::nonzero_constant_term);
    }
}

TEST(SeriesExp, LogInvertsExp)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        PowerSeries a = random_series(rng, 10, true);
        EXPECT_EQ(series_log(series_exp(a)), a);
    }
}

TEST(SeriesScaleArg, Examples)
{
    PowerSeries e = exp_linear(1, 6);
    PowerSeries scaled = series_scale_arg(e, 2);
    for (int m = 0; m <= 6; ++m) {
        EXPECT_EQ(scaled[m], pow(Rational(2), m) / Rational(factorial(static_cast<unsigned long>(m))));
    }
    EXPECT_EQ(series_scale_arg(e, 1), e);

    // Â(4x) = 2x/sinh(2x), built directly as the inverse of sinh(2x)/(2x).
    std::vector<Rational> sinhc(11);
    for (int m = 0; 2 * m <= 10; ++m) {
        sinhc[static_cast<std::size_t>(2 * m)] = pow(Rational(2), 2 * m) / Rational(factorial(static_cast<unsigned long>(2 * m + 1)));
    }
    EXPECT_EQ(series_scale_arg(ahat_series(10), 4), series_inverse(from(sinhc)));
}

TEST(CharacteristicSeries, AhatMatchesPublishedExpansion)
{
    EXPECT_EQ(ahat_series(8), (PowerSeries{1, 0, q(-1, 24), 0, q(7, 5760), 0, q(-31, 967680), 0, q(127, 154828800)}));
    EXPECT_EQ(ahat_series(8).order(), 8);
}

TEST(CharacteristicSeries, AgreesWithBernoulliOracle)
{
    EXPECT_EQ(todd_series(2), (PowerSeries{1, q(1, 2), q(1, 12)}));
    EXPECT_EQ(todd_series(20), from(oracle::todd_coefficients(20)));
    EXPECT_EQ(ahat_series(20), from(oracle::ahat_coefficients(20)));
}

TEST(CharacteristicSeries, LSeries)
{
    EXPECT_EQ(l_series(6), (PowerSeries{1, 0, q(1, 3), 0, q(-1, 45), 0, q(2, 945)}));
}

TEST(CharacteristicSeries, KArgumentChecks)
{
    for (long k : {-1L, 0L, 1L}) {
        try {
            ak_series(k, 4);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), Errc::bad_k);
        }
        EXPECT_THROW(a_recip_k_series(k, 4), Error);
    }
    try {
        ahat_series(-3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::bad_order);
    }
}

TEST(CharacteristicSeries, AkIsScaledReciprocalFamily)
{
    for (long k = 2; k <= 5; ++k) {
        EXPECT_EQ(ak_series(k, 12), series_scale_arg(a_recip_k_series(k, 12), Rational(k))) << "k=" << k;
    }
}

TEST(CharacteristicSeries, OrderZero)
{
    EXPECT_EQ(todd_series(0).order(), 0);
    EXPECT_EQ(todd_series(0)[0], Rational(1));
}

// Properties

TEST(SeriesProperties, InverseIsTwoSided)
{
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        int order = static_cast<int>(rng() % 12);
        PowerSeries a = random_series(rng, order, false);
        EXPECT_EQ(series_mul(a, series_inverse(a)), PowerSeries::constant(1, order));
    }
}

TEST(SeriesProperties, ExpIsAHomomorphism)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        int order = 1 + static_cast<int>(rng() % 12);
        PowerSeries a = random_series(rng, order, true);
        PowerSeries b = random_series(rng, order, true);
        EXPECT_EQ(series_exp(series_add(a, b)), series_mul(series_exp(a), series_exp(b)));
    }
}

TEST(SeriesProperties, AhatIsEven)
{
    PowerSeries a = ahat_series(31);
    EXPECT_TRUE(a.is_even());
    for (int m = 1; m <= 31; m += 2) {
        EXPECT_TRUE(a[m].is_zero());
    }
}

TEST(SeriesProperties, ToddTimesReciprocalIsOne)
{
    for (int order : {0, 1, 5, 16}) {
        std::vector<Rational> c;
        for (int m = 0; m <= order; ++m) {
            c.push_back(Rational(m % 2 == 0 ? 1 : -1) / Rational(factorial(static_cast<unsigned long>(m + 1))));
        }
        EXPECT_EQ(series_mul(todd_series(order), from(c)), PowerSeries::constant(1, order));
    }
}
