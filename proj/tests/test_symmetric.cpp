#include <random>

#include <gtest/gtest.h>

#include "hgenus/characteristic_series.hpp"
#include "hgenus/genera.hpp"
#include "hgenus/symmetric.hpp"
#include "oracles.hpp"

using namespace hgenus;

namespace {

Rational q(long p, long r = 1) { return Rational(p, r); }

GradedPolynomial gen(const Ring& r, int i) { return GradedPolynomial::generator(r, i); }

std::vector<Rational> coefficients(const PowerSeries& s)
{
    return s.coefficients();
}

std::vector<Rational> even_part(const PowerSeries& s)
{
    std::vector<Rational> f;
    for (int d = 0; 2 * d <= s.order(); ++d) {
        f.push_back(s[2 * d]);
    }
    return f;
}

} // namespace

TEST(Partitions, Order)
{
    auto p4 = partitions_of(4);
    ASSERT_EQ(p4.size(), 5u);
    EXPECT_EQ(p4[0].parts, (std::vector<int>{4}));
    EXPECT_EQ(p4[1].parts, (std::vector<int>{3, 1}));
    EXPECT_EQ(p4[2].parts, (std::vector<int>{2, 2}));
    EXPECT_EQ(p4[3].parts, (std::vector<int>{2, 1, 1}));
    EXPECT_EQ(p4[4].parts, (std::vector<int>{1, 1, 1, 1}));
    EXPECT_EQ(partitions_of(0).size(), 1u);
    EXPECT_THROW(partitions_of(-1), Error);
}

TEST(Partitions, CountsMatchPentagonalRecurrence)
{
    auto counts = oracle::partition_counts(20);
    for (int n = 0; n <= 20; ++n) {
        auto parts = partitions_of(n);
        EXPECT_EQ(static_cast<long>(parts.size()), counts[static_cast<std::size_t>(n)]) << n;
        for (const auto& p : parts) {
            EXPECT_EQ(p.weight(), n);
        }
    }
}

TEST(Partitions, Multiplicities)
{
    Partition p{{3, 1, 1}};
    EXPECT_EQ(p.multiplicities(3), (Exponents{2, 0, 1}));
    EXPECT_THROW(p.multiplicities(2), Error);
}

TEST(Newton, PowerSumsInElementary)
{
    auto ps = power_sums_to_elementary(3);
    Ring r = ps[1].ring();
    EXPECT_EQ(ps[0], GradedPolynomial::constant(r, 3));
    EXPECT_EQ(ps[1], gen(r, 1));
    EXPECT_EQ(ps[2], pow(gen(r, 1), 2) - gen(r, 2) * q(2));
    EXPECT_EQ(ps[3], pow(gen(r, 1), 3) - gen(r, 1) * gen(r, 2) * q(3) + gen(r, 3) * q(3));
}

TEST(Newton, ElementaryInPowerSums)
{
    auto e = elementary_to_power_sums(3);
    Ring r = e[1].ring();
    EXPECT_EQ(r.grading, Grading::power_sum);
    EXPECT_EQ(e[2], (pow(gen(r, 1), 2) - gen(r, 2)) * q(1, 2));
    EXPECT_EQ(e[3], (pow(gen(r, 1), 3) - gen(r, 1) * gen(r, 2) * q(3) + gen(r, 3) * q(2)) * q(1, 6));
}

TEST(Newton, ConversionsAreInverse)
{
    for (int n = 1; n <= 7; ++n) {
        auto ps = power_sums_to_elementary(n);
        auto e = elementary_to_power_sums(n);
        Ring chern = ps[1].ring();
        std::map<int, GradedPolynomial> assign;
        for (int i = 1; i <= n; ++i) {
            assign.emplace(e[1].ring().gen(i), ps[static_cast<std::size_t>(i)]);
        }
        for (int m = 1; m <= n; ++m) {
            EXPECT_EQ(graded_substitute(e[static_cast<std::size_t>(m)], assign, chern), gen(chern, m)) << n << " " << m;
        }
    }
}

TEST(GradedPolynomial, Printing)
{
    Ring chern{Grading::chern, 3, false};
    EXPECT_EQ(GradedPolynomial(chern).to_string(), "0");
    EXPECT_EQ((gen(chern, 1) * gen(chern, 2) * q(1, 24)).to_string(), "1/24 c_1 c_2");
    EXPECT_EQ((pow(gen(chern, 1), 2) * q(-1) + gen(chern, 2)).to_string(), "-c_1^2 + c_2");
    Ring pont{Grading::pontrjagin, 2, true};
    EXPECT_EQ((GradedPolynomial::x(pont) * gen(pont, 1)).weight(), 3);
}

TEST(GradedPolynomial, WeightsAndHomogeneity)
{
    Ring chern{Grading::chern, 3, true};
    GradedPolynomial mixed = GradedPolynomial::x(chern) + gen(chern, 2);
    EXPECT_FALSE(mixed.is_homogeneous());
    EXPECT_EQ(mixed.homogeneous_part(2), gen(chern, 2));
    EXPECT_TRUE(gen(chern, 4).is_zero());
    EXPECT_EQ(gen(chern, 0), GradedPolynomial::constant(chern, 1));
    EXPECT_EQ(weighted_monomials(Ring{Grading::chern, 4, false}, 4).size(), 5u);
}

TEST(GradedPolynomial, SubstituteRejectsWrongWeight)
{
    Ring chern{Grading::chern, 2, false};
    try {
        graded_substitute(gen(chern, 2), {{chern.gen(2), gen(chern, 1)}}, chern);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::weight_mismatch);
    }
}

TEST(Sequence, ToddExamples)
{
    auto t = multiplicative_sequence(todd_series(3), 3, Grading::chern);
    Ring r = t.ring;
    EXPECT_EQ(t[0], GradedPolynomial::constant(r, 1));
    EXPECT_EQ(t[1], gen(r, 1) * q(1, 2));
    EXPECT_EQ(t[2], (pow(gen(r, 1), 2) + gen(r, 2)) * q(1, 12));
    EXPECT_EQ(t[3], gen(r, 1) * gen(r, 2) * q(1, 24));
    EXPECT_EQ(t[3].to_string(), "1/24 c_1 c_2");
}

TEST(Sequence, PontrjaginExamples)
{
    auto l = multiplicative_sequence(l_series(4), 2, Grading::pontrjagin);
    Ring r = l.ring;
    EXPECT_EQ(l[1], gen(r, 1) * q(1, 3));
    EXPECT_EQ(l[2], gen(r, 2) * q(7, 45) - pow(gen(r, 1), 2) * q(1, 45));

    auto a = multiplicative_sequence(ahat_series(4), 2, Grading::pontrjagin);
    EXPECT_EQ(a[1], gen(r, 1) * q(-1, 24));
    EXPECT_EQ(a[1].to_string(), "-1/24 p_1");
    EXPECT_EQ(a[2], pow(gen(r, 1), 2) * q(7, 5760) - gen(r, 2) * q(4, 5760));
}

TEST(Sequence, Errors)
{
    try {
        multiplicative_sequence(PowerSeries{2, 1, 0, 0}, 3, Grading::chern);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::not_normalized);
    }
    try {
        multiplicative_sequence(todd_series(4), 2, Grading::pontrjagin);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::odd_series_in_pontrjagin_grading);
    }
    try {
        multiplicative_sequence(todd_series(2), 3, Grading::chern);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::bad_order);
    }
}

TEST(Sequence, ConstantSeriesGivesTrivialSequence)
{
    auto s = multiplicative_sequence(PowerSeries::constant(1, 5), 5, Grading::chern);
    for (int m = 1; m <= 5; ++m) {
        EXPECT_TRUE(s[m].is_zero());
    }
}

TEST(Sequence, LinearSeriesGivesElementary)
{
    // Q = 1 + x  =>  Π(1 + x_i) = c, so K_m = c_m.
    auto s = multiplicative_sequence(PowerSeries{1, 1, 0, 0, 0}, 4, Grading::chern);
    for (int m = 1; m <= 4; ++m) {
        EXPECT_EQ(s[m], gen(s.ring, m));
    }
}

TEST(Sequence, AgreesWithRootExpansionChern)
{
    // Random normalized series against brute-force expansion in roots.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        std::vector<Rational> c{Rational(1)};
        for (int m = 1; m <= n; ++m) {
            c.push_back(Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1));
        }
        PowerSeries qs(c, n);
        auto seq = multiplicative_sequence(qs, n, Grading::chern);
        for (int m = 1; m <= n; ++m) {
            EXPECT_EQ(oracle::from_graded(seq[m], m), oracle::sequence_by_roots(c, m)) << "n=" << n << " m=" << m;
        }
    }
}

TEST(Sequence, AgreesWithRootExpansionPontrjagin)
{
    for (int m = 1; m <= 4; ++m) {
        auto l = multiplicative_sequence(l_series(2 * m), m, Grading::pontrjagin);
        EXPECT_EQ(oracle::from_graded(l[m], m), oracle::sequence_by_roots(even_part(l_series(2 * m)), m));
        auto a = multiplicative_sequence(ahat_series(2 * m), m, Grading::pontrjagin);
        EXPECT_EQ(oracle::from_graded(a[m], m), oracle::sequence_by_roots(even_part(ahat_series(2 * m)), m));
    }
}

TEST(Sequence, HomogeneousOfCorrectWeight)
{
    auto t = GenusSpec::todd().sequence(6);
    auto l = GenusSpec::l_genus().sequence(3);
    for (int m = 1; m <= 6; ++m) {
        EXPECT_EQ(t[m].weight(), m);
    }
    for (int m = 1; m <= 3; ++m) {
        EXPECT_EQ(l[m].weight(), 2 * m);
    }
}

TEST(Sequence, IsMultiplicativeUnderWhitneySum)
{
    // For c = c' · c'' with c' = 1 + a_1, c'' = 1 + b_1 + b_2 (as abstract
    // classes), K(c) = K(c') K(c''), checked through the root oracle: the
    // root-product structure makes K_m(e(y_1..y_m)) split over any partition of roots.
    std::vector<Rational> c = coefficients(todd_series(3));
    auto seq = multiplicative_sequence(todd_series(3), 3, Grading::chern);
    // total Todd class of a sum of line bundles with first Chern classes y_1, y_2, y_3
    oracle::RootPoly product{{{0, 0, 0}, Rational(1)}};
    for (int i = 0; i < 3; ++i) {
        oracle::RootPoly factor;
        for (int d = 0; d <= 3; ++d) {
            std::vector<int> e(3, 0);
            e[static_cast<std::size_t>(i)] = d;
            oracle::add_into(factor, e, c[static_cast<std::size_t>(d)]);
        }
        product = oracle::mul(product, factor, 3);
    }
    oracle::RootPoly total;
    for (int m = 0; m <= 3; ++m) {
        for (const auto& [e, v] : oracle::from_graded(seq[m], 3)) {
            // expand c_1^a c_2^b c_3^c in roots
            oracle::RootPoly expanded{{{0, 0, 0}, v}};
            for (int j = 1; j <= 3; ++j) {
                for (int t = 0; t < e[static_cast<std::size_t>(j - 1)]; ++t) {
                    expanded = oracle::mul(expanded, oracle::elementary(3, j), -1);
                }
            }
            for (const auto& [re, rv] : expanded) {
                oracle::add_into(total, re, rv);
            }
        }
    }
    EXPECT_EQ(total, product);
}
