#include <gtest/gtest.h>

#include <thread>

#include "mmock/arithmetic.hpp"

using namespace mmock;


TEST(Hurwitz, KnownValues)
{
    EXPECT_EQ(hurwitz(0), make_rational(-1, 12));
    EXPECT_EQ(hurwitz(3), make_rational(1, 3));
    EXPECT_EQ(hurwitz(4), make_rational(1, 2));
    EXPECT_EQ(hurwitz(7), 1);
    EXPECT_EQ(hurwitz(8), 1);
    EXPECT_EQ(hurwitz(11), 1);
    EXPECT_EQ(hurwitz(12), make_rational(4, 3));
    EXPECT_EQ(hurwitz(15), 2);
    EXPECT_EQ(hurwitz(16), make_rational(3, 2));
    EXPECT_EQ(hurwitz(23), 3);
    EXPECT_EQ(hurwitz(1), 0);
    EXPECT_EQ(hurwitz(2), 0);
    EXPECT_EQ(hurwitz(5), 0);
    EXPECT_THROW(hurwitz(-1), error);
}

TEST(Hurwitz, Disc23HasThreeReducedForms)
{
    // (1,1,6), (2,1,3), (2,-1,3)
    long count = 0;
    for (long a = 1; a <= 3; ++a)
        for (long b = -a + 1; b <= a; ++b)
            if ((b * b + 23) % (4 * a) == 0 && (b * b + 23) / (4 * a) >= a) ++count;
    EXPECT_EQ(count, 3);
    EXPECT_EQ(hurwitz(23), count);
}

TEST(Hurwitz, PositivityAndDenominators)
{
    for (long n = 1; n <= 2000; ++n) {
        Rational h = hurwitz(n);
        EXPECT_GE(h, 0);
        EXPECT_TRUE(is_integer(h * 12)) << n;
        if (n % 4 == 1 || n % 4 == 2) {
            EXPECT_EQ(h, 0);
        }
    }
}

TEST(R3, SmallValues)
{
    EXPECT_EQ(r3(0), 1);
    EXPECT_EQ(r3(1), 6);
    EXPECT_EQ(r3(2), 12);
    EXPECT_EQ(r3(3), 8);
    EXPECT_EQ(r3(5), 24);
    EXPECT_EQ(r3(7), 0);
    EXPECT_EQ(r3(-3), 0);
}

TEST(Hurwitz, GaussRelation)
{
    for (long n = 0; n <= 500; ++n) EXPECT_EQ(Rational(r3(n)), 12 * (hurwitz(4 * n) - 2 * hurwitz(n))) << n;
}

TEST(Hurwitz, ConcurrentMemo)
{
    std::vector<std::thread> pool;
    std::vector<Rational> out(4);
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] {
            Rational s;
            for (long n = 3000; n < 3400; ++n) s += hurwitz(n);
            out[t] = s;
        });
    for (auto& th : pool) th.join();
    Rational ref;
    for (long n = 3000; n < 3400; ++n) ref += hurwitz_uncached(n);
    for (const auto& v : out) EXPECT_EQ(v, ref);
}

TEST(HSeries, LeadingTerms)
{
    auto h0 = h_series(0, 5);
    EXPECT_EQ(h0.den(), 4);
    EXPECT_EQ(h0.trunc(), 20);
    EXPECT_EQ(h0.valuation(), 0);
    EXPECT_EQ(h0.coeff(0), make_rational(-1, 12));
    auto h1 = h_series(1, 5);
    EXPECT_EQ(h1.valuation(), 3);
    EXPECT_EQ(coefficient_at(h1, make_rational(3, 4)), make_rational(1, 3));
    EXPECT_EQ(coefficient_at(h1, make_rational(7, 4)), hurwitz(7));
    EXPECT_EQ(coefficient_at(h1, make_rational(7, 4)), 1);
    EXPECT_THROW(h_series(2, 3), error);
}

TEST(UnevenClasses, SmallValues)
{
    // F(3): forms x^2+2bxy+cy^2 with ac-b^2=3: (1,0,3) and (2,1,2); (2,1,2) has a,c even
    EXPECT_EQ(uneven_class_count(3), 1);
    EXPECT_EQ(uneven_class_count(1), make_rational(1, 2));
    EXPECT_THROW(uneven_class_count(0), error);
}
