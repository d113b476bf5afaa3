#include <gtest/gtest.h>

#include "mmock/sheaf.hpp"

using namespace mmock;

namespace {

WPoly s_poly(std::vector<std::pair<int, long>> t)
{
    std::vector<WPoly::term> raw;
    for (auto [k, c] : t) raw.emplace_back(k, Rational(c));
    return WPoly::from_terms(std::move(raw));
}

std::string report_text(const BiIdentityReport& r)
{
    if (!r.first_discrepancy) return r.name + " ok";
    const auto& d = *r.first_discrepancy;
    return r.name + " differs at q^" + to_string(d.q_exponent) + " w^" + (d.w_exponent ? to_string(*d.w_exponent) : "?") +
           ": " + d.lhs + " vs " + d.rhs;
}

} // namespace

TEST(Sheaf, ModuliDimension)
{
    EXPECT_EQ(moduli_dimension({2, -1, 1}), 0);
    EXPECT_EQ(moduli_dimension({1, 0, 7}), 14);
    EXPECT_EQ(moduli_dimension({2, 0, 2}), 5);
}

TEST(Sheaf, GottscheRankOne)
{
    auto g = gottsche_rank1(8);
    EXPECT_EQ(g.coeff(0), WPoly(Rational(1)));
    EXPECT_EQ(g.coeff(1), s_poly({{0, 1}, {2, 1}, {4, 1}}));
    // Hilb^2(P^2): 1 + 2s^2 + 3s^4 + 2s^6 + s^8
    EXPECT_EQ(g.coeff(2), s_poly({{0, 1}, {2, 2}, {4, 3}, {6, 2}, {8, 1}}));
    for (long n = 0; n < 8; ++n) EXPECT_TRUE(is_poincare_polynomial(g.coeff(n), moduli_dimension({1, 0, n}))) << n;
}

TEST(Sheaf, GottscheEulerIsEtaPower)
{
    auto e = euler_series_rank1(20);
    EXPECT_TRUE(series_equal(e, eta_power(-3, 20)));
    EXPECT_GE(e.trunc(), 8 * 20);
}

TEST(Sheaf, YoshiokaMinusOneLowTerms)
{
    auto y = yoshioka_rank2(-1, 6);
    EXPECT_TRUE(y.coeff(0).empty());
    EXPECT_EQ(y.coeff(1), WPoly(Rational(1)));
    for (long n = 1; n < 6; ++n) {
        const auto& p = y.coeff(n);
        EXPECT_TRUE(is_poincare_polynomial(p, moduli_dimension({2, -1, n}))) << n << ": " << to_string(p);
    }
}

TEST(Sheaf, YoshiokaZeroLowTerms)
{
    auto y = yoshioka_rank2(0, 6);
    EXPECT_TRUE(y.coeff(0).empty());
    EXPECT_TRUE(y.coeff(1).empty());
    // M(2,0,2) is P^5
    EXPECT_EQ(y.coeff(2), s_poly({{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}, {10, 1}}));
    for (long n = 2; n < 6; ++n) {
        const auto& p = y.coeff(n);
        EXPECT_TRUE(is_poincare_polynomial(p, moduli_dimension({2, 0, n}))) << n << ": " << to_string(p);
    }
}

TEST(Sheaf, PoincareTablesToOrderEight)
{
    for (int c1 : {-1, 0}) {
        auto table = poincare_table(2, c1, 9);
        EXPECT_EQ(table.size(), c1 == -1 ? 8u : 7u);
        for (const auto& [c2, p] : table) EXPECT_TRUE(is_poincare_polynomial(p, moduli_dimension({2, c1, c2}))) << c1 << " " << c2;
    }
    EXPECT_THROW(poincare_table(3, 0, 4), error);
}

TEST(Sheaf, EulerSeriesMatchesClassNumbers)
{
    const long T = 12;
    auto e1 = euler_series(-1, T);
    EXPECT_EQ(coefficient_at(e1, make_rational(1, 2)), 1);
    EXPECT_TRUE(series_equal(e1, f_series(1, T) * Rational(3)));
    EXPECT_GE(e1.trunc(), 4 * T);
    auto e0 = euler_series(0, T);
    auto rhs0 = f_series(0, T) * Rational(3) + eta_power(-3, T, 2) * make_rational(1, 4);
    EXPECT_TRUE(series_equal(e0, rhs0));
    for (const auto* s : {&e0, &e1})
        for (const auto& [e, c] : s->terms()) EXPECT_TRUE(is_integer(c));
}

TEST(Sheaf, RationalInvariants)
{
    const long T = 20;
    EXPECT_TRUE(series_equal(rational_invariants(-1, T), euler_series(-1, T)));
    auto r0 = rational_invariants(0, T);
    EXPECT_TRUE(series_equal(r0, f_series(0, T) * Rational(-3)));
    EXPECT_GE(r0.trunc(), 4 * T - 1);
    for (const auto& [e, c] : r0.terms()) EXPECT_EQ(12 % c.get_den().get_si(), 0) << to_string(c);
}

TEST(Sheaf, ExpMonomialPhases)
{
    Affine v{Rational(-1), Rational(-1), make_rational(1, 2)};
    auto m = exp_monomial(v, make_rational(1, 2));
    EXPECT_EQ(m.key, -1);
    EXPECT_EQ(m.e, -4);
    EXPECT_EQ(m.c, GaussianRational::i_unit());
    try {
        exp_monomial(Affine{Rational(0), Rational(0), make_rational(1, 3)}, Rational(1));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::irrational_phase);
    }
}

TEST(Sheaf, ThetaOneProductForm)
{
    // theta_1(z; tau) = i q^{1/8} (w^{1/2} - w^{-1/2}) prod (1-q^n)(1-w q^n)(1-w^{-1} q^n)
    const long T = 8;
    auto th = theta1_bi({Rational(1), Rational(0), Rational(0)}, 1, T);
    GaussBiSeries prod = GaussBiSeries::constant(GaussWPoly::from_terms({{1, GaussianRational::i_unit()}, {-1, -GaussianRational::i_unit()}}), kBiDen).shifted(1);
    for (long n = 1; n < T; ++n) {
        for (int key : {0, 2, -2}) {
            auto f = GaussBiSeries::from_terms(kBiDen, kExact,
                                               {{0, GaussWPoly(GaussianRational(1))}, {8 * n, GaussWPoly::monomial(key, GaussianRational(-1))}});
            prod *= f;
        }
    }
    EXPECT_TRUE(series_equal(th, prod.truncated(8 * T)));
}

TEST(Sheaf, LerchLeadingTermInQRegime)
{
    // n = 0 summand e^{pi i u}/(1 - e^{2 pi i u}), u = 2z - tau, expanded with positive q-order
    Affine u{Rational(2), Rational(-1), Rational(0)};
    Affine v{Rational(-1), Rational(-1), make_rational(1, 2)};
    auto pair = lerch_mu(u, v, 2, 3);
    ASSERT_FALSE(pair.numerator.empty());
    const auto& [e, p] = pair.numerator.terms().front();
    EXPECT_EQ(e, 4);  // q^{1/2}
    EXPECT_EQ(p.coeff(-2), GaussianRational(-1));
}

TEST(Sheaf, LerchWindowIndependence)
{
    Affine u{Rational(2), Rational(-1), Rational(0)};
    Affine v{Rational(-1), Rational(0), make_rational(1, 2)};
    EXPECT_TRUE(series_equal(lerch_numerator(u, v, 2, 6), lerch_numerator(u, v, 2, 6, 5)));
}

TEST(Sheaf, LerchZeroOrderWithW)
{
    Affine u{Rational(1), Rational(0), Rational(0)};
    try {
        lerch_numerator(u, u, 1, 3);
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::non_positive_order);
    }
}

TEST(Sheaf, Prop22)
{
    for (int c1 : {-1, 0}) {
        auto r = verify_prop22(c1, 5);
        EXPECT_TRUE(r.passed) << report_text(r);
    }
}

TEST(Sheaf, Prop22Mutation)
{
    auto args = Prop22Args::standard(-1);
    args.v.z = Rational(1);
    auto [l, r] = prop22_sides(-1, 4, args);
    EXPECT_FALSE(series_equal(l, r));
}

TEST(Sheaf, Parshift)
{
    for (const auto& r : verify_parshift(5)) EXPECT_TRUE(r.passed) << report_text(r);
}
