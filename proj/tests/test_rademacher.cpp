#include <gtest/gtest.h>

#include <mmock/transforms.hpp>

#include <random>

using namespace mmock;

namespace {

BigFloat pi() { return big_pi(); }

// Gamma(nu + 1) for nu in {5/2, 3, 7/2}, written out.
BigFloat gamma_nu_plus_one(int twice_nu)
{
    BigFloat rpi = boost::multiprecision::sqrt(pi());
    if (twice_nu == 5) return rpi * 15 / 8;
    if (twice_nu == 6) return BigFloat(6);
    return rpi * 105 / 16;
}

// sum_m (x/2)^{nu+2m} / (m! Gamma(m+nu+1)).
BigFloat series_oracle(int twice_nu, const BigFloat& x)
{
    BigFloat nu = BigFloat(twice_nu) / 2;
    BigFloat term = boost::multiprecision::pow(x / 2, nu) / gamma_nu_plus_one(twice_nu);
    BigFloat sum = term;
    for (int m = 1; m < 400; ++m) {
        term *= (x / 2) * (x / 2) / (m * (m + nu));
        sum += term;
    }
    return sum;
}

BigFloat rel(const BigFloat& a, const BigFloat& b) { return boost::multiprecision::abs(a - b) / boost::multiprecision::abs(b); }

} // namespace

TEST(Bessel, ClosedFormsMatchSeries)
{
    PrecisionScope p(256);
    for (BesselOrder o : {BesselOrder::five_halves, BesselOrder::three, BesselOrder::seven_halves})
        for (const char* x : {"0.1", "1", "10", "50"})
            EXPECT_LT(rel(bessel_I(o, BigFloat(x)), series_oracle(static_cast<int>(o), BigFloat(x))), BigFloat("1e-30"))
                << static_cast<int>(o) << " " << x;
}

TEST(Bessel, ExplicitFiveHalves)
{
    PrecisionScope p(256);
    BigFloat x(1);
    BigFloat expect = boost::multiprecision::sqrt(2 / (pi() * x)) * ((1 + 3 / (x * x)) * boost::multiprecision::sinh(x) - 3 / x * boost::multiprecision::cosh(x));
    EXPECT_LT(rel(bessel_I(BesselOrder::five_halves, x), expect), BigFloat("1e-60"));
}

TEST(Bessel, ZeroAndSmallArgument)
{
    PrecisionScope p(256);
    EXPECT_EQ(bessel_I(BesselOrder::three, BigFloat(0)), 0);
    BigFloat x("1e-6");
    for (BesselOrder o : {BesselOrder::five_halves, BesselOrder::three, BesselOrder::seven_halves}) {
        int tn = static_cast<int>(o);
        BigFloat ratio = bessel_I(o, x) / boost::multiprecision::pow(x / 2, BigFloat(tn) / 2) * gamma_nu_plus_one(tn);
        EXPECT_LT(boost::multiprecision::abs(ratio - 1), BigFloat("1e-11"));
    }
    EXPECT_THROW(bessel_I(BesselOrder::three, BigFloat(-1)), error);
}

TEST(Bessel, ScaledFormIsContinuousThroughZero)
{
    PrecisionScope p(256);
    // I_nu(sqrt X)/X^{nu/2} at X = 0 is 1/(2^nu Gamma(nu+1)); nearby negative X agree to first order.
    for (BesselOrder o : {BesselOrder::five_halves, BesselOrder::three, BesselOrder::seven_halves}) {
        int tn = static_cast<int>(o);
        BigFloat at0 = 1 / (boost::multiprecision::pow(BigFloat(2), BigFloat(tn) / 2) * gamma_nu_plus_one(tn));
        EXPECT_LT(rel(bessel_I_scaled(o, BigFloat(0)), at0), BigFloat("1e-70"));
        EXPECT_LT(rel(bessel_I_scaled(o, BigFloat("-1e-20")), at0), BigFloat("1e-19"));
        EXPECT_LT(rel(bessel_I_scaled(o, BigFloat(4)), bessel_I(o, BigFloat(2)) / boost::multiprecision::pow(BigFloat(2), BigFloat(tn) / 2)),
                  BigFloat("1e-70"));
    }
}

TEST(Kernel, RemovableSingularity)
{
    PrecisionScope p(256);
    for (long k : {1L, 5L, 40L}) {
        EXPECT_LT(boost::multiprecision::abs(f_kernel_re(k, 0, BigFloat("1e-30")) + pi() * pi() / 3), BigFloat("1e-50"));
        EXPECT_LT(boost::multiprecision::abs(f_kernel_re(k, 2 * k, BigFloat("1e-30")) + pi() * pi() / 3), BigFloat("1e-50"));
    }
}

TEST(Kernel, SeriesAndDirectAgreeAtSwitch)
{
    PrecisionScope p(256);
    for (long k : {1L, 3L}) {
        BigFloat u = BigFloat(k) / (32 * pi());
        BigFloat below = f_kernel_re(k, 0, u * BigFloat("0.999999"));
        BigFloat above = f_kernel_re(k, 0, u * BigFloat("1.000001"));
        EXPECT_LT(boost::multiprecision::abs(below - above), BigFloat("1e-8"));
        // Direct evaluation at higher precision as the reference just below the switch.
        BigFloat ref;
        {
            PrecisionScope hi(1024);
            BigFloat x = big_pi() * BigFloat(u * BigFloat("0.999999")) / k, s = boost::multiprecision::sinh(x);
            ref = big_pi() * big_pi() * (1 / (s * s) - 1 / (x * x));
        }
        EXPECT_LT(boost::multiprecision::abs(below - ref), BigFloat("1e-70"));
    }
}

TEST(Kernel, SpecialValue)
{
    PrecisionScope p(256);
    EXPECT_LT(abs(f_kernel(1, 1, BigFloat(0)) + BigComplex(pi() * pi())), BigFloat("1e-70"));
    EXPECT_LT(boost::multiprecision::abs(f_kernel_re(1, 1, BigFloat(0)) + pi() * pi()), BigFloat("1e-70"));
}

TEST(Kernel, RealPartMatchesComplexEvaluation)
{
    PrecisionScope p(256);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> ud(-3, 3);
    for (int i = 0; i < 10; ++i) {
        long k = 1 + rng() % 12;
        long g = 1 + static_cast<long>(rng() % (2 * k - 1)) - k + 1; // -k < g <= k, g != 0
        if (g == 0) g = 1;
        BigFloat u(ud(rng));
        BigComplex f = f_kernel(k, g, u);
        EXPECT_LT(boost::multiprecision::abs(f.re - f_kernel_re(k, g, u)), BigFloat("1e-60"));
        BigComplex fm = f_kernel(k, g, BigFloat(-u));
        EXPECT_LT(abs(fm - conj(f)), BigFloat("1e-60"));
    }
}

TEST(ScriptI, AgreesWithDirectIntegralInU)
{
    PrecisionScope p(256);
    QuadratureSpec q;
    for (auto [k, g, n, j] : std::vector<std::tuple<long, long, long, int>>{{1, 0, 5, 1}, {3, 2, 5, 0}, {4, 1, 2, 1}}) {
        const long N = 4 * n - (j + 1);
        // Plain integral over u with the (1-u^2)^{7/4} endpoint behaviour left in; loose tolerance.
        QuadratureSpec loose;
        loose.abs_tol = 1e-14;
        loose.max_subdivisions = 20000;
        auto integrand = [&](const BigFloat& u) {
            BigFloat w = 1 - u * u;
            BigFloat val = f_kernel(k, g, u / 2).re * bessel_I(BesselOrder::seven_halves, pi() / k * boost::multiprecision::sqrt(N * w)) *
                           boost::multiprecision::pow(w, BigFloat(7) / 4);
            return std::vector<BigFloat>{val};
        };
        BigFloat ref = integrate<BigFloat>(integrand, BigFloat(-1), BigFloat(1), 1, loose).value[0];
        EXPECT_LT(boost::multiprecision::abs(script_I(k, g, n, j, q) - ref), BigFloat("1e-12")) << k << " " << g;
    }
}

TEST(ScriptI, EvenBranchHalfIntervalDoubled)
{
    PrecisionScope p(256);
    QuadratureSpec q;
    const long k = 2, n = 3;
    const int j = 0;
    const long N = 4 * n - 1;
    auto integrand = [&](const BigFloat& t) {
        BigFloat c = boost::multiprecision::cos(t);
        BigFloat v = f_kernel_re(k, 0, boost::multiprecision::sin(t) / 2) * bessel_I(BesselOrder::seven_halves, pi() / k * boost::multiprecision::sqrt(BigFloat(N)) * c) *
                     boost::multiprecision::pow(c, BigFloat(9) / 2);
        return std::vector<BigFloat>{v};
    };
    BigFloat full = integrate<BigFloat>(integrand, -pi() / 2, pi() / 2, 1, q).value[0];
    BigFloat half = integrate<BigFloat>(integrand, BigFloat(0), pi() / 2, 1, q).value[0];
    EXPECT_LT(boost::multiprecision::abs(full - 2 * half), BigFloat("1e-24"));
    EXPECT_LT(boost::multiprecision::abs(full - script_I(k, 0, n, j, q)), BigFloat("1e-24"));
}

TEST(ScriptI, TighterToleranceStaysWithinEstimate)
{
    PrecisionScope p(256);
    for (auto [k, g, n, j] : std::vector<std::tuple<long, long, long, int>>{{1, 0, 5, 1}, {3, 2, 5, 0}}) {
        QuadratureSpec q1, q2;
        q1.abs_tol = 1e-20;
        q2.abs_tol = 5e-21;
        const long N = 4 * n - (j + 1);
        BigFloat e1;
        auto a = detail::script_I_scaled_all(k, N, q1, &e1);
        auto b = detail::script_I_scaled_all(k, N, q2);
        EXPECT_LE(boost::multiprecision::abs(a[g] - b[g]), e1 + BigFloat("1e-60"));
    }
}

TEST(ScriptI, Preconditions)
{
    PrecisionScope p(256);
    QuadratureSpec q;
    EXPECT_THROW(script_I(2, 0, 0, 0, q), error);
    EXPECT_THROW(script_I(2, -2, 3, 0, q), error);
}

TEST(Eichler, DualFormsAtOrigin)
{
    PrecisionScope p(256);
    QuadratureSpec q;
    EXPECT_LT(verify_eichler_forms(0, BigComplex(1), 0, 1, q).discrepancy, BigFloat("1e-15"));
}

TEST(Eichler, DualFormsGrid)
{
    PrecisionScope p(256);
    QuadratureSpec q;
    for (auto [h, k] : std::vector<std::pair<long, long>>{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {2, 5}, {5, 6}})
        for (const BigComplex& x : {BigComplex(BigFloat("0.5")), BigComplex(BigFloat(2), BigFloat("0.7")), BigComplex(BigFloat("0.3"), BigFloat("-0.2"))})
            for (int j = 0; j < 2; ++j) {
                long hp = select_hprime(h, k).value;
                EXPECT_LT(verify_eichler_forms(j, x, hp, k, q).discrepancy, BigFloat("1e-15")) << j << " " << h << "/" << k;
            }
}

TEST(Eichler, DecaysWithRealPart)
{
    PrecisionScope p(256);
    QuadratureSpec q;
    BigFloat prev = abs(eichler_integral(1, BigComplex(1), 0, 1, q));
    for (const char* x : {"10", "100", "1000"}) {
        BigFloat cur = abs(eichler_integral(1, BigComplex(BigFloat(x)), 0, 1, q));
        EXPECT_LT(cur, prev);
        prev = cur;
    }
    EXPECT_LT(prev, BigFloat("1e-3"));
    EXPECT_THROW(eichler_integral(0, BigComplex(BigFloat(0), BigFloat(1)), 0, 1, q), error);
}

TEST(Transformations, FjExamples)
{
    PrecisionScope p(256);
    QuadratureSpec q;
    EXPECT_LT(verify_fj_transformation(0, 0, 1, BigComplex(1), q).discrepancy, BigFloat("1e-15"));
    EXPECT_LT(verify_fj_transformation(1, 1, 2, BigComplex(BigFloat("0.7"), BigFloat("0.2")), q).discrepancy, BigFloat("1e-15"));
}

TEST(Transformations, TailBoundUnreachable)
{
    PrecisionScope p(256);
    try {
        eta_value(BigComplex(BigFloat(0), BigFloat("1e-7")));
        FAIL() << "expected an error";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::tail_bound_unreachable);
    }
}

TEST(Rademacher, ConvergesForSmallCase)
{
    QuadratureSpec q;
    auto r = rademacher_sum(1, 1, 100, q);
    PrecisionScope p(256);
    EXPECT_EQ(r.exact, make_rational(1, 3));
    EXPECT_LT(r.abs_error(), BigFloat("1e-2"));
}

TEST(Rademacher, PartialsArePrefixSums)
{
    QuadratureSpec q;
    auto r = rademacher_sum(0, 2, 12, q);
    PrecisionScope p(256);
    BigFloat run = 0;
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        run += r.terms[i].s1;
        run += r.terms[i].s2;
        run += r.terms[i].s3;
        EXPECT_EQ(run, r.partials[i].running);
        BigFloat s3 = 0;
        for (const auto& t : r.terms[i].s3_terms) s3 += t.value;
        EXPECT_LT(boost::multiprecision::abs(s3 - r.terms[i].s3), BigFloat("1e-60"));
    }
}

TEST(Rademacher, ThreadCountDoesNotChangeResult)
{
    QuadratureSpec q;
    auto a = rademacher_sum(1, 3, 16, q, 256, PhaseVariant::theorem, 1);
    auto b = rademacher_sum(1, 3, 16, q, 256, PhaseVariant::theorem, 3);
    PrecisionScope p(256);
    for (std::size_t i = 0; i < a.partials.size(); ++i) EXPECT_EQ(a.partials[i].running, b.partials[i].running);
}

TEST(Rademacher, ZeroIndexRecorded)
{
    QuadratureSpec q;
    auto r = rademacher_sum(0, 0, 30, q);
    PrecisionScope p(256);
    EXPECT_EQ(r.exact, make_rational(-1, 12));
    EXPECT_EQ(r.partials.size(), 30u);
    EXPECT_TRUE(boost::multiprecision::isfinite(r.value()));
}

TEST(Rademacher, MoreTermsHelpOnSmallGrid)
{
    QuadratureSpec q;
    int violations = 0;
    for (int j = 0; j < 2; ++j)
        for (long n = 1; n <= 3; ++n) {
            auto r = rademacher_sum(j, n, 100, q);
            PrecisionScope p(256);
            if (!(r.abs_error_at(100) < r.abs_error_at(25))) ++violations;
        }
    EXPECT_LE(violations, 1);
}

TEST(Rademacher, DerivationVariantLeavesImaginaryResidue)
{
    QuadratureSpec q;
    try {
        rademacher_sum(1, 1, 4, q, 256, PhaseVariant::derivation);
        FAIL() << "expected PrecisionInsufficient";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::precision_insufficient);
    }
    auto a = rademacher_sum(1, 1, 1, q, 256, PhaseVariant::derivation);
    auto b = rademacher_sum(1, 1, 1, q, 256, PhaseVariant::theorem);
    PrecisionScope p(256);
    EXPECT_EQ(a.value(), b.value());
}

TEST(Rademacher, RejectsBadInput)
{
    QuadratureSpec q;
    EXPECT_THROW(rademacher_sum(1, 0, 5, q), error);
    EXPECT_THROW(rademacher_sum(2, 1, 5, q), error);
    EXPECT_THROW(rademacher_sum(0, 1, 0, q), error);
}

TEST(Asymptotics, SameForBothIndices)
{
    PrecisionScope p(256);
    EXPECT_EQ(asymptotic_main_terms(0, 50), asymptotic_main_terms(1, 50));
}

TEST(Asymptotics, RatioImprovesWithN)
{
    PrecisionScope p(256);
    for (int j = 0; j < 2; ++j) {
        BigFloat d100 = boost::multiprecision::abs(to_big(alpha(j, 100)) / asymptotic_main_terms(j, 100) - 1);
        BigFloat d400 = boost::multiprecision::abs(to_big(alpha(j, 400)) / asymptotic_main_terms(j, 400) - 1);
        EXPECT_LT(d400, d100);
    }
}

TEST(Asymptotics, RatioWithinFivePercentAt400)
{
    PrecisionScope p(256);
    for (int j = 0; j < 2; ++j) {
        BigFloat ratio = to_big(alpha(j, 400)) / asymptotic_main_terms(j, 400);
        EXPECT_GT(ratio, BigFloat("0.95")) << "j = " << j << ", ratio " << to_decimal(ratio, 6);
        EXPECT_LT(ratio, BigFloat("1.05")) << "j = " << j << ", ratio " << to_decimal(ratio, 6);
    }
}
