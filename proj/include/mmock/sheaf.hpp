#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "modular_series.hpp"
#include "series.hpp"
#include "wpoly.hpp"

namespace mmock {

struct SheafData {
    int r = 1;
    long c1 = 0;
    long c2 = 0;
};

/// Complex dimension 2 r c2 - (r-1) c1^2 - r^2 + 1 of the moduli space on P^2.
inline long moduli_dimension(const SheafData& d)
{
    if (d.r < 1) throw error(errc::domain_error, "rank must be positive");
    return 2L * d.r * d.c2 - (d.r - 1L) * d.c1 * d.c1 - 1L * d.r * d.r + 1;
}

namespace detail {

inline WPoly s_power(long m, const Rational& c = Rational(1)) { return WPoly::monomial(static_cast<int>(m), c); }

/// sum_{k>=0} (s^a t^b)^k in t, known below t^trunc (b > 0).
inline BiSeries geometric_st(long a, long b, long trunc)
{
    std::vector<BiSeries::term> raw;
    for (long k = 0; k * b < trunc; ++k) raw.emplace_back(k * b, s_power(k * a));
    return BiSeries::from_terms(1, trunc, std::move(raw));
}

inline BiSeries monomial_st(long a, long b, const Rational& c = Rational(1))
{
    return BiSeries::monomial(b, s_power(a, c));
}

/// prod over d >= 1 of 1/((1 - s^{a d + a0} t^{b d})(1 - s^{a d + a0 + g} t^{b d})(1 - s^{a d + a0 + 2g} t^{b d}))
/// raised to `power`.
inline BiSeries z_product(long a, long a0, long g, long b, int power, long trunc)
{
    return infinite_product<WPoly>(
        [&](long d, long tr) {
            BiSeries f = geometric_st(a * d + a0, b * d, tr) * geometric_st(a * d + a0 + g, b * d, tr) *
                         geometric_st(a * d + a0 + 2 * g, b * d, tr);
            return power == 1 ? f : f.pow(power);
        },
        1, trunc);
}

inline BiSeries divide_coefficients(const BiSeries& a, const WPoly& den)
{
    return a.map_coeffs([&](const WPoly& p) { return p.divide_exact(den); });
}

} // namespace detail

/// Generating function sum_n p(M(1,0,n), s) t^n for P^2; WPoly key m is s^m.
inline BiSeries gottsche_rank1(long order)
{
    if (order <= 0) return BiSeries(1, order);
    // factor m: 1/((1 - s^{2m-2} t^m)(1 - s^{2m} t^m)(1 - s^{2m+2} t^m))
    return detail::z_product(2, -2, 2, 1, 1, order);
}

namespace detail {

inline BiSeries yoshioka_minus_one(long T)
{
    // prod_d Z_{s^2}(P^2, s^{4d-2} t^d)^2
    const BiSeries P = z_product(4, -2, 2, 1, 2, T);
    std::vector<BiSeries::term> theta;
    for (long n = -isqrt(T) - 1; n <= isqrt(T) + 1; ++n)
        if (n * n < T) theta.emplace_back(n * n, s_power(2 * n * (2 * n - 1)));
    const BiSeries inv_theta = BiSeries::from_terms(1, T, std::move(theta)).inverse();

    BiSeries bracket(1, T);
    for (long b = 0; (b + 1) * (b + 1) < T; ++b) {
        const long t0 = (b + 1) * (b + 1);
        bracket += monomial_st(2 * (b + 1) * (2 * b + 1), t0) * geometric_st(8 * (b + 1), 2 * b + 1, T);
        bracket -= monomial_st(2 * b * (2 * b + 5), t0) * geometric_st(8 * b, 2 * b + 1, T);
    }
    const WPoly s2_minus_1 = WPoly::from_terms({{0, Rational(-1)}, {2, Rational(1)}});
    return (P * inv_theta * divide_coefficients(bracket, s2_minus_1)).truncated(T);
}

inline BiSeries yoshioka_zero(long T)
{
    const BiSeries P = z_product(4, -2, 2, 1, 2, T);
    // theta-type sum sum_n s^{2n(2n+1)} t^{n(n+1)} = a0 + R with a0 = 1 + s^2
    const WPoly a0 = WPoly::from_terms({{0, Rational(1)}, {2, Rational(1)}});
    std::vector<BiSeries::term> rest;
    for (long n = -isqrt(T) - 2; n <= isqrt(T) + 1; ++n) {
        const long e = n * (n + 1);
        if (e > 0 && e < T) rest.emplace_back(e, s_power(2 * n * (2 * n + 1)));
    }
    const BiSeries R = BiSeries::from_terms(1, T, std::move(rest));
    // A = a0^{K+1} / (a0 + R) modulo t^{2K+2}: sum_{k=0}^{K} (-R)^k a0^{K-k}
    const long K = std::max(0L, (T - 1) / 2);
    std::vector<WPoly> a0_pow{WPoly(Rational(1))};
    for (long k = 1; k <= K + 1; ++k) a0_pow.push_back(a0_pow.back() * a0);
    BiSeries A(1, T);
    BiSeries minus_r_pow = BiSeries::constant(WPoly(Rational(1)), 1, T);
    for (long k = 0; k <= K; ++k) {
        A += minus_r_pow * a0_pow[K - k];
        minus_r_pow = minus_r_pow * (-R);
    }

    BiSeries bracket(1, T);  // C' - 2 s^2 B0, where C' = 2 s^2 C
    for (long b = 0; b * b + 3 * b + 1 < T; ++b) {
        const long t0 = b * b + 3 * b + 1;
        BiSeries b0 = monomial_st(2 * (b + 1) * (2 * b + 3), t0) * geometric_st(8 * (b + 1), 2 * b + 1, T) -
                      monomial_st(2 * b * (2 * b + 7), t0) * geometric_st(8 * b, 2 * b + 1, T);
        bracket -= b0 * s_power(2, Rational(2));
    }
    for (long b = 0; b * (b + 1) < T; ++b) {
        const WPoly c = s_power(2 * (b + 1) * (2 * b + 1)) - s_power(2 * b * (2 * b + 1));
        bracket += BiSeries::monomial(b * (b + 1), c, 1, T);
    }
    // prod_d Z_{s^4}(P^2, s^{8d-4} t^{2d})
    const BiSeries P2 = z_product(8, -4, 4, 2, 1, T);
    const WPoly one_minus_s2 = WPoly::from_terms({{0, Rational(1)}, {2, Rational(-1)}});

    BiSeries numerator = P * bracket * A + P2 * (one_minus_s2 * a0_pow[K]);
    const WPoly den = s_power(2, Rational(2)) * one_minus_s2 * a0_pow[K + 1];
    return divide_coefficients(numerator.truncated(T), den);
}

} // namespace detail

/// Yoshioka's generating function sum_n p(M(2, c1, n), s) t^n, known below t^order.
inline BiSeries yoshioka_rank2(int c1, long order)
{
    if (c1 != -1 && c1 != 0) throw error(errc::domain_error, "c1 must be -1 or 0");
    if (order <= 0) return BiSeries(1, order);
    return c1 == -1 ? detail::yoshioka_minus_one(order) : detail::yoshioka_zero(order);
}

using PoincareTable = std::map<long, WPoly>;

/// Poincare polynomials of M(rank, c1, c2) for c2 below order.
inline PoincareTable poincare_table(int rank, int c1, long order)
{
    BiSeries gen;
    if (rank == 1) {
        if (c1 != 0) throw error(errc::domain_error, "rank 1 tables use c1 = 0");
        gen = gottsche_rank1(order);
    } else if (rank == 2) {
        gen = yoshioka_rank2(c1, order);
    } else {
        throw error(errc::domain_error, "rank must be 1 or 2");
    }
    PoincareTable out;
    for (long n = 0; n < order; ++n)
        if (n >= (rank == 2 ? (c1 == 0 ? 2 : 1) : 0)) out[n] = gen.coeff(n);
    return out;
}

/// Checks that p is a Poincare polynomial of a space of complex dimension dim with vanishing
/// odd cohomology: nonnegative integers, only even powers, palindromic of degree 2 dim.
inline bool is_poincare_polynomial(const WPoly& p, long dim)
{
    if (p.empty() || p.min_key() != 0 || p.max_key() != 2 * dim) return false;
    for (const auto& [k, c] : p.terms()) {
        if (k % 2 != 0 || sgn(c) < 0 || !is_integer(c)) return false;
        if (p.coeff(static_cast<int>(2 * dim - k)) != c) return false;
    }
    return true;
}

/// Euler numbers: p(M, -1), with prefactor q^{-1/2} (c1 = -1) or q^{-1/4} (c1 = 0); lattice 1/4.
inline FracSeries euler_series(int c1, long order)
{
    const BiSeries y = yoshioka_rank2(c1, order + 1);
    std::vector<FracSeries::term> raw;
    for (const auto& [n, p] : y.terms()) raw.emplace_back(4 * n, eval_at_minus_one(p));
    const long shift = c1 == -1 ? -2 : -1;
    return FracSeries::from_terms(4, 4 * y.trunc(), std::move(raw)).shifted(shift).truncated(4 * order);
}

/// Rank 1 Euler numbers sum chi(M(1,0,n)) q^{n - 1/8}.
inline FracSeries euler_series_rank1(long order)
{
    const BiSeries g = gottsche_rank1(order + 1);
    std::vector<FracSeries::term> raw;
    for (const auto& [n, p] : g.terms()) raw.emplace_back(8 * n, eval_at_minus_one(p));
    return FracSeries::from_terms(8, 8 * g.trunc(), std::move(raw)).shifted(-1).truncated(8 * order);
}

/// Euler numbers against the class-number forms: 3 f_1 for c1 = -1, 3 f_0 + (1/4) eta^{-3}(2 tau) for c1 = 0.
inline IdentityReport verify_euler_series(int c1, long order)
{
    FracSeries target = f_series(c1 == -1 ? 1 : 0, order) * Rational(3);
    if (c1 == 0) target = target + eta_power(-3, order, 2) * make_rational(1, 4);
    return make_report(c1 == -1 ? "euler c1=-1" : "euler c1=0", order, euler_series(c1, order), target.truncated(target.den() * order));
}

/// Generating function of sum_{m | Gamma} (-1)^{dim M(Gamma/m)} chi(Gamma/m) / m^2 on the lattice of euler_series.
inline FracSeries rational_invariants(int c1, long order)
{
    const FracSeries e = euler_series(c1, order);
    if (c1 == -1) {
        // only m = 1 divides (2, -1, c2); dim = 4 c2 - 4 is even
        return e;
    }
    if (c1 != 0) throw error(errc::domain_error, "c1 must be -1 or 0");
    // m = 1: dim = 4 c2 - 3 is odd.  m = 2 (c2 even): Gamma/2 = (1, 0, c2/2), dim = c2 even.
    const BiSeries g = gottsche_rank1(order / 2 + 2);
    std::vector<FracSeries::term> raw;
    for (const auto& [e4, c] : e.terms()) raw.emplace_back(e4, -c);
    for (const auto& [m, p] : g.terms()) {
        const long e4 = 4 * (2 * m) - 1;  // q^{2m - 1/4}
        if (e4 < e.trunc()) raw.emplace_back(e4, eval_at_minus_one(p) / 4);
    }
    const long trunc = std::min(e.trunc(), 4 * (2 * g.trunc()) - 1);
    return FracSeries::from_terms(4, trunc, std::move(raw));
}

// ---------------------------------------------------------------------------------------------
// Bivariate (q, w) series with Gaussian-rational coefficients, in the regime |q| << 1 for fixed w.

/// Lattice used for all (q, w) expansions: exponents of q are multiples of 1/8.
inline constexpr long kBiDen = 8;

/// alpha z + beta tau + gamma.
struct Affine {
    Rational z;
    Rational tau;
    Rational c;

    friend Affine operator+(const Affine& a, const Affine& b) { return {a.z + b.z, a.tau + b.tau, a.c + b.c}; }
    friend Affine operator-(const Affine& a) { return {-a.z, -a.tau, -a.c}; }
    friend Affine operator-(const Affine& a, const Affine& b) { return a + (-b); }
};

/// c q^{e/8} w^{key/2}.
struct BiMonomial {
    long e = 0;
    int key = 0;
    GaussianRational c = GaussianRational(1);

    friend BiMonomial operator*(const BiMonomial& a, const BiMonomial& b) { return {a.e + b.e, a.key + b.key, a.c * b.c}; }
    BiMonomial inverse() const { return {-e, -key, GaussianRational(1) / c}; }
};

namespace detail {

inline long exact_long(const Rational& r, errc code, const char* what)
{
    if (!is_integer(r)) throw error(code, what);
    return r.get_num().get_si();
}

inline Rational abs_rat(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

/// Smallest N >= 0 such that a2 n^2 - a1 |n| - a0 >= T whenever |n| > N (a2 > 0).
inline long quadratic_cutoff(double a2, double a1, double a0, double T)
{
    const double root = (a1 + std::sqrt(a1 * a1 + 4.0 * a2 * std::max(0.0, T + a0))) / (2.0 * a2);
    return static_cast<long>(std::ceil(root)) + 1;
}

} // namespace detail

/// e^{2 pi i x a} as a monomial; phases must be fourth roots of unity.
inline BiMonomial exp_monomial(const Affine& a, const Rational& x)
{
    BiMonomial m;
    m.key = static_cast<int>(detail::exact_long(2 * x * a.z, errc::domain_error, "w exponent is not a half-integer"));
    m.e = detail::exact_long(kBiDen * x * a.tau, errc::domain_error, "q exponent is off the 1/8 lattice");
    const long quarter = detail::exact_long(4 * x * a.c, errc::irrational_phase, "phase is not a fourth root of unity");
    m.c = GaussianRational::i_power(quarter);
    return m;
}

inline GaussBiSeries bi_monomial_series(const BiMonomial& m, long trunc = kExact)
{
    return GaussBiSeries::monomial(m.e, GaussWPoly::monomial(m.key, m.c), kBiDen, trunc);
}

/// Embeds a t-series in the (q, w) regime via s^4 t = q, s^2 = w, then multiplies by q^{shift/8}.
inline GaussBiSeries to_qw(const BiSeries& st, long shift)
{
    std::vector<GaussBiSeries::term> raw;
    for (const auto& [n, p] : st.terms())
        raw.emplace_back(kBiDen * n + shift, to_gauss(p.map_keys([n](int m) { return m - static_cast<int>(4 * n); })));
    return GaussBiSeries::from_terms(kBiDen, detail::sat_add(detail::sat_mul(st.trunc(), kBiDen), shift), std::move(raw));
}

inline GaussBiSeries to_qw(const FracSeries& q_series)
{
    std::vector<GaussBiSeries::term> raw;
    const auto n = q_series.normalized();
    if (kBiDen % n.den() != 0) throw error(errc::domain_error, "series is off the 1/8 lattice");
    const auto s = n.on_lattice(kBiDen);
    for (const auto& [e, c] : s.terms()) raw.emplace_back(e, GaussWPoly(GaussianRational(c)));
    return GaussBiSeries::from_terms(kBiDen, s.trunc(), std::move(raw));
}

/// theta_1(a; m tau) = i sum_{r in Z+1/2} (-1)^{r-1/2} q^{m r^2/2} e^{2 pi i r a}, known below q^order.
inline GaussBiSeries theta1_bi(const Affine& a, long m, long order)
{
    if (m <= 0) throw error(errc::domain_error, "theta1 modulus must be a positive multiple of tau");
    const long trunc = kBiDen * order;
    const double beta = std::abs(a.tau.get_d());
    const long J = detail::quadratic_cutoff(m / 2.0, beta, 0.0, static_cast<double>(order)) + 1;
    std::vector<GaussBiSeries::term> raw;
    for (long j = -J; j <= J; ++j) {
        const Rational r = make_rational(2 * j + 1, 2);
        BiMonomial t = exp_monomial(a, r);
        t.e += detail::exact_long(kBiDen * m * r * r / 2, errc::domain_error, "theta exponent off lattice");
        if (t.e >= trunc) continue;
        t.c *= GaussianRational::i_unit() * GaussianRational(j % 2 == 0 ? 1 : -1);
        raw.emplace_back(t.e, GaussWPoly::monomial(t.key, t.c));
    }
    return GaussBiSeries::from_terms(kBiDen, trunc, std::move(raw));
}

/// Numerator sum of the Lerch sum on modulus m tau:
/// sum_n (-1)^n e^{pi i (n^2+n) m tau + 2 pi i n v} / (1 - e^{2 pi i n m tau + 2 pi i u}).
/// Each denominator is expanded in its variable of positive q-order.
inline GaussBiSeries lerch_numerator(const Affine& u, const Affine& v, long m, long order, long extra_terms = 0)
{
    if (m <= 0) throw error(errc::domain_error, "Lerch modulus must be a positive multiple of tau");
    const long trunc = kBiDen * order;
    const double ut = std::abs(u.tau.get_d()), vt = std::abs(v.tau.get_d());
    const long N = detail::quadratic_cutoff(m / 2.0, 1.5 * m + vt, ut, static_cast<double>(order)) + extra_terms;
    const BiMonomial xu = exp_monomial(u, Rational(1));
    std::vector<GaussBiSeries::term> raw;
    auto emit = [&](const BiMonomial& t) {
        if (t.e < trunc) raw.emplace_back(t.e, GaussWPoly::monomial(t.key, t.c));
    };
    for (long n = -N; n <= N; ++n) {
        BiMonomial base = exp_monomial(v, Rational(n));
        base.e += kBiDen * m * (n * n + n) / 2;
        if (n % 2 != 0) base.c = -base.c;
        BiMonomial x = xu;
        x.e += kBiDen * m * n;
        if (x.e > 0) {
            for (BiMonomial t = base; t.e < trunc; t = t * x) emit(t);
        } else if (x.e < 0) {
            // 1/(1 - x) = -x^{-1}/(1 - x^{-1})
            const BiMonomial y = x.inverse();
            BiMonomial t = base * y;
            t.c = -t.c;
            for (; t.e < trunc; t = t * y) emit(t);
        } else {
            if (x.key != 0)
                throw error(errc::non_positive_order, "geometric expansion variable has zero q-order but carries w");
            if (x.c == GaussianRational(1)) throw error(errc::domain_error, "Lerch denominator vanishes identically");
            BiMonomial t = base;
            t.c = t.c / (GaussianRational(1) - x.c);
            emit(t);
        }
    }
    return GaussBiSeries::from_terms(kBiDen, trunc, std::move(raw));
}

/// The two pieces of mu(u, v; m tau) = e^{pi i u} * numerator / theta_1(v; m tau), left uncombined.
struct LerchPair {
    GaussBiSeries numerator;  // e^{pi i u} times the n-sum
    GaussBiSeries theta;      // theta_1(v; m tau)
};

inline LerchPair lerch_mu(const Affine& u, const Affine& v, long m, long order)
{
    const BiMonomial pre = exp_monomial(u, make_rational(1, 2));
    const long margin = std::max(0L, -pre.e) / kBiDen + 1;
    GaussBiSeries num = bi_monomial_series(pre) * lerch_numerator(u, v, m, order + margin);
    return {num.truncated(kBiDen * order), theta1_bi(v, m, order)};
}

struct BiIdentityReport {
    std::string name;
    long order = 0;
    bool passed = false;
    std::optional<discrepancy<GaussWPoly>> first_discrepancy;
};

inline BiIdentityReport make_bi_report(std::string name, long order, const GaussBiSeries& lhs, const GaussBiSeries& rhs)
{
    BiIdentityReport r{std::move(name), order, false, compare_series(lhs, rhs)};
    r.passed = !r.first_discrepancy && lhs.trunc() >= kBiDen * order && rhs.trunc() >= kBiDen * order;
    return r;
}

/// Arguments of the Lerch sum in the rank 2 formulas (exposed so tests can mutate them).
struct Prop22Args {
    Affine u;
    Affine v;
    static Prop22Args standard(int c1)
    {
        if (c1 == -1) return {{Rational(2), Rational(-1), Rational(0)}, {Rational(-1), Rational(-1), make_rational(1, 2)}};
        return {{Rational(2), Rational(-1), Rational(0)}, {Rational(-1), Rational(0), make_rational(1, 2)}};
    }
};

/// Both sides of the rank 2 Lerch-sum formula after multiplying by theta_1^2(z;tau) theta_1(v;2tau)
/// (and theta_1(2z;2tau) for c1 = 0).
inline std::pair<GaussBiSeries, GaussBiSeries> prop22_sides(int c1, long order, const Prop22Args& args)
{
    if (c1 != -1 && c1 != 0) throw error(errc::domain_error, "c1 must be -1 or 0");
    const long T = order + 2;
    const Affine z{Rational(1), Rational(0), Rational(0)};
    const Affine two_z{Rational(2), Rational(0), Rational(0)};
    const GaussBiSeries th_z = theta1_bi(z, 1, T);
    const GaussBiSeries th_z2 = th_z * th_z;
    const LerchPair mu = lerch_mu(args.u, args.v, 2, T);
    auto wpoly = [](std::vector<GaussWPoly::term> t) {
        return GaussBiSeries::constant(GaussWPoly::from_terms(std::move(t)), kBiDen);
    };
    const GaussianRational one(1);

    GaussBiSeries lhs, rhs;
    if (c1 == -1) {
        lhs = to_qw(yoshioka_rank2(-1, T + 1), -4) * th_z2 * mu.theta;
        // -(1 - w) w^{-5/2} e^{pi i u} N
        rhs = wpoly({{-5, -one}, {-3, one}}) * mu.numerator;
    } else {
        const GaussBiSeries th_2z = theta1_bi(two_z, 2, T);
        lhs = to_qw(yoshioka_rank2(0, T + 1), -2) * th_z2 * mu.theta * th_2z;
        const GaussBiSeries pref = wpoly({{-4, one}, {-2, -one}});  // (1 - w) w^{-2}
        const GaussBiSeries half = GaussBiSeries::constant(GaussWPoly(GaussianRational(make_rational(1, 2))), kBiDen);
        const GaussBiSeries q_w = bi_monomial_series({-2, 3, one});  // q^{-1/4} w^{3/2}
        rhs = pref * (half * mu.theta * th_2z - q_w * mu.numerator * th_2z) -
              GaussBiSeries::constant(GaussWPoly(GaussianRational(Rational(0), make_rational(1, 2))), kBiDen) * pref *
                  th_z2 * mu.theta;
    }
    return {lhs.truncated(kBiDen * order), rhs.truncated(kBiDen * order)};
}

inline BiIdentityReport verify_prop22(int c1, long order)
{
    auto [lhs, rhs] = prop22_sides(c1, order, Prop22Args::standard(c1));
    return make_bi_report(c1 == -1 ? "prop22_c1_minus1" : "prop22_c1_0", order, lhs, rhs);
}

/// Cleared form of mu(u+s, v+s) - mu(u, v) = i eta^3 theta_1(u+v+s) theta_1(s) / (theta_1(u) theta_1(v) theta_1(u+s) theta_1(v+s))
/// on modulus m tau, after multiplying by theta_1(u) theta_1(v) theta_1(u+s) theta_1(v+s).
inline std::pair<GaussBiSeries, GaussBiSeries> parshift_sides(const Affine& u, const Affine& v, const Affine& s, long m,
                                                              long order)
{
    const long T = order + 3;
    const LerchPair shifted = lerch_mu(u + s, v + s, m, T);
    const LerchPair plain = lerch_mu(u, v, m, T);
    const GaussBiSeries th_u = theta1_bi(u, m, T);
    const GaussBiSeries th_us = theta1_bi(u + s, m, T);
    GaussBiSeries lhs = shifted.numerator * th_u * plain.theta * th_us - plain.numerator * th_u * th_us * shifted.theta;
    const GaussBiSeries eta3 = to_qw(eta_power(3, T + 1, m));
    GaussBiSeries rhs = GaussBiSeries::constant(GaussWPoly(GaussianRational::i_unit()), kBiDen) * eta3 *
                        theta1_bi(u + v + s, m, T) * theta1_bi(s, m, T);
    return {lhs.truncated(kBiDen * order), rhs.truncated(kBiDen * order)};
}

/// The two parameter shifts used to reduce the rank 2 Lerch sums to z-independent ones.
inline std::vector<BiIdentityReport> verify_parshift(long order)
{
    const Affine u1{Rational(0), Rational(-1), Rational(0)};
    const Affine v1{Rational(-3), Rational(-1), make_rational(1, 2)};
    const Affine s1{Rational(2), Rational(0), Rational(0)};
    const Affine u2{Rational(0), Rational(0), make_rational(-1, 2)};
    const Affine v2{Rational(-3), Rational(1), Rational(0)};
    const Affine s2{Rational(2), Rational(-1), make_rational(1, 2)};
    std::vector<BiIdentityReport> out;
    auto a = parshift_sides(u1, v1, s1, 2, order);
    out.push_back(make_bi_report("parshift_c1_minus1", order, a.first, a.second));
    auto b = parshift_sides(u2, v2, s2, 2, order);
    out.push_back(make_bi_report("parshift_c1_0", order, b.first, b.second));
    return out;
}

} // namespace mmock
