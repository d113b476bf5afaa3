#pragma once

#include <atomic>
#include <optional>
#include <thread>
#include <vector>

#include "bessel.hpp"
#include "bigfloat.hpp"
#include "error.hpp"
#include "modular_series.hpp"
#include "multiplier.hpp"
#include "quadrature.hpp"

namespace mmock {

namespace detail {

/// c_n with 1/sinh^2 x - 1/x^2 = sum_{n>=1} c_n x^{2n-2}, c_n = -(2n-1) 4^n B_{2n} / (2n)!.
inline const std::vector<Rational>& csch2_series()
{
    static const std::vector<Rational> coeffs = [] {
        const int terms = 40;
        std::vector<Rational> b(2 * terms + 1);
        b[0] = 1;
        for (int m = 1; m <= 2 * terms; ++m) {
            Rational s = 0;
            Integer binom = 1; // C(m+1, i)
            for (int i = 0; i < m; ++i) {
                s += Rational(binom) * b[i];
                binom = binom * (m + 1 - i) / (i + 1);
            }
            b[m] = -s / (m + 1);
        }
        std::vector<Rational> c;
        Integer fact = 1, four = 1;
        for (int n = 1; n <= terms; ++n) {
            fact *= (2 * n - 1) * (2 * n);
            four *= 4;
            c.push_back(-Rational(2 * n - 1) * Rational(four) * b[2 * n] / Rational(fact));
        }
        return c;
    }();
    return coeffs;
}

/// 1/sinh^2 x - 1/x^2, by series for |x| < 1/32.
inline BigFloat csch2_minus_inverse_square(const BigFloat& x)
{
    if (boost::multiprecision::abs(x) < BigFloat(1) / 32) {
        const auto& c = csch2_series();
        BigFloat x2 = x * x, sum = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) sum = sum * x2 + to_big(*it);
        return sum;
    }
    BigFloat s = boost::multiprecision::sinh(x);
    return 1 / (s * s) - 1 / (x * x);
}

inline bool zero_mod_2k(long k, long g) { return mod(g, 2 * k) == 0; }

} // namespace detail

/// f_{k,g}(u): pi^2 / sinh^2(pi u/k - pi i g/(2k)), or pi^2/sinh^2(pi u/k) - k^2/u^2 when 2k | g.
inline BigComplex f_kernel(long k, long g, const BigFloat& u)
{
    const BigFloat pi = big_pi();
    if (detail::zero_mod_2k(k, g)) return BigComplex(pi * pi * detail::csch2_minus_inverse_square(pi * u / k));
    BigFloat a = pi * u / k, b = pi * g / (2 * k);
    BigComplex s(boost::multiprecision::sinh(a) * boost::multiprecision::cos(b), -boost::multiprecision::cosh(a) * boost::multiprecision::sin(b));
    return BigComplex(pi * pi) / (s * s);
}

/// Re f_{k,g}(u). Since f_{k,g}(-u) is the conjugate of f_{k,g}(u), only this part survives
/// integration against an even weight.
inline BigFloat f_kernel_re(long k, long g, const BigFloat& u)
{
    const BigFloat pi = big_pi();
    if (detail::zero_mod_2k(k, g)) return pi * pi * detail::csch2_minus_inverse_square(pi * u / k);
    BigFloat S = boost::multiprecision::sinh(pi * u / k), s = boost::multiprecision::sin(pi * g / (2 * k));
    S *= S;
    s *= s;
    BigFloat d = S + s;
    return pi * pi * (S - s - 2 * S * s) / (d * d);
}

namespace detail {

/// N^{-7/4} I_{k,g}(n) for g = 0..k, with N = 4n - (j+1):
/// 2 int_0^{pi/2} Re f_{k,g}(sin t / 2) (pi/k)^{7/2} cos^8 t E(pi^2 N cos^2 t / k^2) dt,
/// where E(X) = I_{7/2}(sqrt X) / X^{7/4}; u = sin t removes the endpoint branch points.
inline std::vector<BigFloat> script_I_scaled_all(long k, long N, const QuadratureSpec& quad, BigFloat* error_out = nullptr)
{
    const BigFloat pi = big_pi();
    const BigFloat scale = 2 * boost::multiprecision::pow(pi / k, BigFloat(7) / 2);
    const BigFloat X0 = pi * pi * N / (BigFloat(k) * k);
    std::vector<BigFloat> sin2(k + 1);
    for (long g = 1; g <= k; ++g) {
        BigFloat s = boost::multiprecision::sin(pi * g / (2 * k));
        sin2[g] = s * s;
    }
    auto integrand = [&](const BigFloat& t) {
        std::vector<BigFloat> v(k + 1);
        BigFloat c = boost::multiprecision::cos(t);
        BigFloat c2 = c * c;
        BigFloat w = scale * c2 * c2 * c2 * c2 * bessel_I_scaled(BesselOrder::seven_halves, X0 * c2);
        BigFloat a = pi * boost::multiprecision::sin(t) / (2 * k);
        v[0] = w * pi * pi * csch2_minus_inverse_square(a);
        BigFloat S = boost::multiprecision::sinh(a);
        S *= S;
        for (long g = 1; g <= k; ++g) {
            const BigFloat& s = sin2[g];
            BigFloat d = S + s;
            v[g] = w * pi * pi * (S - s - 2 * S * s) / (d * d);
        }
        return v;
    };
    QuadratureSpec q = quad;
    if (N > 1) q.abs_tol = quad.abs_tol * std::pow(static_cast<double>(N), -1.75);
    auto r = integrate<BigFloat>(integrand, BigFloat(0), pi / 2, k + 1, q);
    if (error_out) *error_out = r.error;
    return r.value;
}

} // namespace detail

/// I_{k,g}(n) = int_{-1}^{1} f_{k,g}(u/2) I_{7/2}((pi/k) sqrt(N (1-u^2))) (1-u^2)^{7/4} du, N = 4n - (j+1).
inline BigFloat script_I(long k, long g, long n, int j, const QuadratureSpec& quad)
{
    const long N = 4 * n - (j + 1);
    if (N <= 0) throw error(errc::domain_error, "script_I needs 4n - (j+1) > 0");
    if (g <= -k || g > k) throw error(errc::domain_error, "script_I needs -k < g <= k");
    auto all = detail::script_I_scaled_all(k, N, quad);
    return all[g < 0 ? -g : g] * boost::multiprecision::pow(BigFloat(N), BigFloat(7) / 4);
}

enum class EichlerForm { direct, lemma };

namespace detail {

inline BigFloat log_inverse_eps() { return BigFloat(current_bits() + 8) * boost::multiprecision::log(BigFloat(2)); }

/// int_0^inf Theta_j(iw - h'/k) (w + x)^{-3/2} dw. Below w = 1/k the theta function is replaced by
/// its Poisson-summed form and w = s^2 is substituted, which absorbs the w^{-1/2} growth at 0.
inline BigComplex eichler_direct(int j, const BigComplex& x, long hp, long k, const QuadratureSpec& quad)
{
    const BigFloat pi = big_pi();
    const BigFloat L = log_inverse_eps();
    const BigFloat w0 = BigFloat(1) / k;
    auto power = [&](const BigComplex& y) { return pow(y, BigFloat(-3) / 2); };

    // G(t) = sum over g mod 2k, g = j mod 2, of e(-h' g^2/(4k) + t g/(2k)); periodic in t mod 2k.
    std::vector<BigComplex> G(2 * k);
    for (long t = 0; t < 2 * k; ++t)
        for (long g = j; g < 2 * k; g += 2) G[t] += e_turns(make_rational(-hp * g * g + 2 * t * g, 4 * k));
    const long tmax = static_cast<long>(boost::multiprecision::sqrt(2 * BigFloat(k) * L / pi).convert_to<double>()) + 2;
    const BigFloat pref = boost::multiprecision::sqrt(BigFloat(2)) / k;
    auto near = [&](const BigFloat& s) {
        BigComplex sum = G[0];
        if (s > 0) {
            BigFloat s2 = s * s;
            for (long t = 1; t <= tmax; ++t) {
                BigFloat e = pi * t * t / (2 * BigFloat(k) * k * s2);
                if (e > L) break;
                BigFloat gauss = boost::multiprecision::exp(-e);
                sum += (G[detail::mod(t, 2 * k)] + G[detail::mod(-t, 2 * k)]) * gauss;
            }
        }
        return std::vector<BigComplex>{pref * sum * power(BigComplex(s * s) + x)};
    };
    BigComplex total = integrate<BigComplex>(near, BigFloat(0), boost::multiprecision::sqrt(w0), 1, quad).value[0];

    // Direct theta sum for w >= 1/k; the m = 0 term of Theta_0 is integrated exactly.
    const long mmax = static_cast<long>(boost::multiprecision::sqrt(2 * L * k / pi).convert_to<double>()) + 2;
    std::vector<BigComplex> phase(mmax + 1);
    for (long m = 0; m <= mmax; ++m) phase[m] = e_turns(make_rational(-hp * m * m, 4 * k));
    const BigFloat W = 2 * (L / 4 + boost::multiprecision::log(1 / BigFloat(quad.abs_tol)) + 10) / pi;
    auto far = [&](const BigFloat& w) {
        BigComplex sum;
        for (long m = (j == 0 ? 2 : 1); m <= mmax; m += 2) {
            BigFloat e = pi * w * m * m / 2;
            if (e > L) break;
            sum += phase[m] * boost::multiprecision::exp(-e);
        }
        return std::vector<BigComplex>{sum * power(BigComplex(w) + x) * BigFloat(2)};
    };
    total += integrate<BigComplex>(far, w0, W, 1, quad).value[0];
    if (j == 0) total += BigComplex(2) / sqrt(BigComplex(w0) + x);
    return total;
}

/// Right-hand side of the dual representation: a finite Gauss-sum combination of Gaussian integrals of f_{k,g}.
inline BigComplex eichler_lemma(int j, const BigComplex& x, long hp, long k, const QuadratureSpec& quad)
{
    const BigFloat pi = big_pi();
    // |f_{k,g}| <= pi^2/sin^2(pi/(2k)) < 4k^2 + 4 away from g = 0, so this cutoff leaves less than tol.
    const BigFloat U = boost::multiprecision::sqrt(
        (boost::multiprecision::log(1 / BigFloat(quad.abs_tol)) + 2 * boost::multiprecision::log(BigFloat(4 * k * k + 4)) + 10) /
        (2 * pi * x.re)) + 1;
    std::vector<long> gs;
    for (long g = 0; g <= k; ++g)
        if (detail::mod(g, 2) == j) gs.push_back(g);
    std::vector<BigFloat> sin2(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        BigFloat s = boost::multiprecision::sin(pi * gs[i] / (2 * k));
        sin2[i] = s * s;
    }
    auto integrand = [&](const BigFloat& u) {
        std::vector<BigComplex> v(gs.size());
        BigComplex gauss = exp(BigComplex(-2 * pi * u * u) * x);
        BigFloat a = pi * u / k;
        BigFloat S = boost::multiprecision::sinh(a);
        S *= S;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            BigFloat re;
            if (gs[i] == 0) {
                re = pi * pi * csch2_minus_inverse_square(a);
            } else {
                BigFloat d = S + sin2[i];
                re = pi * pi * (S - sin2[i] - 2 * S * sin2[i]) / (d * d);
            }
            v[i] = gauss * re;
        }
        return v;
    };
    auto ints = integrate<BigComplex>(integrand, BigFloat(0), U, gs.size(), quad).value;
    const BigComplex pref = BigComplex(1) / (x * (boost::multiprecision::sqrt(BigFloat(2)) * pi * k * k));
    BigComplex total;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const long g = gs[i];
        const long mult = (g == 0 || g == k) ? 1 : 2;
        BigComplex term = -(pref * ints[i] * BigFloat(2));
        if (g == 0) term += BigComplex(2) / sqrt(x);
        total += e_turns(make_rational(-g * g * hp, 4 * k)) * term * BigFloat(mult);
    }
    return total;
}

} // namespace detail

/// The Eichler-type integral I_j(x) = int_0^inf Theta_j(iw - h'/k) / (w + x)^{3/2} dw, Re x > 0.
inline BigComplex eichler_integral(int j, const BigComplex& x, long hprime, long k, const QuadratureSpec& quad,
                                   EichlerForm form = EichlerForm::direct)
{
    if (x.re <= 0) throw error(errc::domain_error, "eichler_integral needs Re(x) > 0");
    if (j != 0 && j != 1) throw error(errc::domain_error, "eichler_integral: j must be 0 or 1");
    if (k < 1) throw error(errc::domain_error, "eichler_integral: k must be positive");
    return form == EichlerForm::direct ? detail::eichler_direct(j, x, hprime, k, quad) : detail::eichler_lemma(j, x, hprime, k, quad);
}

struct S3Term {
    int l;
    long g;      // 0 <= g <= k; g and -g are combined
    BigFloat value;
};

struct RademacherTerm {
    long k = 0;
    BigFloat s1, s2, s3;
    BigFloat imag;        // imaginary part of s1 + s2 + s3 before it is discarded
    BigFloat imag_bound;  // threshold it was checked against
    BigFloat quad_error;
    std::vector<S3Term> s3_terms;
};

struct RademacherPartial {
    long k;
    BigFloat running;
    BigFloat abs_error;
};

struct RademacherReport {
    int j = 0;
    long n = 0;
    long kmax = 0;
    unsigned bits = 0;
    double quad_tol = 0;
    PhaseVariant variant = PhaseVariant::theorem;
    Rational exact;
    std::vector<RademacherTerm> terms;
    std::vector<RademacherPartial> partials;

    const BigFloat& value() const { return partials.back().running; }
    const BigFloat& abs_error() const { return partials.back().abs_error; }
    /// |partial(k) - exact| at the given prefix length.
    const BigFloat& abs_error_at(long k) const { return partials.at(k - 1).abs_error; }
};

namespace detail {

inline RademacherTerm rademacher_term(int j, long n, long k, const QuadratureSpec& quad, PhaseVariant variant)
{
    const BigFloat pi = big_pi();
    const long N = 4 * n - (j + 1);
    const RootTable roots(24 * k);
    RademacherTerm t;
    t.k = k;
    std::vector<BigComplex> k0 = kloosterman_squares(j, 0, n, k, PhaseVariant::theorem, roots);
    const BigComplex K0 = k0[0];
    const BigFloat X = pi * pi * N / (BigFloat(k) * k);
    const BigFloat a1 = -(pi / 6) / k * boost::multiprecision::pow(pi / k, BigFloat(5) / 2) * bessel_I_scaled(BesselOrder::five_halves, X);
    const BigFloat a2 = 1 / boost::multiprecision::sqrt(BigFloat(2 * k)) * boost::multiprecision::pow(pi / k, BigFloat(3)) *
                        bessel_I_scaled(BesselOrder::three, X);
    BigComplex s1 = K0 * a1, s2 = K0 * a2;

    std::vector<BigComplex> kl[2];
    kl[0] = variant == PhaseVariant::theorem ? std::move(k0) : kloosterman_squares(j, 0, n, k, variant, roots);
    kl[1] = kloosterman_squares(j, 1, n, k, variant, roots);
    BigFloat qerr;
    std::vector<BigFloat> J = script_I_scaled_all(k, N, quad, &qerr);
    t.quad_error = qerr;
    const BigFloat c3 = -1 / (8 * pi * BigFloat(k) * k);
    BigComplex s3;
    // Size of the summands before the h-sums cancel: |psi| <= 1, phi(k) <= k terms each.
    BigFloat mass = boost::multiprecision::abs(a1) + boost::multiprecision::abs(a2);
    for (long g = 0; g <= k; ++g) {
        const int l = static_cast<int>(g % 2);
        const long mult = (g == 0 || g == k) ? 1 : 2;
        BigComplex c = kl[l][g] * (c3 * J[g] * mult);
        t.s3_terms.push_back({l, g, c.re});
        s3 += c;
        mass += boost::multiprecision::abs(c3 * J[g]) * mult;
    }
    t.s1 = s1.re;
    t.s2 = s2.re;
    t.s3 = s3.re;
    t.imag = s1.im + s2.im + s3.im;
    // Rounding in the h-sums, plus the quadrature error entering through complex Kloosterman weights.
    t.imag_bound = 10 * k * (unit_roundoff() * mass * (k + 1) + boost::multiprecision::abs(c3) * (k + 1) * (qerr + BigFloat(quad.abs_tol)));
    return t;
}

} // namespace detail

/// Truncation at kmax of the exact formula for alpha_j(n); terms are independent in k and are
/// reduced in ascending k, so the result does not depend on the thread count.
inline RademacherReport rademacher_sum(int j, long n, long kmax, const QuadratureSpec& quad, unsigned bits = 256,
                                       PhaseVariant variant = PhaseVariant::theorem, unsigned threads = 1)
{
    if (j != 0 && j != 1) throw error(errc::domain_error, "rademacher_sum: j must be 0 or 1");
    if (n < (j == 1 ? 1 : 0)) throw error(errc::domain_error, "rademacher_sum: n out of range");
    if (kmax < 1) throw error(errc::domain_error, "rademacher_sum: kmax must be positive");
    if (bits < 64) throw error(errc::domain_error, "precision below 64 bits");
    PrecisionScope scope(bits);
    RademacherReport rep;
    rep.j = j;
    rep.n = n;
    rep.kmax = kmax;
    rep.bits = bits;
    rep.quad_tol = quad.abs_tol;
    rep.variant = variant;
    rep.exact = alpha(j, n);
    rep.terms.resize(kmax);

    // Warm the shared caches before any worker starts.
    gauss_legendre(quad.order);
    detail::csch2_series();

    std::atomic<long> next{1};
    std::vector<std::optional<error>> failures(kmax);
    auto worker = [&] {
        for (long k = next++; k <= kmax; k = next++) {
            try {
                rep.terms[k - 1] = detail::rademacher_term(j, n, k, quad, variant);
            } catch (const error& e) {
                failures[k - 1] = e;
            }
        }
    };
    const unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(kmax)));
    if (nt == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nt; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& f : failures)
        if (f) throw *f;

    const BigFloat exact = to_big(rep.exact);
    BigFloat running = 0;
    for (const auto& t : rep.terms) {
        if (boost::multiprecision::abs(t.imag) > t.imag_bound)
            throw error(errc::precision_insufficient, "imaginary part " + to_decimal(t.imag, 6) + " at k = " + std::to_string(t.k) +
                                                          " exceeds " + to_decimal(t.imag_bound, 6));
        running += t.s1;
        running += t.s2;
        running += t.s3;
        rep.partials.push_back({t.k, running, boost::multiprecision::abs(running - exact)});
    }
    return rep;
}

/// ((1/96) n^{-3/2} - (1/(32 pi)) n^{-7/4}) e^{2 pi sqrt n}; the same for both j.
inline BigFloat asymptotic_main_terms(int j, long n)
{
    if (j != 0 && j != 1) throw error(errc::domain_error, "asymptotic_main_terms: j must be 0 or 1");
    if (n < 1) throw error(errc::domain_error, "asymptotic_main_terms: n must be positive");
    const BigFloat pi = big_pi(), N(n);
    return (boost::multiprecision::pow(N, BigFloat(-3) / 2) / 96 - boost::multiprecision::pow(N, BigFloat(-7) / 4) / (32 * pi)) *
           boost::multiprecision::exp(2 * pi * boost::multiprecision::sqrt(N));
}

} // namespace mmock
