#pragma once

#include <functional>
#include <string>
#include <vector>

#include "arithmetic.hpp"
#include "bigfloat.hpp"
#include "multiplier.hpp"
#include "rademacher.hpp"

namespace mmock {

namespace detail {

inline void require_upper_half(const BigComplex& tau)
{
    if (tau.im <= 0) throw error(errc::domain_error, "point not in the upper half plane");
}

/// Largest exponent worth summing for terms bounded by growth * |q|^e.
inline long series_cutoff(const BigComplex& tau, double growth_log = 0)
{
    const BigFloat decay = 2 * big_pi() * tau.im; // -log|q|
    const BigFloat need = log_inverse_eps() + growth_log;
    BigFloat e = need / decay;
    if (e > 200000) throw error(errc::tail_bound_unreachable, "|q| too close to 1 for the target precision");
    return static_cast<long>(e.convert_to<double>()) + 2;
}

} // namespace detail

/// eta(tau) = q^{1/24} sum_n (-1)^n q^{n(3n-1)/2}.
inline BigComplex eta_value(const BigComplex& tau)
{
    detail::require_upper_half(tau);
    const long cut = detail::series_cutoff(tau);
    BigComplex sum(1);
    for (long n = 1;; ++n) {
        long e1 = n * (3 * n - 1) / 2, e2 = n * (3 * n + 1) / 2;
        if (e1 > cut) break;
        BigComplex t = e_of(tau, Rational(e1));
        if (e2 <= cut) t += e_of(tau, Rational(e2));
        if (n % 2) sum -= t;
        else sum += t;
    }
    return e_of(tau, make_rational(1, 24)) * sum;
}

/// Theta_j(tau) = sum over m = j mod 2 of q^{m^2/4}.
inline BigComplex theta_value(int j, const BigComplex& tau)
{
    detail::require_upper_half(tau);
    const long cut = detail::series_cutoff(tau);
    BigComplex sum = j == 0 ? BigComplex(1) : BigComplex(0);
    for (long m = (j == 0 ? 2 : 1); m * m <= 4 * cut; m += 2) sum += e_of(tau, make_rational(m * m, 4)) * BigFloat(2);
    return sum;
}

/// h_j(tau) = sum_n H(4n + 3j) q^{n + 3j/4}; H(m) <= m bounds the tail.
inline BigComplex h_value(int j, const BigComplex& tau)
{
    detail::require_upper_half(tau);
    const long cut = detail::series_cutoff(tau, 12);
    const BigComplex q = e_of(tau, Rational(1));
    BigComplex sum, qn(1);
    for (long n = 0; n <= cut + 20 + cut / 8; ++n) {
        Rational H = hurwitz(4 * n + 3 * j);
        if (!is_zero(H)) sum += qn * to_big(H);
        qn *= q;
    }
    return e_of(tau, make_rational(3 * j, 4)) * sum;
}

inline BigComplex f_value(int j, const BigComplex& tau)
{
    BigComplex e = eta_value(tau);
    BigComplex e2 = e * e;
    return h_value(j, tau) / (e2 * e2 * e2);
}

struct TransformCheck {
    std::string name;
    long h, k;
    int j;
    BigComplex z;
    BigComplex lhs, rhs;
    BigFloat discrepancy;
};

namespace detail {

inline BigComplex left_point(long h, long k, const BigComplex& z) { return BigComplex(BigFloat(h) - z.im, z.re) / BigFloat(k); }

inline BigComplex right_point(long hp, long k, const BigComplex& z)
{
    BigComplex w = BigComplex(1) / z;
    return BigComplex(BigFloat(hp) - w.im, w.re) / BigFloat(k);
}

inline void require_z(const BigComplex& z, long h, long k)
{
    if (z.re <= 0) throw error(errc::domain_error, "transformation needs Re(z) > 0");
    if (k < 1 || std::gcd(h, k) != 1) throw error(errc::not_coprime, "transformation needs gcd(h, k) = 1");
}

inline TransformCheck finish(std::string name, long h, long k, int j, const BigComplex& z, BigComplex lhs, BigComplex rhs)
{
    BigFloat d = abs(lhs - rhs);
    return {std::move(name), h, k, j, z, std::move(lhs), std::move(rhs), std::move(d)};
}

} // namespace detail

/// eta((h+iz)/k) = e^{pi i (h-h')/(12k)} omega_{h,k}^{-1} z^{-1/2} eta((h'+i/z)/k).
inline TransformCheck verify_eta_transformation(long h, long k, const BigComplex& z)
{
    detail::require_z(z, h, k);
    const long hp = select_hprime(h, k).value;
    BigComplex lhs = eta_value(detail::left_point(h, k, z));
    BigComplex rhs = e_turns(make_rational(h - hp, 24 * k)) * omega(h, k).inverse().evaluate() * pow(z, BigFloat(-1) / 2) *
                     eta_value(detail::right_point(hp, k, z));
    return detail::finish("eta", h, k, -1, z, std::move(lhs), std::move(rhs));
}

/// Theta_j((h+iz)/k) = z^{-1/2} sum_l chi_{jl} Theta_l((h'+i/z)/k).
inline TransformCheck verify_theta_transformation(int j, long h, long k, const BigComplex& z)
{
    detail::require_z(z, h, k);
    const long hp = select_hprime(h, k).value;
    BigComplex lhs = theta_value(j, detail::left_point(h, k, z));
    const BigComplex tp = detail::right_point(hp, k, z);
    BigComplex rhs;
    for (int l = 0; l < 2; ++l) {
        MultiplierValue c = chi(j, l, h, hp, k);
        if (!c.zero) rhs += c.evaluate() * theta_value(l, tp);
    }
    rhs *= pow(z, BigFloat(-1) / 2);
    return detail::finish("theta", h, k, j, z, std::move(lhs), std::move(rhs));
}

using PsiFunction = std::function<MultiplierValue(int, int, long, long, long)>;

/// f_j((h+iz)/k) = z^{3/2} e^{pi i h'/(2k) - pi i (j+1) h/(2k)}
///   sum_l psi_{jl} [f_l((h'+i/z)/k) + (1/(4 sqrt2 pi)) eta^{-6}((h'+i/z)/k) I_l(1/(kz))].
inline TransformCheck verify_fj_transformation(int j, long h, long k, const BigComplex& z, const QuadratureSpec& quad,
                                               const PsiFunction& psi_fn = psi)
{
    detail::require_z(z, h, k);
    const long hp = select_hprime(h, k).value;
    BigComplex lhs = f_value(j, detail::left_point(h, k, z));
    const BigComplex tp = detail::right_point(hp, k, z);
    const BigComplex x = BigComplex(1) / (z * BigFloat(k));
    BigComplex e = eta_value(tp);
    BigComplex e6 = e * e * e;
    e6 *= e6;
    const BigFloat c = 1 / (4 * boost::multiprecision::sqrt(BigFloat(2)) * big_pi());
    BigComplex rhs;
    for (int l = 0; l < 2; ++l) {
        MultiplierValue p = psi_fn(j, l, h, hp, k);
        if (p.zero) continue;
        BigComplex bracket = f_value(l, tp) + c * eichler_integral(l, x, hp, k, quad) / e6;
        rhs += p.evaluate() * bracket;
    }
    rhs *= pow(z, BigFloat(3) / 2) * e_turns(make_rational(hp - (j + 1) * h, 4 * k));
    return detail::finish("f", h, k, j, z, std::move(lhs), std::move(rhs));
}

/// |Form A - Form B| of the Eichler integral.
inline TransformCheck verify_eichler_forms(int j, const BigComplex& x, long hp, long k, const QuadratureSpec& quad)
{
    BigComplex a = eichler_integral(j, x, hp, k, quad, EichlerForm::direct);
    BigComplex b = eichler_integral(j, x, hp, k, quad, EichlerForm::lemma);
    return detail::finish("eichler", hp, k, j, x, std::move(a), std::move(b));
}

} // namespace mmock
