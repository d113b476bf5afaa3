#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arithmetic.hpp"
#include "error.hpp"
#include "series.hpp"

namespace mmock {

/// Lattice used for every eta-type expansion: exponents are multiples of 1/24.
inline constexpr long kEtaDen = 24;

/// prod_{n>=1} (1 - q^{scale n}) on the 1/den lattice, known below q^{trunc/den}.
inline FracSeries euler_product(long scale, long den, long trunc)
{
    return infinite_product<Rational>(
        [&](long n, long) {
            return FracSeries::from_terms(den, kExact, {{0, Rational(1)}, {scale * n * den, Rational(-1)}});
        },
        den, trunc);
}

/// eta(scale * tau)^power on the 1/24 lattice, known below q^order.
inline FracSeries eta_power(long power, long order, long scale = 1)
{
    if (scale <= 0) throw error(errc::domain_error, "eta_power: scale must be positive");
    const long shift = scale * power;  // numerator over 24
    const long trunc = kEtaDen * order;
    FracSeries p = euler_product(scale, kEtaDen, trunc - shift);
    return p.pow(power).shifted(shift).truncated(trunc);
}

/// Dedekind eta q^{1/24} prod (1 - q^n), known below q^order.
inline FracSeries eta(long order) { return eta_power(1, order); }

/// Theta_j = sum_n q^{(2n+j)^2/4}, on the 1/4 lattice.
inline FracSeries theta_unary(int j, long order)
{
    if (j != 0 && j != 1) throw error(errc::domain_error, "theta_unary: j must be 0 or 1");
    const long trunc = 4 * order;
    std::vector<FracSeries::term> raw;
    for (long m = j; m * m < trunc; m += 2) raw.emplace_back(m * m, Rational(m == 0 ? 1 : 2));
    return FracSeries::from_terms(4, trunc, std::move(raw));
}

/// prod eta(scale tau)^exponent.
struct EtaQuotientSpec {
    struct factor {
        long scale;
        long exponent;
    };
    std::vector<factor> factors;
    Rational constant = 1;

    static EtaQuotientSpec theta0() { return {{{2, 5}, {1, -2}, {4, -2}}, Rational(1)}; }
    static EtaQuotientSpec theta1() { return {{{4, 2}, {2, -1}}, Rational(2)}; }
};

inline FracSeries eta_quotient(const EtaQuotientSpec& spec, long order)
{
    if (spec.factors.empty()) throw error(errc::domain_error, "eta_quotient: empty specification");
    long margin = 1;
    for (const auto& f : spec.factors) {
        if (f.scale <= 0) throw error(errc::domain_error, "eta_quotient: scales must be positive");
        margin += (std::abs(f.scale * f.exponent) + kEtaDen - 1) / kEtaDen;
    }
    FracSeries out = FracSeries::constant(spec.constant, kEtaDen);
    for (const auto& f : spec.factors) out *= eta_power(f.exponent, order + margin, f.scale);
    return out.truncated(kEtaDen * order).normalized();
}

/// f_j = h_j / eta^6 = sum alpha_j(n) q^{n - (j+1)/4}, known below q^order.
inline FracSeries f_series(int j, long order)
{
    FracSeries h = h_series(j, order + 1);
    FracSeries inv_eta6 = eta_power(-6, order + 1);
    return (h * inv_eta6).truncated(kEtaDen * order).normalized();
}

/// Coefficients alpha_j(0..nmax) in one pass.
inline std::vector<Rational> alpha_table(int j, long nmax)
{
    const FracSeries f = f_series(j, nmax + 1);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(nmax + 1));
    for (long n = 0; n <= nmax; ++n) out.push_back(coefficient_at(f, Rational(n) - make_rational(j + 1, 4)));
    return out;
}

inline Rational alpha(int j, long n)
{
    if (n < 0) throw error(errc::domain_error, "alpha: n must be nonnegative");
    return alpha_table(j, n).back();
}

/// The integer 3 alpha_1(n), or 3 alpha_0(n) plus the matching coefficient of (1/4) eta^{-3}(2 tau).
inline Rational integral_lift(int j, long n)
{
    Rational out = 3 * alpha(j, n);
    if (j == 0) out += coefficient_at(eta_power(-3, n + 1, 2), Rational(n) - make_rational(1, 4)) / 4;
    return out;
}

namespace detail {

/// Appends c q^{a} / (1 - eps q^{b}) expanded geometrically in whichever direction
/// gives positive q-order, keeping exponents below trunc (all on one lattice).
inline void add_geometric(std::vector<FracSeries::term>& acc, const Rational& c, long a, long b, int eps, long trunc)
{
    if (b == 0) throw error(errc::non_positive_order, "geometric expansion variable has zero q-order");
    if (b > 0) {
        Rational sign(1);
        for (long e = a; e < trunc; e += b) {
            acc.emplace_back(e, c * sign);
            sign *= eps;
        }
    } else {
        // 1/(1 - x) = -x^{-1} / (1 - x^{-1}) with x^{-1} = eps q^{-b}
        Rational sign(eps);
        for (long e = a - b; e < trunc; e -= b) {
            acc.emplace_back(e, -c * sign);
            sign *= eps;
        }
    }
}

} // namespace detail

struct IdentityReport {
    std::string name;
    long order = 0;
    bool passed = false;
    std::optional<discrepancy<Rational>> first_discrepancy;
};

inline IdentityReport make_report(std::string name, long order, const FracSeries& lhs, const FracSeries& rhs)
{
    IdentityReport r{std::move(name), order, false, compare_series(lhs, rhs)};
    r.passed = !r.first_discrepancy.has_value() && std::min(lhs.trunc() * 1.0 / lhs.den(), rhs.trunc() * 1.0 / rhs.den()) >= order;
    return r;
}

/// Right-hand side of Kronecker's class-number identity for h_1, on the 1/4 lattice.
inline FracSeries kronecker_rhs(long order, const Rational& theta_cube_coeff = make_rational(1, 6))
{
    const long trunc = 4 * (order + 1);
    std::vector<FracSeries::term> raw;
    // sum_n (2n-1) q^{n^2} / (1 - q^{2n-1}), exponents scaled by 4; every term has order >= (n-1)^2
    const long M = detail::isqrt(order + 1) + 2;
    for (long m = -M; m <= M; ++m) {
        const long a = 4 * m * m, b = 4 * (2 * m - 1);
        detail::add_geometric(raw, Rational(2 * m - 1), a, b, 1, trunc);
    }
    FracSeries lambert = FracSeries::from_terms(4, trunc, std::move(raw));
    FracSeries inv_theta0 = theta_unary(0, order + 1).inverse();
    FracSeries first = (inv_theta0 * lambert).shifted(-1) * make_rational(-1, 2);
    FracSeries theta1 = theta_unary(1, order + 1);
    return (first + theta1.pow(3) * theta_cube_coeff).truncated(4 * order);
}

inline IdentityReport verify_kronecker_identity(long order)
{
    return make_report("kronecker", order, h_series(1, order), kronecker_rhs(order));
}

/// Watson's form of the identity: sum F(4n+3) q^{n+3/4}, with the theta denominator read as Theta_0(tau).
inline FracSeries watson_lhs(long order)
{
    std::vector<FracSeries::term> raw;
    for (long e = 3; e < 4 * order; e += 4) raw.emplace_back(e, uneven_class_count(e));
    return FracSeries::from_terms(4, 4 * order, std::move(raw));
}

inline FracSeries watson_rhs(long order, int lambert_sign = -1)
{
    const long trunc = 4 * (order + 1);
    std::vector<FracSeries::term> raw;
    // (n - 1/2) q^{(n-1/2)^2} / (q^{1/2-n} - q^{n-1/2}); factor the denominator as
    // q^{1/2-n} (1 - q^{2n-1}).  Exponents on the 1/4 lattice.
    const long M = detail::isqrt(order + 1) + 2;
    for (long m = -M; m <= M; ++m) {
        const long num_exp = (2 * m - 1) * (2 * m - 1);  // 4 (m-1/2)^2
        const long pre = -2 * (1 - 2 * m);               // 4 * (-(1/2 - m))
        detail::add_geometric(raw, make_rational(2 * m - 1, 2), num_exp + pre, 4 * (2 * m - 1), 1, trunc);
    }
    FracSeries lambert = FracSeries::from_terms(4, trunc, std::move(raw));
    FracSeries inv_theta0 = theta_unary(0, order + 1).inverse();
    FracSeries theta1 = theta_unary(1, order + 1);
    return (theta1.pow(3) * make_rational(1, 4) + inv_theta0 * lambert * Rational(lambert_sign)).truncated(4 * order);
}

inline IdentityReport verify_watson_identity(long order)
{
    return make_report("watson", order, watson_lhs(order), watson_rhs(order));
}

/// sum_{n >= 0} H(n) q^n.
inline FracSeries hurwitz_series(long order)
{
    std::vector<FracSeries::term> raw;
    for (long n = 0; n < order; ++n) raw.emplace_back(n, hurwitz(n));
    return FracSeries::from_terms(1, order, std::move(raw));
}

inline FracSeries mordell_rhs(long order, const Rational& theta_cube_coeff = make_rational(-1, 12))
{
    const long trunc = order + 1;
    std::vector<FracSeries::term> raw;
    // sum_n n (-1)^n q^{n^2} / (1 + q^{2n}); the n = 0 term vanishes
    const long M = detail::isqrt(trunc) + 2;
    for (long m = -M; m <= M; ++m) {
        if (m == 0) continue;
        detail::add_geometric(raw, Rational(m % 2 == 0 ? m : -m), m * m, 2 * m, -1, trunc);
    }
    FracSeries lambert = FracSeries::from_terms(1, trunc, std::move(raw));
    FracSeries theta0 = theta_unary(0, trunc).normalized();
    FracSeries inv_shifted = half_period_shift(theta0).inverse();
    return (inv_shifted * lambert * make_rational(-1, 2) + theta0.pow(3) * theta_cube_coeff).truncated(order);
}

inline IdentityReport verify_mordell_identity(long order)
{
    return make_report("mordell", order, hurwitz_series(order), mordell_rhs(order));
}

inline std::vector<IdentityReport> verify_identities(long order)
{
    return {verify_kronecker_identity(order), verify_watson_identity(order), verify_mordell_identity(order)};
}

} // namespace mmock
