#pragma once

#include <boost/math/special_functions/gamma.hpp>

#include "bigfloat.hpp"
#include "error.hpp"

namespace mmock {

/// Orders needed here, stored as 2*nu.
enum class BesselOrder { five_halves = 5, three = 6, seven_halves = 7 };

namespace detail {

/// sum_{m>=0} (X/4)^m / (m! Gamma(m + nu + 1)) = I_nu(x) / (x/2)^nu with X = x^2; X may be negative.
inline BigFloat bessel_series_reduced(int twice_nu, const BigFloat& X)
{
    BigFloat nu = BigFloat(twice_nu) / 2;
    BigFloat term = 1 / boost::math::tgamma(nu + 1);
    BigFloat sum = term;
    const BigFloat eps = unit_roundoff();
    BigFloat quarter = X / 4;
    for (long m = 1; m < 100000; ++m) {
        term *= quarter / (m * (m + nu));
        sum += term;
        if (m > boost::multiprecision::abs(quarter) && boost::multiprecision::abs(term) <= eps * boost::multiprecision::abs(sum)) break;
    }
    return sum;
}

} // namespace detail

/// Ascending series sum (x/2)^{nu+2m} / (m! Gamma(m+nu+1)); used as the reference for the closed forms.
inline BigFloat bessel_I_series(int twice_nu, const BigFloat& x)
{
    if (x < 0) throw error(errc::negative_argument, "bessel_I_series");
    if (x == 0) return BigFloat(0);
    return boost::multiprecision::pow(x / 2, BigFloat(twice_nu) / 2) * detail::bessel_series_reduced(twice_nu, x * x);
}

/// I_{5/2}, I_3, I_{7/2}. Half-integer orders use the sinh/cosh closed forms for x >= 1 and the
/// series below, where the closed forms cancel.
inline BigFloat bessel_I(BesselOrder order, const BigFloat& x)
{
    if (x < 0) throw error(errc::negative_argument, "bessel_I at negative argument");
    const int twice_nu = static_cast<int>(order);
    if (order == BesselOrder::three || x < 1) return bessel_I_series(twice_nu, x);
    BigFloat pre = boost::multiprecision::sqrt(2 / (big_pi() * x));
    BigFloat s = boost::multiprecision::sinh(x), c = boost::multiprecision::cosh(x);
    BigFloat inv = 1 / x;
    if (order == BesselOrder::five_halves) return pre * ((1 + 3 * inv * inv) * s - 3 * inv * c);
    return pre * ((1 + 15 * inv * inv) * c - (6 * inv + 15 * inv * inv * inv) * s);
}

/// I_nu(sqrt X) / (sqrt X)^nu, entire in X; for X < 0 this is the J-Bessel continuation.
inline BigFloat bessel_I_scaled(BesselOrder order, const BigFloat& X)
{
    const int twice_nu = static_cast<int>(order);
    if (X > 1) {
        BigFloat x = boost::multiprecision::sqrt(X);
        return bessel_I(order, x) / boost::multiprecision::pow(x, BigFloat(twice_nu) / 2);
    }
    return detail::bessel_series_reduced(twice_nu, X) / boost::multiprecision::pow(BigFloat(2), BigFloat(twice_nu) / 2);
}

} // namespace mmock
