#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <string>

#include "rational.hpp"

namespace mmock {

using BigFloat = boost::multiprecision::mpfr_float;

inline unsigned bits_to_digits10(unsigned bits) { return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1; }

inline unsigned current_bits()
{
    return static_cast<unsigned>(std::ceil(BigFloat::default_precision() / 0.30102999566398120));
}

/// Sets the working precision for newly created BigFloats and restores it on exit.
/// The MPFR default precision is process-wide: set it before spawning workers.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : saved_(BigFloat::default_precision())
    {
        BigFloat::default_precision(bits_to_digits10(bits));
    }
    ~PrecisionScope() { BigFloat::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

inline BigFloat big_pi()
{
    BigFloat r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline BigFloat to_big(const Rational& r)
{
    return BigFloat(r.get_num().get_str()) / BigFloat(r.get_den().get_str());
}

/// 2^{-bits} at the current precision.
inline BigFloat unit_roundoff() { return boost::multiprecision::ldexp(BigFloat(1), -static_cast<int>(current_bits())); }

inline std::string to_decimal(const BigFloat& x, int digits = 40)
{
    return x.str(digits, std::ios_base::scientific);
}

struct BigComplex {
    BigFloat re;
    BigFloat im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigFloat r) : re(std::move(r)), im(0) {}
    BigComplex(long r) : re(r), im(0) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    BigComplex& operator-=(const BigComplex& o) { re -= o.re; im -= o.im; return *this; }
    BigComplex& operator*=(const BigComplex& o)
    {
        BigFloat r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    BigComplex& operator*=(const BigFloat& s) { re *= s; im *= s; return *this; }
    BigComplex& operator/=(const BigComplex& o)
    {
        BigFloat d = o.re * o.re + o.im * o.im;
        BigFloat r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
    BigComplex& operator/=(const BigFloat& s) { re /= s; im /= s; return *this; }

    friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
    friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
    friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
    friend BigComplex operator*(BigComplex a, const BigFloat& s) { return a *= s; }
    friend BigComplex operator*(const BigFloat& s, BigComplex a) { return a *= s; }
    friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
    friend BigComplex operator/(BigComplex a, const BigFloat& s) { return a /= s; }
    friend BigComplex operator-(BigComplex a) { a.re = -a.re; a.im = -a.im; return a; }
};

inline BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
inline BigFloat norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigFloat abs(const BigComplex& z) { return boost::multiprecision::sqrt(norm(z)); }
inline BigFloat arg(const BigComplex& z) { return boost::multiprecision::atan2(z.im, z.re); }

inline BigComplex exp(const BigComplex& z)
{
    BigFloat m = boost::multiprecision::exp(z.re);
    return {m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im)};
}

/// Principal logarithm, branch cut on the negative real axis.
inline BigComplex log(const BigComplex& z) { return {boost::multiprecision::log(abs(z)), arg(z)}; }

/// Principal branch z^a = exp(a log z).
inline BigComplex pow(const BigComplex& z, const BigFloat& a) { return exp(log(z) * a); }

inline BigComplex sqrt(const BigComplex& z) { return pow(z, BigFloat(1) / 2); }

/// e^{2 pi i r}, with r reduced exactly mod 1 before any rounding.
inline BigComplex e_turns(const Rational& r)
{
    Rational f = r - floor_rat(r);
    if (is_zero(f)) return BigComplex(1);
    BigFloat a = 2 * big_pi() * to_big(f);
    return {boost::multiprecision::cos(a), boost::multiprecision::sin(a)};
}

/// e^{2 pi i tau x} for complex tau and rational x.
inline BigComplex e_of(const BigComplex& tau, const Rational& x)
{
    BigFloat s = 2 * big_pi() * to_big(x);
    return exp(BigComplex(-s * tau.im, s * tau.re));
}

} // namespace mmock
