#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "bigfloat.hpp"
#include "error.hpp"
#include "rational.hpp"

namespace mmock {

/// ((x)): zero on integers, else x - floor(x) - 1/2.
inline Rational sawtooth(const Rational& x)
{
    if (is_integer(x)) return Rational(0);
    return x - floor_rat(x) - Rational(1, 2);
}

/// zero, or 2^{-inv_sqrt2/2} e^{pi i half_turns} with half_turns reduced to [0, 2).
struct MultiplierValue {
    bool zero = false;
    int inv_sqrt2 = 0;
    Rational half_turns = 0;

    static MultiplierValue nil() { return {true, 0, 0}; }
    static MultiplierValue phase(const Rational& r) { return MultiplierValue{false, 0, r}.reduced(); }

    MultiplierValue reduced() const
    {
        MultiplierValue v = *this;
        if (v.zero) return nil();
        Rational two(2);
        v.half_turns -= two * floor_rat(v.half_turns / two);
        return v;
    }

    MultiplierValue& operator*=(const MultiplierValue& o)
    {
        if (zero || o.zero) return *this = nil();
        inv_sqrt2 += o.inv_sqrt2;
        half_turns += o.half_turns;
        return *this = reduced();
    }
    friend MultiplierValue operator*(MultiplierValue a, const MultiplierValue& b) { return a *= b; }
    friend MultiplierValue operator/(MultiplierValue a, const MultiplierValue& b) { return a *= b.inverse(); }

    MultiplierValue inverse() const
    {
        if (zero) throw error(errc::domain_error, "inverse of zero multiplier");
        return MultiplierValue{false, -inv_sqrt2, -half_turns}.reduced();
    }

    MultiplierValue pow(int e) const
    {
        if (zero) return e == 0 ? MultiplierValue{} : nil();
        return MultiplierValue{false, inv_sqrt2 * e, half_turns * e}.reduced();
    }

    MultiplierValue conj() const { return zero ? nil() : MultiplierValue{false, inv_sqrt2, -half_turns}.reduced(); }

    BigFloat magnitude() const
    {
        if (zero) return BigFloat(0);
        return boost::multiprecision::pow(BigFloat(2), BigFloat(-inv_sqrt2) / 2);
    }

    BigComplex evaluate() const
    {
        if (zero) return BigComplex(0);
        return e_turns(half_turns / 2) * magnitude();
    }

    friend bool operator==(const MultiplierValue& a, const MultiplierValue& b)
    {
        if (a.zero || b.zero) return a.zero == b.zero;
        return a.inv_sqrt2 == b.inv_sqrt2 && a.half_turns == b.half_turns;
    }
};

namespace detail {

inline long mod(long a, long m)
{
    long r = a % m;
    return r < 0 ? r + m : r;
}

inline long inverse_mod(long a, long m)
{
    long g = m, x = 0, r = mod(a, m), y = 1;
    while (r != 0) {
        long q = g / r;
        g -= q * r;
        std::swap(g, r);
        x -= q * y;
        std::swap(x, y);
    }
    if (g != 1) throw error(errc::not_coprime, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
    return mod(x, m);
}

/// Exponent s with omega_{h,k} = e^{pi i s}, from the defining double sawtooth sum.
inline Rational omega_exponent_uncached(long h, long k)
{
    // ((mu/k)) ((h mu/k)) = (2 mu - k)(2 r - k) / (4 k^2) with r = h mu mod k, which is nonzero.
    long hr = mod(h, k);
    __int128 s = 0;
    for (long mu = 1; mu < k; ++mu) {
        long r = static_cast<long>((static_cast<__int128>(hr) * mu) % k);
        s += static_cast<__int128>(2 * mu - k) * (2 * r - k);
    }
    long den = 4 * k * k;
    return make_rational(static_cast<long>(s % (2 * den)), den);
}

inline std::shared_mutex omega_mutex;
inline std::map<std::pair<long, long>, Rational> omega_memo;

} // namespace detail

inline MultiplierValue omega(long h, long k)
{
    if (k < 1) throw error(errc::domain_error, "omega: k must be positive");
    if (std::gcd(h, k) != 1) throw error(errc::not_coprime, "omega(" + std::to_string(h) + ", " + std::to_string(k) + ")");
    if (k == 1) return {};
    std::pair<long, long> key{detail::mod(h, k), k};
    {
        std::shared_lock lock(detail::omega_mutex);
        auto it = detail::omega_memo.find(key);
        if (it != detail::omega_memo.end()) return MultiplierValue::phase(it->second);
    }
    Rational s = detail::omega_exponent_uncached(key.first, k);
    {
        std::unique_lock lock(detail::omega_mutex);
        detail::omega_memo.emplace(key, s);
    }
    return MultiplierValue::phase(s);
}

struct HPrime {
    long value;
    long modulus;
};

inline HPrime select_hprime(long h, long k)
{
    if (k < 1) throw error(errc::domain_error, "select_hprime: k must be positive");
    if (k == 1) return {0, 4};
    long x = detail::mod(-detail::inverse_mod(h, k), k);
    if (k % 2 == 0) return {x, k};
    for (long t = 0; t < 4; ++t)
        if ((x + t * k) % 4 == 0) return {x + t * k, 4 * k};
    throw error(errc::domain_error, "select_hprime: no residue");
}

namespace detail {

/// omega_{a h, k / d} for the sub-multipliers of the tables.
inline MultiplierValue omega_sub(long a, long h, long k, long d)
{
    if (k % d != 0 || std::gcd(a * h, k / d) != 1)
        throw error(errc::branch_unavailable, "omega_{" + std::to_string(a) + "h, k/" + std::to_string(d) + "} with h=" +
                                                  std::to_string(h) + ", k=" + std::to_string(k));
    return omega(a * h, k / d);
}

enum class k_class { four_divides, odd, two_exactly };

inline k_class classify(long k)
{
    if (k % 4 == 0) return k_class::four_divides;
    if (k % 2 != 0) return k_class::odd;
    return k_class::two_exactly;
}

inline MultiplierValue root_half() { return {false, 1, 0}; }
inline MultiplierValue minus_one() { return MultiplierValue::phase(1); }

/// e^{pi i x / (2k)}
inline MultiplierValue quarter_phase(long x, long k) { return MultiplierValue::phase(make_rational(x, 2 * k)); }

} // namespace detail

/// Theta multipliers: Theta_j((h + iz)/k) = z^{-1/2} sum_l chi_{jl} Theta_l((h' + i/z)/k).
inline MultiplierValue chi(int j, int l, long h, long hp, long k)
{
    using namespace detail;
    auto w = [&](long a, long d) { return omega_sub(a, h, k, d); };
    const k_class c = classify(k);
    if (j == 0 && l == 0) {
        if (c == k_class::four_divides) return w(1, 1).pow(2) * w(1, 4).pow(2) / w(1, 2).pow(5);
        if (c == k_class::odd) return root_half() * w(1, 1).pow(2) * w(4, 1).pow(2) / w(2, 1).pow(5);
        return MultiplierValue::nil();
    }
    if (j == 0 && l == 1) {
        if (c == k_class::four_divides) return MultiplierValue::nil();
        if (c == k_class::odd) return root_half() * w(1, 1).pow(2) * w(4, 1).pow(2) / w(2, 1).pow(5);
        return w(1, 1).pow(2) * w(2, 2).pow(2) / w(1, 2).pow(5) * quarter_phase(-hp, k);
    }
    if (j == 1 && l == 0) {
        if (c == k_class::four_divides) return MultiplierValue::nil();
        if (c == k_class::odd) return root_half() * w(2, 1) / w(4, 1).pow(2) * quarter_phase(h, k);
        return w(1, 2) / w(2, 2).pow(2) * quarter_phase(h, k);
    }
    if (j == 1 && l == 1) {
        if (c == k_class::four_divides) return w(1, 2) / w(1, 4).pow(2) * quarter_phase(h - hp, k);
        if (c == k_class::odd) return minus_one() * root_half() * w(2, 1) / w(4, 1).pow(2) * quarter_phase(h, k);
        return MultiplierValue::nil();
    }
    throw error(errc::domain_error, "chi: j, l must be 0 or 1");
}

/// The f-multipliers as printed in the source tables.
inline MultiplierValue psi_printed(int j, int l, long h, long hp, long k)
{
    using namespace detail;
    auto w = [&](long a, long d) { return omega_sub(a, h, k, d); };
    const k_class c = classify(k);
    const MultiplierValue neg = minus_one();
    if (j == 0 && l == 0) {
        if (c == k_class::four_divides) return neg * w(1, 1).pow(4) * w(1, 2).pow(5) / w(1, 4).pow(2);
        if (c == k_class::odd) return neg * root_half() * w(1, 1).pow(4) * w(2, 1).pow(5) / w(4, 1).pow(2);
        return MultiplierValue::nil();
    }
    if (j == 0 && l == 1) {
        if (c == k_class::four_divides) return MultiplierValue::nil();
        if (c == k_class::odd) return neg * root_half() * w(1, 1).pow(4) * w(2, 1).pow(5) / w(4, 1).pow(2);
        return neg * w(1, 1).pow(4) * w(1, 2).pow(5) / w(2, 2).pow(2) * quarter_phase(hp, k);
    }
    if (j == 1 && l == 0) {
        if (c == k_class::four_divides) return MultiplierValue::nil();
        if (c == k_class::odd) return neg * root_half() * w(1, 1).pow(6) * w(4, 1).pow(2) / w(2, 1);
        return neg * w(1, 1).pow(6) * w(2, 2).pow(2) / w(1, 2).pow(2);
    }
    if (j == 1 && l == 1) {
        if (c == k_class::four_divides) return neg * w(1, 1).pow(6) * w(1, 4).pow(2) / w(1, 2).pow(2) * quarter_phase(hp, k);
        if (c == k_class::odd) return root_half() * w(1, 1).pow(6) * w(4, 1) / w(2, 1);
        return MultiplierValue::nil();
    }
    throw error(errc::domain_error, "psi: j, l must be 0 or 1");
}

/// psi_{jl} = -omega_{h,k}^6 conj(chi_{jl}) e^{pi i j h/(2k)}: what dividing the h_j law by eta^6 gives.
inline MultiplierValue psi_from_chi(int j, int l, long h, long hp, long k)
{
    MultiplierValue c = chi(j, l, h, hp, k);
    if (c.zero) return c;
    return detail::minus_one() * omega(h, k).pow(6) * c.conj() * detail::quarter_phase(j * h, k);
}

/// The multiplier used everywhere else. The printed tables differ from psi_from_chi in three
/// entries (psi_10 for 2||k, psi_11 for k odd and for 4|k) and fail the f_j transformation check
/// there, so the derived form is the one in force.
inline MultiplierValue psi(int j, int l, long h, long hp, long k) { return psi_from_chi(j, l, h, hp, k); }

enum class PhaseVariant { theorem, derivation };

inline const char* phase_variant_name(PhaseVariant v) { return v == PhaseVariant::theorem ? "theorem" : "derivation"; }

namespace detail {

/// e^{2 pi i m / N} for m = 0..N-1 at the current precision.
class RootTable {
public:
    /// Built by repeated multiplication from e^{2 pi i/N}, re-anchored by trig every 64 steps.
    explicit RootTable(long n) : n_(n), roots_(n)
    {
        const BigFloat step = 2 * big_pi() / n;
        const BigComplex unit(boost::multiprecision::cos(step), boost::multiprecision::sin(step));
        for (long m = 0; m < n; ++m) {
            if (m % 64 == 0) {
                BigFloat a = step * m;
                roots_[m] = BigComplex(boost::multiprecision::cos(a), boost::multiprecision::sin(a));
            } else {
                roots_[m] = roots_[m - 1] * unit;
            }
        }
    }

    long size() const { return n_; }

    /// Root for the exact turn count r, which must lie on the 1/N grid.
    const BigComplex& at(const Rational& r) const
    {
        Rational x = r * n_;
        if (!is_integer(x)) throw error(errc::domain_error, "phase " + to_string(r) + " off the 1/" + std::to_string(n_) + " grid");
        return roots_[mod(x.get_num().get_si(), n_)];
    }

    const BigComplex& at_index(long m) const { return roots_[mod(m, n_)]; }

private:
    long n_;
    std::vector<BigComplex> roots_;
};

struct KloostermanTerm {
    long h;
    long hprime;
    MultiplierValue psi;
};

inline std::vector<KloostermanTerm> kloosterman_terms(int j, int l, long k)
{
    std::vector<KloostermanTerm> out;
    for (long h = 0; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        long hp = select_hprime(h, k).value;
        out.push_back({h, hp, psi(j, l, h, hp, k)});
    }
    return out;
}

} // namespace detail

/// K_{j,l}(n, m; k) = sum_h psi_{jl}(h, h', k) e^{-2 pi i (h n + h' m / 4)/k}; the derivation variant
/// carries the extra factor e^{pi i h'/(2k)}.
inline BigComplex kloosterman(int j, int l, long n, long m, long k, PhaseVariant variant = PhaseVariant::theorem)
{
    if (k < 1) throw error(errc::domain_error, "kloosterman: k must be positive");
    BigComplex sum;
    for (const auto& t : detail::kloosterman_terms(j, l, k)) {
        if (t.psi.zero) continue;
        Rational turns = t.psi.half_turns / 2 - make_rational(4 * t.h * n + t.hprime * m, 4 * k);
        if (variant == PhaseVariant::derivation) turns += make_rational(t.hprime, 4 * k);
        sum += e_turns(turns) * t.psi.magnitude();
    }
    return sum;
}

/// K_{j,l}(n, g^2; k) for g = 0..k, sharing one root table; entries with g of the wrong parity are zero.
inline std::vector<BigComplex> kloosterman_squares(int j, int l, long n, long k, PhaseVariant variant, const detail::RootTable& roots)
{
    std::vector<BigComplex> out(k + 1);
    const long N = roots.size();
    if (N % (24 * k) != 0) throw error(errc::domain_error, "root table too coarse");
    const long unit = N / (24 * k);
    BigFloat r2 = boost::multiprecision::sqrt(BigFloat(2)) / 2;
    for (const auto& t : detail::kloosterman_terms(j, l, k)) {
        if (t.psi.zero) continue;
        // psi phases and the Kloosterman exponent all live on the 1/(24k) grid.
        Rational base = t.psi.half_turns / 2 - make_rational(t.h * n, k);
        if (variant == PhaseVariant::derivation) base += make_rational(t.hprime, 4 * k);
        Rational b24 = base * 24 * k;
        if (!is_integer(b24)) throw error(errc::domain_error, "Kloosterman phase off the 1/(24k) grid");
        long b = detail::mod(b24.get_num().get_si(), 24 * k);
        BigFloat mag = t.psi.inv_sqrt2 == 0 ? BigFloat(1) : t.psi.magnitude();
        for (long g = l; g <= k; g += 2) {
            long e = detail::mod(b - 6 * t.hprime % (24 * k) * (g * g % (4 * k)), 24 * k);
            const BigComplex& z = roots.at_index(e * unit);
            if (t.psi.inv_sqrt2 == 1) {
                out[g].re += z.re * r2;
                out[g].im += z.im * r2;
            } else if (t.psi.inv_sqrt2 == 0) {
                out[g] += z;
            } else {
                out[g] += z * mag;
            }
        }
    }
    return out;
}

} // namespace mmock
