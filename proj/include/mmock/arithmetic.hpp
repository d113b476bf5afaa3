#pragma once

#include <cmath>
#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "error.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace mmock {

namespace detail {

inline long isqrt(long n)
{
    if (n < 0) return -1;
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// Sum over SL2(Z)-reduced positive forms (a, b, c) with b^2 - 4ac = -n of 6/|Aut/{+-1}|,
/// restricted by `keep(a, b, c)`.  Returns six times the weighted count.
template <class Keep>
long weighted_reduced_forms_x6(long n, Keep&& keep)
{
    long total = 0;
    for (long a = 1; 3 * a * a <= n; ++a) {
        for (long b = -a + 1; b <= a; ++b) {
            if (((b - n) % 2 + 2) % 2 != 0) continue;
            const long num = b * b + n;
            if (num % (4 * a) != 0) continue;
            const long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            if (!keep(a, b, c)) continue;
            if (b == 0 && a == c)
                total += 3;  // multiple of x^2 + y^2
            else if (b == a && a == c)
                total += 2;  // multiple of x^2 + xy + y^2
            else
                total += 6;
        }
    }
    return total;
}

} // namespace detail

/// Hurwitz class number H(n); H(0) = -1/12.  Computed by reduced-form enumeration.
inline Rational hurwitz_uncached(long n)
{
    if (n < 0) throw error(errc::domain_error, "hurwitz: negative argument");
    if (n == 0) return make_rational(-1, 12);
    if (n % 4 == 1 || n % 4 == 2) return Rational(0);
    return make_rational(detail::weighted_reduced_forms_x6(n, [](long, long, long) { return true; }), 6);
}

/// Memoised H(n).  Safe for concurrent callers.
inline Rational hurwitz(long n)
{
    static std::mutex mutex;
    static std::unordered_map<long, Rational> memo;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    Rational v = hurwitz_uncached(n);
    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(n, v);
    return v;
}

/// Number of (x, y, z) in Z^3 with x^2 + y^2 + z^2 = n, by enumeration.
inline long r3(long n)
{
    if (n < 0) return 0;
    const long m = detail::isqrt(n);
    long count = 0;
    for (long x = -m; x <= m; ++x) {
        for (long y = -m; y <= m; ++y) {
            const long rest = n - x * x - y * y;
            if (rest < 0) continue;
            const long z = detail::isqrt(rest);
            if (z * z == rest) count += (z == 0) ? 1 : 2;
        }
    }
    return count;
}

/// Kronecker's F(N): classes of forms a x^2 + 2b xy + c y^2 with ac - b^2 = N
/// in which a or c is odd, weighted by automorphisms like H.
inline Rational uneven_class_count(long N)
{
    if (N <= 0) throw error(errc::domain_error, "uneven_class_count: N must be positive");
    const long x6 = detail::weighted_reduced_forms_x6(4 * N, [](long a, long b, long c) {
        return b % 2 == 0 && (a % 2 != 0 || c % 2 != 0);
    });
    return make_rational(x6, 6);
}

/// h_j(tau) = sum_{n >= 0} H(4n + 3j) q^{n + 3j/4} on the 1/4 lattice, known below q^order.
inline FracSeries h_series(int j, long order)
{
    if (j != 0 && j != 1) throw error(errc::domain_error, "h_series: j must be 0 or 1");
    const long trunc = 4 * order;
    std::vector<FracSeries::term> raw;
    for (long e = 3 * j; e < trunc; e += 4) raw.emplace_back(e, hurwitz(e));
    return FracSeries::from_terms(4, trunc, std::move(raw));
}

} // namespace mmock
