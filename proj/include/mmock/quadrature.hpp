#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "bigfloat.hpp"
#include "error.hpp"

namespace mmock {

struct QuadratureSpec {
    double abs_tol = 1e-25;
    int max_subdivisions = 4000;
    int order = 24;
};

struct GaussLegendreRule {
    std::vector<BigFloat> nodes;   // on [-1, 1]
    std::vector<BigFloat> weights;
};

namespace detail {

/// Newton iteration on P_n from the usual cosine guesses, at the current precision.
inline GaussLegendreRule make_gauss_legendre(int n)
{
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const BigFloat eps = unit_roundoff() * 16;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        BigFloat x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        BigFloat dp;
        for (int iter = 0; iter < 100; ++iter) {
            BigFloat p0 = 1, p1 = x;
            for (int m = 2; m <= n; ++m) {
                BigFloat p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
                p0 = std::move(p1);
                p1 = std::move(p2);
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            BigFloat dx = p1 / dp;
            x -= dx;
            if (boost::multiprecision::abs(dx) < eps) {
                p0 = 1;
                p1 = x;
                for (int m = 2; m <= n; ++m) {
                    BigFloat p2 = ((2 * m - 1) * x * p1 - (m - 1) * p0) / m;
                    p0 = std::move(p1);
                    p1 = std::move(p2);
                }
                dp = n * (x * p1 - p0) / (x * x - 1);
                break;
            }
        }
        BigFloat w = 2 / ((1 - x * x) * dp * dp);
        rule.nodes[i] = x;
        rule.weights[i] = w;
        rule.nodes[n - 1 - i] = -x;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0;
    return rule;
}

inline std::mutex gl_mutex;
inline std::map<std::pair<int, unsigned>, GaussLegendreRule> gl_cache;

inline BigFloat magnitude(const BigFloat& x) { return boost::multiprecision::abs(x); }
inline BigFloat magnitude(const BigComplex& z) { return abs(z); }

} // namespace detail

inline const GaussLegendreRule& gauss_legendre(int n)
{
    std::pair<int, unsigned> key{n, current_bits()};
    std::lock_guard lock(detail::gl_mutex);
    auto it = detail::gl_cache.find(key);
    if (it == detail::gl_cache.end()) it = detail::gl_cache.emplace(key, detail::make_gauss_legendre(n)).first;
    return it->second;
}

template <class T>
struct QuadratureResult {
    std::vector<T> value;
    BigFloat error;
    int intervals = 0;
};

/// Adaptive Gauss-Legendre for a vector-valued integrand f: BigFloat -> std::vector<T> of length dim.
/// Each interval is compared against the sum of its two halves; the error budget is shared in
/// proportion to interval length, and the worst component decides.
template <class T, class F>
QuadratureResult<T> integrate(F&& f, const BigFloat& a, const BigFloat& b, std::size_t dim, const QuadratureSpec& spec)
{
    const GaussLegendreRule& rule = gauss_legendre(spec.order);
    auto panel = [&](const BigFloat& lo, const BigFloat& hi) {
        std::vector<T> acc(dim);
        BigFloat half = (hi - lo) / 2, mid = (hi + lo) / 2;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            std::vector<T> v = f(BigFloat(mid + half * rule.nodes[i]));
            for (std::size_t c = 0; c < dim; ++c) acc[c] += v[c] * BigFloat(rule.weights[i] * half);
        }
        return acc;
    };

    struct Piece {
        BigFloat lo, hi;
        std::vector<T> estimate;
    };
    QuadratureResult<T> out;
    out.value.assign(dim, T());
    out.error = 0;
    const BigFloat total = b - a;
    if (total == 0) return out;
    const BigFloat tol(spec.abs_tol);
    const BigFloat floor = unit_roundoff() * 1024;
    std::vector<Piece> stack;
    stack.push_back({a, b, panel(a, b)});
    int splits = 0;
    while (!stack.empty()) {
        Piece p = std::move(stack.back());
        stack.pop_back();
        BigFloat mid = (p.lo + p.hi) / 2;
        std::vector<T> left = panel(p.lo, mid), right = panel(mid, p.hi);
        BigFloat err = 0, size = 0;
        for (std::size_t c = 0; c < dim; ++c) {
            BigFloat d = detail::magnitude(T(left[c] + right[c] - p.estimate[c]));
            if (d > err) err = d;
            BigFloat m = detail::magnitude(left[c]) + detail::magnitude(right[c]);
            if (m > size) size = m;
        }
        BigFloat budget = tol * (p.hi - p.lo) / boost::multiprecision::abs(total);
        // An absolute tolerance below the working precision of the panel itself cannot be met.
        if (err <= budget || err <= floor * size) {
            for (std::size_t c = 0; c < dim; ++c) out.value[c] += left[c] + right[c];
            out.error += err;
            ++out.intervals;
            continue;
        }
        if (++splits > spec.max_subdivisions)
            throw error(errc::quadrature_failure, "tolerance " + to_decimal(tol, 3) + " not reached within " +
                                                      std::to_string(spec.max_subdivisions) + " subdivisions");
        stack.push_back({mid, p.hi, std::move(right)});
        stack.push_back({p.lo, std::move(mid), std::move(left)});
    }
    return out;
}

} // namespace mmock
