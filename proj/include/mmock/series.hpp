#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"
#include "wpoly.hpp"

namespace mmock {

/// Truncation marker for series that are exact (finite polynomials).
inline constexpr long kExact = std::numeric_limits<long>::max() / 8;

namespace detail {

inline long sat_add(long a, long b)
{
    if (a >= kExact || b >= kExact) return kExact;
    long s = a + b;
    return s >= kExact ? kExact : s;
}

inline long sat_mul(long a, long k)
{
    if (a >= kExact) return kExact;
    return a * k;
}

inline Rational inverse_unit(const Rational& c)
{
    if (is_zero(c)) throw error(errc::zero_leading_term, "leading coefficient vanishes");
    return Rational(1) / c;
}

inline GaussianRational inverse_unit(const GaussianRational& c)
{
    if (is_zero(c)) throw error(errc::zero_leading_term, "leading coefficient vanishes");
    return GaussianRational(1) / c;
}

template <class C>
basic_wpoly<C> inverse_unit(const basic_wpoly<C>& p)
{
    if (!p.is_monomial()) throw error(errc::zero_leading_term, "leading coefficient is not a unit monomial");
    const auto& [k, c] = p.terms().front();
    return basic_wpoly<C>::monomial(-k, inverse_unit(c));
}

} // namespace detail

/// Truncated Laurent series in q^{1/D} over a coefficient ring C.
/// Coefficients of q^{e/D} are known for all e < trunc(); stored terms are sorted and nonzero.
template <class C>
class basic_series {
public:
    using coeff_type = C;
    using term = std::pair<long, C>;

    basic_series() = default;
    basic_series(long den, long trunc) : den_(den), trunc_(trunc)
    {
        if (den <= 0) throw error(errc::domain_error, "series lattice denominator must be positive");
    }

    /// The constant c, known to the given truncation (exact by default).
    static basic_series constant(C c, long den = 1, long trunc = kExact)
    {
        return monomial(0, std::move(c), den, trunc);
    }

    /// c * q^{e/den}.
    static basic_series monomial(long e, C c, long den = 1, long trunc = kExact)
    {
        basic_series s(den, trunc);
        if (e < trunc && !is_zero(c)) s.terms_.emplace_back(e, std::move(c));
        return s;
    }

    static basic_series from_terms(long den, long trunc, std::vector<term> raw)
    {
        std::sort(raw.begin(), raw.end(), [](const term& a, const term& b) { return a.first < b.first; });
        basic_series s(den, trunc);
        for (auto& [e, c] : raw) {
            if (e >= trunc) continue;
            if (!s.terms_.empty() && s.terms_.back().first == e)
                s.terms_.back().second += c;
            else
                s.terms_.emplace_back(e, std::move(c));
        }
        s.prune();
        return s;
    }

    long den() const { return den_; }
    long trunc() const { return trunc_; }
    bool is_exact() const { return trunc_ >= kExact; }
    const std::vector<term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    /// Lowest stored exponent numerator, or the truncation when nothing is stored.
    long valuation() const { return terms_.empty() ? trunc_ : terms_.front().first; }

    /// Coefficient at exponent numerator e (on this series' lattice).
    C coeff(long e) const
    {
        if (e >= trunc_) throw error(errc::out_of_window, "exponent " + std::to_string(e) + "/" + std::to_string(den_) +
                                                             " is at or beyond truncation");
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const term& t, long k) { return t.first < k; });
        if (it != terms_.end() && it->first == e) return it->second;
        return C();
    }

    /// Re-express on the finer lattice 1/new_den (new_den must be a multiple of den()).
    basic_series on_lattice(long new_den) const
    {
        if (new_den == den_) return *this;
        if (new_den % den_ != 0) throw error(errc::domain_error, "lattice refinement must be a multiple");
        const long f = new_den / den_;
        basic_series s(new_den, detail::sat_mul(trunc_, f));
        s.terms_.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.terms_.emplace_back(e * f, c);
        return s;
    }

    /// Coarsest lattice carrying all stored exponents and the truncation.
    basic_series normalized() const
    {
        long g = den_;
        if (!is_exact()) g = std::gcd(g, trunc_);
        for (const auto& t : terms_) g = std::gcd(g, t.first);
        if (g <= 1) return *this;
        basic_series s(den_ / g, is_exact() ? kExact : trunc_ / g);
        for (const auto& [e, c] : terms_) s.terms_.emplace_back(e / g, c);
        return s;
    }

    basic_series truncated(long new_trunc) const
    {
        basic_series s(den_, std::min(trunc_, new_trunc));
        for (const auto& t : terms_)
            if (t.first < s.trunc_) s.terms_.push_back(t);
        return s;
    }

    /// Multiply by q^{e/den()}.
    basic_series shifted(long e) const
    {
        basic_series s(den_, detail::sat_add(trunc_, e));
        s.terms_ = terms_;
        for (auto& t : s.terms_) t.first += e;
        return s;
    }

    /// q -> q^k.
    basic_series substitute_power(long k) const
    {
        if (k <= 0) throw error(errc::domain_error, "substitute_power needs k >= 1");
        basic_series s(den_, detail::sat_mul(trunc_, k));
        s.terms_ = terms_;
        for (auto& t : s.terms_) t.first *= k;
        return s;
    }

    /// Coefficientwise map; f must send zero to zero.
    template <class F>
    auto map_coeffs(F&& f) const -> basic_series<std::decay_t<decltype(f(std::declval<const C&>()))>>
    {
        using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
        std::vector<std::pair<long, D>> raw;
        raw.reserve(terms_.size());
        for (const auto& [e, c] : terms_) raw.emplace_back(e, f(c));
        return basic_series<D>::from_terms(den_, trunc_, std::move(raw));
    }

    /// Map each term (e, c) -> (e', c'); used for phase substitutions.
    template <class F>
    basic_series map_terms(F&& f) const
    {
        std::vector<term> raw;
        raw.reserve(terms_.size());
        for (const auto& [e, c] : terms_) raw.push_back(f(e, c));
        return from_terms(den_, trunc_, std::move(raw));
    }

    basic_series& operator*=(const C& c)
    {
        if (is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second = t.second * c;
        return *this;
    }

    friend basic_series operator*(basic_series a, const C& c) { return a *= c; }
    friend basic_series operator*(const C& c, basic_series a) { return a *= c; }

    friend basic_series operator-(const basic_series& a)
    {
        basic_series r = a;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    friend basic_series operator+(const basic_series& a, const basic_series& b) { return combine(a, b, false); }
    friend basic_series operator-(const basic_series& a, const basic_series& b) { return combine(a, b, true); }
    basic_series& operator+=(const basic_series& b) { return *this = combine(*this, b, false); }
    basic_series& operator-=(const basic_series& b) { return *this = combine(*this, b, true); }

    friend basic_series operator*(const basic_series& x, const basic_series& y)
    {
        const long d = std::lcm(x.den_, y.den_);
        const basic_series a = x.on_lattice(d);
        const basic_series b = y.on_lattice(d);
        const long t = std::min(detail::sat_add(a.trunc_, b.valuation()), detail::sat_add(b.trunc_, a.valuation()));
        basic_series r(d, t);
        if (a.empty() || b.empty()) return r;
        const long lo = a.valuation() + b.valuation();
        const long hi = std::min(t - 1, a.terms_.back().first + b.terms_.back().first);
        if (hi < lo) return r;
        std::vector<C> dense(static_cast<std::size_t>(hi - lo + 1));
        std::vector<char> touched(dense.size(), 0);
        for (const auto& [ea, ca] : a.terms_) {
            if (ea + b.valuation() > hi) break;
            for (const auto& [eb, cb] : b.terms_) {
                const long e = ea + eb;
                if (e > hi) break;
                accumulate_product(dense[e - lo], ca, cb);
                touched[e - lo] = 1;
            }
        }
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (touched[i] && !is_zero(dense[i])) r.terms_.emplace_back(lo + static_cast<long>(i), std::move(dense[i]));
        return r;
    }

    basic_series& operator*=(const basic_series& b) { return *this = *this * b; }

    /// Multiplicative inverse; the lowest stored coefficient must be a unit.
    basic_series inverse() const
    {
        if (terms_.empty()) throw error(errc::zero_leading_term, "cannot invert a series with no known terms");
        if (is_exact() && terms_.size() > 1)
            throw error(errc::domain_error, "inverse of an exact non-monomial needs an explicit truncation");
        const long v = terms_.front().first;
        const C lead_inv = detail::inverse_unit(terms_.front().second);
        const long rel = is_exact() ? kExact : trunc_ - v;  // relative precision
        basic_series r(den_, is_exact() ? kExact : trunc_ - 2 * v);
        if (is_exact()) {
            r.terms_.emplace_back(-v, lead_inv);
            return r;
        }
        // Normalised: a = c q^v (1 + sum_{i>0} a_i q^i); b_n = -sum a_i b_{n-i}.
        std::vector<std::pair<long, C>> tail;  // a_i / c for i > 0
        for (std::size_t i = 1; i < terms_.size(); ++i)
            tail.emplace_back(terms_[i].first - v, terms_[i].second * lead_inv);
        std::vector<C> b(static_cast<std::size_t>(rel));
        std::vector<char> nz(b.size(), 0);
        b[0] = C(1);
        nz[0] = 1;
        for (long n = 1; n < rel; ++n) {
            C acc;
            bool any = false;
            for (const auto& [i, ai] : tail) {
                if (i > n) break;
                if (!nz[n - i]) continue;
                accumulate_product(acc, ai, b[n - i]);
                any = true;
            }
            if (any && !is_zero(acc)) {
                b[n] = -acc;
                nz[n] = 1;
            }
        }
        for (long n = 0; n < rel; ++n)
            if (nz[n]) r.terms_.emplace_back(n - v, b[n] * lead_inv);
        return r;
    }

    /// Integer power (negative powers via inverse()).
    basic_series pow(long k) const
    {
        if (k < 0) return inverse().pow(-k);
        basic_series result = constant(C(1), den_);
        basic_series base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return result;
    }

    /// Structural invariant: all stored exponents below truncation, sorted, nonzero.
    bool audit() const
    {
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (terms_[i].first >= trunc_ || is_zero(terms_[i].second)) return false;
            if (i > 0 && terms_[i - 1].first >= terms_[i].first) return false;
            if constexpr (requires(const C& c) { c.audit(); }) {
                if (!terms_[i].second.audit()) return false;
            }
        }
        return den_ > 0;
    }

private:
    static void accumulate_product(C& acc, const C& a, const C& b)
    {
        if constexpr (requires { C::multiply_add(acc, a, b); })
            C::multiply_add(acc, a, b);
        else
            acc += a * b;
    }

    void prune()
    {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const term& t) { return is_zero(t.second); }),
                     terms_.end());
    }

    static basic_series combine(const basic_series& x, const basic_series& y, bool subtract)
    {
        const long d = std::lcm(x.den_, y.den_);
        const basic_series a = x.on_lattice(d);
        const basic_series b = y.on_lattice(d);
        basic_series r(d, std::min(a.trunc_, b.trunc_));
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        while (true) {
            const bool ai = i != a.terms_.end() && i->first < r.trunc_;
            const bool bj = j != b.terms_.end() && j->first < r.trunc_;
            if (!ai && !bj) break;
            if (ai && (!bj || i->first < j->first)) {
                r.terms_.push_back(*i++);
            } else if (bj && (!ai || j->first < i->first)) {
                r.terms_.emplace_back(j->first, subtract ? C(-j->second) : j->second);
                ++j;
            } else {
                C c = i->second;
                if (subtract)
                    c -= j->second;
                else
                    c += j->second;
                if (!is_zero(c)) r.terms_.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }

    long den_ = 1;
    long trunc_ = kExact;
    std::vector<term> terms_;
};

using FracSeries = basic_series<Rational>;
using BiSeries = basic_series<WPoly>;
using GaussBiSeries = basic_series<GaussWPoly>;

/// Coefficient of q^{exponent}; exponent must lie on the 1/D lattice.
template <class C>
C coefficient_at(const basic_series<C>& a, const Rational& exponent)
{
    Rational scaled = exponent * a.den();
    if (!is_integer(scaled))
        throw error(errc::domain_error, "exponent " + to_string(exponent) + " is not on the 1/" +
                                            std::to_string(a.den()) + " lattice");
    return a.coeff(scaled.get_num().get_si());
}

/// Product of factor(n, trunc) for n >= 1.  Each factor must be 1 + O(q^{c n}) with c > 0;
/// iteration stops once two consecutive factors are trivial inside the window.
template <class C, class Gen>
basic_series<C> infinite_product(Gen&& factor, long den, long trunc, long max_factors = 1000000)
{
    basic_series<C> prod = basic_series<C>::constant(C(1), den, trunc);
    if (trunc <= 0) return prod;
    int trivial_run = 0;
    for (long n = 1; n <= max_factors; ++n) {
        basic_series<C> f = factor(n, trunc).on_lattice(den);
        // split off the constant term, which must be 1
        C c0 = f.empty() || f.terms().front().first > 0 ? C() : f.terms().front().second;
        if (!f.empty() && f.terms().front().first < 0)
            throw error(errc::non_stabilizing, "factor " + std::to_string(n) + " has negative order");
        if (c0 != C(1)) throw error(errc::non_stabilizing, "factor " + std::to_string(n) + " does not start with 1");
        const long first_nontrivial = f.terms().size() > 1 ? f.terms()[1].first : f.trunc();
        if (first_nontrivial >= trunc) {
            if (++trivial_run >= 2) return prod;
            continue;
        }
        if (trivial_run > 0)
            throw error(errc::non_stabilizing, "factor " + std::to_string(n) + " re-enters the window");
        prod *= f;
    }
    throw error(errc::non_stabilizing, "product did not stabilise within the factor budget");
}

/// Location of the first disagreement between two series.
template <class C>
struct discrepancy {
    Rational q_exponent;
    std::optional<Rational> w_exponent;  // set for bivariate comparisons
    std::string lhs;
    std::string rhs;
};

namespace detail {

template <class C>
std::optional<Rational> first_w_difference(const C&, const C&)
{
    return std::nullopt;
}

template <class C>
std::optional<Rational> first_w_difference(const basic_wpoly<C>& a, const basic_wpoly<C>& b)
{
    basic_wpoly<C> d = a - b;
    if (d.empty()) return std::nullopt;
    return Rational(d.min_key(), 2);
}

} // namespace detail

/// Compare on the overlap of truncation windows.  Returns the smallest offending exponent.
template <class C>
std::optional<discrepancy<C>> compare_series(const basic_series<C>& x, const basic_series<C>& y)
{
    const long d = std::lcm(x.den(), y.den());
    const auto a = x.on_lattice(d);
    const auto b = y.on_lattice(d);
    const long t = std::min(a.trunc(), b.trunc());
    const auto diff = (a - b).truncated(t);
    if (diff.empty()) return std::nullopt;
    const long e = diff.terms().front().first;
    discrepancy<C> out;
    out.q_exponent = Rational(e, d);
    out.q_exponent.canonicalize();
    const C ca = a.coeff(e), cb = b.coeff(e);
    out.w_exponent = detail::first_w_difference(ca, cb);
    out.lhs = to_string(ca);
    out.rhs = to_string(cb);
    return out;
}

template <class C>
bool series_equal(const basic_series<C>& a, const basic_series<C>& b)
{
    return !compare_series(a, b).has_value();
}

/// The formal variable substitution tau -> tau + 1/2: q^{e/D} -> e^{pi i e/D} q^{e/D}.
/// Only permitted when every phase is +-1, i.e. D | e for all stored e (and for the truncation grid).
template <class C>
basic_series<C> half_period_shift(const basic_series<C>& a)
{
    const auto n = a.normalized();
    if (n.den() != 1) throw error(errc::irrational_phase, "tau -> tau+1/2 leaves Q on a 1/" + std::to_string(n.den()) + " lattice");
    return n.map_terms([](long e, const C& c) { return std::pair<long, C>(e, (e % 2 == 0) ? c : C(-c)); });
}

} // namespace mmock
