#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace mmock {

/// Finite Laurent polynomial in w^{1/2}.  Key m stands for w^{m/2}
/// (equivalently s^m with s^2 = w).  Terms are sorted by key and never zero.
template <class C>
class basic_wpoly {
public:
    using coeff_type = C;
    using term = std::pair<int, C>;

    basic_wpoly() = default;
    basic_wpoly(C c)
    {
        if (!is_zero(c)) terms_.emplace_back(0, std::move(c));
    }

    static basic_wpoly monomial(int key, C c)
    {
        basic_wpoly p;
        if (!is_zero(c)) p.terms_.emplace_back(key, std::move(c));
        return p;
    }

    /// Builds from unsorted (key, coeff) pairs, merging duplicates.
    static basic_wpoly from_terms(std::vector<term> raw)
    {
        std::sort(raw.begin(), raw.end(), [](const term& a, const term& b) { return a.first < b.first; });
        basic_wpoly p;
        for (auto& [k, c] : raw) {
            if (!p.terms_.empty() && p.terms_.back().first == k)
                p.terms_.back().second += c;
            else
                p.terms_.emplace_back(k, std::move(c));
        }
        p.prune();
        return p;
    }

    const std::vector<term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int min_key() const { return terms_.front().first; }
    int max_key() const { return terms_.back().first; }
    bool is_monomial() const { return terms_.size() == 1; }

    C coeff(int key) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                   [](const term& t, int k) { return t.first < k; });
        if (it != terms_.end() && it->first == key) return it->second;
        return C();
    }

    /// Multiply by w^{key/2}.
    basic_wpoly shifted(int key) const
    {
        basic_wpoly p = *this;
        for (auto& t : p.terms_) t.first += key;
        return p;
    }

    /// Substitute w^{1/2} -> c * w^{factor/2}; factor may be negative (reverses order).
    template <class F>
    basic_wpoly map_keys(F&& f) const
    {
        std::vector<term> raw;
        raw.reserve(terms_.size());
        for (const auto& [k, c] : terms_) raw.emplace_back(f(k), c);
        return from_terms(std::move(raw));
    }

    basic_wpoly& operator+=(const basic_wpoly& o) { return merge(o, false); }
    basic_wpoly& operator-=(const basic_wpoly& o) { return merge(o, true); }

    basic_wpoly& operator*=(const C& c)
    {
        if (is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& t : terms_) t.second *= c;
        return *this;
    }

    friend basic_wpoly operator+(basic_wpoly a, const basic_wpoly& b) { return a += b; }
    friend basic_wpoly operator-(basic_wpoly a, const basic_wpoly& b) { return a -= b; }
    friend basic_wpoly operator-(const basic_wpoly& a)
    {
        basic_wpoly r = a;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }
    friend basic_wpoly operator*(basic_wpoly a, const C& c) { return a *= c; }

    friend basic_wpoly operator*(const basic_wpoly& a, const basic_wpoly& b)
    {
        basic_wpoly r;
        multiply_add(r, a, b);
        return r;
    }

    basic_wpoly& operator*=(const basic_wpoly& o)
    {
        *this = *this * o;
        return *this;
    }

    /// acc += a * b, accumulated densely.
    static void multiply_add(basic_wpoly& acc, const basic_wpoly& a, const basic_wpoly& b)
    {
        if (a.empty() || b.empty()) return;
        const int lo = a.min_key() + b.min_key();
        const int hi = a.max_key() + b.max_key();
        int alo = lo, ahi = hi;
        if (!acc.empty()) {
            alo = std::min(alo, acc.min_key());
            ahi = std::max(ahi, acc.max_key());
        }
        std::vector<C> dense(static_cast<std::size_t>(ahi - alo + 1));
        for (auto& [k, c] : acc.terms_) dense[k - alo] = std::move(c);
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) dense[ka + kb - alo] += ca * cb;
        acc.terms_.clear();
        for (std::size_t i = 0; i < dense.size(); ++i)
            if (!is_zero(dense[i])) acc.terms_.emplace_back(alo + static_cast<int>(i), std::move(dense[i]));
    }

    friend bool operator==(const basic_wpoly& a, const basic_wpoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const basic_wpoly& a, const basic_wpoly& b) { return !(a == b); }

    /// Value at w^{1/2} = x.
    C evaluate(const C& x) const
    {
        C sum;
        for (const auto& [k, c] : terms_) {
            C p(1);
            const C base = k >= 0 ? x : C(1) / x;
            for (int i = 0; i < std::abs(k); ++i) p *= base;
            sum += c * p;
        }
        return sum;
    }

    /// Exact quotient; throws nonvanishing_remainder when den does not divide *this.
    basic_wpoly divide_exact(const basic_wpoly& den) const
    {
        if (den.empty()) throw error(errc::domain_error, "wpoly division by zero");
        if (empty()) return {};
        // Work with ordinary polynomials in x = w^{1/2} after factoring out lowest powers.
        const int nlo = min_key(), dlo = den.min_key();
        const int ndeg = max_key() - nlo, ddeg = den.max_key() - dlo;
        if (ndeg < ddeg) throw error(errc::nonvanishing_remainder, "degree of divisor exceeds dividend");
        std::vector<C> rem(static_cast<std::size_t>(ndeg + 1));
        for (const auto& [k, c] : terms_) rem[k - nlo] = c;
        std::vector<C> d(static_cast<std::size_t>(ddeg + 1));
        for (const auto& [k, c] : den.terms_) d[k - dlo] = c;
        const C lead = d[ddeg];
        std::vector<C> quot(static_cast<std::size_t>(ndeg - ddeg + 1));
        for (int i = ndeg - ddeg; i >= 0; --i) {
            C q = rem[i + ddeg] / lead;
            if (is_zero(q)) continue;
            for (int j = 0; j <= ddeg; ++j)
                if (!is_zero(d[j])) rem[i + j] -= q * d[j];
            quot[i] = std::move(q);
        }
        for (const auto& r : rem)
            if (!is_zero(r)) throw error(errc::nonvanishing_remainder, "inexact Laurent polynomial division");
        basic_wpoly out;
        for (std::size_t i = 0; i < quot.size(); ++i)
            if (!is_zero(quot[i])) out.terms_.emplace_back(nlo - dlo + static_cast<int>(i), std::move(quot[i]));
        return out;
    }

    /// Structural invariant: sorted strictly increasing keys, no zero coefficients.
    bool audit() const
    {
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (is_zero(terms_[i].second)) return false;
            if (i > 0 && terms_[i - 1].first >= terms_[i].first) return false;
        }
        return true;
    }

private:
    void prune()
    {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const term& t) { return is_zero(t.second); }),
                     terms_.end());
    }

    basic_wpoly& merge(const basic_wpoly& o, bool negate)
    {
        std::vector<term> out;
        out.reserve(terms_.size() + o.terms_.size());
        auto i = terms_.begin();
        auto j = o.terms_.begin();
        while (i != terms_.end() || j != o.terms_.end()) {
            if (j == o.terms_.end() || (i != terms_.end() && i->first < j->first)) {
                out.push_back(std::move(*i++));
            } else if (i == terms_.end() || j->first < i->first) {
                out.emplace_back(j->first, negate ? C(-j->second) : j->second);
                ++j;
            } else {
                C c = std::move(i->second);
                if (negate)
                    c -= j->second;
                else
                    c += j->second;
                if (!is_zero(c)) out.emplace_back(i->first, std::move(c));
                ++i;
                ++j;
            }
        }
        terms_ = std::move(out);
        return *this;
    }

    std::vector<term> terms_;
};

template <class C>
bool is_zero(const basic_wpoly<C>& p)
{
    return p.empty();
}

using WPoly = basic_wpoly<Rational>;
using GaussWPoly = basic_wpoly<GaussianRational>;

inline GaussWPoly to_gauss(const WPoly& p)
{
    std::vector<GaussWPoly::term> raw;
    for (const auto& [k, c] : p.terms()) raw.emplace_back(k, GaussianRational(c));
    return GaussWPoly::from_terms(std::move(raw));
}

/// Specialisation w^{1/2} = -1, i.e. s = -1 for Poincare polynomials in s.
inline Rational eval_at_minus_one(const WPoly& p)
{
    Rational sum;
    for (const auto& [k, c] : p.terms()) {
        if (k % 2 == 0)
            sum += c;
        else
            sum -= c;
    }
    return sum;
}

template <class C>
std::string to_string(const basic_wpoly<C>& p)
{
    if (p.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(c);
        if (k != 0) out += "*s^" + std::to_string(k);
    }
    return out;
}

} // namespace mmock
