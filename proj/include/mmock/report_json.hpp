#pragma once

#include "rademacher.hpp"
#include "series_json.hpp"
#include "sheaf.hpp"
#include "transforms.hpp"

namespace mmock {

/// Significant digits printed for a BigFloat at the current precision.
inline int output_digits() { return static_cast<int>(std::min(60.0, current_bits() * 0.30103)); }

inline json big_json(const BigFloat& x) { return to_decimal(x, output_digits()); }
inline json big_json(const BigComplex& z) { return json::array({big_json(z.re), big_json(z.im)}); }

template <class C>
json to_json(const discrepancy<C>& d)
{
    json j{{"q_exponent", to_string(d.q_exponent)}, {"lhs", d.lhs}, {"rhs", d.rhs}};
    if (d.w_exponent) j["w_exponent"] = to_string(*d.w_exponent);
    return j;
}

inline json to_json(const IdentityReport& r)
{
    json j{{"name", r.name}, {"order", std::to_string(r.order)}, {"passed", r.passed}};
    j["first_discrepancy"] = r.first_discrepancy ? to_json(*r.first_discrepancy) : json(nullptr);
    return j;
}

inline json to_json(const BiIdentityReport& r)
{
    json j{{"name", r.name}, {"order", std::to_string(r.order)}, {"passed", r.passed}};
    j["first_discrepancy"] = r.first_discrepancy ? to_json(*r.first_discrepancy) : json(nullptr);
    return j;
}

inline json to_json(const TransformCheck& c, const BigFloat& tolerance)
{
    return {{"name", c.name},           {"h", std::to_string(c.h)},     {"k", std::to_string(c.k)},
            {"j", std::to_string(c.j)}, {"z", big_json(c.z)},           {"lhs", big_json(c.lhs)},
            {"rhs", big_json(c.rhs)},   {"discrepancy", to_decimal(c.discrepancy, 6)},
            {"tolerance", to_decimal(tolerance, 3)}, {"passed", c.discrepancy < tolerance}};
}

inline json to_json(const RademacherReport& r, bool detail = false)
{
    json partials = json::array();
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
        const auto& t = r.terms[i];
        json p{{"k", std::to_string(t.k)},
               {"s1", big_json(t.s1)},
               {"s2", big_json(t.s2)},
               {"s3", big_json(t.s3)},
               {"running", big_json(r.partials[i].running)},
               {"abs_error", to_decimal(r.partials[i].abs_error, 6)}};
        if (detail) {
            json s3 = json::array();
            for (const auto& s : t.s3_terms) s3.push_back({{"l", std::to_string(s.l)}, {"g", std::to_string(s.g)}, {"value", big_json(s.value)}});
            p["s3_terms"] = std::move(s3);
            p["imag"] = to_decimal(t.imag, 6);
            p["quad_error"] = to_decimal(t.quad_error, 6);
        }
        partials.push_back(std::move(p));
    }
    const long block = std::max<long>(1, r.kmax / 10);
    BigFloat tail = 0;
    for (long k = r.kmax - block + 1; k <= r.kmax; ++k) {
        const auto& t = r.terms[k - 1];
        tail += boost::multiprecision::abs(t.s1 + t.s2 + t.s3);
    }
    return {{"j", std::to_string(r.j)},
            {"n", std::to_string(r.n)},
            {"kmax", std::to_string(r.kmax)},
            {"bits", std::to_string(r.bits)},
            {"quad_tol", to_decimal(BigFloat(r.quad_tol), 3)},
            {"phase_variant", phase_variant_name(r.variant)},
            {"exact", to_string(r.exact)},
            {"value", big_json(r.value())},
            {"abs_error", to_decimal(r.abs_error(), 6)},
            {"last_block_magnitude", to_decimal(tail, 6)},
            {"tolerance_note", "truncation error is empirical; no convergence rate is known"},
            {"partials", std::move(partials)}};
}

} // namespace mmock
