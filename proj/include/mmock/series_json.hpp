#pragma once

#include <json.hpp>

#include "series.hpp"

namespace mmock {

using json = nlohmann::json;

/// {"D": int, "trunc": int, "terms": [[e, "p/q"], ...]}; exact series store trunc as null.
inline json to_json(const FracSeries& a)
{
    json terms = json::array();
    for (const auto& [e, c] : a.terms()) terms.push_back(json::array({e, to_string(c)}));
    return {{"D", a.den()}, {"trunc", a.is_exact() ? json(nullptr) : json(a.trunc())}, {"terms", std::move(terms)}};
}

/// Bivariate analogue: each coefficient is [[m, "p/q"], ...] meaning sum c w^{m/2}.
inline json to_json(const BiSeries& a)
{
    json terms = json::array();
    for (const auto& [e, p] : a.terms()) {
        json poly = json::array();
        for (const auto& [m, c] : p.terms()) poly.push_back(json::array({m, to_string(c)}));
        terms.push_back(json::array({e, std::move(poly)}));
    }
    return {{"D", a.den()}, {"trunc", a.is_exact() ? json(nullptr) : json(a.trunc())}, {"terms", std::move(terms)}};
}

namespace detail {

inline long trunc_from_json(const json& j) { return j.at("trunc").is_null() ? kExact : j.at("trunc").get<long>(); }

} // namespace detail

inline FracSeries frac_series_from_json(const json& j)
{
    std::vector<FracSeries::term> raw;
    for (const auto& t : j.at("terms")) raw.emplace_back(t.at(0).get<long>(), parse_rational(t.at(1).get<std::string>()));
    return FracSeries::from_terms(j.at("D").get<long>(), detail::trunc_from_json(j), std::move(raw));
}

inline BiSeries bi_series_from_json(const json& j)
{
    std::vector<BiSeries::term> raw;
    for (const auto& t : j.at("terms")) {
        std::vector<WPoly::term> poly;
        for (const auto& m : t.at(1)) poly.emplace_back(m.at(0).get<int>(), parse_rational(m.at(1).get<std::string>()));
        raw.emplace_back(t.at(0).get<long>(), WPoly::from_terms(std::move(poly)));
    }
    return BiSeries::from_terms(j.at("D").get<long>(), detail::trunc_from_json(j), std::move(raw));
}

} // namespace mmock
