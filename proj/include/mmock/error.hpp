#pragma once

#include <stdexcept>
#include <string>

namespace mmock {

enum class errc {
    zero_leading_term,
    out_of_window,
    non_stabilizing,
    nonvanishing_remainder,
    non_positive_order,
    irrational_phase,
    not_coprime,
    branch_unavailable,
    negative_argument,
    quadrature_failure,
    domain_error,
    precision_insufficient,
    tail_bound_unreachable,
};

inline const char* errc_name(errc e)
{
    switch (e) {
    case errc::zero_leading_term: return "ZeroLeadingTerm";
    case errc::out_of_window: return "OutOfWindow";
    case errc::non_stabilizing: return "NonStabilizing";
    case errc::nonvanishing_remainder: return "NonvanishingRemainder";
    case errc::non_positive_order: return "NonPositiveOrder";
    case errc::irrational_phase: return "IrrationalPhase";
    case errc::not_coprime: return "NotCoprime";
    case errc::branch_unavailable: return "BranchUnavailable";
    case errc::negative_argument: return "NegativeArgument";
    case errc::quadrature_failure: return "QuadratureFailure";
    case errc::domain_error: return "DomainError";
    case errc::precision_insufficient: return "PrecisionInsufficient";
    case errc::tail_bound_unreachable: return "TailBoundUnreachable";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code)
    {
    }

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace mmock
