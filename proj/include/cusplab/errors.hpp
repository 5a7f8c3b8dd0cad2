#pragma once

#include <stdexcept>
#include <string>

namespace cusplab {

/// Failure categories surfaced by the library. The CLI maps these to
/// machine-readable error reports; library callers can switch on kind().
enum class errc {
    division_by_near_zero,
    domain_violation,
    not_divisible,
    not_singular,
    not_a_type,
    not_ramphoid,
    not_regular,
    flat_point,
    not_frontal,
    normal_invalid,
    degenerate_singularity,
    not_first_kind,
    front_point,
    not_extendable,
    not_adjusted,
    not_normalized,
    not_kossowski,
    bad_params,
    parse_error,
    unsupported_integral,
    internal,
};

inline const char* errc_name(errc e) noexcept
{
    switch (e) {
    case errc::division_by_near_zero: return "DivisionByNearZero";
    case errc::domain_violation: return "DomainViolation";
    case errc::not_divisible: return "NotDivisible";
    case errc::not_singular: return "NotSingular";
    case errc::not_a_type: return "NotAType";
    case errc::not_ramphoid: return "NotRamphoid";
    case errc::not_regular: return "NotRegular";
    case errc::flat_point: return "FlatPoint";
    case errc::not_frontal: return "NotFrontal";
    case errc::normal_invalid: return "NormalInvalid";
    case errc::degenerate_singularity: return "DegenerateSingularity";
    case errc::not_first_kind: return "NotFirstKind";
    case errc::front_point: return "FrontPoint";
    case errc::not_extendable: return "NotExtendable";
    case errc::not_adjusted: return "NotAdjusted";
    case errc::not_normalized: return "NotNormalized";
    case errc::not_kossowski: return "NotKossowski";
    case errc::bad_params: return "BadParams";
    case errc::parse_error: return "ParseError";
    case errc::unsupported_integral: return "UnsupportedIntegral";
    case errc::internal: return "Internal";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc kind, const std::string& what)
        : std::runtime_error(std::string(errc_name(kind)) + ": " + what), kind_(kind)
    {
    }

    errc kind() const noexcept { return kind_; }

private:
    errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

} // namespace cusplab
