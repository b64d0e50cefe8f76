#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgenus {

enum class Errc {
    zero_constant_term,
    nonzero_constant_term,
    bad_order,
    bad_k,
    not_normalized,
    odd_series_in_pontrjagin_grading,
    weight_mismatch,
    missing_monomial,
    no_distinguished_class,
    parse_error,
    invariant_violation,
    singular_matrix,
    insufficient_bound,
    dimension_too_small,
    division_by_zero,
    invalid_argument,
};

constexpr std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::zero_constant_term: return "ZeroConstantTerm";
    case Errc::nonzero_constant_term: return "NonzeroConstantTerm";
    case Errc::bad_order: return "BadOrder";
    case Errc::bad_k: return "BadK";
    case Errc::not_normalized: return "NotNormalized";
    case Errc::odd_series_in_pontrjagin_grading: return "OddSeriesInPontrjaginGrading";
    case Errc::weight_mismatch: return "WeightMismatch";
    case Errc::missing_monomial: return "MissingMonomial";
    case Errc::no_distinguished_class: return "NoDistinguishedClass";
    case Errc::parse_error: return "ParseError";
    case Errc::invariant_violation: return "InvariantViolation";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::insufficient_bound: return "InsufficientBound";
    case Errc::dimension_too_small: return "DimensionTooSmall";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

// Every failure in the library is reported through this type; what() reads
// "<Name>: <detail>".
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code)
    {
    }

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace hgenus
