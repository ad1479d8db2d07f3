#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrc {

enum class Errc {
    NonPrime,
    ReducibleModulus,
    DegreeMismatch,
    DivisionByZero,
    FieldMismatch,
    SingularMatrix,
    PointNotOnCurve,
    SingularLocalMatrix,
    EmptyBasis,
    NoFibers,
    NotEnoughFibers,
    GeneralPositionFailure,
    DivisibilityViolation,
    PreconditionViolation,
    GammaCheckFailure,
    BudgetExceeded,
    ClassificationMismatch,
    ParseError,
};

inline std::string_view to_string(Errc code) {
    switch (code) {
        case Errc::NonPrime: return "NonPrime";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::DegreeMismatch: return "DegreeMismatch";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::PointNotOnCurve: return "PointNotOnCurve";
        case Errc::SingularLocalMatrix: return "SingularLocalMatrix";
        case Errc::EmptyBasis: return "EmptyBasis";
        case Errc::NoFibers: return "NoFibers";
        case Errc::NotEnoughFibers: return "NotEnoughFibers";
        case Errc::GeneralPositionFailure: return "GeneralPositionFailure";
        case Errc::DivisibilityViolation: return "DivisibilityViolation";
        case Errc::PreconditionViolation: return "PreconditionViolation";
        case Errc::GammaCheckFailure: return "GammaCheckFailure";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::ClassificationMismatch: return "ClassificationMismatch";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message names the offending value or inequality.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace lrc
