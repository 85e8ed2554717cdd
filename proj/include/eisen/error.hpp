#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace eisen {

enum class ErrorCode {
    ParseError,
    ParityError,
    NotAUnit,
    DivisionByZero,
    BothZero,
    NotPrime,
    BadResidue,
    ZeroInput,
    UnitInput,
    NormTooLarge,
    PreconditionError,
    NotACube,
    EquationError,
    CoprimalityError,
    ZeroError,
    DivisibilityError,
    NotCoprime,
    ProductNotCube,
    EqualityError,
    DegenerateError,
};

constexpr std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ParityError: return "ParityError";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::BadResidue: return "BadResidue";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::UnitInput: return "UnitInput";
        case ErrorCode::NormTooLarge: return "NormTooLarge";
        case ErrorCode::PreconditionError: return "PreconditionError";
        case ErrorCode::NotACube: return "NotACube";
        case ErrorCode::EquationError: return "EquationError";
        case ErrorCode::CoprimalityError: return "CoprimalityError";
        case ErrorCode::ZeroError: return "ZeroError";
        case ErrorCode::DivisibilityError: return "DivisibilityError";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::ProductNotCube: return "ProductNotCube";
        case ErrorCode::EqualityError: return "EqualityError";
        case ErrorCode::DegenerateError: return "DegenerateError";
    }
    return "UnknownError";
}

/// A rejected input. `detail` names the violated condition; `stage` is set
/// when the error surfaced inside a multi-stage pipeline.
class DomainError : public std::runtime_error {
public:
    DomainError(ErrorCode code, std::string detail, std::string stage = {})
        : std::runtime_error(render(code, detail, stage)),
          code_(code),
          detail_(std::move(detail)),
          stage_(std::move(stage)) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }
    const std::string& detail() const noexcept { return detail_; }
    const std::string& stage() const noexcept { return stage_; }

    DomainError at_stage(std::string stage) const { return DomainError(code_, detail_, std::move(stage)); }

private:
    static std::string render(ErrorCode code, const std::string& detail, const std::string& stage) {
        std::string out(error_name(code));
        if (!detail.empty()) out += ": " + detail;
        if (!stage.empty()) out += " [stage " + stage + "]";
        return out;
    }

    ErrorCode code_;
    std::string detail_;
    std::string stage_;
};

/// Raised when a computation reaches a state that the underlying number
/// theory rules out (a Fermat solution, a failed polynomial identity, a
/// missing cube root). Never expected; `witness` carries the full input.
class TheoremViolation : public std::logic_error {
public:
    TheoremViolation(std::string kind, std::string witness)
        : std::logic_error("TheoremViolation(" + kind + "): " + witness),
          kind_(std::move(kind)),
          witness_(std::move(witness)) {}

    const std::string& kind() const noexcept { return kind_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string kind_;
    std::string witness_;
};

/// Throws TheoremViolation when `condition` fails; `witness` is only
/// evaluated on failure.
template <class WitnessFn>
void ensure(bool condition, const char* kind, WitnessFn&& witness) {
    if (!condition) throw TheoremViolation(kind, std::forward<WitnessFn>(witness)());
}

}  // namespace eisen
