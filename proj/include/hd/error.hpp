#pragma once

#include <stdexcept>
#include <string>

namespace hd {

enum class ErrorCode {
    NotAUnit,
    NotCongruentOne,
    ModulusMismatch,
    InvalidPrime,
    PrecisionOverflow,
    NotIntegrable,
    DenominatorNotLocalizer,
    SingularPair,
    NotTangential,
    NotOrdinary,
    BNotUnit,
    TOutOfRange,
    NotStabilized,
    SigmaSingular,
    WrongResidueClass,
    UnsupportedPrime,
    InvalidArgument,
    PropertyViolation,
    // internal assertion failures
    SingularSystem,
    DivisionFailure,
    DegreeMismatch,
    InternalMismatch,
    TheoremViolation,
};

const char* error_name(ErrorCode code);

/// True for codes that signal a bug rather than bad input (CLI exit status 2).
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, long detail = 0)
        : std::runtime_error(std::string(error_name(code)) + ": " + what),
          code_(code), detail_(detail) {}

    ErrorCode code() const noexcept { return code_; }
    /// Extra integer payload, e.g. the failing index s for NotIntegrable.
    long detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    long detail_;
};

}  // namespace hd
