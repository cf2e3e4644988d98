#include "hd/error.hpp"

namespace hd {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotCongruentOne: return "NotCongruentOne";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::PrecisionOverflow: return "PrecisionOverflow";
    case ErrorCode::NotIntegrable: return "NotIntegrable";
    case ErrorCode::DenominatorNotLocalizer: return "DenominatorNotLocalizer";
    case ErrorCode::SingularPair: return "SingularPair";
    case ErrorCode::NotTangential: return "NotTangential";
    case ErrorCode::NotOrdinary: return "NotOrdinary";
    case ErrorCode::BNotUnit: return "BNotUnit";
    case ErrorCode::TOutOfRange: return "TOutOfRange";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::SigmaSingular: return "SigmaSingular";
    case ErrorCode::WrongResidueClass: return "WrongResidueClass";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PropertyViolation: return "PropertyViolation";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::DivisionFailure: return "DivisionFailure";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    }
    return "UnknownError";
}

bool is_internal(ErrorCode code) {
    switch (code) {
    case ErrorCode::PropertyViolation:
    case ErrorCode::SingularSystem:
    case ErrorCode::DivisionFailure:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::InternalMismatch:
    case ErrorCode::TheoremViolation:
        return true;
    default:
        return false;
    }
}

}  // namespace hd
