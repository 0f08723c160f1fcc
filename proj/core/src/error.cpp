#include "loopreps/error.hpp"

namespace loopreps {

std::string_view errorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotARoot: return "NotARoot";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::WrongOrder: return "WrongOrder";
    case ErrorCode::FixedFieldTooBig: return "FixedFieldTooBig";
    case ErrorCode::BadSubgroup: return "BadSubgroup";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::NotSameClass: return "NotSameClass";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::DescentInconsistency: return "DescentInconsistency";
    case ErrorCode::PrimitiveSearchFailed: return "PrimitiveSearchFailed";
    case ErrorCode::CertificateFailed: return "CertificateFailed";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::ZeroPoint: return "ZeroPoint";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace loopreps
