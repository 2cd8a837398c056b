#include "handle3/error.hpp"

namespace handle3 {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IllegalArc: return "IllegalArc";
    case ErrorCode::InconsistentOutcome: return "InconsistentOutcome";
    case ErrorCode::IllegalBand: return "IllegalBand";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ZeroP: return "ZeroP";
    case ErrorCode::SphereNotCovered: return "SphereNotCovered";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotADisk: return "NotADisk";
    case ErrorCode::NotEssential: return "NotEssential";
    case ErrorCode::WrongGenus: return "WrongGenus";
    case ErrorCode::UnknownComponent: return "UnknownComponent";
    case ErrorCode::LocusMismatch: return "LocusMismatch";
    case ErrorCode::StaleWitness: return "StaleWitness";
    case ErrorCode::UnclassifiedCase: return "UnclassifiedCase";
    case ErrorCode::UnknownPattern: return "UnknownPattern";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace handle3
