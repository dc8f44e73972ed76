#include "flagcoords/types.hpp"

namespace fc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::BadSignature: return "BadSignature";
    case ErrorCode::DegenerateBasis: return "DegenerateBasis";
    case ErrorCode::NotInteriorPoint: return "NotInteriorPoint";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NotNull: return "NotNull";
    case ErrorCode::NotIsometry: return "NotIsometry";
    case ErrorCode::OrthogonalLines: return "OrthogonalLines";
    case ErrorCode::AsymptoticLines: return "AsymptoticLines";
    case ErrorCode::PointNotOnLine: return "PointNotOnLine";
    case ErrorCode::PointOnLine: return "PointOnLine";
    case ErrorCode::ConcyclicPoints: return "ConcyclicPoints";
    case ErrorCode::NonUnique: return "NonUnique";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::NonGenericPair: return "NonGenericPair";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::NonGenericTriple: return "NonGenericTriple";
    case ErrorCode::InvalidInvariants: return "InvalidInvariants";
    case ErrorCode::InvalidM: return "InvalidM";
    case ErrorCode::InvalidComplex: return "InvalidComplex";
    case ErrorCode::IncompatibleDecoration: return "IncompatibleDecoration";
    case ErrorCode::InvalidDecoration: return "InvalidDecoration";
    case ErrorCode::DisconnectedPath: return "DisconnectedPath";
    case ErrorCode::RelationViolation: return "RelationViolation";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NoAdmissibleSolution: return "NoAdmissibleSolution";
    case ErrorCode::WrongTriangulation: return "WrongTriangulation";
    case ErrorCode::RetryCapExhausted: return "RetryCapExhausted";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace fc
