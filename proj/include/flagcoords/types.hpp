#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fc {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3cd;
using Mat3 = Eigen::Matrix3cd;

enum class ErrorCode {
  ZeroVector,
  NotHermitian,
  BadSignature,
  DegenerateBasis,
  NotInteriorPoint,
  NotPositive,
  NotNull,
  NotIsometry,
  OrthogonalLines,
  AsymptoticLines,
  PointNotOnLine,
  PointOnLine,
  ConcyclicPoints,
  NonUnique,
  DegenerateTriple,
  NonGenericPair,
  NonGeneric,
  NonGenericTriple,
  InvalidInvariants,
  InvalidM,
  InvalidComplex,
  IncompatibleDecoration,
  InvalidDecoration,
  DisconnectedPath,
  RelationViolation,
  DegenerateInput,
  NoAdmissibleSolution,
  WrongTriangulation,
  RetryCapExhausted,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace fc
