#pragma once

#include <stdexcept>
#include <string>

namespace bav {

enum class Err {
  DivisionByZero,
  ContextMismatch,
  AmbientMismatch,
  GridMismatch,
  BadAxes,
  OutOfPoset,
  NotAdjacent,
  NotInSubspace,
  ZeroVector,
  NotADecomposition,
  NotTotallyOpposite,
  InvalidArray,
  DiameterTooSmall,
  NotASpanningTree,
  InconsistentTreeValues,
  BadDiameter,
  ConstraintViolation,
  BadQ,
  WrongValueFunction,
  BadCharacteristic,
  RootOfUnityObstruction,
  Singular,
  NotAWalk,
  BadPrime,
  Parse,
  BadArgument,
  Internal,
};

inline const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::ContextMismatch: return "ContextMismatch";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::GridMismatch: return "GridMismatch";
    case Err::BadAxes: return "BadAxes";
    case Err::OutOfPoset: return "OutOfPoset";
    case Err::NotAdjacent: return "NotAdjacent";
    case Err::NotInSubspace: return "NotInSubspace";
    case Err::ZeroVector: return "ZeroVector";
    case Err::NotADecomposition: return "NotADecomposition";
    case Err::NotTotallyOpposite: return "NotTotallyOpposite";
    case Err::InvalidArray: return "InvalidArray";
    case Err::DiameterTooSmall: return "DiameterTooSmall";
    case Err::NotASpanningTree: return "NotASpanningTree";
    case Err::InconsistentTreeValues: return "InconsistentTreeValues";
    case Err::BadDiameter: return "BadDiameter";
    case Err::ConstraintViolation: return "ConstraintViolation";
    case Err::BadQ: return "BadQ";
    case Err::WrongValueFunction: return "WrongValueFunction";
    case Err::BadCharacteristic: return "BadCharacteristic";
    case Err::RootOfUnityObstruction: return "RootOfUnityObstruction";
    case Err::Singular: return "Singular";
    case Err::NotAWalk: return "NotAWalk";
    case Err::BadPrime: return "BadPrime";
    case Err::Parse: return "Parse";
    case Err::BadArgument: return "BadArgument";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Err code;
  Error(Err c, const std::string& msg)
      : std::runtime_error(std::string(err_name(c)) + ": " + msg), code(c) {}
};

}  // namespace bav
