#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cyclix {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class Errc {
  DomainNotField,
  NotPrime,
  AmbientMismatch,
  DimensionMismatch,
  ObjectMismatch,
  NonComposableWord,
  InvalidGroup,
  NotCentral,
  NotCyclic,
  CyclicModeOnNonCyclic,
  TruncationTooSmall,
  TruncationMismatch,
  RangeExceedsComplex,
  BoundarySquareNonzero,
  SignCheckFailed,
  NotAChainMap,
  BasisMismatch,
  NotAssociative,
  NoUnit,
  BudgetExceeded,
  MatrixMismatch,
  NotCommutative,
  PositiveCharacteristic,
  RelationFailure,
  NoUnitStructure,
  WindowTooSmall,
  InvalidInput,
  Internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace cyclix
