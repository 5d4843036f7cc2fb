#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace berkp {

/// Domain error kinds. The CLI reports these by name with exit status 2.
enum class ErrorCode {
  IndeterminateZero,
  NonResidue,
  OddValuation,
  EvenCharacteristic,
  ZeroPolynomial,
  NotIntegral,
  PrimeMismatch,
  DivisionByZero,
  PrecisionLoss,
  InfinityOperand,
  ClassicalPoint,
  EmptyInput,
  DegenerateAnnulus,
  BasePointInSupport,
  MixedTypes,
  BaseInE,
  TooLarge,
  InvalidMeasure,
  TypeIPresent,
  TooFew,
  BadScale,
  ShellEmpty,
  NoDensity,
  DegenerateMap,
  PoleInDiskAllCharts,
  NotClassicalOrTypeII,
  NonIntegralRadius,
  NotFixed,
  IrrationalDirection,
  NonResidueBranch,
  EvenPrime,
  InvalidArgument,
  ParseError,
  UnknownSubcommand,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& context)
      : std::runtime_error(std::string(error_name(code)) + ": " + context),
        code_(code),
        context_(context) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }
  const std::string& context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::string context_;
};

}  // namespace berkp
