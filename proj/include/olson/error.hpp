#ifndef OLSON_ERROR_HPP
#define OLSON_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace olson {

enum class ErrorCode {
  ElementForeignToAlgebra,
  NotEnumerable,
  SetOutOfRange,
  InvalidAlgebra,
  CarrierTooLarge,
  WeightsNotSummable,
  NonIncreasingPoints,
  MapUndefinedOnSpectrum,
  SpectrumOutsideUnitInterval,
  SpectrumTooLargeForSharpnessScan,
  NonMonotoneInput,
  BackendMismatch,
  EmptyFamily,
  NotHermitian,
  NotAnEffect,
  NotAProjection,
  DimensionMismatch,
  EigendecompositionFailure,
  DomainMismatch,
  KernelValueOutsideTribe,
  InvalidKernel,
  RationalOverflow,
  ParseError,
  ElementNotInCarrier,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ElementForeignToAlgebra: return "ElementForeignToAlgebra";
    case ErrorCode::NotEnumerable: return "NotEnumerable";
    case ErrorCode::SetOutOfRange: return "SetOutOfRange";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::WeightsNotSummable: return "WeightsNotSummable";
    case ErrorCode::NonIncreasingPoints: return "NonIncreasingPoints";
    case ErrorCode::MapUndefinedOnSpectrum: return "MapUndefinedOnSpectrum";
    case ErrorCode::SpectrumOutsideUnitInterval: return "SpectrumOutsideUnitInterval";
    case ErrorCode::SpectrumTooLargeForSharpnessScan: return "SpectrumTooLargeForSharpnessScan";
    case ErrorCode::NonMonotoneInput: return "NonMonotoneInput";
    case ErrorCode::BackendMismatch: return "BackendMismatch";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotAnEffect: return "NotAnEffect";
    case ErrorCode::NotAProjection: return "NotAProjection";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EigendecompositionFailure: return "EigendecompositionFailure";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::KernelValueOutsideTribe: return "KernelValueOutsideTribe";
    case ErrorCode::InvalidKernel: return "InvalidKernel";
    case ErrorCode::RationalOverflow: return "RationalOverflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ElementNotInCarrier: return "ElementNotInCarrier";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace olson

#endif  // OLSON_ERROR_HPP
