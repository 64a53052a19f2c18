#pragma once

#include <stdexcept>
#include <string>

namespace gkws {

enum class Errc {
  NonPrimeCharacteristic,
  DegreeOutOfRange,
  FieldTooLarge,
  DivisionByZero,
  NotPrimePower,
  UnsupportedSize,
  CountMismatch,
  NonUnitInverse,
  PrecisionNotReached,
  UnsupportedSupport,
  MOutOfRange,
  EmptyInput,
  BoxTooSmall,
  BoxTooLarge,
  KOutOfRange,
  AlphaOutOfRange,
  SupportOverlap,
  DegenerateG,
  NotPureGap,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gkws
