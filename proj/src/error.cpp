#include "gkws/error.hpp"

namespace gkws {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::UnsupportedSize: return "UnsupportedSize";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::NonUnitInverse: return "NonUnitInverse";
    case Errc::PrecisionNotReached: return "PrecisionNotReached";
    case Errc::UnsupportedSupport: return "UnsupportedSupport";
    case Errc::MOutOfRange: return "MOutOfRange";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::BoxTooSmall: return "BoxTooSmall";
    case Errc::BoxTooLarge: return "BoxTooLarge";
    case Errc::KOutOfRange: return "KOutOfRange";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::SupportOverlap: return "SupportOverlap";
    case Errc::DegenerateG: return "DegenerateG";
    case Errc::NotPureGap: return "NotPureGap";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

}  // namespace gkws
