// Error codes shared by every module.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace maxcurve {

enum class Errc {
    // gf
    NotPrime,
    DegreeOutOfRange,
    CardinalityTooLarge,
    ZeroInput,
    FieldMismatch,
    // poly
    ZeroPolynomial,
    ConstantPolynomial,
    // curve
    ExponentNotCoprimeToCharacteristic,
    ReducibleModel,
    BadFieldRequest,
    InvalidExponent,
    FieldTooLargeForEnumeration,
    // bounds
    DimensionTooSmall,
    DegenerateRange,
    ForbiddenGenus,
    BadRange,
    BadCharacteristicHypothesis,
    // spectrum / data files
    UnsupportedQ,
    ParseError,
    InconsistentConfirmation,
    InconsistentExclusion,
    // internal invariant broken
    InternalInconsistency,
};

constexpr std::string_view errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::CardinalityTooLarge: return "CardinalityTooLarge";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::ExponentNotCoprimeToCharacteristic: return "ExponentNotCoprimeToCharacteristic";
    case Errc::ReducibleModel: return "ReducibleModel";
    case Errc::BadFieldRequest: return "BadFieldRequest";
    case Errc::InvalidExponent: return "InvalidExponent";
    case Errc::FieldTooLargeForEnumeration: return "FieldTooLargeForEnumeration";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::DegenerateRange: return "DegenerateRange";
    case Errc::ForbiddenGenus: return "ForbiddenGenus";
    case Errc::BadRange: return "BadRange";
    case Errc::BadCharacteristicHypothesis: return "BadCharacteristicHypothesis";
    case Errc::UnsupportedQ: return "UnsupportedQ";
    case Errc::ParseError: return "ParseError";
    case Errc::InconsistentConfirmation: return "InconsistentConfirmation";
    case Errc::InconsistentExclusion: return "InconsistentExclusion";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

/// Inconsistency errors signal that verified data contradicts the bound
/// engine (or an internal invariant failed); everything else is bad input.
constexpr bool is_inconsistency(Errc code) noexcept {
    return code == Errc::InconsistentConfirmation || code == Errc::InconsistentExclusion ||
           code == Errc::InternalInconsistency;
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string &what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace maxcurve
