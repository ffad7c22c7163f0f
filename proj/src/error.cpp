#include "lili/error.hpp"

namespace lili {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyExponentSet: return "EmptyExponentSet";
    case Errc::DuplicateExponent: return "DuplicateExponent";
    case Errc::NegativeExponent: return "NegativeExponent";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::WrongFactorTarget: return "WrongFactorTarget";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::VariableOutOfRange: return "VariableOutOfRange";
    case Errc::WidthMismatch: return "WidthMismatch";
    case Errc::IncompleteTable: return "IncompleteTable";
    case Errc::NonInjectiveMap: return "NonInjectiveMap";
    case Errc::TargetOutOfRange: return "TargetOutOfRange";
    case Errc::TooManyVariables: return "TooManyVariables";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::BadKeyLength: return "BadKeyLength";
    case Errc::ZeroRegister: return "ZeroRegister";
    case Errc::DegenerateState: return "DegenerateState";
    case Errc::Underdetermined: return "Underdetermined";
    case Errc::Conflicted: return "Conflicted";
    case Errc::TrialBudgetExceeded: return "TrialBudgetExceeded";
    case Errc::TooFewBits: return "TooFewBits";
    case Errc::PrecheckFailed: return "PrecheckFailed";
  }
  return "Unknown";
}

}  // namespace lili
