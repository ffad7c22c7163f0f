#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lili {

enum class Errc {
  // gf2poly
  EmptyExponentSet,
  DuplicateExponent,
  NegativeExponent,
  DegreeTooLarge,
  NotIrreducible,
  WrongFactorTarget,
  EmptyInput,
  InvalidArgument,
  // boolfn
  SyntaxError,
  VariableOutOfRange,
  WidthMismatch,
  IncompleteTable,
  NonInjectiveMap,
  TargetOutOfRange,
  TooManyVariables,
  // lfsr
  PositionOutOfRange,
  InvalidSpec,
  LengthMismatch,
  // lili
  BadKeyLength,
  ZeroRegister,
  DegenerateState,
  // reconstruct
  Underdetermined,
  Conflicted,
  TrialBudgetExceeded,
  // stats
  TooFewBits,
  PrecheckFailed,
};

const char* to_string(Errc code) noexcept;

/// Single exception type for the library. `detail()` carries the numeric
/// payload some errors need (parse position, variable index, missing words).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<std::size_t> detail = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        detail_(std::move(detail)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<std::size_t>& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::vector<std::size_t> detail_;
};

}  // namespace lili
