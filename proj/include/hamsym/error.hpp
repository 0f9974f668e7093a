#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamsym {

enum class ErrorCode {
  SelfLoop,
  VertexOutOfRange,
  MalformedHeader,
  TrailingGarbage,
  EdgeNotPresent,
  DegreeMismatch,
  CapExceeded,
  TooSmall,
  TooLarge,
  NotGenerating,
  ContainsIdentity,
  NotInverseClosed,
  NotApplicable,
  NotCubic,
  NotHamiltonian,
  NotACycleOfG,
  SpecOutOfRange,
  LayersNotOdd,
  FactorNotHamiltonian,
  Disconnected,
  Inconclusive,
  BudgetExceeded,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hamsym
