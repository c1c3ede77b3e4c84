// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace branchlab {

enum class ErrorCode {
  PrimeRequired,
  FieldSyntax,
  PolySyntax,
  FieldMismatch,
  DivisionByZero,
  NotInValuationRing,
  ResultantUndefined,
  NotThroughOrigin,
  BothZero,
  NotPrimitive,
  NonPositiveValuation,
  RequiresMinimalPolicy,
  UnrealizableTableau,
  InfiniteCharacteristicColumn,
  InvalidCluster,
  SingularMatrix,
  SameBranch,
  NotCharacteristicIndex,
  NonIntegerScaling,
  IndexOutOfRange,
  InsufficientColumns,
  NonLocalParametrization,
  UnknownVerb,
  MissingArgument,
  BadOption,
  InputFormat,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code. Every failure raised by the
/// library is one of these.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t column = 0)
      : std::runtime_error(what), code_(code), column_(column) {}

  ErrorCode code() const noexcept { return code_; }
  /// 1-based column in the parsed text for syntax errors; 0 when not applicable.
  std::size_t column() const noexcept { return column_; }

 private:
  ErrorCode code_;
  std::size_t column_;
};

}  // namespace branchlab
