// SPDX-License-Identifier: Apache-2.0

#include "branchlab/error.hpp"

namespace branchlab {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::PrimeRequired: return "PrimeRequired";
    case ErrorCode::FieldSyntax: return "FieldSyntax";
    case ErrorCode::PolySyntax: return "PolySyntax";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotInValuationRing: return "NotInValuationRing";
    case ErrorCode::ResultantUndefined: return "ResultantUndefined";
    case ErrorCode::NotThroughOrigin: return "NotThroughOrigin";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NonPositiveValuation: return "NonPositiveValuation";
    case ErrorCode::RequiresMinimalPolicy: return "RequiresMinimalPolicy";
    case ErrorCode::UnrealizableTableau: return "UnrealizableTableau";
    case ErrorCode::InfiniteCharacteristicColumn: return "InfiniteCharacteristicColumn";
    case ErrorCode::InvalidCluster: return "InvalidCluster";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::SameBranch: return "SameBranch";
    case ErrorCode::NotCharacteristicIndex: return "NotCharacteristicIndex";
    case ErrorCode::NonIntegerScaling: return "NonIntegerScaling";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InsufficientColumns: return "InsufficientColumns";
    case ErrorCode::NonLocalParametrization: return "NonLocalParametrization";
    case ErrorCode::UnknownVerb: return "UnknownVerb";
    case ErrorCode::MissingArgument: return "MissingArgument";
    case ErrorCode::BadOption: return "BadOption";
    case ErrorCode::InputFormat: return "InputFormat";
  }
  return "Unknown";
}

}  // namespace branchlab
