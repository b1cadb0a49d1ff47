#include "folx/error.hpp"

namespace folx {

const char* errorCodeName(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexNotPresent: return "IndexNotPresent";
        case ErrorCode::CompositionTypeMismatch: return "CompositionTypeMismatch";
        case ErrorCode::IndexSetMismatch: return "IndexSetMismatch";
        case ErrorCode::UniverseMismatch: return "UniverseMismatch";
        case ErrorCode::IndexSetOverlap: return "IndexSetOverlap";
        case ErrorCode::MixedIndexKinds: return "MixedIndexKinds";
        case ErrorCode::EnumerationTooLarge: return "EnumerationTooLarge";
        case ErrorCode::DuplicateSymbol: return "DuplicateSymbol";
        case ErrorCode::RecursiveFunction: return "RecursiveFunction";
        case ErrorCode::RecursiveRelationOutsideHornBlock: return "RecursiveRelationOutsideHornBlock";
        case ErrorCode::ParameterMismatch: return "ParameterMismatch";
        case ErrorCode::NonHornClause: return "NonHornClause";
        case ErrorCode::InvalidClauseHead: return "InvalidClauseHead";
        case ErrorCode::VariableShadowing: return "VariableShadowing";
        case ErrorCode::UnknownSymbol: return "UnknownSymbol";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::UseBeforeDefinition: return "UseBeforeDefinition";
        case ErrorCode::InvalidModulus: return "InvalidModulus";
        case ErrorCode::PartialFunctionTable: return "PartialFunctionTable";
        case ErrorCode::UnboundVariable: return "UnboundVariable";
        case ErrorCode::LiteralOutOfRange: return "LiteralOutOfRange";
        case ErrorCode::NonClosedFormula: return "NonClosedFormula";
        case ErrorCode::NonClosedAxiom: return "NonClosedAxiom";
        case ErrorCode::FreeVariableMismatch: return "FreeVariableMismatch";
        case ErrorCode::IterationLimitExceeded: return "IterationLimitExceeded";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownDirective: return "UnknownDirective";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, SourcePos pos, std::string subject)
    : std::runtime_error(std::string(errorCodeName(code)) + ": " + message),
      code_(code),
      pos_(pos),
      subject_(std::move(subject)) {}

void raise(ErrorCode code, const std::string& message, SourcePos pos, std::string subject) {
    throw Error(code, message, pos, std::move(subject));
}

} // namespace folx
