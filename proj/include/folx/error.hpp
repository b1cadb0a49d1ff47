#pragma once

#include <stdexcept>
#include <string>

namespace folx {

enum class ErrorCode {
    // relalg
    IndexNotPresent,
    CompositionTypeMismatch,
    IndexSetMismatch,
    UniverseMismatch,
    IndexSetOverlap,
    MixedIndexKinds,
    EnumerationTooLarge,
    // syntax / validation
    DuplicateSymbol,
    RecursiveFunction,
    RecursiveRelationOutsideHornBlock,
    ParameterMismatch,
    NonHornClause,
    InvalidClauseHead,
    VariableShadowing,
    UnknownSymbol,
    ArityMismatch,
    UseBeforeDefinition,
    // universe / evaluation
    InvalidModulus,
    PartialFunctionTable,
    UnboundVariable,
    LiteralOutOfRange,
    NonClosedFormula,
    NonClosedAxiom,
    FreeVariableMismatch,
    IterationLimitExceeded,
    // parser
    SyntaxError,
    UnknownDirective,
};

const char* errorCodeName(ErrorCode code);

// 1-based source position; line 0 means "no location".
struct SourcePos {
    int line = 0;
    int column = 0;
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, SourcePos pos = {},
          std::string subject = {});

    ErrorCode code() const { return code_; }
    SourcePos pos() const { return pos_; }
    // The offending symbol, when one exists.
    const std::string& subject() const { return subject_; }

private:
    ErrorCode code_;
    SourcePos pos_;
    std::string subject_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message, SourcePos pos = {},
                        std::string subject = {});

} // namespace folx
