#pragma once

#include <variant>

#include "folx/syntax.hpp"
#include "folx/universe.hpp"

namespace folx {

// Statements of a .fol source program, in file order.

struct TheoryStatement {
    TheoryDecl theory;
    SourcePos pos{};
};

struct BuiltinSpec {
    enum class Kind { Mod, Enum };
    Kind kind = Kind::Mod;
    uint64_t modulus = 0; // Mod
    EnumSpec enumSpec;    // Enum, with element references already resolved
};

struct InterpStatement {
    std::string name;
    std::string theoryName;
    BuiltinSpec spec;
    SourcePos pos{};
};

// A definition body parses without knowing symbol kinds; a body that is a
// single application could denote either a function or a relation, so both
// readings are kept and the loader picks one against the symbol table.
struct DefStatement {
    std::string name;
    std::vector<std::string> params;
    TermPtr termBody;       // set when the body reads as a term
    FormulaPtr formulaBody; // set when the body reads as a formula
    SourcePos pos{};
};

struct RecStatement {
    HornBlock block;
    SourcePos pos{};
};

struct EvalQuery {
    TermPtr term;
    std::vector<std::pair<std::string, uint64_t>> under;
};
struct HoldsQuery {
    FormulaPtr formula;
};
struct SolveQuery {
    FormulaPtr formula;
};
struct DumpQuery {
    std::string symbol;
};
struct EntailsQuery {
    FormulaPtr lhs;
    FormulaPtr rhs;
};

struct QueryStatement {
    std::variant<EvalQuery, HoldsQuery, SolveQuery, DumpQuery, EntailsQuery> query;
    SourcePos pos{};
};

using Statement =
    std::variant<TheoryStatement, InterpStatement, DefStatement, RecStatement, QueryStatement>;

struct SourceProgram {
    std::vector<Statement> statements;
};

// Parses a .fol program. Raises SyntaxError / UnknownDirective with a
// 1-based line and column.
SourceProgram parseProgram(std::string_view text);

} // namespace folx
