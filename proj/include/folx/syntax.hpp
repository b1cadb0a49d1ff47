#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "folx/error.hpp"

namespace folx {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// A term is a variable, an application of a function symbol (constants are
// 0-ary applications), or an integer literal that the bound universe maps
// to an element.
class Term {
public:
    enum class Kind { Variable, Apply, Literal };

    static TermPtr variable(std::string name);
    static TermPtr apply(std::string symbol, std::vector<TermPtr> args = {});
    static TermPtr literal(uint64_t value);

    Kind kind() const { return kind_; }
    const std::string& name() const { return name_; } // variable name or symbol
    std::span<const TermPtr> args() const { return args_; }
    uint64_t literalValue() const { return literal_; }

private:
    Kind kind_;
    std::string name_;
    uint64_t literal_ = 0;
    std::vector<TermPtr> args_;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Conjunction and disjunction hold a set of members: children are kept in
// a canonical structural order with duplicates collapsed.
class Formula {
public:
    enum class Kind { Atom, Eq, And, Or, Not, Implies, Exists, Forall };

    static FormulaPtr atom(std::string symbol, std::vector<TermPtr> args);
    static FormulaPtr eq(TermPtr lhs, TermPtr rhs);
    static FormulaPtr conjunction(std::vector<FormulaPtr> members);
    static FormulaPtr disjunction(std::vector<FormulaPtr> members);
    static FormulaPtr negation(FormulaPtr f);
    static FormulaPtr implies(FormulaPtr lhs, FormulaPtr rhs);
    static FormulaPtr exists(std::string var, FormulaPtr body);
    static FormulaPtr forall(std::string var, FormulaPtr body);

    Kind kind() const { return kind_; }
    const std::string& symbol() const { return name_; }   // Atom
    const std::string& boundVar() const { return name_; } // Exists/Forall
    std::span<const TermPtr> terms() const { return terms_; } // Atom args, Eq {lhs,rhs}
    std::span<const FormulaPtr> children() const { return children_; }
    const FormulaPtr& child(size_t i = 0) const { return children_[i]; }

private:
    Kind kind_;
    std::string name_;
    std::vector<TermPtr> terms_;
    std::vector<FormulaPtr> children_;
};

// Structural ordering and equality.
int compare(const Term& a, const Term& b);
int compare(const Formula& a, const Formula& b);
bool operator==(const Term& a, const Term& b);
bool operator==(const Formula& a, const Formula& b);

std::set<std::string> termVariables(const Term& t);
std::set<std::string> freeVariables(const Formula& f);

// Rewrites Or, Implies and Forall away; the result contains only Atom, Eq,
// And, Not and Exists and has the same free variables.
FormulaPtr desugar(const FormulaPtr& f);

std::string render(const Term& t);
std::string render(const Formula& f);

// --- theories and definitions ---

struct SymbolDecl {
    std::string name;
    uint32_t arity = 0;
};

struct TheoryDecl {
    std::string name;
    std::vector<std::string> constants;
    std::vector<SymbolDecl> functions;
    std::vector<SymbolDecl> relations;
};

enum class SymbolKind { Function, Relation };

// Flat view of the symbols in scope: theory symbols plus everything added
// by extensions. Constants are 0-ary functions.
class SymbolTable {
public:
    SymbolTable() = default;
    static SymbolTable fromTheory(const TheoryDecl& theory);

    void addFunction(const std::string& name, uint32_t arity);
    void addRelation(const std::string& name, uint32_t arity);

    bool has(const std::string& name) const;
    std::optional<uint32_t> functionArity(const std::string& name) const;
    std::optional<uint32_t> relationArity(const std::string& name) const;

    const std::map<std::string, std::pair<SymbolKind, uint32_t>>& entries() const {
        return entries_;
    }

private:
    std::map<std::string, std::pair<SymbolKind, uint32_t>> entries_;
};

struct FuncDef {
    std::string symbol;
    std::vector<std::string> params;
    TermPtr body;
    SourcePos pos{};
};

struct RelDef {
    std::string symbol;
    std::vector<std::string> params;
    FormulaPtr body;
    SourcePos pos{};
};

// head(vars) <- body literals; literals are positive Atom/Eq formulas.
struct Clause {
    std::string headSymbol;
    std::vector<std::string> headVars;
    std::vector<FormulaPtr> body;
    SourcePos pos{};
};

struct HornBlock {
    std::vector<SymbolDecl> symbols;
    std::vector<Clause> clauses;
    SourcePos pos{};
};

using Definition = std::variant<FuncDef, RelDef, HornBlock>;

// Checks every structural invariant of a definition against the symbols in
// scope: unknown/duplicate symbols, arity, parameter/variable agreement,
// the no-recursion rules, quantifier cleanliness and the Horn shape.
void validateDefinition(const Definition& def, const SymbolTable& context);

} // namespace folx
