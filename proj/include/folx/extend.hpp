#pragma once

#include "folx/semantics.hpp"

namespace folx {

struct AppliedDefinition {
    Definition def;
    size_t order = 0;
};

// A theory plus the interpretation accumulated through extensions. Each
// extension returns a fresh state; earlier states stay valid.
class ExtensionState {
public:
    static ExtensionState base(TheoryDecl theory, Interpretation interp);

    const TheoryDecl& theory() const { return theory_; }
    const SymbolTable& symbols() const { return symbols_; }
    const Interpretation& interpretation() const { return interp_; }
    std::span<const AppliedDefinition> log() const { return log_; }

private:
    TheoryDecl theory_;
    SymbolTable symbols_;
    Interpretation interp_;
    std::vector<AppliedDefinition> log_;

    friend ExtensionState extendFunction(const ExtensionState&, const FuncDef&);
    friend ExtensionState extendRelation(const ExtensionState&, const RelDef&);
    friend ExtensionState solveHornInto(const ExtensionState&, const HornBlock&,
                                        const std::map<std::string, Relation>&);
};

// Adds f bound to the function (a_0,...,a_{n-1}) -> M_A(t) with
// A = {x_i -> a_i}. The body is evaluated against the pre-extension
// interpretation, which by construction agrees with the extended one.
ExtensionState extendFunction(const ExtensionState& state, const FuncDef& def);

// Adds p bound to the positional form of the body's denotation:
// p(a_0,...,a_{n-1}) iff {x_i -> a_i} is in the denotation.
ExtensionState extendRelation(const ExtensionState& state, const RelDef& def);

// A validated Horn block compiled for evaluation: clause bodies as formulas,
// recursive literal positions, and the rewritten body variants used by the
// delta-driven rounds.
class HornSystem {
public:
    static HornSystem compile(const HornBlock& block, const SymbolTable& context);

    const HornBlock& block() const { return block_; }
    std::span<const SymbolDecl> newSymbols() const { return block_.symbols; }

    struct CompiledClause {
        size_t clauseIndex;                     // into block().clauses
        FormulaPtr body;                        // conjunction of the literals
        std::vector<size_t> recursivePositions; // literals over new symbols
        std::vector<FormulaPtr> deltaVariants;  // one per recursive position
    };
    std::span<const CompiledClause> compiledClauses() const { return clauses_; }
    const Clause& clauseOf(const CompiledClause& cc) const {
        return block_.clauses[cc.clauseIndex];
    }

    bool isNewSymbol(const std::string& name) const;

    // Suffixes carried by the rewritten delta-variant symbols.
    static std::string deltaName(const std::string& sym) { return sym + "#delta"; }
    static std::string oldName(const std::string& sym) { return sym + "#old"; }

private:
    HornBlock block_;
    std::vector<CompiledClause> clauses_;
};

using RelationMap = std::map<std::string, Relation>;

// All new symbols bound to empty relations of their arity.
RelationMap bottomRelations(const HornSystem& sys, uint32_t universeSize);

// One application of the clause bodies: for each head symbol the union of
// its clause contributions evaluated with the new symbols bound to
// `current`. The monotone operator whose least fixpoint interprets the
// block.
RelationMap immediateConsequence(const Interpretation& ambient, const HornSystem& sys,
                                 const RelationMap& current);

struct FixpointTrace {
    std::vector<std::string> symbols;           // sorted
    std::vector<std::vector<size_t>> iterations; // per-iteration sizes, per symbol
};

struct HornSolution {
    RelationMap relations;
    FixpointTrace trace;
};

// Least fixpoint by delta-driven (semi-naive) iteration from empty
// relations. The result is verified against one full application of
// immediateConsequence before it is returned. maxIterations = 0 uses the
// theoretical bound 1 + sum over symbols of |D|^arity.
HornSolution solveHornSystem(const Interpretation& ambient, const HornSystem& sys,
                             size_t maxIterations = 0);

// Solves the block and extends the state with its relations.
ExtensionState solveHorn(const ExtensionState& state, const HornBlock& block,
                         size_t maxIterations = 0);
ExtensionState solveHorn(const ExtensionState& state, const HornBlock& block,
                         FixpointTrace& traceOut, size_t maxIterations = 0);

// Per-iteration relation sizes of the solve, without extending the state.
FixpointTrace fixpointTrace(const ExtensionState& state, const HornBlock& block,
                            size_t maxIterations = 0);

// Validates and applies definitions in order. An unknown symbol that a
// later definition would provide reports use-before-definition.
ExtensionState applyProgram(const ExtensionState& state, std::span<const Definition> defs,
                            size_t maxIterations = 0);

} // namespace folx
