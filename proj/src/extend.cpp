#include "folx/extend.hpp"

#include <algorithm>
#include <limits>

namespace folx {

ExtensionState ExtensionState::base(TheoryDecl theory, Interpretation interp) {
    bindTheory(theory, interp);
    ExtensionState s;
    s.symbols_ = SymbolTable::fromTheory(theory);
    s.theory_ = std::move(theory);
    s.interp_ = std::move(interp);
    return s;
}

ExtensionState extendFunction(const ExtensionState& state, const FuncDef& def) {
    validateDefinition(def, state.symbols());
    auto snapshot = std::make_shared<const Interpretation>(state.interpretation());
    auto params = std::make_shared<const std::vector<std::string>>(def.params);
    TermPtr body = def.body;
    FunctionBinding binding;
    binding.arity = static_cast<uint32_t>(def.params.size());
    binding.fn = [snapshot, params, body](std::span<const Element> args) -> Element {
        std::vector<std::pair<Index, Element>> pairs;
        pairs.reserve(args.size());
        for (size_t i = 0; i < args.size(); ++i)
            pairs.emplace_back(Index::name((*params)[i]), args[i]);
        return evalTerm(*snapshot, Assignment::fromPairs(std::move(pairs)), *body);
    };

    ExtensionState next = state;
    next.symbols_.addFunction(def.symbol, binding.arity);
    next.theory_.functions.push_back({def.symbol, binding.arity});
    next.interp_ = next.interp_.withFunction(def.symbol, std::move(binding));
    next.log_.push_back({def, next.log_.size()});
    return next;
}

ExtensionState extendRelation(const ExtensionState& state, const RelDef& def) {
    validateDefinition(def, state.symbols());
    Relation denoted = denote(state.interpretation(), def.body);
    Relation positional = relationQuotient(denoted, enumerationInverse(def.params));

    ExtensionState next = state;
    next.symbols_.addRelation(def.symbol, static_cast<uint32_t>(def.params.size()));
    next.theory_.relations.push_back({def.symbol, static_cast<uint32_t>(def.params.size())});
    next.interp_ = next.interp_.withRelation(def.symbol,
                                             RelationBinding::fromTable(std::move(positional)));
    next.log_.push_back({def, next.log_.size()});
    return next;
}

// --- Horn systems ---

namespace {

// Rewrites the relation symbols of a positive literal.
FormulaPtr renameLiteral(const FormulaPtr& lit,
                         const std::map<std::string, std::string>& renames) {
    if (lit->kind() != Formula::Kind::Atom)
        return lit;
    auto it = renames.find(lit->symbol());
    if (it == renames.end())
        return lit;
    return Formula::atom(it->second,
                         std::vector<TermPtr>(lit->terms().begin(), lit->terms().end()));
}

} // namespace

HornSystem HornSystem::compile(const HornBlock& block, const SymbolTable& context) {
    validateDefinition(Definition(block), context);
    HornSystem sys;
    sys.block_ = block;
    for (size_t clauseIndex = 0; clauseIndex < sys.block_.clauses.size(); ++clauseIndex) {
        const Clause& clause = sys.block_.clauses[clauseIndex];
        CompiledClause cc;
        cc.clauseIndex = clauseIndex;
        cc.body = Formula::conjunction(
            std::vector<FormulaPtr>(clause.body.begin(), clause.body.end()));
        for (size_t i = 0; i < clause.body.size(); ++i) {
            const FormulaPtr& lit = clause.body[i];
            if (lit->kind() == Formula::Kind::Atom && sys.isNewSymbol(lit->symbol()))
                cc.recursivePositions.push_back(i);
        }
        // Variant k rewrites recursive literal k to the delta relation and
        // the recursive literals before it to the previous round's value;
        // later ones keep the current value.
        for (size_t k = 0; k < cc.recursivePositions.size(); ++k) {
            std::vector<FormulaPtr> lits(clause.body.begin(), clause.body.end());
            for (size_t j = 0; j < cc.recursivePositions.size(); ++j) {
                size_t pos = cc.recursivePositions[j];
                const std::string& sym = lits[pos]->symbol();
                std::map<std::string, std::string> rename;
                if (j < k)
                    rename[sym] = oldName(sym);
                else if (j == k)
                    rename[sym] = deltaName(sym);
                if (!rename.empty())
                    lits[pos] = renameLiteral(lits[pos], rename);
            }
            cc.deltaVariants.push_back(Formula::conjunction(std::move(lits)));
        }
        sys.clauses_.push_back(std::move(cc));
    }
    return sys;
}

bool HornSystem::isNewSymbol(const std::string& name) const {
    for (const auto& s : block_.symbols)
        if (s.name == name)
            return true;
    return false;
}

RelationMap bottomRelations(const HornSystem& sys, uint32_t universeSize) {
    RelationMap map;
    for (const auto& s : sys.newSymbols())
        map.emplace(s.name, Relation(IndexSet::positions(s.arity), universeSize));
    return map;
}

namespace {

// Projects a clause-body denotation onto the head variables, pads head
// variables the body does not constrain, and converts to positional form.
Relation toHeadRelation(const Clause& clause, const Relation& body) {
    IndexSet headSet = IndexSet::names(
        std::span<const std::string>(clause.headVars.data(), clause.headVars.size()));
    Relation projected = project(body, headSet.intersect(body.indexSet()));
    Relation padded = cylindrify(projected, headSet.minus(projected.indexSet()));
    return relationQuotient(padded, enumerationInverse(clause.headVars));
}

void unionInto(RelationMap& acc, const std::string& sym, const Relation& r) {
    auto it = acc.find(sym);
    it->second = setUnion(it->second, r);
}

Interpretation bindRelations(const Interpretation& ambient, const RelationMap& map) {
    Interpretation interp = ambient;
    for (const auto& [sym, rel] : map)
        interp = interp.withRelation(sym, RelationBinding::fromTable(rel));
    return interp;
}

size_t saturatingPow(size_t base, uint32_t exp) {
    size_t acc = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (acc > std::numeric_limits<size_t>::max() / 2 / (base ? base : 1))
            return std::numeric_limits<size_t>::max() / 2;
        acc *= base;
    }
    return acc;
}

} // namespace

RelationMap immediateConsequence(const Interpretation& ambient, const HornSystem& sys,
                                 const RelationMap& current) {
    Interpretation interp = bindRelations(ambient, current);
    RelationMap result = bottomRelations(sys, ambient.universeSize());
    for (const auto& cc : sys.compiledClauses()) {
        Relation contribution = toHeadRelation(sys.clauseOf(cc), denote(interp, cc.body));
        unionInto(result, sys.clauseOf(cc).headSymbol, contribution);
    }
    return result;
}

HornSolution solveHornSystem(const Interpretation& ambient, const HornSystem& sys,
                             size_t maxIterations) {
    uint32_t n = ambient.universeSize();
    size_t bound = 1;
    for (const auto& s : sys.newSymbols())
        bound += saturatingPow(n, s.arity);
    if (maxIterations > 0)
        bound = maxIterations;

    HornSolution out;
    for (const auto& s : sys.newSymbols())
        out.trace.symbols.push_back(s.name);
    std::sort(out.trace.symbols.begin(), out.trace.symbols.end());

    auto record = [&](const RelationMap& rels) {
        std::vector<size_t> sizes;
        sizes.reserve(out.trace.symbols.size());
        for (const auto& sym : out.trace.symbols)
            sizes.push_back(rels.at(sym).size());
        out.trace.iterations.push_back(std::move(sizes));
    };

    // round 1: one full application from the bottom
    RelationMap old = bottomRelations(sys, n);
    RelationMap current = immediateConsequence(ambient, sys, old);
    RelationMap delta = current;
    record(current);

    auto anyNonEmpty = [](const RelationMap& m) {
        for (const auto& [sym, rel] : m)
            if (!rel.empty())
                return true;
        return false;
    };

    size_t rounds = 1;
    while (anyNonEmpty(delta)) {
        if (++rounds > bound)
            raise(ErrorCode::IterationLimitExceeded,
                  "fixpoint iteration exceeded " + std::to_string(bound) + " rounds");

        // bind p to current, p#old to the previous round, p#delta to the delta
        Interpretation interp = bindRelations(ambient, current);
        for (const auto& [sym, rel] : old)
            interp = interp.withRelation(HornSystem::oldName(sym),
                                         RelationBinding::fromTable(rel));
        for (const auto& [sym, rel] : delta)
            interp = interp.withRelation(HornSystem::deltaName(sym),
                                         RelationBinding::fromTable(rel));

        RelationMap fresh = bottomRelations(sys, n);
        for (const auto& cc : sys.compiledClauses())
            for (const auto& variant : cc.deltaVariants)
                unionInto(fresh, sys.clauseOf(cc).headSymbol,
                          toHeadRelation(sys.clauseOf(cc), denote(interp, variant)));

        RelationMap next;
        for (const auto& [sym, rel] : current)
            next.emplace(sym, setUnion(rel, fresh.at(sym)));

        // delta = next - current, computed by row filtering
        RelationMap nextDelta;
        for (const auto& [sym, rel] : next) {
            const Relation& prev = current.at(sym);
            RelationBuilder b(rel.indexSet(), n);
            for (size_t i = 0; i < rel.size(); ++i)
                if (!prev.containsRow(rel.row(i)))
                    b.addRow(rel.row(i));
            nextDelta.emplace(sym, b.build());
        }

        old = std::move(current);
        current = std::move(next);
        delta = std::move(nextDelta);
        record(current);
    }

    // the delta rounds must land on a true fixpoint of the full operator
    RelationMap check = immediateConsequence(ambient, sys, current);
    if (check != current)
        throw std::logic_error("delta-driven solve disagrees with the immediate-consequence operator");

    out.relations = std::move(current);
    return out;
}

ExtensionState solveHornInto(const ExtensionState& state, const HornBlock& block,
                             const RelationMap& solution) {
    ExtensionState next = state;
    for (const auto& s : block.symbols) {
        next.symbols_.addRelation(s.name, s.arity);
        next.theory_.relations.push_back({s.name, s.arity});
        next.interp_ =
            next.interp_.withRelation(s.name, RelationBinding::fromTable(solution.at(s.name)));
    }
    next.log_.push_back({Definition(block), next.log_.size()});
    return next;
}

ExtensionState solveHorn(const ExtensionState& state, const HornBlock& block,
                         size_t maxIterations) {
    FixpointTrace ignored;
    return solveHorn(state, block, ignored, maxIterations);
}

ExtensionState solveHorn(const ExtensionState& state, const HornBlock& block,
                         FixpointTrace& traceOut, size_t maxIterations) {
    HornSystem sys = HornSystem::compile(block, state.symbols());
    HornSolution solution =
        solveHornSystem(state.interpretation(), sys, maxIterations);
    traceOut = std::move(solution.trace);
    return solveHornInto(state, block, solution.relations);
}

FixpointTrace fixpointTrace(const ExtensionState& state, const HornBlock& block,
                            size_t maxIterations) {
    HornSystem sys = HornSystem::compile(block, state.symbols());
    return solveHornSystem(state.interpretation(), sys, maxIterations).trace;
}

ExtensionState applyProgram(const ExtensionState& state, std::span<const Definition> defs,
                            size_t maxIterations) {
    // names each definition introduces, for use-before-definition reporting
    auto definedNames = [](const Definition& d) {
        std::vector<std::string> names;
        std::visit(
            [&](const auto& def) {
                using T = std::decay_t<decltype(def)>;
                if constexpr (std::is_same_v<T, HornBlock>) {
                    for (const auto& s : def.symbols)
                        names.push_back(s.name);
                } else {
                    names.push_back(def.symbol);
                }
            },
            d);
        return names;
    };

    ExtensionState current = state;
    for (size_t i = 0; i < defs.size(); ++i) {
        try {
            std::visit(
                [&](const auto& def) {
                    using T = std::decay_t<decltype(def)>;
                    if constexpr (std::is_same_v<T, FuncDef>)
                        current = extendFunction(current, def);
                    else if constexpr (std::is_same_v<T, RelDef>)
                        current = extendRelation(current, def);
                    else
                        current = solveHorn(current, def, maxIterations);
                },
                defs[i]);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::UnknownSymbol && !e.subject().empty()) {
                for (size_t later = i + 1; later < defs.size(); ++later)
                    for (const auto& name : definedNames(defs[later]))
                        if (name == e.subject())
                            raise(ErrorCode::UseBeforeDefinition,
                                  "'" + name + "' is used before its definition", e.pos());
            }
            throw;
        }
    }
    return current;
}

} // namespace folx
