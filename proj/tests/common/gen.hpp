#pragma once

// Shared randomized-input helpers for the test suites. Everything is
// seeded; a failing case reproduces from the seed printed by the caller.

#include <random>
#include <string>
#include <vector>

#include "folx/relalg.hpp"
#include "folx/syntax.hpp"
#include "folx/universe.hpp"

namespace folx::testgen {

using Rng = std::mt19937_64;

inline size_t pick(Rng& rng, size_t bound) {
    return std::uniform_int_distribution<size_t>(0, bound - 1)(rng);
}

inline Element pickElement(Rng& rng, uint32_t universeSize) {
    return static_cast<Element>(pick(rng, universeSize));
}

inline bool chance(Rng& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

// relation with each row of the full space kept with probability `density`
inline Relation randomRelation(Rng& rng, const IndexSet& indexSet, uint32_t universeSize,
                               double density = 0.4) {
    RelationBuilder b(indexSet, universeSize);
    size_t total = kernels::spaceSize(indexSet.size(), universeSize);
    std::vector<Element> row(indexSet.size());
    for (size_t rank = 0; rank < total; ++rank) {
        kernels::decodeRank(rank, universeSize, row);
        if (chance(rng, density))
            b.addRow(row);
    }
    return b.build();
}

inline std::vector<std::string> variablePool() { return {"x", "y", "z"}; }

// random term over the given variables; functions from the interpretation
inline TermPtr randomTerm(Rng& rng, const std::vector<std::string>& vars,
                          const std::vector<SymbolDecl>& functions, uint32_t universeSize,
                          int depth) {
    if (depth <= 0 || functions.empty() || chance(rng, 0.55))
        return chance(rng, 0.2) ? Term::literal(pick(rng, universeSize))
                                : Term::variable(vars[pick(rng, vars.size())]);
    const SymbolDecl& f = functions[pick(rng, functions.size())];
    std::vector<TermPtr> args;
    for (uint32_t i = 0; i < f.arity; ++i)
        args.push_back(randomTerm(rng, vars, functions, universeSize, depth - 1));
    return Term::apply(f.name, std::move(args));
}

// random formula of bounded depth over the given relation/function symbols
inline FormulaPtr randomFormula(Rng& rng, const std::vector<std::string>& vars,
                                const std::vector<SymbolDecl>& relations,
                                const std::vector<SymbolDecl>& functions,
                                uint32_t universeSize, int depth) {
    auto atom = [&]() -> FormulaPtr {
        if (relations.empty() || chance(rng, 0.25)) {
            return Formula::eq(randomTerm(rng, vars, functions, universeSize, 1),
                               randomTerm(rng, vars, functions, universeSize, 1));
        }
        const SymbolDecl& p = relations[pick(rng, relations.size())];
        std::vector<TermPtr> args;
        for (uint32_t i = 0; i < p.arity; ++i)
            args.push_back(randomTerm(rng, vars, functions, universeSize,
                                      chance(rng, 0.3) ? 1 : 0));
        return Formula::atom(p.name, std::move(args));
    };
    if (depth <= 0)
        return atom();
    switch (pick(rng, 8)) {
        case 0:
            return atom();
        case 1: {
            std::vector<FormulaPtr> members;
            size_t k = pick(rng, 3); // 0..2 members exercises the empty conjunction
            for (size_t i = 0; i < k; ++i)
                members.push_back(
                    randomFormula(rng, vars, relations, functions, universeSize, depth - 1));
            return Formula::conjunction(std::move(members));
        }
        case 2: {
            std::vector<FormulaPtr> members;
            size_t k = 1 + pick(rng, 2);
            for (size_t i = 0; i < k; ++i)
                members.push_back(
                    randomFormula(rng, vars, relations, functions, universeSize, depth - 1));
            return Formula::disjunction(std::move(members));
        }
        case 3:
            return Formula::negation(
                randomFormula(rng, vars, relations, functions, universeSize, depth - 1));
        case 4:
            return Formula::implies(
                randomFormula(rng, vars, relations, functions, universeSize, depth - 1),
                randomFormula(rng, vars, relations, functions, universeSize, depth - 1));
        case 5:
            return Formula::exists(
                vars[pick(rng, vars.size())],
                randomFormula(rng, vars, relations, functions, universeSize, depth - 1));
        case 6:
            return Formula::forall(
                vars[pick(rng, vars.size())],
                randomFormula(rng, vars, relations, functions, universeSize, depth - 1));
        default:
            return atom();
    }
}

// interpretation over universe {0..n-1} with random relation tables and an
// optional unary function
inline Interpretation randomInterpretation(Rng& rng, uint32_t n,
                                           const std::vector<SymbolDecl>& relations,
                                           bool withFunction) {
    std::vector<std::string> names;
    for (uint32_t i = 0; i < n; ++i)
        names.push_back(std::to_string(i));
    Interpretation interp(Universe::named(names));
    for (const auto& r : relations)
        interp = interp.withRelation(
            r.name, RelationBinding::fromTable(
                        randomRelation(rng, IndexSet::positions(r.arity), n, 0.45)));
    if (withFunction) {
        std::vector<Element> table(n);
        for (uint32_t i = 0; i < n; ++i)
            table[i] = pickElement(rng, n);
        interp = interp.withFunction(
            "g", {1, [table](std::span<const Element> a) { return table[a[0]]; }});
    }
    return interp;
}

} // namespace folx::testgen
