#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "folx/relation.hpp"
#include "folx/syntax.hpp"

namespace folx {

// A finite universe of discourse: elements are canonical ids 0..n-1 with
// display names. A modular universe additionally maps integer literals to
// residues.
class Universe {
public:
    static std::shared_ptr<const Universe> modular(uint32_t modulus);
    static std::shared_ptr<const Universe> named(std::vector<std::string> elementNames);

    uint32_t size() const { return size_; }
    // Modular universes name elements by their residue and store nothing.
    std::string elementName(Element e) const;
    std::optional<Element> elementByName(const std::string& name) const;
    bool isModular() const { return modular_; }

    // How integer literals in source denote elements.
    Element elementFromLiteral(uint64_t value) const;

private:
    uint32_t size_ = 0;
    bool modular_ = false;
    std::vector<std::string> names_;
};

using UniversePtr = std::shared_ptr<const Universe>;

// A total function on element tuples of fixed arity.
struct FunctionBinding {
    uint32_t arity = 0;
    std::function<Element(std::span<const Element>)> fn;
};

// A relation bound to a symbol. Always answers membership; carries a
// materialized table when one exists (defined relations and explicit enum
// tables do, large built-ins such as the modular order answer membership
// only and are enumerated on demand by the semantics).
class RelationBinding {
public:
    static RelationBinding fromTable(Relation table);
    static RelationBinding fromPredicate(uint32_t arity,
                                         std::function<bool(std::span<const Element>)> pred);

    uint32_t arity() const { return arity_; }
    bool contains(std::span<const Element> args) const;
    const Relation* table() const { return table_ ? table_.get() : nullptr; }

private:
    uint32_t arity_ = 0;
    std::function<bool(std::span<const Element>)> pred_;
    std::shared_ptr<const Relation> table_;
};

// An interpretation: a universe plus bindings for function and relation
// symbols. Immutable; extension returns a copy with one more binding.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(UniversePtr universe) : universe_(std::move(universe)) {}

    const UniversePtr& universe() const { return universe_; }
    uint32_t universeSize() const { return universe_->size(); }

    bool hasFunction(const std::string& name) const { return functions_.count(name) > 0; }
    bool hasRelation(const std::string& name) const { return relations_.count(name) > 0; }
    const FunctionBinding& function(const std::string& name) const;
    const RelationBinding& relation(const std::string& name) const;

    Interpretation withFunction(const std::string& name, FunctionBinding binding) const;
    Interpretation withRelation(const std::string& name, RelationBinding binding) const;

    const std::map<std::string, FunctionBinding>& functions() const { return functions_; }
    const std::map<std::string, RelationBinding>& relations() const { return relations_; }

private:
    UniversePtr universe_;
    std::map<std::string, FunctionBinding> functions_;
    std::map<std::string, RelationBinding> relations_;
};

// The modular Euclidean domain: universe 0..m-1, constants zero and unit,
// add/sub/mul mod m, lt and eq on representatives.
Interpretation makeModRing(uint32_t modulus);

// Explicit finite interpretation for tests and .fol enum builtins.
struct EnumSpec {
    std::vector<std::string> elements;
    std::map<std::string, Element> constants;
    // function tables keyed by argument tuple; must be total
    std::map<std::string, std::map<std::vector<Element>, Element>> functions;
    std::map<std::string, std::vector<std::vector<Element>>> relations;
    std::map<std::string, uint32_t> relationArities; // for possibly-empty relations
};

Interpretation makeEnumInterpretation(const EnumSpec& spec);

// Checks that every symbol a theory declares is bound with the right arity.
void bindTheory(const TheoryDecl& theory, const Interpretation& interp);

// Per-axiom satisfaction report. For a failing axiom of the form
// forall x0...xk. body, `witness` is the least assignment violating the body.
struct AxiomReport {
    struct Entry {
        FormulaPtr axiom;
        bool holds = false;
        std::optional<Tuple> witness;
    };
    std::vector<Entry> entries;
    bool allHold = true;
};

AxiomReport checkSatisfies(const Interpretation& interp,
                           std::span<const FormulaPtr> axioms);

} // namespace folx
