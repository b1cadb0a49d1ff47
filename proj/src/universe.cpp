#include "folx/universe.hpp"

#include <algorithm>

#include "folx/kernels.hpp"

namespace folx {

std::shared_ptr<const Universe> Universe::modular(uint32_t modulus) {
    auto u = std::make_shared<Universe>();
    u->size_ = modulus;
    u->modular_ = true;
    return u;
}

std::shared_ptr<const Universe> Universe::named(std::vector<std::string> elementNames) {
    if (elementNames.empty())
        raise(ErrorCode::UniverseMismatch, "universe must have at least one element");
    auto sorted = elementNames;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        raise(ErrorCode::DuplicateSymbol, "universe element names must be distinct");
    auto u = std::make_shared<Universe>();
    u->size_ = static_cast<uint32_t>(elementNames.size());
    u->names_ = std::move(elementNames);
    return u;
}

std::string Universe::elementName(Element e) const {
    return modular_ ? std::to_string(e) : names_[e];
}

std::optional<Element> Universe::elementByName(const std::string& name) const {
    if (modular_) {
        Element value = 0;
        for (char c : name) {
            if (c < '0' || c > '9')
                return std::nullopt;
            uint64_t next = uint64_t(value) * 10 + uint64_t(c - '0');
            if (next >= size_)
                return std::nullopt;
            value = static_cast<Element>(next);
        }
        return name.empty() ? std::nullopt : std::optional<Element>(value);
    }
    for (uint32_t i = 0; i < size_; ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

Element Universe::elementFromLiteral(uint64_t value) const {
    if (modular_)
        return static_cast<Element>(value % size_);
    if (value >= size_)
        raise(ErrorCode::LiteralOutOfRange,
              "literal " + std::to_string(value) + " outside universe of size " +
                  std::to_string(size_));
    return static_cast<Element>(value);
}

RelationBinding RelationBinding::fromTable(Relation table) {
    RelationBinding b;
    b.arity_ = static_cast<uint32_t>(table.width());
    b.table_ = std::make_shared<const Relation>(std::move(table));
    auto t = b.table_;
    b.pred_ = [t](std::span<const Element> args) { return t->containsRow(args); };
    return b;
}

RelationBinding RelationBinding::fromPredicate(
    uint32_t arity, std::function<bool(std::span<const Element>)> pred) {
    RelationBinding b;
    b.arity_ = arity;
    b.pred_ = std::move(pred);
    return b;
}

bool RelationBinding::contains(std::span<const Element> args) const {
    if (args.size() != arity_)
        raise(ErrorCode::ArityMismatch, "relation membership test with wrong arity");
    return pred_(args);
}

const FunctionBinding& Interpretation::function(const std::string& name) const {
    auto it = functions_.find(name);
    if (it == functions_.end())
        raise(ErrorCode::UnknownSymbol, "no function named '" + name + "'");
    return it->second;
}

const RelationBinding& Interpretation::relation(const std::string& name) const {
    auto it = relations_.find(name);
    if (it == relations_.end())
        raise(ErrorCode::UnknownSymbol, "no relation named '" + name + "'");
    return it->second;
}

Interpretation Interpretation::withFunction(const std::string& name,
                                            FunctionBinding binding) const {
    Interpretation next = *this;
    next.functions_[name] = std::move(binding);
    return next;
}

Interpretation Interpretation::withRelation(const std::string& name,
                                            RelationBinding binding) const {
    Interpretation next = *this;
    next.relations_[name] = std::move(binding);
    return next;
}

Interpretation makeModRing(uint32_t modulus) {
    if (modulus == 0)
        raise(ErrorCode::InvalidModulus, "modulus must be positive");
    uint64_t m = modulus;
    Interpretation interp(Universe::modular(modulus));
    interp = interp.withFunction("zero", {0, [](std::span<const Element>) -> Element { return 0; }});
    interp = interp.withFunction(
        "unit", {0, [m](std::span<const Element>) -> Element { return 1 % m; }});
    interp = interp.withFunction("add", {2, [m](std::span<const Element> a) -> Element {
                                     return static_cast<Element>((uint64_t(a[0]) + a[1]) % m);
                                 }});
    interp = interp.withFunction("sub", {2, [m](std::span<const Element> a) -> Element {
                                     return static_cast<Element>((uint64_t(a[0]) + m - a[1]) % m);
                                 }});
    interp = interp.withFunction("mul", {2, [m](std::span<const Element> a) -> Element {
                                     return static_cast<Element>((uint64_t(a[0]) * a[1]) % m);
                                 }});
    interp = interp.withRelation("lt", RelationBinding::fromPredicate(
                                           2, [](std::span<const Element> a) {
                                               return a[0] < a[1];
                                           }));
    interp = interp.withRelation("eq", RelationBinding::fromPredicate(
                                           2, [](std::span<const Element> a) {
                                               return a[0] == a[1];
                                           }));
    return interp;
}

Interpretation makeEnumInterpretation(const EnumSpec& spec) {
    Interpretation interp(Universe::named(spec.elements));
    uint32_t n = interp.universeSize();

    for (const auto& [name, value] : spec.constants) {
        if (value >= n)
            raise(ErrorCode::UniverseMismatch,
                  "constant '" + name + "' bound outside the universe");
        Element v = value;
        interp = interp.withFunction(name, {0, [v](std::span<const Element>) { return v; }});
    }

    for (const auto& [name, table] : spec.functions) {
        if (table.empty())
            raise(ErrorCode::PartialFunctionTable,
                  "function '" + name + "' has an empty table");
        uint32_t arity = static_cast<uint32_t>(table.begin()->first.size());
        size_t expected = kernels::spaceSize(arity, n);
        if (table.size() != expected)
            raise(ErrorCode::PartialFunctionTable,
                  "function '" + name + "' must map all " + std::to_string(expected) +
                      " argument tuples, has " + std::to_string(table.size()));
        // dense row-major table
        std::vector<Element> dense(expected);
        for (const auto& [args, value] : table) {
            if (args.size() != arity)
                raise(ErrorCode::ArityMismatch,
                      "function '" + name + "' table rows have mixed arity");
            size_t rank = 0;
            for (Element a : args) {
                if (a >= n)
                    raise(ErrorCode::UniverseMismatch,
                          "function '" + name + "' table uses an element outside the universe");
                rank = rank * n + a;
            }
            if (value >= n)
                raise(ErrorCode::UniverseMismatch,
                      "function '" + name + "' maps outside the universe");
            dense[rank] = value;
        }
        auto shared = std::make_shared<const std::vector<Element>>(std::move(dense));
        interp = interp.withFunction(
            name, {arity, [shared, n](std::span<const Element> args) -> Element {
                       size_t rank = 0;
                       for (Element a : args)
                           rank = rank * n + a;
                       return (*shared)[rank];
                   }});
    }

    for (const auto& [name, rows] : spec.relations) {
        uint32_t arity;
        if (auto it = spec.relationArities.find(name); it != spec.relationArities.end())
            arity = it->second;
        else if (!rows.empty())
            arity = static_cast<uint32_t>(rows.front().size());
        else
            raise(ErrorCode::ArityMismatch,
                  "relation '" + name + "' is empty and has no declared arity");
        RelationBuilder b(IndexSet::positions(arity), n);
        for (const auto& row : rows) {
            if (row.size() != arity)
                raise(ErrorCode::ArityMismatch,
                      "relation '" + name + "' table rows have mixed arity");
            b.addRow(row);
        }
        interp = interp.withRelation(name, RelationBinding::fromTable(b.build()));
    }

    return interp;
}

void bindTheory(const TheoryDecl& theory, const Interpretation& interp) {
    SymbolTable symbols = SymbolTable::fromTheory(theory); // checks uniqueness
    for (const auto& [name, entry] : symbols.entries()) {
        const auto& [kind, arity] = entry;
        if (kind == SymbolKind::Function) {
            if (!interp.hasFunction(name))
                raise(ErrorCode::UnknownSymbol,
                      "theory '" + theory.name + "' declares function '" + name +
                          "' but the interpretation does not bind it");
            if (interp.function(name).arity != arity)
                raise(ErrorCode::ArityMismatch,
                      "function '" + name + "' bound with arity " +
                          std::to_string(interp.function(name).arity) + ", declared " +
                          std::to_string(arity));
        } else {
            if (!interp.hasRelation(name))
                raise(ErrorCode::UnknownSymbol,
                      "theory '" + theory.name + "' declares relation '" + name +
                          "' but the interpretation does not bind it");
            if (interp.relation(name).arity() != arity)
                raise(ErrorCode::ArityMismatch,
                      "relation '" + name + "' bound with arity " +
                          std::to_string(interp.relation(name).arity()) + ", declared " +
                          std::to_string(arity));
        }
    }
}

} // namespace folx
