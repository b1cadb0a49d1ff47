#include "folx/syntax.hpp"

#include <algorithm>

namespace folx {

// --- construction ---

TermPtr Term::variable(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind_ = Kind::Variable;
    t->name_ = std::move(name);
    return t;
}

TermPtr Term::apply(std::string symbol, std::vector<TermPtr> args) {
    auto t = std::make_shared<Term>();
    t->kind_ = Kind::Apply;
    t->name_ = std::move(symbol);
    t->args_ = std::move(args);
    return t;
}

TermPtr Term::literal(uint64_t value) {
    auto t = std::make_shared<Term>();
    t->kind_ = Kind::Literal;
    t->literal_ = value;
    return t;
}

FormulaPtr Formula::atom(std::string symbol, std::vector<TermPtr> args) {
    auto f = std::make_shared<Formula>();
    f->kind_ = Kind::Atom;
    f->name_ = std::move(symbol);
    f->terms_ = std::move(args);
    return f;
}

FormulaPtr Formula::eq(TermPtr lhs, TermPtr rhs) {
    auto f = std::make_shared<Formula>();
    f->kind_ = Kind::Eq;
    f->terms_ = {std::move(lhs), std::move(rhs)};
    return f;
}

namespace {

// canonical member order for And/Or
void canonicalize(std::vector<FormulaPtr>& members) {
    std::sort(members.begin(), members.end(),
              [](const FormulaPtr& a, const FormulaPtr& b) { return compare(*a, *b) < 0; });
    members.erase(std::unique(members.begin(), members.end(),
                              [](const FormulaPtr& a, const FormulaPtr& b) {
                                  return compare(*a, *b) == 0;
                              }),
                  members.end());
}

} // namespace

FormulaPtr Formula::conjunction(std::vector<FormulaPtr> members) {
    canonicalize(members);
    auto f = std::make_shared<Formula>();
    f->kind_ = Kind::And;
    f->children_ = std::move(members);
    return f;
}

FormulaPtr Formula::disjunction(std::vector<FormulaPtr> members) {
    canonicalize(members);
    auto f = std::make_shared<Formula>();
    f->kind_ = Kind::Or;
    f->children_ = std::move(members);
    return f;
}

FormulaPtr Formula::negation(FormulaPtr inner) {
    auto f = std::make_shared<Formula>();
    f->kind_ = Kind::Not;
    f->children_ = {std::move(inner)};
    return f;
}

FormulaPtr Formula::implies(FormulaPtr lhs, FormulaPtr rhs) {
    auto f = std::make_shared<Formula>();
    f->kind_ = Kind::Implies;
    f->children_ = {std::move(lhs), std::move(rhs)};
    return f;
}

FormulaPtr Formula::exists(std::string var, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind_ = Kind::Exists;
    f->name_ = std::move(var);
    f->children_ = {std::move(body)};
    return f;
}

FormulaPtr Formula::forall(std::string var, FormulaPtr body) {
    auto f = std::make_shared<Formula>();
    f->kind_ = Kind::Forall;
    f->name_ = std::move(var);
    f->children_ = {std::move(body)};
    return f;
}

// --- structural order ---

int compare(const Term& a, const Term& b) {
    if (a.kind() != b.kind())
        return a.kind() < b.kind() ? -1 : 1;
    switch (a.kind()) {
        case Term::Kind::Variable:
            return a.name().compare(b.name());
        case Term::Kind::Literal:
            return a.literalValue() == b.literalValue() ? 0
                   : a.literalValue() < b.literalValue() ? -1
                                                         : 1;
        case Term::Kind::Apply: {
            if (int c = a.name().compare(b.name()))
                return c;
            if (a.args().size() != b.args().size())
                return a.args().size() < b.args().size() ? -1 : 1;
            for (size_t i = 0; i < a.args().size(); ++i)
                if (int c = compare(*a.args()[i], *b.args()[i]))
                    return c;
            return 0;
        }
    }
    return 0;
}

int compare(const Formula& a, const Formula& b) {
    if (a.kind() != b.kind())
        return a.kind() < b.kind() ? -1 : 1;
    if (int c = a.symbol().compare(b.symbol()))
        return c;
    if (a.terms().size() != b.terms().size())
        return a.terms().size() < b.terms().size() ? -1 : 1;
    for (size_t i = 0; i < a.terms().size(); ++i)
        if (int c = compare(*a.terms()[i], *b.terms()[i]))
            return c;
    if (a.children().size() != b.children().size())
        return a.children().size() < b.children().size() ? -1 : 1;
    for (size_t i = 0; i < a.children().size(); ++i)
        if (int c = compare(*a.children()[i], *b.children()[i]))
            return c;
    return 0;
}

bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }

// --- variables ---

namespace {

void collectTermVars(const Term& t, std::set<std::string>& out) {
    switch (t.kind()) {
        case Term::Kind::Variable:
            out.insert(t.name());
            break;
        case Term::Kind::Apply:
            for (const auto& a : t.args())
                collectTermVars(*a, out);
            break;
        case Term::Kind::Literal:
            break;
    }
}

void collectFreeVars(const Formula& f, std::set<std::string>& bound,
                     std::set<std::string>& out) {
    switch (f.kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::Eq: {
            std::set<std::string> vars;
            for (const auto& t : f.terms())
                collectTermVars(*t, vars);
            for (const auto& v : vars)
                if (!bound.count(v))
                    out.insert(v);
            break;
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            bool wasBound = bound.count(f.boundVar()) > 0;
            bound.insert(f.boundVar());
            collectFreeVars(*f.child(), bound, out);
            if (!wasBound)
                bound.erase(f.boundVar());
            break;
        }
        default:
            for (const auto& c : f.children())
                collectFreeVars(*c, bound, out);
            break;
    }
}

} // namespace

std::set<std::string> termVariables(const Term& t) {
    std::set<std::string> out;
    collectTermVars(t, out);
    return out;
}

std::set<std::string> freeVariables(const Formula& f) {
    std::set<std::string> bound, out;
    collectFreeVars(f, bound, out);
    return out;
}

// --- desugaring ---

namespace {

// Negation introduced by an elimination rule; strips a directly nested
// negation so eliminations do not pile up !!.
FormulaPtr negIntro(FormulaPtr f) {
    if (f->kind() == Formula::Kind::Not)
        return f->child();
    return Formula::negation(std::move(f));
}

} // namespace

FormulaPtr desugar(const FormulaPtr& f) {
    switch (f->kind()) {
        case Formula::Kind::Atom:
        case Formula::Kind::Eq:
            return f;
        case Formula::Kind::And: {
            std::vector<FormulaPtr> members;
            members.reserve(f->children().size());
            for (const auto& c : f->children())
                members.push_back(desugar(c));
            return Formula::conjunction(std::move(members));
        }
        case Formula::Kind::Not:
            return Formula::negation(desugar(f->child()));
        case Formula::Kind::Exists:
            return Formula::exists(f->boundVar(), desugar(f->child()));
        case Formula::Kind::Or: {
            // A | B  ~>  !(!A & !B)
            std::vector<FormulaPtr> members;
            members.reserve(f->children().size());
            for (const auto& c : f->children())
                members.push_back(negIntro(desugar(c)));
            return Formula::negation(Formula::conjunction(std::move(members)));
        }
        case Formula::Kind::Implies:
            // A -> B  ~>  B | !A
            return desugar(Formula::disjunction(
                {Formula::negation(f->child(0)), f->child(1)}));
        case Formula::Kind::Forall:
            // forall x. A  ~>  !(exists x. !A)
            return Formula::negation(
                Formula::exists(f->boundVar(), negIntro(desugar(f->child()))));
    }
    return f;
}

// --- rendering ---

std::string render(const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Variable:
            return t.name();
        case Term::Kind::Literal:
            return std::to_string(t.literalValue());
        case Term::Kind::Apply: {
            if (t.args().empty())
                return t.name();
            std::string s = t.name() + "(";
            for (size_t i = 0; i < t.args().size(); ++i) {
                if (i)
                    s += ", ";
                s += render(*t.args()[i]);
            }
            return s + ")";
        }
    }
    return {};
}

namespace {

bool atomic(const Formula& f) {
    return f.kind() == Formula::Kind::Atom || f.kind() == Formula::Kind::Eq ||
           f.kind() == Formula::Kind::Not;
}

std::string renderChild(const Formula& f) {
    std::string s = render(f);
    return atomic(f) ? s : "(" + s + ")";
}

} // namespace

std::string render(const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom: {
            std::string s = f.symbol() + "(";
            for (size_t i = 0; i < f.terms().size(); ++i) {
                if (i)
                    s += ", ";
                s += render(*f.terms()[i]);
            }
            return s + ")";
        }
        case Formula::Kind::Eq:
            return render(*f.terms()[0]) + " = " + render(*f.terms()[1]);
        case Formula::Kind::And: {
            if (f.children().empty())
                return "true"; // the empty conjunction; diagnostics only
            std::string s;
            for (size_t i = 0; i < f.children().size(); ++i) {
                if (i)
                    s += " & ";
                s += renderChild(*f.children()[i]);
            }
            return s;
        }
        case Formula::Kind::Or: {
            std::string s;
            for (size_t i = 0; i < f.children().size(); ++i) {
                if (i)
                    s += " | ";
                s += renderChild(*f.children()[i]);
            }
            return s;
        }
        case Formula::Kind::Not:
            return "!" + renderChild(*f.child());
        case Formula::Kind::Implies:
            return renderChild(*f.child(0)) + " -> " + renderChild(*f.child(1));
        case Formula::Kind::Exists:
            return "exists " + f.boundVar() + ". " + render(*f.child());
        case Formula::Kind::Forall:
            return "forall " + f.boundVar() + ". " + render(*f.child());
    }
    return {};
}

// --- symbol table ---

SymbolTable SymbolTable::fromTheory(const TheoryDecl& theory) {
    SymbolTable t;
    for (const auto& c : theory.constants)
        t.addFunction(c, 0);
    for (const auto& f : theory.functions)
        t.addFunction(f.name, f.arity);
    for (const auto& r : theory.relations)
        t.addRelation(r.name, r.arity);
    return t;
}

void SymbolTable::addFunction(const std::string& name, uint32_t arity) {
    if (!entries_.emplace(name, std::make_pair(SymbolKind::Function, arity)).second)
        raise(ErrorCode::DuplicateSymbol, "symbol '" + name + "' is already declared");
}

void SymbolTable::addRelation(const std::string& name, uint32_t arity) {
    if (!entries_.emplace(name, std::make_pair(SymbolKind::Relation, arity)).second)
        raise(ErrorCode::DuplicateSymbol, "symbol '" + name + "' is already declared");
}

bool SymbolTable::has(const std::string& name) const { return entries_.count(name) > 0; }

std::optional<uint32_t> SymbolTable::functionArity(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end() || it->second.first != SymbolKind::Function)
        return std::nullopt;
    return it->second.second;
}

std::optional<uint32_t> SymbolTable::relationArity(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end() || it->second.first != SymbolKind::Relation)
        return std::nullopt;
    return it->second.second;
}

// --- validation ---

namespace {

void checkDistinctParams(const std::vector<std::string>& params, const std::string& symbol,
                         SourcePos pos, ErrorCode code) {
    std::set<std::string> seen;
    for (const auto& p : params)
        if (!seen.insert(p).second)
            raise(code, "parameter '" + p + "' repeats in definition of '" + symbol + "'", pos);
}

// Checks the function symbols appearing in a term. `selfFunc` is the symbol
// being defined, which must not occur.
void checkTermSymbols(const Term& t, const SymbolTable& ctx, const std::string& selfFunc,
                      SourcePos pos) {
    if (t.kind() != Term::Kind::Apply) {
        return;
    }
    if (t.name() == selfFunc)
        raise(ErrorCode::RecursiveFunction,
              "'" + t.name() + "' occurs in its own defining term", pos);
    auto arity = ctx.functionArity(t.name());
    if (!arity)
        raise(ErrorCode::UnknownSymbol, "'" + t.name() + "' is not a known function symbol",
              pos, t.name());
    if (*arity != t.args().size())
        raise(ErrorCode::ArityMismatch,
              "'" + t.name() + "' expects " + std::to_string(*arity) + " arguments, got " +
                  std::to_string(t.args().size()),
              pos);
    for (const auto& a : t.args())
        checkTermSymbols(*a, ctx, selfFunc, pos);
}

struct FormulaCheck {
    const SymbolTable& ctx;
    std::string selfRel;   // relation being defined outside a Horn block
    SourcePos pos;
    // quantifier cleanliness: binders may not rebind a variable that is
    // free elsewhere in the same definition body
    const std::set<std::string>* bodyFreeVars = nullptr;

    void run(const Formula& f) const {
        switch (f.kind()) {
            case Formula::Kind::Atom: {
                if (f.symbol() == selfRel)
                    raise(ErrorCode::RecursiveRelationOutsideHornBlock,
                          "'" + f.symbol() + "' occurs in its own defining formula", pos);
                auto arity = ctx.relationArity(f.symbol());
                if (!arity)
                    raise(ErrorCode::UnknownSymbol,
                          "'" + f.symbol() + "' is not a known relation symbol", pos,
                          f.symbol());
                if (*arity != f.terms().size())
                    raise(ErrorCode::ArityMismatch,
                          "'" + f.symbol() + "' expects " + std::to_string(*arity) +
                              " arguments, got " + std::to_string(f.terms().size()),
                          pos);
                for (const auto& t : f.terms())
                    checkTermSymbols(*t, ctx, "", pos);
                break;
            }
            case Formula::Kind::Eq:
                for (const auto& t : f.terms())
                    checkTermSymbols(*t, ctx, "", pos);
                break;
            case Formula::Kind::Exists:
            case Formula::Kind::Forall:
                if (bodyFreeVars && bodyFreeVars->count(f.boundVar()))
                    raise(ErrorCode::VariableShadowing,
                          "quantifier rebinds '" + f.boundVar() +
                              "', which is free elsewhere in the definition body",
                          pos);
                run(*f.child());
                break;
            default:
                for (const auto& c : f.children())
                    run(*c);
                break;
        }
    }
};

void validateFuncDef(const FuncDef& d, const SymbolTable& ctx) {
    if (ctx.has(d.symbol))
        raise(ErrorCode::DuplicateSymbol, "symbol '" + d.symbol + "' is already declared",
              d.pos);
    checkDistinctParams(d.params, d.symbol, d.pos, ErrorCode::ParameterMismatch);
    checkTermSymbols(*d.body, ctx, d.symbol, d.pos);
    std::set<std::string> paramSet(d.params.begin(), d.params.end());
    if (termVariables(*d.body) != paramSet)
        raise(ErrorCode::ParameterMismatch,
              "parameters of '" + d.symbol + "' must be exactly the variables of its body",
              d.pos);
}

void validateRelDef(const RelDef& d, const SymbolTable& ctx) {
    if (ctx.has(d.symbol))
        raise(ErrorCode::DuplicateSymbol, "symbol '" + d.symbol + "' is already declared",
              d.pos);
    checkDistinctParams(d.params, d.symbol, d.pos, ErrorCode::ParameterMismatch);
    std::set<std::string> fv = freeVariables(*d.body);
    FormulaCheck check{ctx, d.symbol, d.pos, &fv};
    check.run(*d.body);
    std::set<std::string> paramSet(d.params.begin(), d.params.end());
    if (fv != paramSet)
        raise(ErrorCode::ParameterMismatch,
              "parameters of '" + d.symbol +
                  "' must be exactly the free variables of its body",
              d.pos);
}

void validateHornBlock(const HornBlock& block, const SymbolTable& ctx) {
    SymbolTable extended = ctx;
    for (const auto& s : block.symbols) {
        if (ctx.has(s.name))
            raise(ErrorCode::DuplicateSymbol, "symbol '" + s.name + "' is already declared",
                  block.pos);
        extended.addRelation(s.name, s.arity); // also rejects in-block duplicates
    }
    for (const auto& clause : block.clauses) {
        auto headArity = extended.relationArity(clause.headSymbol);
        bool headIsNew = false;
        for (const auto& s : block.symbols)
            headIsNew |= s.name == clause.headSymbol;
        if (!headIsNew)
            raise(ErrorCode::InvalidClauseHead,
                  "clause head '" + clause.headSymbol + "' is not a symbol of this block",
                  clause.pos);
        if (*headArity != clause.headVars.size())
            raise(ErrorCode::ArityMismatch,
                  "clause head '" + clause.headSymbol + "' expects " +
                      std::to_string(*headArity) + " arguments",
                  clause.pos);
        checkDistinctParams(clause.headVars, clause.headSymbol, clause.pos,
                            ErrorCode::InvalidClauseHead);
        for (const auto& lit : clause.body) {
            if (lit->kind() != Formula::Kind::Atom && lit->kind() != Formula::Kind::Eq)
                raise(ErrorCode::NonHornClause,
                      "clause bodies may contain only positive atoms: " + render(*lit),
                      clause.pos);
            FormulaCheck check{extended, "", clause.pos, nullptr};
            check.run(*lit);
        }
    }
}

} // namespace

void validateDefinition(const Definition& def, const SymbolTable& context) {
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FuncDef>)
                validateFuncDef(d, context);
            else if constexpr (std::is_same_v<T, RelDef>)
                validateRelDef(d, context);
            else
                validateHornBlock(d, context);
        },
        def);
}

} // namespace folx
