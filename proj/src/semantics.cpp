#include "folx/semantics.hpp"

#include <map>

namespace folx {

namespace {

IndexSet namesToIndexSet(const std::set<std::string>& names) {
    std::vector<Index> v;
    v.reserve(names.size());
    for (const auto& n : names)
        v.push_back(Index::name(n));
    return IndexSet(std::move(v));
}

// A_{x|d}: assignment that maps x to d and everything else as A.
Assignment withBinding(const Assignment& a, const std::string& var, Element d) {
    Index x = Index::name(var);
    if (auto slot = a.indices().slotOf(x)) {
        std::vector<Element> values(a.values().begin(), a.values().end());
        values[*slot] = d;
        return Assignment(a.indices(), std::move(values));
    }
    std::vector<std::pair<Index, Element>> pairs;
    pairs.reserve(a.size() + 1);
    for (size_t i = 0; i < a.size(); ++i)
        pairs.emplace_back(a.indices().at(i), a.atSlot(i));
    pairs.emplace_back(std::move(x), d);
    return Assignment::fromPairs(std::move(pairs));
}

} // namespace

Element evalTerm(const Interpretation& interp, const Assignment& assignment, const Term& t) {
    switch (t.kind()) {
        case Term::Kind::Variable: {
            auto slot = assignment.indices().slotOf(Index::name(t.name()));
            if (!slot)
                raise(ErrorCode::UnboundVariable,
                      "variable '" + t.name() + "' is not bound by the assignment", {},
                      t.name());
            return assignment.atSlot(*slot);
        }
        case Term::Kind::Literal:
            return interp.universe()->elementFromLiteral(t.literalValue());
        case Term::Kind::Apply: {
            const FunctionBinding& fn = interp.function(t.name());
            if (fn.arity != t.args().size())
                raise(ErrorCode::ArityMismatch,
                      "'" + t.name() + "' expects " + std::to_string(fn.arity) +
                          " arguments, got " + std::to_string(t.args().size()));
            std::vector<Element> args;
            args.reserve(t.args().size());
            for (const auto& a : t.args())
                args.push_back(evalTerm(interp, assignment, *a));
            return fn.fn(args);
        }
    }
    raise(ErrorCode::UnknownSymbol, "malformed term");
}

TermFunction::TermFunction(Interpretation interp, TermPtr term)
    : interp_(std::move(interp)), term_(std::move(term)) {
    params_ = namesToIndexSet(termVariables(*term_));
}

Element TermFunction::apply(const Assignment& assignment) const {
    if (!params_.subsetOf(assignment.indices()))
        raise(ErrorCode::UnboundVariable,
              "assignment over " + assignment.indices().display() +
                  " does not cover the parameters " + params_.display());
    return evalTerm(interp_, restrict(assignment, params_), *term_);
}

TermFunction termFunction(const Interpretation& interp, TermPtr term) {
    return TermFunction(interp, std::move(term));
}

bool satisfies(const Interpretation& interp, const Assignment& assignment, const Formula& f) {
    switch (f.kind()) {
        case Formula::Kind::Atom: {
            const RelationBinding& rel = interp.relation(f.symbol());
            if (rel.arity() != f.terms().size())
                raise(ErrorCode::ArityMismatch,
                      "'" + f.symbol() + "' expects " + std::to_string(rel.arity()) +
                          " arguments, got " + std::to_string(f.terms().size()));
            std::vector<Element> args;
            args.reserve(f.terms().size());
            for (const auto& t : f.terms())
                args.push_back(evalTerm(interp, assignment, *t));
            return rel.contains(args);
        }
        case Formula::Kind::Eq:
            return evalTerm(interp, assignment, *f.terms()[0]) ==
                   evalTerm(interp, assignment, *f.terms()[1]);
        case Formula::Kind::And:
            for (const auto& c : f.children())
                if (!satisfies(interp, assignment, *c))
                    return false;
            return true;
        case Formula::Kind::Or:
            for (const auto& c : f.children())
                if (satisfies(interp, assignment, *c))
                    return true;
            return false;
        case Formula::Kind::Not:
            return !satisfies(interp, assignment, *f.child());
        case Formula::Kind::Implies:
            return !satisfies(interp, assignment, *f.child(0)) ||
                   satisfies(interp, assignment, *f.child(1));
        case Formula::Kind::Exists: {
            for (Element d = 0; d < interp.universeSize(); ++d)
                if (satisfies(interp, withBinding(assignment, f.boundVar(), d), *f.child()))
                    return true;
            return false;
        }
        case Formula::Kind::Forall: {
            for (Element d = 0; d < interp.universeSize(); ++d)
                if (!satisfies(interp, withBinding(assignment, f.boundVar(), d), *f.child()))
                    return false;
            return true;
        }
    }
    return false;
}

namespace {

// Terms evaluated inside an enumeration are compiled once into a postfix
// program over row slots, so the per-row loop does no string work and no
// allocation.
struct CompiledTerm {
    enum class Op : uint8_t { PushSlot, PushConst, Call };
    struct Step {
        Op op;
        uint32_t value = 0; // row slot or constant element
        const FunctionBinding* fn = nullptr;
        uint32_t argc = 0;
    };
    std::vector<Step> steps;
};

void compileTermInto(const Interpretation& interp, const IndexSet& vars, const Term& t,
                     CompiledTerm& out) {
    switch (t.kind()) {
        case Term::Kind::Variable: {
            auto slot = vars.slotOfName(t.name());
            if (!slot)
                raise(ErrorCode::UnboundVariable,
                      "variable '" + t.name() + "' is not bound", {}, t.name());
            out.steps.push_back({CompiledTerm::Op::PushSlot,
                                 static_cast<uint32_t>(*slot), nullptr, 0});
            return;
        }
        case Term::Kind::Literal:
            out.steps.push_back({CompiledTerm::Op::PushConst,
                                 interp.universe()->elementFromLiteral(t.literalValue()),
                                 nullptr, 0});
            return;
        case Term::Kind::Apply: {
            const FunctionBinding& fn = interp.function(t.name());
            if (fn.arity != t.args().size())
                raise(ErrorCode::ArityMismatch,
                      "'" + t.name() + "' expects " + std::to_string(fn.arity) +
                          " arguments, got " + std::to_string(t.args().size()));
            for (const auto& a : t.args())
                compileTermInto(interp, vars, *a, out);
            out.steps.push_back({CompiledTerm::Op::Call, 0, &fn,
                                 static_cast<uint32_t>(t.args().size())});
            return;
        }
    }
    raise(ErrorCode::UnknownSymbol, "malformed term");
}

// Runs the program, leaving one more element on the stack.
void evalCompiled(const CompiledTerm& program, std::span<const Element> row,
                  std::vector<Element>& stack) {
    for (const auto& step : program.steps) {
        switch (step.op) {
            case CompiledTerm::Op::PushSlot:
                stack.push_back(row[step.value]);
                break;
            case CompiledTerm::Op::PushConst:
                stack.push_back(step.value);
                break;
            case CompiledTerm::Op::Call: {
                size_t base = stack.size() - step.argc;
                Element result = step.fn->fn(
                    std::span<const Element>(stack.data() + base, step.argc));
                stack.resize(base);
                stack.push_back(result);
                break;
            }
        }
    }
}

class Denoter {
public:
    explicit Denoter(const Interpretation& interp) : interp_(interp) {}

    Relation eval(const FormulaPtr& f) {
        auto it = memo_.find(f.get());
        if (it != memo_.end())
            return it->second;
        Relation r = compute(*f);
        memo_.emplace(f.get(), r);
        return r;
    }

private:
    const Interpretation& interp_;
    std::map<const Formula*, Relation> memo_;

    uint32_t n() const { return interp_.universeSize(); }

    Relation compute(const Formula& f) {
        switch (f.kind()) {
            case Formula::Kind::Atom: {
                const RelationBinding& rel = interp_.relation(f.symbol());
                if (rel.arity() != f.terms().size())
                    raise(ErrorCode::ArityMismatch,
                          "'" + f.symbol() + "' expects " + std::to_string(rel.arity()) +
                              " arguments, got " + std::to_string(f.terms().size()));
                bool allVars = true;
                for (const auto& t : f.terms())
                    allVars &= t->kind() == Term::Kind::Variable;
                if (allVars && rel.table()) {
                    // the quotient theorem: M(p(x0,...,xk-1)) = M(p)/(x0,...,xk-1)
                    std::vector<std::string> vars;
                    vars.reserve(f.terms().size());
                    for (const auto& t : f.terms())
                        vars.push_back(t->name());
                    return relationQuotient(*rel.table(), varTuple(vars));
                }
                return enumerateAtom(f, rel);
            }
            case Formula::Kind::Eq:
                return enumerateEq(f);
            case Formula::Kind::And: {
                Relation acc = Relation::truth(n());
                for (const auto& c : f.children())
                    acc = join(acc, eval(c));
                return acc;
            }
            case Formula::Kind::Not:
                return complement(eval(f.child()));
            case Formula::Kind::Exists: {
                Relation body = eval(f.child());
                IndexSet keep =
                    body.indexSet().minus(IndexSet::names({f.boundVar()}));
                return project(body, keep);
            }
            default:
                raise(ErrorCode::NonClosedFormula,
                      "denotation expects a desugared formula, got " + render(f));
        }
    }

    // Definition-style denotation of an atom: all assignments over the free
    // variables whose evaluated argument tuple is in the relation.
    Relation enumerateAtom(const Formula& f, const RelationBinding& rel) {
        IndexSet vars = namesToIndexSet(freeVariables(f));
        CompiledTerm program;
        for (const auto& t : f.terms())
            compileTermInto(interp_, vars, *t, program);
        size_t argc = f.terms().size();
        auto scan = kernels::scanSpace(
            vars.size(), n(), [&](std::span<const Element> row) {
                thread_local std::vector<Element> stack;
                stack.clear();
                evalCompiled(program, row, stack);
                return rel.contains(std::span<const Element>(stack.data(), argc));
            });
        if (vars.empty())
            return scan.rows ? Relation::truth(n()) : Relation::falsity(n());
        return Relation::fromSortedRows(vars, n(), std::move(scan.data));
    }

    Relation enumerateEq(const Formula& f) {
        IndexSet vars = namesToIndexSet(freeVariables(f));
        CompiledTerm program;
        compileTermInto(interp_, vars, *f.terms()[0], program);
        compileTermInto(interp_, vars, *f.terms()[1], program);
        auto scan = kernels::scanSpace(
            vars.size(), n(), [&](std::span<const Element> row) {
                thread_local std::vector<Element> stack;
                stack.clear();
                evalCompiled(program, row, stack);
                return stack[0] == stack[1];
            });
        if (vars.empty())
            return scan.rows ? Relation::truth(n()) : Relation::falsity(n());
        return Relation::fromSortedRows(vars, n(), std::move(scan.data));
    }
};

} // namespace

Relation denote(const Interpretation& interp, const FormulaPtr& f) {
    Denoter d(interp);
    return d.eval(desugar(f));
}

bool sentenceTruth(const Interpretation& interp, const FormulaPtr& f) {
    if (!freeVariables(*f).empty())
        raise(ErrorCode::NonClosedFormula,
              "sentence truth of a formula with free variables: " + render(*f));
    return denote(interp, f).size() == 1;
}

bool entailsIn(const Interpretation& interp, const FormulaPtr& f0, const FormulaPtr& f1) {
    if (freeVariables(*f0) != freeVariables(*f1))
        raise(ErrorCode::FreeVariableMismatch,
              "entailment requires the same free variables on both sides");
    Relation d0 = denote(interp, f0);
    Relation d1 = denote(interp, f1);
    for (size_t i = 0; i < d0.size(); ++i)
        if (!d1.containsRow(d0.row(i)))
            return false;
    return true;
}

} // namespace folx
