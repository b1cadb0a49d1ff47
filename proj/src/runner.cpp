#include "folx/runner.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "folx/render.hpp"

namespace folx {

namespace {

using nlohmann::json;

// Name resolution: a bound variable stays a variable; otherwise a name that
// matches a constant denotes the constant, a name that matches a universe
// element denotes that element, and anything else is a free variable.
TermPtr resolveTerm(const TermPtr& t, const SymbolTable& symbols, const Universe& universe,
                    const std::set<std::string>& bound) {
    switch (t->kind()) {
        case Term::Kind::Literal:
            return t;
        case Term::Kind::Variable: {
            if (bound.count(t->name()))
                return t;
            if (auto arity = symbols.functionArity(t->name()); arity && *arity == 0)
                return Term::apply(t->name(), {});
            if (!universe.isModular())
                if (auto element = universe.elementByName(t->name()))
                    return Term::literal(*element);
            return t;
        }
        case Term::Kind::Apply: {
            std::vector<TermPtr> args;
            args.reserve(t->args().size());
            for (const auto& a : t->args())
                args.push_back(resolveTerm(a, symbols, universe, bound));
            return Term::apply(t->name(), std::move(args));
        }
    }
    return t;
}

FormulaPtr resolveFormula(const FormulaPtr& f, const SymbolTable& symbols,
                          const Universe& universe, std::set<std::string> bound) {
    switch (f->kind()) {
        case Formula::Kind::Atom: {
            std::vector<TermPtr> args;
            args.reserve(f->terms().size());
            for (const auto& t : f->terms())
                args.push_back(resolveTerm(t, symbols, universe, bound));
            return Formula::atom(f->symbol(), std::move(args));
        }
        case Formula::Kind::Eq:
            return Formula::eq(resolveTerm(f->terms()[0], symbols, universe, bound),
                               resolveTerm(f->terms()[1], symbols, universe, bound));
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            bound.insert(f->boundVar());
            FormulaPtr body = resolveFormula(f->child(), symbols, universe, bound);
            return f->kind() == Formula::Kind::Exists
                       ? Formula::exists(f->boundVar(), std::move(body))
                       : Formula::forall(f->boundVar(), std::move(body));
        }
        case Formula::Kind::Not:
            return Formula::negation(resolveFormula(f->child(), symbols, universe, bound));
        case Formula::Kind::Implies:
            return Formula::implies(resolveFormula(f->child(0), symbols, universe, bound),
                                    resolveFormula(f->child(1), symbols, universe, bound));
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            std::vector<FormulaPtr> members;
            members.reserve(f->children().size());
            for (const auto& c : f->children())
                members.push_back(resolveFormula(c, symbols, universe, bound));
            return f->kind() == Formula::Kind::And
                       ? Formula::conjunction(std::move(members))
                       : Formula::disjunction(std::move(members));
        }
    }
    return f;
}

Relation materializeRelation(const Interpretation& interp, const std::string& name) {
    const RelationBinding& binding = interp.relation(name);
    if (binding.table())
        return *binding.table();
    auto scan = kernels::scanSpace(binding.arity(), interp.universeSize(),
                                   [&](std::span<const Element> row) {
                                       return binding.contains(row);
                                   });
    if (binding.arity() == 0)
        return scan.rows ? Relation::truth(interp.universeSize())
                         : Relation::falsity(interp.universeSize());
    return Relation::fromSortedRows(IndexSet::positions(binding.arity()),
                                    interp.universeSize(), std::move(scan.data));
}

json relationToJson(const Relation& r, const Universe& universe) {
    if (r.width() == 0)
        return json(!r.empty());
    json rows = json::array();
    for (size_t i = 0; i < r.size(); ++i) {
        json row = json::object();
        auto values = r.row(i);
        for (size_t s = 0; s < r.width(); ++s)
            row[r.indexSet().at(s).display()] = universe.elementName(values[s]);
        rows.push_back(std::move(row));
    }
    return rows;
}

class Runner {
public:
    Runner(const RunOptions& options, std::ostream& out, std::ostream& err)
        : opts_(options), out_(out), err_(err) {}

    int run(const SourceProgram& program) {
        if (opts_.threads > 0)
            kernels::setThreadCount(opts_.threads);
        if (opts_.serial)
            kernels::setDefaultPolicy(kernels::ExecPolicy::Serial);

        collectDefinitionSites(program);

        for (size_t i = 0; i < program.statements.size(); ++i) {
            const Statement& stmt = program.statements[i];
            bool isQuery = std::holds_alternative<QueryStatement>(stmt);
            try {
                std::visit([&](const auto& s) { execute(s, i); }, stmt);
            } catch (const Error& e) {
                report(e, stmt);
                return isQuery ? 2 : 1;
            }
        }

        if (opts_.dumpAll)
            dumpAll();
        if (opts_.format == RunOptions::Format::Json)
            flushJson();
        return (assertionFailed_ && !opts_.noAssert) ? 1 : 0;
    }

private:
    const RunOptions& opts_;
    std::ostream& out_;
    std::ostream& err_;

    std::map<std::string, TheoryDecl> theories_;
    std::optional<ExtensionState> state_;
    std::map<std::string, std::vector<size_t>> definitionSites_;
    std::vector<std::string> definedRelations_; // for --dump-all
    bool assertionFailed_ = false;

    json queries_ = json::array();
    json traces_ = json::array();

    void collectDefinitionSites(const SourceProgram& program) {
        for (size_t i = 0; i < program.statements.size(); ++i) {
            if (const auto* def = std::get_if<DefStatement>(&program.statements[i]))
                definitionSites_[def->name].push_back(i);
            else if (const auto* rec = std::get_if<RecStatement>(&program.statements[i]))
                for (const auto& s : rec->block.symbols)
                    definitionSites_[s.name].push_back(i);
        }
    }

    // Rethrows an unknown-symbol error as use-before-definition when a later
    // statement defines the symbol.
    void checkUseBeforeDefinition(const Error& e, size_t stmtIndex) {
        if (e.code() != ErrorCode::UnknownSymbol || e.subject().empty())
            return;
        auto it = definitionSites_.find(e.subject());
        if (it == definitionSites_.end())
            return;
        for (size_t site : it->second)
            if (site > stmtIndex)
                raise(ErrorCode::UseBeforeDefinition,
                      "'" + e.subject() + "' is used before its definition", e.pos());
    }

    void report(const Error& e, const Statement& stmt) {
        SourcePos pos = e.pos();
        if (pos.line == 0)
            pos = std::visit([](const auto& s) { return s.pos; }, stmt);
        err_ << "error:" << pos.line << ":" << pos.column << ": " << e.what() << "\n";
    }

    const ExtensionState& requireState(SourcePos pos) {
        if (!state_)
            raise(ErrorCode::UnknownSymbol, "no interpretation has been bound yet", pos);
        return *state_;
    }

    // --- statements ---

    void execute(const TheoryStatement& stmt, size_t) {
        SymbolTable::fromTheory(stmt.theory); // validates symbol uniqueness
        if (!theories_.emplace(stmt.theory.name, stmt.theory).second)
            raise(ErrorCode::DuplicateSymbol,
                  "theory '" + stmt.theory.name + "' is already declared", stmt.pos);
    }

    void execute(const InterpStatement& stmt, size_t) {
        auto it = theories_.find(stmt.theoryName);
        if (it == theories_.end())
            raise(ErrorCode::UnknownSymbol, "no theory named '" + stmt.theoryName + "'",
                  stmt.pos);
        Interpretation interp;
        if (stmt.spec.kind == BuiltinSpec::Kind::Mod) {
            if (stmt.spec.modulus == 0 || stmt.spec.modulus > UINT32_MAX)
                raise(ErrorCode::InvalidModulus,
                      "modulus must be a positive 32-bit integer", stmt.pos);
            interp = makeModRing(static_cast<uint32_t>(stmt.spec.modulus));
        } else {
            interp = makeEnumInterpretation(stmt.spec.enumSpec);
        }
        state_ = ExtensionState::base(it->second, std::move(interp));
        definedRelations_.clear();
    }

    void execute(const DefStatement& stmt, size_t stmtIndex) {
        const ExtensionState& state = requireState(stmt.pos);
        const SymbolTable& symbols = state.symbols();
        std::set<std::string> bound(stmt.params.begin(), stmt.params.end());

        // pick the relation reading iff the body's head symbol is a relation
        bool asRelation = false;
        if (stmt.formulaBody && !stmt.termBody) {
            asRelation = true;
        } else if (stmt.formulaBody && stmt.termBody) {
            asRelation = symbols.relationArity(stmt.formulaBody->symbol()).has_value();
        }

        try {
            if (asRelation) {
                RelDef def;
                def.symbol = stmt.name;
                def.params = stmt.params;
                def.body = resolveFormula(stmt.formulaBody, symbols,
                                          *state.interpretation().universe(), bound);
                def.pos = stmt.pos;
                state_ = extendRelation(state, def);
                definedRelations_.push_back(stmt.name);
            } else {
                FuncDef def;
                def.symbol = stmt.name;
                def.params = stmt.params;
                def.body = resolveTerm(stmt.termBody, symbols,
                                       *state.interpretation().universe(), bound);
                def.pos = stmt.pos;
                state_ = extendFunction(state, def);
            }
        } catch (const Error& e) {
            checkUseBeforeDefinition(e, stmtIndex);
            throw;
        }
    }

    void execute(const RecStatement& stmt, size_t stmtIndex) {
        const ExtensionState& state = requireState(stmt.pos);
        HornBlock block = stmt.block;
        for (Clause& clause : block.clauses) {
            std::set<std::string> bound(clause.headVars.begin(), clause.headVars.end());
            for (FormulaPtr& lit : clause.body)
                lit = resolveFormula(lit, state.symbols(),
                                     *state.interpretation().universe(), bound);
        }
        try {
            FixpointTrace trace;
            state_ = solveHorn(state, block, trace, opts_.maxIterations);
            for (const auto& s : block.symbols)
                definedRelations_.push_back(s.name);
            if (opts_.traceFixpoint)
                emitTrace(trace);
        } catch (const Error& e) {
            checkUseBeforeDefinition(e, stmtIndex);
            throw;
        }
    }

    void emitTrace(const FixpointTrace& trace) {
        std::string blockName;
        for (size_t i = 0; i < trace.symbols.size(); ++i)
            blockName += (i ? "," : "") + trace.symbols[i];
        if (opts_.format == RunOptions::Format::Json) {
            json t;
            t["block"] = blockName;
            t["symbols"] = trace.symbols;
            t["iterations"] = trace.iterations;
            traces_.push_back(std::move(t));
            return;
        }
        out_ << "fixpoint " << blockName << ":\n";
        for (size_t it = 0; it < trace.iterations.size(); ++it) {
            out_ << "  iter " << (it + 1) << ":";
            for (size_t s = 0; s < trace.symbols.size(); ++s)
                out_ << " " << trace.symbols[s] << "=" << trace.iterations[it][s];
            out_ << "\n";
        }
    }

    // --- queries ---

    void execute(const QueryStatement& stmt, size_t) {
        auto start = std::chrono::steady_clock::now();
        std::string kind;
        json result;
        std::string text;
        std::visit(
            [&](const auto& q) {
                auto [k, j, s] = answer(q, stmt.pos);
                kind = std::move(k);
                result = std::move(j);
                text = std::move(s);
            },
            stmt.query);
        auto micros = std::chrono::duration_cast<std::chrono::microseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        if (opts_.format == RunOptions::Format::Json) {
            json q;
            q["kind"] = kind;
            q["result"] = std::move(result);
            q["micros"] = micros;
            queries_.push_back(std::move(q));
        } else {
            out_ << text << "\n";
        }
    }

    std::tuple<std::string, json, std::string> answer(const EvalQuery& q, SourcePos pos) {
        const ExtensionState& state = requireState(pos);
        const Universe& universe = *state.interpretation().universe();
        std::set<std::string> bound;
        std::vector<std::pair<Index, Element>> pairs;
        for (const auto& [var, value] : q.under) {
            bound.insert(var);
            pairs.emplace_back(Index::name(var), universe.elementFromLiteral(value));
        }
        TermPtr term = resolveTerm(q.term, state.symbols(),
                                   *state.interpretation().universe(), bound);
        Element e = evalTerm(state.interpretation(), Assignment::fromPairs(std::move(pairs)),
                             *term);
        std::string rendered = render(e, universe);
        return {"eval", json(rendered), rendered};
    }

    std::tuple<std::string, json, std::string> answer(const HoldsQuery& q, SourcePos pos) {
        const ExtensionState& state = requireState(pos);
        FormulaPtr f = resolveFormula(q.formula, state.symbols(),
                                      *state.interpretation().universe(), {});
        if (!freeVariables(*f).empty())
            raise(ErrorCode::NonClosedFormula,
                  "'holds' needs a closed formula: " + render(*f), pos);
        bool truth = sentenceTruth(state.interpretation(), f);
        if (!truth)
            assertionFailed_ = true;
        return {"holds", json(truth), truth ? "true" : "false"};
    }

    std::tuple<std::string, json, std::string> answer(const SolveQuery& q, SourcePos pos) {
        const ExtensionState& state = requireState(pos);
        const Universe& universe = *state.interpretation().universe();
        FormulaPtr f = resolveFormula(q.formula, state.symbols(),
                                      *state.interpretation().universe(), {});
        Relation denotation = denote(state.interpretation(), f);

        // report the capitalized free variables
        std::vector<Index> reported;
        for (const auto& v : freeVariables(*f))
            if (!v.empty() && std::isupper(static_cast<unsigned char>(v[0])))
                reported.push_back(Index::name(v));
        Relation answer = project(denotation, IndexSet(std::move(reported)));
        return {"solve", relationToJson(answer, universe), render(answer, universe)};
    }

    std::tuple<std::string, json, std::string> answer(const DumpQuery& q, SourcePos pos) {
        const ExtensionState& state = requireState(pos);
        const Universe& universe = *state.interpretation().universe();
        Relation r = materializeRelation(state.interpretation(), q.symbol);
        return {"dump", relationToJson(r, universe), render(r, universe)};
    }

    std::tuple<std::string, json, std::string> answer(const EntailsQuery& q, SourcePos pos) {
        const ExtensionState& state = requireState(pos);
        FormulaPtr lhs = resolveFormula(q.lhs, state.symbols(),
                                        *state.interpretation().universe(), {});
        FormulaPtr rhs = resolveFormula(q.rhs, state.symbols(),
                                        *state.interpretation().universe(), {});
        bool holds = entailsIn(state.interpretation(), lhs, rhs);
        return {"entails", json(holds), holds ? "true" : "false"};
    }

    // --- reports ---

    void dumpAll() {
        if (!state_)
            return;
        std::vector<std::string> names = definedRelations_;
        std::sort(names.begin(), names.end());
        json dumps = json::object();
        for (const auto& name : names) {
            Relation r = materializeRelation(state_->interpretation(), name);
            if (opts_.format == RunOptions::Format::Json)
                dumps[name] = relationToJson(r, *state_->interpretation().universe());
            else
                out_ << name << " = " << render(r, *state_->interpretation().universe())
                     << "\n";
        }
        if (opts_.format == RunOptions::Format::Json)
            dumps_ = std::move(dumps);
    }

    void flushJson() {
        json doc;
        doc["queries"] = queries_;
        if (opts_.traceFixpoint)
            doc["traces"] = traces_;
        if (opts_.dumpAll)
            doc["dumps"] = dumps_;
        out_ << doc.dump(2) << "\n";
    }

    json dumps_ = json::object();
};

} // namespace

int runProgram(const SourceProgram& program, const RunOptions& options, std::ostream& out,
               std::ostream& err) {
    Runner runner(options, out, err);
    return runner.run(program);
}

int runProgramText(const std::string& text, const RunOptions& options, std::ostream& out,
                   std::ostream& err) {
    SourceProgram program;
    try {
        program = parseProgram(text);
    } catch (const Error& e) {
        err << "error:" << e.pos().line << ":" << e.pos().column << ": " << e.what() << "\n";
        return 1;
    }
    return runProgram(program, options, out, err);
}

int runFile(const std::string& path, const RunOptions& options, std::ostream& out,
            std::ostream& err) {
    std::string text;
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            err << "error: cannot open '" << path << "'\n";
            return 1;
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    return runProgramText(text, options, out, err);
}

} // namespace folx
