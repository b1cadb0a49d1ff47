#include "folx/parser.hpp"

#include <cctype>

namespace folx {

namespace {

enum class Tok {
    Ident,
    Int,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Semi,
    Dot,
    Slash,
    Assign,  // :=
    LArrow,  // <-
    RArrow,  // ->
    Entails, // |=
    Amp,
    Pipe,
    Bang,
    Equal,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    uint64_t value = 0;
    SourcePos pos{};
};

const char* tokName(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::Int: return "integer";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Semi: return "';'";
        case Tok::Dot: return "'.'";
        case Tok::Slash: return "'/'";
        case Tok::Assign: return "':='";
        case Tok::LArrow: return "'<-'";
        case Tok::RArrow: return "'->'";
        case Tok::Entails: return "'|='";
        case Tok::Amp: return "'&'";
        case Tok::Pipe: return "'|'";
        case Tok::Bang: return "'!'";
        case Tok::Equal: return "'='";
        case Tok::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    std::string_view text_;
    size_t at_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_;

    char cur() const { return at_ < text_.size() ? text_[at_] : '\0'; }
    char next() const { return at_ + 1 < text_.size() ? text_[at_ + 1] : '\0'; }

    void bump() {
        if (cur() == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++at_;
    }

    void advance() {
        while (at_ < text_.size()) {
            char c = cur();
            if (c == '#') {
                while (at_ < text_.size() && cur() != '\n')
                    bump();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump();
            } else {
                break;
            }
        }
        current_ = Token{};
        current_.pos = {line_, col_};
        if (at_ >= text_.size()) {
            current_.kind = Tok::End;
            return;
        }
        char c = cur();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = at_;
            while (at_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(cur())) || cur() == '_'))
                bump();
            current_.kind = Tok::Ident;
            current_.text = std::string(text_.substr(start, at_ - start));
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            uint64_t v = 0;
            size_t start = at_;
            while (at_ < text_.size() && std::isdigit(static_cast<unsigned char>(cur()))) {
                uint64_t digit = static_cast<uint64_t>(cur() - '0');
                if (v > (UINT64_MAX - digit) / 10)
                    raise(ErrorCode::SyntaxError, "integer literal too large", current_.pos);
                v = v * 10 + digit;
                bump();
            }
            current_.kind = Tok::Int;
            current_.value = v;
            current_.text = std::string(text_.substr(start, at_ - start));
            return;
        }
        auto two = [&](Tok kind) {
            bump();
            bump();
            current_.kind = kind;
        };
        switch (c) {
            case '{': bump(); current_.kind = Tok::LBrace; return;
            case '}': bump(); current_.kind = Tok::RBrace; return;
            case '(': bump(); current_.kind = Tok::LParen; return;
            case ')': bump(); current_.kind = Tok::RParen; return;
            case ',': bump(); current_.kind = Tok::Comma; return;
            case ';': bump(); current_.kind = Tok::Semi; return;
            case '.': bump(); current_.kind = Tok::Dot; return;
            case '/': bump(); current_.kind = Tok::Slash; return;
            case '&': bump(); current_.kind = Tok::Amp; return;
            case '!': bump(); current_.kind = Tok::Bang; return;
            case '=': bump(); current_.kind = Tok::Equal; return;
            case ':':
                if (next() == '=') {
                    two(Tok::Assign);
                    return;
                }
                raise(ErrorCode::SyntaxError, "expected ':='", current_.pos);
            case '<':
                if (next() == '-') {
                    two(Tok::LArrow);
                    return;
                }
                raise(ErrorCode::SyntaxError, "expected '<-'", current_.pos);
            case '-':
                if (next() == '>') {
                    two(Tok::RArrow);
                    return;
                }
                raise(ErrorCode::SyntaxError, "expected '->'", current_.pos);
            case '|':
                if (next() == '=') {
                    two(Tok::Entails);
                    return;
                }
                bump();
                current_.kind = Tok::Pipe;
                return;
            default:
                raise(ErrorCode::SyntaxError,
                      std::string("unexpected character '") + c + "'", current_.pos);
        }
    }
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    SourceProgram parse() {
        SourceProgram program;
        while (lex_.peek().kind != Tok::End)
            program.statements.push_back(statement());
        return program;
    }

private:
    Lexer lex_;

    [[noreturn]] void fail(const std::string& msg, SourcePos pos) {
        raise(ErrorCode::SyntaxError, msg, pos);
    }

    Token expect(Tok kind) {
        Token t = lex_.peek();
        if (t.kind != kind)
            fail(std::string("expected ") + tokName(kind) + ", got " + tokName(t.kind), t.pos);
        return lex_.take();
    }

    bool accept(Tok kind) {
        if (lex_.peek().kind != kind)
            return false;
        lex_.take();
        return true;
    }

    bool peekKeyword(const char* kw) const {
        return lex_.peek().kind == Tok::Ident && lex_.peek().text == kw;
    }

    Token expectKeyword(const char* kw) {
        Token t = lex_.peek();
        if (t.kind != Tok::Ident || t.text != kw)
            fail(std::string("expected '") + kw + "'", t.pos);
        return lex_.take();
    }

    std::string identifier() { return expect(Tok::Ident).text; }

    // --- statements ---

    Statement statement() {
        Token t = lex_.peek();
        if (t.kind != Tok::Ident)
            fail("expected a statement", t.pos);
        if (t.text == "theory")
            return theoryStatement();
        if (t.text == "interpretation")
            return interpStatement();
        if (t.text == "def")
            return defStatement();
        if (t.text == "rec")
            return recStatement();
        if (t.text == "query")
            return queryStatement();
        fail("expected 'theory', 'interpretation', 'def', 'rec' or 'query'", t.pos);
    }

    Statement theoryStatement() {
        SourcePos pos = lex_.peek().pos;
        expectKeyword("theory");
        TheoryStatement stmt;
        stmt.pos = pos;
        stmt.theory.name = identifier();
        expect(Tok::LBrace);
        while (!accept(Tok::RBrace)) {
            Token item = expect(Tok::Ident);
            if (item.text == "const") {
                stmt.theory.constants.push_back(identifier());
                while (accept(Tok::Comma))
                    stmt.theory.constants.push_back(identifier());
                expect(Tok::Semi);
            } else if (item.text == "func" || item.text == "rel") {
                auto& list = item.text == "func" ? stmt.theory.functions : stmt.theory.relations;
                list.push_back(symbolWithArity());
                while (accept(Tok::Comma))
                    list.push_back(symbolWithArity());
                expect(Tok::Semi);
            } else {
                raise(ErrorCode::UnknownDirective,
                      "unknown theory item '" + item.text + "'", item.pos);
            }
        }
        return stmt;
    }

    SymbolDecl symbolWithArity() {
        SymbolDecl s;
        s.name = identifier();
        expect(Tok::Slash);
        s.arity = static_cast<uint32_t>(expect(Tok::Int).value);
        return s;
    }

    Statement interpStatement() {
        SourcePos pos = lex_.peek().pos;
        expectKeyword("interpretation");
        InterpStatement stmt;
        stmt.pos = pos;
        stmt.name = identifier();
        expectKeyword("of");
        stmt.theoryName = identifier();
        expect(Tok::Equal);
        expectKeyword("builtin");
        Token kind = expect(Tok::Ident);
        if (kind.text == "mod") {
            expect(Tok::LParen);
            stmt.spec.kind = BuiltinSpec::Kind::Mod;
            stmt.spec.modulus = expect(Tok::Int).value;
            expect(Tok::RParen);
        } else if (kind.text == "enum") {
            stmt.spec.kind = BuiltinSpec::Kind::Enum;
            stmt.spec.enumSpec = enumSpec();
        } else {
            raise(ErrorCode::UnknownDirective, "unknown builtin '" + kind.text + "'",
                  kind.pos);
        }
        expect(Tok::Semi);
        return stmt;
    }

    EnumSpec enumSpec() {
        EnumSpec spec;
        expect(Tok::LBrace);
        while (!accept(Tok::RBrace)) {
            Token item = expect(Tok::Ident);
            if (item.text == "elements") {
                if (!spec.elements.empty())
                    fail("duplicate 'elements' item", item.pos);
                spec.elements.push_back(identifier());
                while (accept(Tok::Comma))
                    spec.elements.push_back(identifier());
                expect(Tok::Semi);
            } else if (item.text == "const") {
                std::string name = identifier();
                expect(Tok::Equal);
                spec.constants[name] = elementRef(spec, item.pos);
                expect(Tok::Semi);
            } else if (item.text == "rel") {
                std::string name = identifier();
                std::optional<uint32_t> arity;
                if (accept(Tok::Slash))
                    arity = static_cast<uint32_t>(expect(Tok::Int).value);
                expect(Tok::Equal);
                expect(Tok::LBrace);
                std::vector<std::vector<Element>> rows;
                while (!accept(Tok::RBrace)) {
                    rows.push_back(elementTuple(spec));
                    if (!accept(Tok::Comma) && lex_.peek().kind != Tok::RBrace)
                        fail("expected ',' or '}' in relation table", lex_.peek().pos);
                }
                expect(Tok::Semi);
                if (!arity && !rows.empty())
                    arity = static_cast<uint32_t>(rows.front().size());
                if (!arity)
                    fail("empty relation table needs an arity, e.g. rel p/2 = {}",
                         item.pos);
                spec.relationArities[name] = *arity;
                spec.relations[name] = std::move(rows);
            } else if (item.text == "func") {
                std::string name = identifier();
                expect(Tok::Equal);
                expect(Tok::LBrace);
                auto& table = spec.functions[name];
                while (!accept(Tok::RBrace)) {
                    std::vector<Element> args = elementTuple(spec);
                    expect(Tok::RArrow);
                    table[args] = elementRef(spec, lex_.peek().pos);
                    if (!accept(Tok::Comma) && lex_.peek().kind != Tok::RBrace)
                        fail("expected ',' or '}' in function table", lex_.peek().pos);
                }
                expect(Tok::Semi);
            } else {
                raise(ErrorCode::UnknownDirective,
                      "unknown enum item '" + item.text + "'", item.pos);
            }
        }
        return spec;
    }

    Element elementRef(const EnumSpec& spec, SourcePos pos) {
        Token t = lex_.take();
        if (t.kind == Tok::Int) {
            if (t.value >= spec.elements.size())
                raise(ErrorCode::LiteralOutOfRange,
                      "element index " + std::to_string(t.value) + " out of range", t.pos);
            return static_cast<Element>(t.value);
        }
        if (t.kind == Tok::Ident) {
            for (size_t i = 0; i < spec.elements.size(); ++i)
                if (spec.elements[i] == t.text)
                    return static_cast<Element>(i);
            raise(ErrorCode::UnknownSymbol, "'" + t.text + "' is not an element", t.pos);
        }
        fail("expected an element name or index", pos);
    }

    std::vector<Element> elementTuple(const EnumSpec& spec) {
        expect(Tok::LParen);
        std::vector<Element> tuple;
        if (!accept(Tok::RParen)) {
            tuple.push_back(elementRef(spec, lex_.peek().pos));
            while (accept(Tok::Comma))
                tuple.push_back(elementRef(spec, lex_.peek().pos));
            expect(Tok::RParen);
        }
        return tuple;
    }

    Statement defStatement() {
        SourcePos pos = lex_.peek().pos;
        expectKeyword("def");
        DefStatement stmt;
        stmt.pos = pos;
        stmt.name = identifier();
        expect(Tok::Assign);
        expectKeyword("lambda");
        expect(Tok::LParen);
        if (!accept(Tok::RParen)) {
            stmt.params.push_back(identifier());
            while (accept(Tok::Comma))
                stmt.params.push_back(identifier());
            expect(Tok::RParen);
        }
        expect(Tok::Dot);
        parseDefBody(stmt);
        expect(Tok::Semi);
        return stmt;
    }

    // A def body is a term or a formula; a single application reads as both.
    void parseDefBody(DefStatement& stmt) {
        if (peekKeyword("exists") || peekKeyword("forall")) {
            stmt.formulaBody = formula();
            return;
        }
        Token first = lex_.peek();
        if (first.kind == Tok::Int || first.kind == Tok::Ident) {
            // try the bare-term reading first
            TermPtr t = term();
            Tok follow = lex_.peek().kind;
            if (follow == Tok::Semi) {
                stmt.termBody = t;
                if (t->kind() == Term::Kind::Apply)
                    stmt.formulaBody = Formula::atom(
                        t->name(), std::vector<TermPtr>(t->args().begin(), t->args().end()));
                else if (t->kind() == Term::Kind::Variable)
                    stmt.formulaBody = Formula::atom(t->name(), {});
                return;
            }
            // part of a larger formula; continue from the parsed term
            FormulaPtr lead = termToAtomOrEq(t, first.pos);
            stmt.formulaBody = continueFormula(lead);
            return;
        }
        stmt.formulaBody = formula();
    }

    // --- formulas ---

    // turns a parsed term into an atom, or an equation if '=' follows
    FormulaPtr termToAtomOrEq(const TermPtr& t, SourcePos pos) {
        if (accept(Tok::Equal)) {
            TermPtr rhs = term();
            return Formula::eq(t, rhs);
        }
        if (t->kind() == Term::Kind::Apply)
            return Formula::atom(t->name(),
                                 std::vector<TermPtr>(t->args().begin(), t->args().end()));
        if (t->kind() == Term::Kind::Variable)
            return Formula::atom(t->name(), {});
        fail("a literal is not a formula", pos);
    }

    FormulaPtr formula() { return implication(); }

    // wraps an already parsed leftmost primary into the connective levels
    FormulaPtr continueFormula(FormulaPtr lead) {
        FormulaPtr conj = continueConjunction(std::move(lead));
        FormulaPtr disj = continueDisjunction(std::move(conj));
        return continueImplication(std::move(disj));
    }

    FormulaPtr implication() {
        FormulaPtr lhs = disjunction();
        return continueImplication(std::move(lhs));
    }

    FormulaPtr continueImplication(FormulaPtr lhs) {
        if (accept(Tok::RArrow)) {
            FormulaPtr rhs = disjunction();
            checkNoChainedImplication();
            return Formula::implies(std::move(lhs), std::move(rhs));
        }
        if (accept(Tok::LArrow)) {
            FormulaPtr rhs = disjunction();
            checkNoChainedImplication();
            return Formula::implies(std::move(rhs), std::move(lhs));
        }
        return lhs;
    }

    void checkNoChainedImplication() {
        Tok k = lex_.peek().kind;
        if (k == Tok::RArrow || k == Tok::LArrow)
            fail("chained implications need parentheses", lex_.peek().pos);
    }

    FormulaPtr disjunction() {
        FormulaPtr first = conjunction();
        return continueDisjunction(std::move(first));
    }

    FormulaPtr continueDisjunction(FormulaPtr first) {
        if (lex_.peek().kind != Tok::Pipe)
            return first;
        std::vector<FormulaPtr> members{std::move(first)};
        while (accept(Tok::Pipe))
            members.push_back(conjunction());
        return Formula::disjunction(std::move(members));
    }

    FormulaPtr conjunction() {
        FormulaPtr first = unary();
        return continueConjunction(std::move(first));
    }

    FormulaPtr continueConjunction(FormulaPtr first) {
        if (lex_.peek().kind != Tok::Amp)
            return first;
        std::vector<FormulaPtr> members{std::move(first)};
        while (accept(Tok::Amp))
            members.push_back(unary());
        return Formula::conjunction(std::move(members));
    }

    FormulaPtr unary() {
        if (accept(Tok::Bang))
            return Formula::negation(unary());
        if (peekKeyword("exists") || peekKeyword("forall")) {
            bool isExists = lex_.take().text == "exists";
            std::string var = identifier();
            expect(Tok::Dot);
            FormulaPtr body = implication(); // quantifier scope extends right
            return isExists ? Formula::exists(std::move(var), std::move(body))
                            : Formula::forall(std::move(var), std::move(body));
        }
        if (accept(Tok::LParen)) {
            FormulaPtr inner = implication();
            expect(Tok::RParen);
            return inner;
        }
        Token t = lex_.peek();
        if (t.kind != Tok::Ident && t.kind != Tok::Int)
            fail("expected a formula", t.pos);
        TermPtr lead = term();
        return termToAtomOrEq(lead, t.pos);
    }

    // --- terms ---

    TermPtr term() {
        Token t = lex_.peek();
        if (t.kind == Tok::Int) {
            lex_.take();
            return Term::literal(t.value);
        }
        if (t.kind != Tok::Ident)
            fail("expected a term", t.pos);
        std::string name = lex_.take().text;
        if (!accept(Tok::LParen))
            return Term::variable(std::move(name));
        std::vector<TermPtr> args;
        if (!accept(Tok::RParen)) {
            args.push_back(term());
            while (accept(Tok::Comma))
                args.push_back(term());
            expect(Tok::RParen);
        }
        return Term::apply(std::move(name), std::move(args));
    }

    // --- rec blocks ---

    Statement recStatement() {
        SourcePos pos = lex_.peek().pos;
        expectKeyword("rec");
        RecStatement stmt;
        stmt.pos = pos;
        stmt.block.pos = pos;
        stmt.block.symbols.push_back(symbolWithArity());
        while (accept(Tok::Comma))
            stmt.block.symbols.push_back(symbolWithArity());
        expect(Tok::LBrace);
        while (!accept(Tok::RBrace))
            stmt.block.clauses.push_back(clause());
        if (stmt.block.clauses.empty())
            fail("a rec block needs at least one clause", pos);
        return stmt;
    }

    Clause clause() {
        Clause c;
        c.pos = lex_.peek().pos;
        c.headSymbol = identifier();
        expect(Tok::LParen);
        if (!accept(Tok::RParen)) {
            c.headVars.push_back(headVariable());
            while (accept(Tok::Comma))
                c.headVars.push_back(headVariable());
            expect(Tok::RParen);
        }
        if (accept(Tok::LArrow)) {
            c.body.push_back(literal());
            while (accept(Tok::Comma))
                c.body.push_back(literal());
        }
        expect(Tok::Semi);
        return c;
    }

    std::string headVariable() {
        Token t = lex_.peek();
        if (t.kind != Tok::Ident)
            raise(ErrorCode::InvalidClauseHead,
                  "clause head arguments must be variables", t.pos);
        return lex_.take().text;
    }

    // positive literal: atom or equation
    FormulaPtr literal() {
        Token t = lex_.peek();
        if (t.kind != Tok::Ident && t.kind != Tok::Int)
            fail("expected an atom or equation", t.pos);
        TermPtr lead = term();
        return termToAtomOrEq(lead, t.pos);
    }

    // --- queries ---

    Statement queryStatement() {
        SourcePos pos = lex_.peek().pos;
        expectKeyword("query");
        QueryStatement stmt;
        stmt.pos = pos;
        Token kind = expect(Tok::Ident);
        if (kind.text == "eval") {
            EvalQuery q;
            q.term = term();
            if (peekKeyword("under")) {
                lex_.take();
                expect(Tok::LParen);
                do {
                    std::string var = identifier();
                    expect(Tok::Equal);
                    q.under.emplace_back(std::move(var), expect(Tok::Int).value);
                } while (accept(Tok::Comma));
                expect(Tok::RParen);
            }
            stmt.query = std::move(q);
        } else if (kind.text == "holds") {
            stmt.query = HoldsQuery{formula()};
        } else if (kind.text == "solve") {
            stmt.query = SolveQuery{formula()};
        } else if (kind.text == "dump") {
            stmt.query = DumpQuery{identifier()};
        } else if (kind.text == "entails") {
            FormulaPtr lhs = formula();
            expect(Tok::Entails);
            FormulaPtr rhs = formula();
            stmt.query = EntailsQuery{std::move(lhs), std::move(rhs)};
        } else {
            raise(ErrorCode::UnknownDirective, "unknown query kind '" + kind.text + "'",
                  kind.pos);
        }
        expect(Tok::Semi);
        return stmt;
    }
};

} // namespace

SourceProgram parseProgram(std::string_view text) { return Parser(text).parse(); }

} // namespace folx
