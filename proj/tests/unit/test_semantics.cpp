#include <doctest.h>

#include "common/gen.hpp"
#include "folx/semantics.hpp"

using namespace folx;

namespace {

TermPtr v(const char* name) { return Term::variable(name); }

// x^2 + 2y^2 + 3z^2 spelled with add/mul and integer literals
TermPtr sumOfSquares() {
    return Term::apply(
        "add",
        {Term::apply("mul", {v("x"), v("x")}),
         Term::apply("add",
                     {Term::apply("mul", {Term::literal(2), Term::apply("mul", {v("y"), v("y")})}),
                      Term::apply("mul", {Term::literal(3), Term::apply("mul", {v("z"), v("z")})})})});
}

// mod ring extended with sum = addition triples, materialized
Interpretation ringWithSum(uint32_t m) {
    RelationBuilder b(IndexSet::positions(3), m);
    for (Element x = 0; x < m; ++x)
        for (Element y = 0; y < m; ++y)
            b.addRow({x, y, static_cast<Element>((x + y) % m)});
    return makeModRing(m).withRelation("sum", RelationBinding::fromTable(b.build()));
}

} // namespace

TEST_CASE("evalTerm") {
    Interpretation m = makeModRing(60); // the naturals 0..59 for this example
    TermPtr t = sumOfSquares();
    CHECK(evalTerm(m, namedTuple({{"x", 3}, {"y", 2}, {"z", 1}}), *t) == 20);
    CHECK(evalTerm(m, namedTuple({{"x", 1}, {"y", 3}, {"z", 2}}), *t) == 31);
    CHECK(evalTerm(m, namedTuple({{"x", 7}}), *v("x")) == 7);

    try {
        evalTerm(m, namedTuple({{"x", 1}}), *v("w"));
        FAIL("expected UnboundVariable");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnboundVariable);
    }
    CHECK_THROWS_AS(evalTerm(m, Tuple{}, *Term::apply("nope", {})), Error);
}

TEST_CASE("termFunction") {
    Interpretation m = makeModRing(60);
    TermFunction f = termFunction(m, sumOfSquares());
    CHECK(f.parameters() == IndexSet::names({"x", "y", "z"}));
    CHECK(f.apply(namedTuple({{"x", 3}, {"y", 2}, {"z", 1}})) == 20);
    // extra bindings are ignored through restriction
    CHECK(f.apply(namedTuple({{"w", 9}, {"x", 3}, {"y", 2}, {"z", 1}})) == 20);

    TermFunction c = termFunction(m, Term::apply("unit", {}));
    CHECK(c.parameters().empty());
    CHECK(c.apply(Tuple{}) == 1);
}

TEST_CASE("termFunction agrees with evalTerm on every assignment") {
    testgen::Rng rng(6001);
    std::vector<SymbolDecl> funcs = {{"add", 2}, {"mul", 2}};
    Interpretation m = makeModRing(3);
    for (int trial = 0; trial < 50; ++trial) {
        TermPtr t = testgen::randomTerm(rng, testgen::variablePool(), funcs, 3, 3);
        TermFunction f = termFunction(m, t);
        Relation space = fullRelation(f.parameters(), 3);
        if (f.parameters().empty()) {
            CHECK(f.apply(Tuple{}) == evalTerm(m, Tuple{}, *t));
            continue;
        }
        for (size_t i = 0; i < space.size(); ++i) {
            Tuple a = space.tupleAt(i);
            CHECK(f.apply(a) == evalTerm(m, a, *t));
        }
    }
}

TEST_CASE("satisfies") {
    Interpretation m = ringWithSum(61);
    FormulaPtr sumXXY = Formula::atom("sum", {v("x"), v("x"), v("y")});
    CHECK_FALSE(satisfies(m, namedTuple({{"x", 6}, {"y", 3}}), *sumXXY));
    CHECK(satisfies(m, namedTuple({{"x", 3}, {"y", 6}}), *sumXXY));
    CHECK(satisfies(m, Tuple{}, *Formula::conjunction({})));

    FormulaPtr existsSelf =
        Formula::exists("x", Formula::atom("sum", {v("x"), v("x"), v("x")}));
    CHECK(satisfies(m, Tuple{}, *existsSelf)); // 0+0=0
}

TEST_CASE("denote of sum(x,x,y) over mod 5") {
    Interpretation m = ringWithSum(5);
    Relation d = denote(m, Formula::atom("sum", {v("x"), v("x"), v("y")}));
    RelationBuilder expect(IndexSet::names({"x", "y"}), 5);
    expect.addTuple(namedTuple({{"x", 0}, {"y", 0}}));
    expect.addTuple(namedTuple({{"x", 1}, {"y", 2}}));
    expect.addTuple(namedTuple({{"x", 2}, {"y", 4}}));
    expect.addTuple(namedTuple({{"x", 3}, {"y", 1}}));
    expect.addTuple(namedTuple({{"x", 4}, {"y", 3}}));
    CHECK(d == expect.build());
}

TEST_CASE("denote basics") {
    Interpretation m = ringWithSum(5);
    SUBCASE("closed true sentence denotes the truth relation") {
        Relation d = denote(m, Formula::exists("x", Formula::eq(v("x"), v("x"))));
        CHECK(d == Relation::truth(5));
    }
    SUBCASE("negation denotes the complement") {
        testgen::Rng rng(6002);
        std::vector<SymbolDecl> rels = {{"sum", 3}, {"lt", 2}};
        for (int trial = 0; trial < 30; ++trial) {
            FormulaPtr f =
                testgen::randomFormula(rng, testgen::variablePool(), rels, {}, 5, 2);
            CHECK(denote(m, Formula::negation(f)) == complement(denote(m, f)));
        }
    }
    SUBCASE("existential quantification is projection") {
        testgen::Rng rng(6003);
        std::vector<SymbolDecl> rels = {{"sum", 3}, {"lt", 2}};
        for (int trial = 0; trial < 30; ++trial) {
            FormulaPtr f =
                testgen::randomFormula(rng, testgen::variablePool(), rels, {}, 5, 2);
            Relation body = denote(m, f);
            Relation d = denote(m, Formula::exists("x", f));
            CHECK(d == project(body, body.indexSet().minus(IndexSet::names({"x"}))));
        }
    }
}

TEST_CASE("sentenceTruth") {
    Interpretation m = makeModRing(5);
    CHECK(sentenceTruth(m, Formula::exists("x", Formula::eq(v("x"), v("x")))));
    CHECK_FALSE(sentenceTruth(m, Formula::exists("x", Formula::atom("lt", {v("x"), v("x")}))));

    Interpretation m7 = makeModRing(7);
    FormulaPtr comm = Formula::forall(
        "x", Formula::forall("y", Formula::eq(Term::apply("add", {v("x"), v("y")}),
                                              Term::apply("add", {v("y"), v("x")}))));
    CHECK(sentenceTruth(m7, comm));

    try {
        sentenceTruth(m, Formula::eq(v("x"), v("x")));
        FAIL("expected NonClosedFormula");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonClosedFormula);
    }
}

TEST_CASE("sentenceTruth agrees with the satisfaction oracle on closed formulas") {
    testgen::Rng rng(6004);
    std::vector<SymbolDecl> rels = {{"p", 1}, {"q", 2}};
    for (int trial = 0; trial < 100; ++trial) {
        uint32_t n = 2 + static_cast<uint32_t>(testgen::pick(rng, 2));
        Interpretation m = testgen::randomInterpretation(rng, n, rels, false);
        FormulaPtr body =
            testgen::randomFormula(rng, {"x"}, rels, {}, n, 2);
        FormulaPtr closed = Formula::exists("x", Formula::conjunction({body}));
        if (!freeVariables(*closed).empty())
            continue;
        CHECK(sentenceTruth(m, closed) == satisfies(m, Tuple{}, *closed));
    }
}

TEST_CASE("entailsIn") {
    Interpretation m = ringWithSum(5);
    FormulaPtr sumXXY = Formula::atom("sum", {v("x"), v("x"), v("y")});
    FormulaPtr weaker =
        Formula::disjunction({sumXXY, Formula::atom("lt", {v("x"), v("y")})});
    CHECK(entailsIn(m, sumXXY, sumXXY));
    CHECK(entailsIn(m, sumXXY, weaker));
    CHECK_FALSE(entailsIn(m, weaker, sumXXY));

    FormulaPtr g = Formula::atom("lt", {v("x"), v("y")});
    CHECK(entailsIn(m, Formula::conjunction({sumXXY, g}), sumXXY));

    try {
        entailsIn(m, sumXXY, Formula::eq(v("x"), v("x")));
        FAIL("expected FreeVariableMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FreeVariableMismatch);
    }
}

// The two semantics agree: membership in the denotation matches the
// satisfaction oracle on every assignment over the free variables.
TEST_CASE("dual-semantics agreement on random formulas") {
    testgen::Rng rng(6005);
    std::vector<SymbolDecl> rels = {{"p", 1}, {"q", 2}, {"r", 3}};
    for (int trial = 0; trial < 150; ++trial) {
        uint32_t n = 2 + static_cast<uint32_t>(testgen::pick(rng, 2));
        Interpretation m = testgen::randomInterpretation(rng, n, rels, true);
        std::vector<SymbolDecl> funcs = {{"g", 1}};
        FormulaPtr f = testgen::randomFormula(rng, testgen::variablePool(), rels, funcs, n, 4);
        Relation d = denote(m, f);
        Relation space = fullRelation(d.indexSet(), n);
        for (size_t i = 0; i < space.size(); ++i) {
            Tuple a = space.tupleAt(i);
            CHECK(d.contains(a) == satisfies(m, a, *f));
        }
    }
}

// For variable-only atoms, the quotient route and the assignment-enumeration
// route must produce the same relation.
TEST_CASE("quotient theorem: both atom denotation routes agree") {
    testgen::Rng rng(6006);
    for (int trial = 0; trial < 100; ++trial) {
        uint32_t n = 1 + static_cast<uint32_t>(testgen::pick(rng, 4));
        uint32_t arity = 1 + static_cast<uint32_t>(testgen::pick(rng, 3));
        Relation table = testgen::randomRelation(rng, IndexSet::positions(arity), n);

        std::vector<std::string> pool = testgen::variablePool();
        std::vector<TermPtr> args;
        std::vector<std::string> names;
        for (uint32_t i = 0; i < arity; ++i) {
            names.push_back(pool[testgen::pick(rng, pool.size())]);
            args.push_back(v(names.back().c_str()));
        }

        Interpretation m = testgen::randomInterpretation(rng, n, {}, false)
                               .withRelation("p", RelationBinding::fromTable(table));
        Relation viaQuotient = denote(m, Formula::atom("p", args));

        // enumeration oracle, straight from the definition
        IndexSet vars = viaQuotient.indexSet();
        RelationBuilder oracle(vars, n);
        Relation space = fullRelation(vars, n);
        for (size_t i = 0; i < space.size(); ++i) {
            Tuple a = space.tupleAt(i);
            std::vector<Element> row;
            for (const auto& name : names)
                row.push_back(a.at(Index::name(name)));
            if (table.containsRow(row))
                oracle.addTuple(a);
        }
        CHECK(viaQuotient == oracle.build());
    }
}

// Disjunction two ways: desugared denotation equals the cylindrified union
// of the member denotations.
TEST_CASE("disjunction equals cylindrified union") {
    testgen::Rng rng(6007);
    std::vector<SymbolDecl> rels = {{"p", 1}, {"q", 2}};
    for (int trial = 0; trial < 60; ++trial) {
        uint32_t n = 2 + static_cast<uint32_t>(testgen::pick(rng, 2));
        Interpretation m = testgen::randomInterpretation(rng, n, rels, false);
        FormulaPtr a = testgen::randomFormula(rng, testgen::variablePool(), rels, {}, n, 2);
        FormulaPtr b = testgen::randomFormula(rng, testgen::variablePool(), rels, {}, n, 2);
        Relation da = denote(m, a);
        Relation db = denote(m, b);
        IndexSet common = da.indexSet().unionWith(db.indexSet());
        Relation lifted = setUnion(cylindrify(da, common.minus(da.indexSet())),
                                   cylindrify(db, common.minus(db.indexSet())));
        CHECK(denote(m, Formula::disjunction({a, b})) == lifted);
    }
}
