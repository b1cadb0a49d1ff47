#pragma once

#include "folx/relalg.hpp"
#include "folx/syntax.hpp"
#include "folx/universe.hpp"

namespace folx {

// An assignment maps variable names to universe elements.
using Assignment = Tuple;

// Term value under an assignment: the classical M_A(t).
Element evalTerm(const Interpretation& interp, const Assignment& assignment, const Term& t);

// The denotation of a term: a total function from assignments over the
// term's variables to elements.
class TermFunction {
public:
    TermFunction(Interpretation interp, TermPtr term);

    const IndexSet& parameters() const { return params_; }
    Element apply(const Assignment& assignment) const;

private:
    Interpretation interp_;
    TermPtr term_;
    IndexSet params_;
};

TermFunction termFunction(const Interpretation& interp, TermPtr term);

// The satisfaction oracle: the clause-by-clause classical definition,
// implemented by structural recursion and search over the universe. Handles
// every connective directly, so it shares no rewriting with denote().
bool satisfies(const Interpretation& interp, const Assignment& assignment, const Formula& f);

// The compositional denotation: every formula denotes a relation indexed
// by its free variables. Atoms over plain variables go through the
// relation quotient; atoms with compound arguments (or without a
// materialized table) are enumerated over their free variables.
Relation denote(const Interpretation& interp, const FormulaPtr& f);

// Truth of a closed formula: whether its 0-ary denotation is the truth
// relation.
bool sentenceTruth(const Interpretation& interp, const FormulaPtr& f);

// Containment of denotations within this one interpretation. Both formulas
// must have the same free variables.
bool entailsIn(const Interpretation& interp, const FormulaPtr& f0, const FormulaPtr& f1);

} // namespace folx
