#include "folx/semantics.hpp"
#include "folx/universe.hpp"

namespace folx {

AxiomReport checkSatisfies(const Interpretation& interp,
                           std::span<const FormulaPtr> axioms) {
    AxiomReport report;
    for (const auto& axiom : axioms) {
        if (!freeVariables(*axiom).empty())
            raise(ErrorCode::NonClosedAxiom,
                  "axiom has free variables: " + render(*axiom));
        AxiomReport::Entry entry;
        entry.axiom = axiom;
        entry.holds = sentenceTruth(interp, axiom);
        if (!entry.holds) {
            // peel the outermost universal prefix and look for the least
            // assignment that violates the matrix
            FormulaPtr matrix = axiom;
            size_t peeled = 0;
            while (matrix->kind() == Formula::Kind::Forall) {
                matrix = matrix->child();
                ++peeled;
            }
            if (peeled > 0) {
                Relation violations = denote(interp, Formula::negation(matrix));
                if (!violations.empty() && violations.width() > 0)
                    entry.witness = violations.tupleAt(0);
            }
        }
        report.allHold &= entry.holds;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace folx
