// Decision procedures for the four provability notions used throughout:
// classical propositional (truth tables), intuitionistic propositional
// (contraction-free G4ip), minimal propositional (bot-as-fresh-atom over
// G4ip), and depth-bounded first-order sequent search (single-succedent
// intuitionistic/minimal, multi-succedent classical).

#pragma once

#include <string>

#include "negtrans/formula.hpp"

namespace negtrans {

enum class Verdict { Proved, Refuted, Unknown };

struct Decision {
    Verdict verdict = Verdict::Unknown;
    int depth_used = 0;  // rule applications on the deepest branch (bounded modes)

    bool proved() const { return verdict == Verdict::Proved; }
    bool refuted() const { return verdict == Verdict::Refuted; }
};

const char* to_string(Verdict v);

enum class Logic { Classical, Intuitionistic, Minimal };

// Complete classical propositional decision.  Rejects quantified input.
Decision prove_cpc(const FormulaPtr& f);

// Complete intuitionistic propositional decision (G4ip: the implication-left
// rule splits by the shape of the implication's premise, so no contraction
// and no loop checking is needed).  Rejects quantified input.
Decision prove_ipc(const FormulaPtr& f);

// Minimal propositional decision: bot is replaced by a fresh atom after
// expand_neg, then decided in IPC.  Ex falso for the fresh atom is
// underivable, which is exactly minimal provability.
Decision prove_minimal(const FormulaPtr& f);

// Depth-bounded backward search in a cut-free first-order sequent calculus.
// Proved is sound; Unknown only means the bound was exhausted.  Every rule
// application counts one unit of depth.
Decision prove_fo_bounded(const FormulaPtr& f, Logic logic, int depth);

// Routes to the propositional decision or to bounded search.  Propositional
// input yields Proved/Refuted; quantified input yields Proved/Unknown.
Decision prove(const FormulaPtr& f, Logic logic, int depth);

// CL |- f iff IL |- ~~f, for propositional f.  Kernel self-test.
bool glivenko_check(const FormulaPtr& f);

}  // namespace negtrans
