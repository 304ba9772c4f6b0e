// Negative translations represented as data: one clause template per
// connective/quantifier/atom plus the provability-sign wrapper.  Keeping
// translations first-class makes the clause-wise equivalence relation and
// the bottom-clause toggle ordinary operations.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "negtrans/formula.hpp"
#include "negtrans/kripke.hpp"
#include "negtrans/proofsearch.hpp"

namespace negtrans {

// A formula context.  Holes are the reserved atoms #1 and #2 (each occurring
// exactly once); quantifier clauses additionally bind the reserved variable
// #x.  Instantiation is plain replacement: the filled subformulas had their
// binders renamed apart at parse time, so nothing can be captured.
struct ClauseTemplate {
    FormulaPtr pattern;

    FormulaPtr instantiate(const FormulaPtr& h1, const FormulaPtr& h2 = nullptr,
                           const std::string& var = "") const;
};

ClauseTemplate hole1();               // the identity context
FormulaPtr hole_marker(int i);        // #1 / #2
extern const std::string hole_var;    // #x

struct TranslationSpec {
    std::string name;
    ClauseTemplate conj, disj, impl;       // two holes
    ClauseTemplate forall_c, exists_c;     // one hole + bound-variable hole
    ClauseTemplate atom_c;                 // one hole (the atom itself)
    ClauseTemplate bot_c;                  // closed clause for bot
    ClauseTemplate top_c;                  // closed clause for top
    ClauseTemplate wrapper;                // provability sign
    bool modular = true;

    // Same translation with the literal bot clause (bot instead of the
    // atom clause's image of bot).
    TranslationSpec with_literal_bot() const;
};

// Built-in translations: kolmogorov, goedel_gentzen, goedel, gentzen_original,
// kuroda, krivine, g, em, aczel, kuroda_ml.  Throws on unknown names.
TranslationSpec builtin_translation(const std::string& name);
const std::vector<std::string>& builtin_translation_names();

// Structural recursion with the spec's clauses, then the wrapper once at the
// top.  Neg is translated as its expand_neg image.
FormulaPtr apply_translation(const TranslationSpec& spec, const FormulaPtr& f);

// ── Clause-wise equivalence of two modular translations ────────────────────

struct ClauseVerdict {
    std::string clause;  // "and", "or", "imp", "forall", "exists", "atom", "bot", "wrapper"
    Verdict verdict;
    std::string witness;  // countermodel text for refuted quantifier clauses
};

struct RelatedResult {
    std::vector<ClauseVerdict> clauses;
    Verdict overall;  // Proved = related, Refuted = not, Unknown = undecided clause

    bool related() const { return overall == Verdict::Proved; }
};

struct KernelOptions {
    int fo_depth = 12;
    kripke::SearchBounds bounds{};
};

// Decides, clause by clause, whether the templates are intuitionistically
// equivalent: propositional decision for connective/atom/bot/wrapper clauses,
// bounded search plus countermodel search for quantifier clauses.  Unknown
// quantifier clauses are reported as such, never coerced.
RelatedResult translations_related(const TranslationSpec& t1, const TranslationSpec& t2,
                                   const KernelOptions& opts = {});

// ── Negation normal form and its dual ───────────────────────────────────────

struct NnfFormula;
using NnfPtr = std::shared_ptr<const NnfFormula>;

// Literals carry an atomic formula (Atom, Bot or Top) and a polarity; the
// negated literal is the primitive "bar" form.
struct NnfFormula {
    enum Kind { Lit, And, Or, Forall, Exists } kind;
    bool positive = true;       // Lit
    FormulaPtr atom_f;          // Lit: Atom/Bot/Top
    NnfPtr left, right;         // And/Or both, quantifiers left
    std::string var;            // quantifiers
};

NnfPtr nnf_lit(bool positive, FormulaPtr atom_f);
NnfPtr nnf_and(NnfPtr a, NnfPtr b);
NnfPtr nnf_or(NnfPtr a, NnfPtr b);
NnfPtr nnf_forall(std::string var, NnfPtr body);
NnfPtr nnf_exists(std::string var, NnfPtr body);

bool equal(const NnfPtr& a, const NnfPtr& b);
std::string to_string(const NnfPtr& f);

// Classical negation normal form; implications are eliminated classically
// before negations are pushed to the literals.
NnfPtr nnf(const FormulaPtr& f);

// Swaps And/Or, Forall/Exists and literal polarity.  An involution.
NnfPtr dual(const NnfPtr& f);

// Literals back to formulas: positive as the atom, negative as Neg(atom).
FormulaPtr embed_nnf(const NnfPtr& f);

// ── Avigad's M-translation ──────────────────────────────────────────────────

// The non-modular translation: conjunction and universal quantification go
// through the dual, M(A & B) = ~M(~A | ~B) and M(forall x A) = ~M(exists x ~A).
FormulaPtr avigad_m(const NnfPtr& f);

// The modular version: double negations on conjuncts and under forall.
FormulaPtr avigad_m_prime(const NnfPtr& f);

// Kolmogorov form of an NNF formula, treating literals atomically (a negated
// literal becomes ~~~P).
FormulaPtr kolmogorov_of_nnf(const NnfPtr& f);

// ── Monadic generalisation ──────────────────────────────────────────────────

// A one-hole operator generalising double negation:
//   DoubleNeg   ~(~(.))
//   Friedman    ((.) -> A) -> A        (closed target A)
//   PeirceNeg   ~(.) -> (.)
//   PeirceR     ((.) -> R) -> (.)      (closed target R)
struct MonadDescriptor {
    enum Kind { DoubleNeg, Friedman, PeirceNeg, PeirceR } kind = DoubleNeg;
    FormulaPtr target;  // Friedman / PeirceR only; must be closed

    FormulaPtr wrap(const FormulaPtr& x) const;
    static MonadDescriptor double_neg() { return {DoubleNeg, nullptr}; }
    static MonadDescriptor friedman(FormulaPtr a);
    static MonadDescriptor peirce_neg() { return {PeirceNeg, nullptr}; }
    static MonadDescriptor peirce_r(FormulaPtr r);
};

enum class MonadicVariant {
    KolmogorovT,     // T around every subformula
    KurodaMlT,       // T at the top, after forall, before implication conclusions
    GoedelGentzenT,  // T on atoms, disjunctions and existentials
};

FormulaPtr monadic_translation(const MonadDescriptor& m, MonadicVariant variant,
                               const FormulaPtr& f);

}  // namespace negtrans
