// The simplification calculus: negation-reducing rewrite schemas over the
// Neg-primitive AST, redex matching, deterministic standard paths, exhaustive
// path enumeration, and the enumeration of all maximal rule sets.
//
// Schema shapes, with N a single or a double negation fixed per rule set and
// N1/N2 in {none, single, double}:
//
//   inside:   ~~(N A o N B)  =>  N (N1 A o' N2 B)      ~~Q x N A  =>  N (Q' x N1 A)
//   outside:  N (~~A o ~~B)  =>  N1 N A o' N2 N B      N Q x ~~A  =>  Q' x N1 N A
//
// Matching is purely syntactic; ~~P decomposes against ~A as A := ~P.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "negtrans/formula.hpp"
#include "negtrans/kripke.hpp"
#include "negtrans/proofsearch.hpp"

namespace negtrans {

enum class Side { Inside, Outside };
enum class NegMark { None, Single, Double };

const char* to_string(Side s);
int neg_count(NegMark m);

// One simplification transformation.  `symbol` and `result_symbol` are both
// connectives or both quantifiers; n2 is unused for quantifier rules.
struct RewriteRule {
    Side side = Side::Inside;
    NegMark n = NegMark::Double;  // Single or Double
    Conn symbol = Conn::And;
    Conn result_symbol = Conn::And;
    NegMark n1 = NegMark::None;
    NegMark n2 = NegMark::None;

    bool quantifier_rule() const { return is_quantifier(symbol); }
    bool operator==(const RewriteRule&) const = default;
};

// Schemas as formulas over the metavariable atoms A, B and the variable x.
FormulaPtr lhs_schema(const RewriteRule& r);
FormulaPtr rhs_schema(const RewriteRule& r);
std::string to_string(const RewriteRule& r);  // "LHS => RHS"

// Recognises a schema pair as a Definition-shaped rule.
std::optional<RewriteRule> recognize_rule(const FormulaPtr& lhs, const FormulaPtr& rhs);

// At most one rule per connective/quantifier; all rules share side and N.
struct RuleSet {
    std::string name;
    Side side = Side::Inside;
    NegMark n = NegMark::Double;
    std::map<Conn, RewriteRule> rules;

    const RewriteRule* rule_for(Conn symbol) const;
    void add(const RewriteRule& r);  // throws if side/N mismatch or duplicate
};

// Built-in rule sets: r1, r2, r3, r4, r3_prime, r3_prime_minus_imp,
// r3_prime_minus_and, r1_tilde, r1_minus_and, example_nonmaximal.
RuleSet builtin_rule_set(const std::string& name);
const std::vector<std::string>& builtin_rule_set_names();

// Text format: one rule per line, `LHS => RHS` in the formula grammar with
// metavariables A and B; '#' starts a comment.
std::string to_text(const RuleSet& rs);
RuleSet parse_rule_set(const std::string& text, const std::string& name);

// ── Rule validation ─────────────────────────────────────────────────────────

struct RuleValidation {
    enum Status { Valid, Invalid, Unknown } status;
    std::string reason;   // Invalid: what failed; Unknown: what was exhausted
    std::string witness;  // countermodel text when available
};

struct ValidationOptions {
    int fo_depth = 12;
    kripke::SearchBounds bounds{};
};

// Checks that the right side has strictly fewer negation symbols (counted on
// the schemas, holes as atoms) and that both sides are intuitionistically
// equivalent (propositional decision for connective rules; bounded search and
// countermodel search for quantifier rules, which alone can come out Unknown).
RuleValidation validate_rule(const RewriteRule& r, const ValidationOptions& opts = {});

// Schema sides instantiated for deciding: fresh 0-ary atoms for connective
// rules, A(x) over the bound variable for quantifier rules.
std::pair<FormulaPtr, FormulaPtr> rule_instances(const RewriteRule& r);

// ── Rewriting ───────────────────────────────────────────────────────────────

using Position = std::vector<int>;  // child indices from the root

std::string to_string(const Position& p);
FormulaPtr subformula_at(const FormulaPtr& f, const Position& p);

struct Redex {
    Position pos;
    RewriteRule rule;
};

// Every position whose subformula literally matches a rule's left schema.
std::vector<Redex> find_redexes(const FormulaPtr& f, const RuleSet& rs);

// Rewrites the redex at pos; the provenance tag of the principal connective
// or quantifier transfers to the result symbol.  Throws if not a redex.
FormulaPtr apply_at(const FormulaPtr& f, const Position& pos, const RewriteRule& rule);

struct PathStep {
    Position pos;
    RewriteRule rule;
    std::uint64_t acted_tag = 0;  // provenance tag of the symbol acted on
};

struct SimplificationPath {
    std::vector<FormulaPtr> nodes;  // nonempty; nodes[0] is the start
    std::vector<PathStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
    const FormulaPtr& last() const { return nodes.back(); }
};

// Deterministic maximal-length path: innermost-first (post-order) for inside
// rule sets, outermost-first (pre-order) for outside rule sets, left to right
// on ties; stops when no redex remains.  Total on arbitrary input.
SimplificationPath standard_path(const FormulaPtr& f, const RuleSet& rs);

// Endpoint of the standard path.
FormulaPtr longest_result(const FormulaPtr& f, const RuleSet& rs);

// Number of source symbols for which rs has a rule, counted on the
// Neg-expanded source formula; the predicted standard-path length.
int expected_length(const FormulaPtr& source, const RuleSet& rs);

struct PathBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Every maximal path (each ends redex-free), by exhaustive branching over
// redex choices.  `budget` caps the number of path prefixes explored.
std::vector<SimplificationPath> enumerate_all_paths(const FormulaPtr& f, const RuleSet& rs,
                                                    long budget);

// ── Maximality ──────────────────────────────────────────────────────────────

struct CandidateReport {
    RewriteRule rule;
    enum Outcome { Accepted, CountRejected, Refuted, Curated, Undecided } outcome;
    std::string detail;  // witness / curated status
};

struct MaximalEnumeration {
    std::vector<RuleSet> maximal_sets;
    std::vector<CandidateReport> quantifier_candidates;  // all of them, with outcomes
    std::vector<CandidateReport> undecided;              // neither refuted nor curated
};

// Enumerates the whole schema space (27 candidates per connective, 6 per
// quantifier, per side/N family), filters by validate_rule, and assembles the
// maximal sets: every symbol with a valid candidate must carry one, and each
// carried rule must be negation-minimal among the valid candidates.
MaximalEnumeration enumerate_maximal(const ValidationOptions& opts = {});

}  // namespace negtrans
