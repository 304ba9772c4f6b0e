// First-order formulas with a primitive negation node.
//
// Negation is kept as its own AST node rather than as sugar for `A -> bot`:
// the rewrite schemas and the connective counters distinguish translation-
// introduced negations from genuine implications.  expand_neg() bridges to
// the provers, which work on the {bot, top, ->, &, |, forall, exists} core.

#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace negtrans {

// ── Terms ───────────────────────────────────────────────────────────────────

struct Term {
    bool is_var = true;
    std::string name;
    std::vector<Term> args;  // empty for variables; zero-ary apps are constants

    static Term var(std::string n) { return Term{true, std::move(n), {}}; }
    static Term app(std::string n, std::vector<Term> a = {}) {
        return Term{false, std::move(n), std::move(a)};
    }
};

bool operator==(const Term& a, const Term& b);
int compare(const Term& a, const Term& b);
std::string to_string(const Term& t);

// ── Formulas ────────────────────────────────────────────────────────────────

enum class Conn : std::uint8_t { Atom, Bot, Top, Neg, And, Or, Imp, Forall, Exists };

const char* conn_name(Conn c);
bool is_binary(Conn c);
bool is_quantifier(Conn c);

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
    Conn kind;
    std::string name;          // Atom: predicate; Forall/Exists: bound variable
    std::vector<Term> args;    // Atom only
    FormulaPtr left, right;    // Neg/quantifier: left only; binary: both

    // Provenance tag for connective/quantifier nodes; 0 = untracked.
    // Ignored by structural equality; rewrites transfer it to the result symbol.
    std::uint64_t tag = 0;
};

FormulaPtr atom(std::string pred, std::vector<Term> args = {});
FormulaPtr bot();
FormulaPtr top();
FormulaPtr neg(FormulaPtr a);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr imp(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);  // (a -> b) & (b -> a)
FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);
FormulaPtr make(Conn kind, FormulaPtr a, FormulaPtr b);               // binary
FormulaPtr make_quant(Conn kind, std::string var, FormulaPtr body);   // quantifier

// n-fold negation
FormulaPtr negs(int n, FormulaPtr a);

// Structural equality / total order / hash.  Tags are ignored throughout.
bool equal(const FormulaPtr& a, const FormulaPtr& b);
int compare(const FormulaPtr& a, const FormulaPtr& b);
std::size_t hash_of(const FormulaPtr& f);

// Minimal-parentheses printer; parse(to_string(f)) == f.
std::string to_string(const FormulaPtr& f);

// ── Counting ────────────────────────────────────────────────────────────────

struct ConnectiveCounts {
    int conj = 0, disj = 0, imp = 0, forall = 0, exists = 0;
    int total() const { return conj + disj + imp + forall + exists; }
    bool operator==(const ConnectiveCounts&) const = default;
};

// Neg nodes contribute nothing, in particular not to the -> count.
ConnectiveCounts count_connectives(const FormulaPtr& f);

int count_negs(const FormulaPtr& f);

// ── Transformations ─────────────────────────────────────────────────────────

// Replaces every Neg(X) by Imp(X, Bot), recursively.  Idempotent.
FormulaPtr expand_neg(const FormulaPtr& f);

std::set<std::string> free_vars(const FormulaPtr& f);

bool is_propositional(const FormulaPtr& f);  // quantifier-free
bool is_closed(const FormulaPtr& f);

// Substitutes a term for a free variable.  The term must not contain
// variables that could be captured (callers instantiate with fresh
// parameters or ground terms only).
FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const Term& t);

// Replaces every Bot node by the given formula (the minimal-logic device).
FormulaPtr replace_bot(const FormulaPtr& f, const FormulaPtr& with);

// Fresh provenance tags on every connective and quantifier node, preorder,
// starting at `next`; `next` is advanced past the last tag used.
FormulaPtr annotate(const FormulaPtr& f, std::uint64_t& next);

std::set<std::uint64_t> collect_tags(const FormulaPtr& f);

}  // namespace negtrans
