// Finite first-order Kripke models and bounded countermodel search: the
// refutation oracle for intuitionistically unprovable formulas.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "negtrans/formula.hpp"

namespace negtrans::kripke {

struct KripkeModel {
    int num_worlds = 0;
    // leq[w][v]: world v is accessible from w (reflexive-transitive).
    std::vector<std::vector<bool>> leq;
    // Per-world domains; must be monotone along leq.
    std::vector<std::vector<int>> domain;
    // (world, predicate, element tuple); must be upward closed along leq.
    std::set<std::tuple<int, std::string, std::vector<int>>> valuation;

    bool holds(int w, const std::string& pred, const std::vector<int>& tuple) const {
        return valuation.count({w, pred, tuple}) > 0;
    }
    bool in_domain(int w, int d) const;
};

enum class FrameCatalog {
    Standard,   // chains, forks and the diamond, up to max_worlds
    FullPosets  // every preorder up to max_worlds (audit mode)
};

struct SearchBounds {
    int max_worlds = 3;
    int max_domain = 2;
    FrameCatalog catalog = FrameCatalog::Standard;
};

using Environment = std::map<std::string, int>;

// Standard forcing.  Neg is evaluated as its expand_neg image; the universal
// quantifier ranges over the domains of all accessible worlds.  Throws on
// unbound variables.
bool forces(const KripkeModel& m, int w, const Environment& env, const FormulaPtr& f);

// Verifies the preorder, domain-monotonicity and valuation-monotonicity
// invariants.
bool check_monotone(const KripkeModel& m);

struct Countermodel {
    KripkeModel model;
    int world = 0;
};

// Enumerates frames, monotone domain assignments and monotone valuations,
// returning the first model and world where f fails.  Empty result only
// means nothing was found within the bounds.
std::optional<Countermodel> find_countermodel(const FormulaPtr& f, const SearchBounds& b);

// Deterministic sample of models over the predicate signature of f; used by
// property tests.
std::vector<KripkeModel> enumerate_models(const FormulaPtr& f, const SearchBounds& b,
                                          std::size_t limit);

std::string describe(const KripkeModel& m);
std::string describe(const Countermodel& c);

// Schemas that are classically valid and intuitionistically invalid yet hold
// in every finite Kripke model, so the countermodel search cannot witness
// their failure.  In a finite model every maximal world forces classically,
// which validates these double-negation shifts; refutations need an infinite
// frame.  Status is literature-standard, not machine-checked.
struct CuratedRefutation {
    std::string id;            // stable key, e.g. "dns-forall"
    FormulaPtr failing;        // the implication that fails intuitionistically
    std::string status;
};

const std::vector<CuratedRefutation>& curated_refutations();

// Matches the intuitionistically failing implication of a schema against the
// curated table (structural equality).
const CuratedRefutation* curated_lookup(const FormulaPtr& failing_direction);

}  // namespace negtrans::kripke
