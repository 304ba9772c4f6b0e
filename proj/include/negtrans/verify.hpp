// One named, runnable verification per stated result: the equivalence table,
// the maximal-simplification propositions, the path lemmas and corollaries,
// the translation identities, and the minimal-logic/monadic claims.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "negtrans/generator.hpp"
#include "negtrans/kripke.hpp"
#include "negtrans/rewrite.hpp"
#include "negtrans/translations.hpp"

namespace negtrans {

struct VerifyOptions {
    std::uint64_t seed = 1;
    int prop_corpus = 500;       // propositional formulas per property
    int quant_corpus = 500;      // quantified sources per rule set
    int nnf_corpus = 200;        // propositional NNF formulas
    int pairwise_corpus = 60;    // pairwise translation-equivalence sample
    int exhaustive_corpus = 140; // pool filtered down to small sources
    int small_symbol_cap = 6;    // max logical symbols for exhaustive paths
    long path_budget = 4000000;
    int fo_depth = 12;
    kripke::SearchBounds bounds{3, 2, kripke::FrameCatalog::Standard};
    kripke::SearchBounds agreement_bounds{4, 2, kripke::FrameCatalog::Standard};
};

enum class CheckStatus { Pass, Fail, PassWithGaps };

const char* to_string(CheckStatus s);

struct Evidence {
    std::string instance;  // replayable formula or schema text
    std::string verdict;
    std::string witness;   // countermodel or mismatch detail
};

struct CheckResult {
    std::string id;
    std::vector<std::string> covers;  // result keys from named_results()
    CheckStatus status = CheckStatus::Pass;
    int instances = 0;                // total instances examined
    std::vector<Evidence> failures;
    std::vector<std::string> gaps;    // documented-gap notes
    double wall_ms = 0.0;
};

// The five checks.
CheckResult check_equiv_lemma(const VerifyOptions& opts = {});
CheckResult check_simplification_props(const VerifyOptions& opts = {});
CheckResult check_path_lemmas(const VerifyOptions& opts = {});
CheckResult check_translation_props(const VerifyOptions& opts = {});
CheckResult check_ml_and_monads(const VerifyOptions& opts = {});

const std::vector<std::string>& check_ids();
CheckResult run_check(const std::string& id, const VerifyOptions& opts = {});

// Every verified result, keyed descriptively, with the check that covers it.
// The suite fails if some listed result is not covered by exactly one check.
const std::vector<std::pair<std::string, std::string>>& named_results();

std::vector<CheckResult> run_all(const VerifyOptions& opts = {});

struct Summary {
    int pass = 0, fail = 0, gaps = 0;
};
Summary summarize(const std::vector<CheckResult>& results);

}  // namespace negtrans
