#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "negtrans/formula.hpp"
#include "negtrans/translations.hpp"

namespace negtrans {

struct GeneratorConfig {
    std::uint64_t seed = 1;
    int max_depth = 4;
    double weight_and = 1.0, weight_or = 1.0, weight_imp = 1.0, weight_neg = 0.7;
    double weight_bot = 0.1, weight_top = 0.1;
    std::vector<std::pair<std::string, int>> predicates = {{"P", 0}, {"Q", 0}, {"R", 0}};
    double quantifier_prob = 0.0;
    bool propositional_only = true;
};

GeneratorConfig propositional_config(std::uint64_t seed, int max_depth = 4);
// Unary predicates and quantifiers enabled; generated formulas are closed.
GeneratorConfig quantified_config(std::uint64_t seed, int max_depth = 4,
                                  double quantifier_prob = 0.45);

// Deterministic per seed; closed formulas when quantifiers are enabled.
std::vector<FormulaPtr> gen_formulas(const GeneratorConfig& cfg, int n);

// Propositional NNF corpus, derived via nnf() from a generated corpus.
std::vector<NnfPtr> gen_nnf_formulas(const GeneratorConfig& cfg, int n);

}  // namespace negtrans
