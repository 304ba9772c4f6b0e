#include "negtrans/generator.hpp"

namespace negtrans {

GeneratorConfig propositional_config(std::uint64_t seed, int max_depth) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.max_depth = max_depth;
    return cfg;
}

GeneratorConfig quantified_config(std::uint64_t seed, int max_depth, double quantifier_prob) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    cfg.max_depth = max_depth;
    cfg.propositional_only = false;
    cfg.quantifier_prob = quantifier_prob;
    cfg.predicates = {{"P", 1}, {"Q", 1}, {"R", 0}};
    return cfg;
}

namespace {

class Gen {
public:
    Gen(const GeneratorConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

    FormulaPtr formula() {
        var_depth_ = 0;
        return gen(cfg_.max_depth);
    }

private:
    double uniform() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng_); }
    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    FormulaPtr leaf() {
        double total = cfg_.weight_bot + cfg_.weight_top + 1.0;
        double r = uniform() * total;
        if (r < cfg_.weight_bot) return bot();
        if (r < cfg_.weight_bot + cfg_.weight_top) return top();
        // Atoms over in-scope variables only, so formulas stay closed.
        std::vector<std::pair<std::string, int>> usable;
        for (const auto& p : cfg_.predicates)
            if (p.second <= var_depth_) usable.push_back(p);
        if (usable.empty()) usable.push_back({"P0", 0});
        const auto& [name, arity] = usable[pick(static_cast<int>(usable.size()))];
        std::vector<Term> args;
        for (int i = 0; i < arity; ++i) args.push_back(Term::var(var_name(pick(var_depth_))));
        return atom(name, std::move(args));
    }

    static std::string var_name(int i) { return "x" + std::to_string(i); }

    FormulaPtr gen(int depth) {
        if (depth <= 0) return leaf();
        if (!cfg_.propositional_only && uniform() < cfg_.quantifier_prob) {
            std::string v = var_name(var_depth_++);
            FormulaPtr body = gen(depth - 1);
            --var_depth_;
            return pick(2) ? forall(v, body) : exists(v, body);
        }
        double wa = cfg_.weight_and, wo = cfg_.weight_or, wi = cfg_.weight_imp,
               wn = cfg_.weight_neg;
        double leaf_w = 0.8;
        double r = uniform() * (wa + wo + wi + wn + leaf_w);
        if (r < wa) return conj(gen(depth - 1), gen(depth - 1));
        r -= wa;
        if (r < wo) return disj(gen(depth - 1), gen(depth - 1));
        r -= wo;
        if (r < wi) return imp(gen(depth - 1), gen(depth - 1));
        r -= wi;
        if (r < wn) return neg(gen(depth - 1));
        return leaf();
    }

    const GeneratorConfig& cfg_;
    std::mt19937_64 rng_;
    int var_depth_ = 0;
};

}  // namespace

std::vector<FormulaPtr> gen_formulas(const GeneratorConfig& cfg, int n) {
    Gen g(cfg);
    std::vector<FormulaPtr> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(g.formula());
    return out;
}

std::vector<NnfPtr> gen_nnf_formulas(const GeneratorConfig& cfg, int n) {
    std::vector<NnfPtr> out;
    out.reserve(n);
    for (const auto& f : gen_formulas(cfg, n)) out.push_back(nnf(f));
    return out;
}

}  // namespace negtrans
