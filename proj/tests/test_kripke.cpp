#include "doctest.h"

#include <algorithm>
#include <functional>

#include "negtrans/generator.hpp"
#include "negtrans/kripke.hpp"
#include "negtrans/parser.hpp"
#include "negtrans/proofsearch.hpp"

using namespace negtrans;
using namespace negtrans::kripke;

namespace {

KripkeModel single_world(const std::vector<std::string>& true_atoms) {
    KripkeModel m;
    m.num_worlds = 1;
    m.leq = {{true}};
    m.domain = {{0}};
    for (const auto& a : true_atoms) m.valuation.insert({0, a, {}});
    return m;
}

KripkeModel two_chain_growing() {
    // w0 <= w1, domains {0} and {0,1}, P true of 1 at w1 only.
    KripkeModel m;
    m.num_worlds = 2;
    m.leq = {{true, true}, {false, true}};
    m.domain = {{0}, {0, 1}};
    m.valuation.insert({1, "P", {1}});
    return m;
}

KripkeModel three_fork() {
    // root w0 below incomparable w1 (P) and w2 (Q).
    KripkeModel m;
    m.num_worlds = 3;
    m.leq = {{true, true, true}, {false, true, false}, {false, false, true}};
    m.domain = {{0}, {0}, {0}};
    m.valuation.insert({1, "P", {}});
    m.valuation.insert({2, "Q", {}});
    return m;
}

}  // namespace

namespace {
// Classical truth under a fixed valuation, via substitution and cpc.
bool classical_truth(const FormulaPtr& f, const std::vector<std::string>& true_atoms) {
    std::function<FormulaPtr(const FormulaPtr&)> subst =
        [&](const FormulaPtr& g) -> FormulaPtr {
        if (g->kind == Conn::Atom) {
            bool t = std::find(true_atoms.begin(), true_atoms.end(), g->name) !=
                     true_atoms.end();
            return t ? top() : bot();
        }
        if (g->kind == Conn::Bot || g->kind == Conn::Top) return g;
        if (g->kind == Conn::Neg) return neg(subst(g->left));
        return make(g->kind, subst(g->left), subst(g->right));
    };
    return prove_cpc(subst(f)).proved();
}
}  // namespace

TEST_CASE("single-world forcing is classical evaluation") {
    KripkeModel m = single_world({"P"});
    CHECK(forces(m, 0, {}, parse("P")));
    CHECK(forces(m, 0, {}, parse("P | Q")));
    CHECK(!forces(m, 0, {}, parse("Q")));
    CHECK(forces(m, 0, {}, parse("~Q")));
    CHECK(forces(m, 0, {}, parse("~~P -> P")));
    CHECK(forces(m, 0, {}, parse("Q | ~Q")));
    for (const auto& f : gen_formulas(propositional_config(3, 4), 150)) {
        CHECK(forces(single_world({"P"}), 0, {}, f) == classical_truth(f, {"P"}));
        CHECK(forces(single_world({}), 0, {}, f) == classical_truth(f, {}));
        CHECK(forces(single_world({"P", "Q", "R"}), 0, {}, f) ==
              classical_truth(f, {"P", "Q", "R"}));
    }
}

TEST_CASE("two-world chain with growing domain") {
    KripkeModel m = two_chain_growing();
    REQUIRE(check_monotone(m));
    CHECK(forces(m, 0, {}, parse("~~exists x. P(x)")));
    CHECK(!forces(m, 0, {}, parse("exists x. ~~P(x)")));
}

TEST_CASE("three-world fork refutes double-negated disjunction splitting") {
    KripkeModel m = three_fork();
    REQUIRE(check_monotone(m));
    CHECK(forces(m, 0, {}, parse("~~(~~P | ~~Q)")));
    CHECK(!forces(m, 0, {}, parse("~~P | ~~Q")));
}

TEST_CASE("monotonicity checker rejects bad models") {
    KripkeModel m = single_world({});
    m.num_worlds = 2;
    m.leq = {{true, true}, {false, true}};
    m.domain = {{0}, {0}};
    m.valuation.insert({0, "P", {}});  // true at root, false above
    CHECK(!check_monotone(m));

    KripkeModel shrink;
    shrink.num_worlds = 2;
    shrink.leq = {{true, true}, {false, true}};
    shrink.domain = {{0, 1}, {0}};  // domain shrinks upward
    CHECK(!check_monotone(shrink));

    KripkeModel grow;
    grow.num_worlds = 2;
    grow.leq = {{true, true}, {false, true}};
    grow.domain = {{}, {0}};  // empty below nonempty is fine
    CHECK(check_monotone(grow));
}

TEST_CASE("countermodel search finds the standard refutations") {
    SearchBounds b{3, 2, FrameCatalog::Standard};
    auto cm1 = find_countermodel(parse("~~P -> P"), b);
    REQUIRE(cm1.has_value());
    CHECK(check_monotone(cm1->model));
    CHECK(!forces(cm1->model, cm1->world, {}, parse("~~P -> P")));

    auto cm2 = find_countermodel(parse("~~(~~P | ~~Q) -> (~~P | ~~Q)"), b);
    REQUIRE(cm2.has_value());
    CHECK(check_monotone(cm2->model));

    auto cm3 = find_countermodel(parse("~(~~P & ~~Q) -> (~P | ~Q)"), b);
    REQUIRE(cm3.has_value());

    auto cm4 = find_countermodel(parse("~~(exists x. ~~P(x)) -> exists x. ~~P(x)"), b);
    REQUIRE(cm4.has_value());
    CHECK(cm4->model.num_worlds <= 2);

    // Intuitionistically valid formulas admit no countermodel.
    CHECK(!find_countermodel(parse("P -> ~~P"), b).has_value());
    CHECK(!find_countermodel(parse("~~(~~P & ~~Q) -> ~~(P & Q)"), b).has_value());
}

TEST_CASE("search respects validity of the curated schemas on finite frames") {
    SearchBounds b{3, 2, FrameCatalog::Standard};
    for (const auto& entry : curated_refutations()) {
        CHECK(!find_countermodel(entry.failing, b).has_value());
        CHECK(!prove_fo_bounded(entry.failing, Logic::Intuitionistic, 12).proved());
        CHECK(prove_fo_bounded(entry.failing, Logic::Classical, 12).proved());
    }
    CHECK(curated_lookup(parse("~~(forall x. ~~A(x)) -> ~~forall x. A(x)")) != nullptr);
    CHECK(curated_lookup(parse("P -> P")) == nullptr);
}

TEST_CASE("forcing is monotone on enumerated models") {
    FormulaPtr sig = parse("(P & Q) | exists x. R(x)");
    SearchBounds b{3, 2, FrameCatalog::Standard};
    auto models = enumerate_models(sig, b, 80);
    REQUIRE(models.size() > 10);
    auto corpus = gen_formulas(propositional_config(13, 3), 25);
    for (const auto& m : models) {
        REQUIRE(check_monotone(m));
        for (const auto& f : corpus) {
            for (int w = 0; w < m.num_worlds; ++w) {
                if (!forces(m, w, {}, f)) continue;
                for (int v = 0; v < m.num_worlds; ++v)
                    if (m.leq[w][v]) CHECK(forces(m, v, {}, f));
            }
        }
    }
}

TEST_CASE("ipc decision agrees with countermodel search on a corpus") {
    SearchBounds b{3, 2, FrameCatalog::Standard};
    for (const auto& f : gen_formulas(propositional_config(21, 3), 120)) {
        bool refuted = prove_ipc(f).refuted();
        bool model = find_countermodel(f, b).has_value();
        if (model) CHECK(refuted);  // soundness, unconditionally
        CHECK(refuted == model);    // completeness at corpus scale
    }
}
