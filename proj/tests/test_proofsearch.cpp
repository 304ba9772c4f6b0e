#include "doctest.h"

#include "negtrans/generator.hpp"
#include "negtrans/parser.hpp"
#include "negtrans/proofsearch.hpp"

using namespace negtrans;

namespace {
Decision ipc(const char* s) { return prove_ipc(parse(s)); }
Decision cpc(const char* s) { return prove_cpc(parse(s)); }
Decision ml(const char* s) { return prove_minimal(parse(s)); }
Decision fo(const char* s, Logic l, int d = 12) { return prove_fo_bounded(parse(s), l, d); }
}  // namespace

TEST_CASE("classical propositional decision") {
    CHECK(cpc("P | ~P").proved());
    CHECK(cpc("P").refuted());
    CHECK(cpc("((P -> Q) -> P) -> P").proved());
    CHECK(cpc("~(~~P & ~~Q) -> (~P | ~Q)").proved());
    CHECK(cpc("(~P | ~Q) -> ~(~~P & ~~Q)").proved());
    CHECK(cpc("bot -> P").proved());
    CHECK(cpc("P -> bot").refuted());
    CHECK(cpc("top").proved());
    CHECK_THROWS(prove_cpc(parse("forall x. P(x)")));
}

TEST_CASE("intuitionistic propositional decision: known facts") {
    CHECK(ipc("P -> P").proved());
    CHECK(ipc("P -> ~~P").proved());
    CHECK(ipc("~~P -> P").refuted());
    CHECK(ipc("P | ~P").refuted());
    CHECK(ipc("~~(P | ~P)").proved());
    CHECK(ipc("((P -> Q) -> P) -> P").refuted());
    CHECK(ipc("~~(((P -> Q) -> P) -> P)").proved());
    CHECK(ipc("~~~P -> ~P").proved());
    CHECK(ipc("(P -> Q) -> (~Q -> ~P)").proved());
    CHECK(ipc("(~Q -> ~P) -> (P -> Q)").refuted());
    CHECK(ipc("bot -> P").proved());
    CHECK(ipc("(P & Q -> R) -> (P -> Q -> R)").proved());
    // Disjunction under double negation.
    CHECK(ipc("~~(~~P | ~~Q) -> (~~~P -> ~~Q)").proved());
    CHECK(ipc("~~(~~P | ~~Q) -> (~~P | ~~Q)").refuted());
}

TEST_CASE("minimal logic: no ex falso") {
    CHECK(ml("bot -> P").refuted());
    CHECK(ml("bot -> bot").proved());
    CHECK(ml("P -> ~~P").proved());
    CHECK(ml("(P -> Q) -> (~Q -> ~P)").proved());
    CHECK(ml("~~(~~P -> ~~Q) -> ~~(P -> Q)").refuted());
    CHECK(ipc("~~(~~P -> ~~Q) -> ~~(P -> Q)").proved());
    CHECK(ml("~~(~~P -> ~~Q) -> ~~(P -> ~~Q)").proved());
    CHECK(ml("~~(P -> ~~Q) -> ~~(~~P -> ~~Q)").proved());
}

TEST_CASE("minimal implies intuitionistic implies classical, on a corpus") {
    for (const auto& f : gen_formulas(propositional_config(31, 4), 300)) {
        bool m = prove_minimal(f).proved();
        bool i = prove_ipc(f).proved();
        bool c = prove_cpc(f).proved();
        if (m) CHECK(i);
        if (i) CHECK(c);
    }
}

TEST_CASE("glivenko") {
    CHECK(glivenko_check(parse("P | ~P")));
    CHECK(glivenko_check(parse("((P -> Q) -> P) -> P")));
    CHECK(glivenko_check(parse("P")));
    for (const auto& f : gen_formulas(propositional_config(77, 4), 300))
        CHECK(glivenko_check(f));
}

TEST_CASE("bounded first-order search: intuitionistic facts") {
    CHECK(fo("~~(exists x. ~~P(x)) -> ~~exists x. P(x)", Logic::Intuitionistic).proved());
    CHECK(fo("~~(exists x. P(x)) -> ~~exists x. ~~P(x)", Logic::Intuitionistic).proved());
    CHECK(fo("~(exists x. ~~P(x)) -> forall x. ~P(x)", Logic::Intuitionistic).proved());
    CHECK(fo("(forall x. ~P(x)) -> ~exists x. ~~P(x)", Logic::Intuitionistic).proved());
    CHECK(fo("(forall x. P(x)) -> ~exists x. ~P(x)", Logic::Intuitionistic).proved());
    // Sound search never proves an unprovable schema, at any depth tried.
    for (int depth : {6, 10, 12, 14})
        CHECK(!fo("~~(forall x. ~~P(x)) -> ~~forall x. P(x)", Logic::Intuitionistic, depth)
                   .proved());
}

TEST_CASE("bounded first-order search: classical facts") {
    CHECK(fo("~~(forall x. ~~P(x)) -> ~~forall x. P(x)", Logic::Classical).proved());
    CHECK(fo("~(forall x. P(x)) -> ~~exists x. ~P(x)", Logic::Classical).proved());
    CHECK(fo("~~(exists x. ~~P(x)) -> exists x. ~~P(x)", Logic::Classical).proved());
    CHECK(fo("~(forall x. ~~P(x)) -> exists x. ~P(x)", Logic::Classical).proved());
    CHECK(fo("(exists x. P(x)) -> forall x. P(x)", Logic::Classical).verdict ==
          Verdict::Unknown);
}

TEST_CASE("prove() routes by quantification") {
    CHECK(prove(parse("P | ~P"), Logic::Classical, 12).proved());
    CHECK(prove(parse("P | ~P"), Logic::Intuitionistic, 12).refuted());
    CHECK(prove(parse("forall x. P(x) -> P(x)"), Logic::Intuitionistic, 12).proved());
}
