#include "doctest.h"

#include "negtrans/rewrite.hpp"
#include "negtrans/verify.hpp"

using namespace negtrans;

namespace {
VerifyOptions small_opts(std::uint64_t seed = 1) {
    VerifyOptions o;
    o.seed = seed;
    o.prop_corpus = 60;
    o.quant_corpus = 60;
    o.nnf_corpus = 40;
    o.pairwise_corpus = 15;
    o.exhaustive_corpus = 60;
    return o;
}
}  // namespace

TEST_CASE("equiv lemma check passes with the two documented gaps") {
    CheckResult r = check_equiv_lemma(small_opts());
    CHECK(r.status == CheckStatus::PassWithGaps);
    CHECK(r.failures.empty());
    CHECK(r.gaps.size() == 2);
}

TEST_CASE("path lemmas check passes on a reduced corpus") {
    CheckResult r = check_path_lemmas(small_opts());
    for (const auto& f : r.failures)
        MESSAGE(f.instance, " -- ", f.verdict, " ", f.witness);
    CHECK(r.status == CheckStatus::Pass);
}

TEST_CASE("translation properties check passes on a reduced corpus") {
    CheckResult r = check_translation_props(small_opts());
    for (const auto& f : r.failures)
        MESSAGE(f.instance, " -- ", f.verdict, " ", f.witness);
    CHECK(r.status == CheckStatus::Pass);
}

TEST_CASE("ml and monads check passes on a reduced corpus") {
    CheckResult r = check_ml_and_monads(small_opts());
    for (const auto& f : r.failures)
        MESSAGE(f.instance, " -- ", f.verdict, " ", f.witness);
    CHECK(r.status == CheckStatus::Pass);
}

TEST_CASE("check statuses are stable across seeds") {
    for (const auto& id : {"lemma-equiv", "path-lemmas", "translation-props"}) {
        CheckResult a = run_check(id, small_opts(1));
        CheckResult b = run_check(id, small_opts(99));
        CHECK(a.status == b.status);
    }
}

TEST_CASE("fault injection: a corrupted rule is rejected with a witness") {
    // Inject a forall rule into the r1 family; validation must refuse it.
    RewriteRule injected{Side::Inside, NegMark::Double, Conn::Forall, Conn::Forall,
                         NegMark::Single, NegMark::None};
    RuleValidation v = validate_rule(injected, {});
    CHECK(v.status == RuleValidation::Invalid);
    CHECK(!v.witness.empty());
}

TEST_CASE("named results map onto the five checks") {
    for (const auto& [result, check_id] : named_results()) {
        bool known = false;
        for (const auto& id : check_ids()) known |= id == check_id;
        CHECK(known);
    }
    CHECK(named_results().size() >= 30);
}

TEST_CASE("unknown check id") { CHECK_THROWS(run_check("nope", small_opts())); }
