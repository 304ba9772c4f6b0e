#include "doctest.h"

#include <algorithm>
#include <functional>

#include "negtrans/generator.hpp"
#include "negtrans/parser.hpp"
#include "negtrans/rewrite.hpp"
#include "negtrans/translations.hpp"

using namespace negtrans;

TEST_CASE("rule schemas render and recognize") {
    RuleSet r1 = builtin_rule_set("r1");
    const RewriteRule* conj_rule = r1.rule_for(Conn::And);
    REQUIRE(conj_rule);
    CHECK(to_string(*conj_rule) == "~~(~~A & ~~B) => ~~(A & B)");
    const RewriteRule* ex_rule = r1.rule_for(Conn::Exists);
    REQUIRE(ex_rule);
    CHECK(to_string(*ex_rule) == "~~exists x. ~~A => ~~exists x. A");

    RuleSet r4 = builtin_rule_set("r4");
    CHECK(to_string(*r4.rule_for(Conn::Or)) == "~(~~A | ~~B) => ~A & ~B");

    for (const std::string& name : builtin_rule_set_names()) {
        RuleSet rs = builtin_rule_set(name);
        RuleSet back = parse_rule_set(to_text(rs), name);
        CHECK(back.rules == rs.rules);
        CHECK(back.side == rs.side);
        CHECK(back.n == rs.n);
    }
    CHECK(!recognize_rule(parse("P & Q"), parse("Q & P")).has_value());
    // Different bound-variable names are accepted.
    auto r = recognize_rule(parse("~~exists y. ~~A"), parse("~~exists y. A"));
    REQUIRE(r.has_value());
    CHECK(*r == *ex_rule);
}

TEST_CASE("rule validation") {
    ValidationOptions opts;
    RewriteRule good{Side::Inside, NegMark::Double, Conn::And, Conn::And, NegMark::None,
                     NegMark::None};
    CHECK(validate_rule(good, opts).status == RuleValidation::Valid);

    // ~~(~~A | ~~B) => ~~A | ~~B is classically fine but not IL-valid.
    RewriteRule bad{Side::Outside, NegMark::Double, Conn::Or, Conn::Or, NegMark::None,
                    NegMark::None};
    RuleValidation v = validate_rule(bad, opts);
    CHECK(v.status == RuleValidation::Invalid);
    CHECK(!v.witness.empty());

    // ~~(~~A & ~~B) => ~~A & ~~B is valid.
    RewriteRule keep{Side::Outside, NegMark::Double, Conn::And, Conn::And, NegMark::None,
                     NegMark::None};
    CHECK(validate_rule(keep, opts).status == RuleValidation::Valid);

    // No negation decrease.
    RewriteRule lateral{Side::Inside, NegMark::Double, Conn::And, Conn::And, NegMark::Double,
                        NegMark::Double};
    CHECK(validate_rule(lateral, opts).status == RuleValidation::Invalid);
    CHECK(validate_rule(lateral, opts).reason.find("negation count") != std::string::npos);

    // The double-negation shift candidate is undecidable within finite
    // bounds.
    RewriteRule dns{Side::Inside, NegMark::Double, Conn::Forall, Conn::Forall, NegMark::None,
                    NegMark::None};
    CHECK(validate_rule(dns, opts).status == RuleValidation::Unknown);

    // Every rule of r1..r4 and of the named fragments validates.
    for (const std::string name :
         {"r1", "r2", "r3", "r4", "r3_prime", "r1_tilde", "r1_minus_and",
          "example_nonmaximal"}) {
        for (const auto& [sym, rule] : builtin_rule_set(name).rules)
            CHECK(validate_rule(rule, opts).status == RuleValidation::Valid);
    }
}

TEST_CASE("redex matching") {
    RuleSet r1 = builtin_rule_set("r1");
    auto redexes = find_redexes(parse("~~(~~P & ~~Q)"), r1);
    REQUIRE(redexes.size() == 1);
    CHECK(redexes[0].pos.empty());

    // Exhaustively matched positions on the nested example.  Built directly:
    // the 0-ary and 1-ary uses of P would not pass the parser's arity check.
    FormulaPtr f = negs(
        2, conj(negs(2, conj(negs(2, atom("P")), negs(2, atom("Q")))),
                negs(2, exists("x", negs(2, atom("P", {Term::var("x")}))))));
    auto rds = find_redexes(f, r1);
    std::vector<Position> got;
    for (const auto& rd : rds) got.push_back(rd.pos);
    std::sort(got.begin(), got.end());
    std::vector<Position> want = {{}, {0, 0, 0}, {0, 0, 1}};
    CHECK(got == want);

    // Independent shape check at every position, r1 rules hand-coded.
    std::vector<Position> naive;
    std::function<void(const FormulaPtr&, Position&)> walk = [&](const FormulaPtr& g,
                                                                 Position& pos) {
        auto dn = [](const FormulaPtr& x) {
            return x->kind == Conn::Neg && x->left->kind == Conn::Neg ? x->left->left : nullptr;
        };
        if (FormulaPtr body = dn(g)) {
            if (is_binary(body->kind) && dn(body->left) && dn(body->right))
                naive.push_back(pos);
            else if (body->kind == Conn::Exists && dn(body->left))
                naive.push_back(pos);
        }
        if (g->left) {
            pos.push_back(0);
            walk(g->left, pos);
            pos.pop_back();
        }
        if (g->right) {
            pos.push_back(1);
            walk(g->right, pos);
            pos.pop_back();
        }
    };
    Position p;
    walk(f, p);
    std::sort(naive.begin(), naive.end());
    CHECK(naive == got);

    CHECK(find_redexes(parse("P & Q"), r1).empty());
}

TEST_CASE("apply_at and nested negation decomposition") {
    RuleSet r2 = builtin_rule_set("r2");
    FormulaPtr f = parse("~~(~~P | ~~Q)");
    auto rds = find_redexes(f, r2);
    REQUIRE(rds.size() == 1);
    CHECK(rds[0].rule.symbol == Conn::Or);
    FormulaPtr out = apply_at(f, rds[0].pos, rds[0].rule);
    CHECK(to_string(out) == "~(~P & ~Q)");
    CHECK_THROWS(apply_at(parse("P"), {}, rds[0].rule));
}

TEST_CASE("provenance tags transfer to the result symbol") {
    std::uint64_t next = 1;
    FormulaPtr f = annotate(parse("~~(~~P & ~~Q)"), next);
    std::uint64_t and_tag = f->left->left->tag;
    CHECK(and_tag != 0);
    RuleSet r2 = builtin_rule_set("r2");
    auto rds = find_redexes(f, r2);
    REQUIRE(rds.size() == 1);
    FormulaPtr out = apply_at(f, rds[0].pos, rds[0].rule);
    // ~(~P | ~Q): the disjunction inherits the conjunction's tag.
    CHECK(out->left->tag == and_tag);
}

TEST_CASE("standard paths") {
    TranslationSpec ko = builtin_translation("kolmogorov");
    RuleSet r1 = builtin_rule_set("r1");

    FormulaPtr a = parse("P & exists x. Q(x)");
    SimplificationPath p = standard_path(apply_translation(ko, a), r1);
    CHECK(p.length() == 2);
    CHECK(to_string(p.last()) == "~~(P & exists x. Q(x))");
    // Confirmed by exhaustive enumeration: unique longest endpoint.
    auto all = enumerate_all_paths(apply_translation(ko, a), r1, 100000);
    int max_len = 0;
    for (const auto& q : all) max_len = std::max(max_len, q.length());
    CHECK(max_len == 2);
    for (const auto& q : all)
        if (q.length() == max_len) CHECK(equal(q.last(), p.last()));

    RuleSet r2 = builtin_rule_set("r2");
    SimplificationPath p2 = standard_path(apply_translation(ko, parse("P & Q")), r2);
    CHECK(p2.length() == 1);
    CHECK(to_string(p2.last()) == "~(~P | ~Q)");

    SimplificationPath p3 = standard_path(apply_translation(ko, parse("P")), r1);
    CHECK(p3.length() == 0);
    CHECK(to_string(p3.last()) == "~~P");
}

TEST_CASE("expected lengths") {
    RuleSet r1 = builtin_rule_set("r1");
    RuleSet r2 = builtin_rule_set("r2");
    FormulaPtr a = parse("P & exists x. Q(x)");
    CHECK(expected_length(a, r1) == 2);
    CHECK(expected_length(a, r2) == 1);
    CHECK(expected_length(parse("P"), r1) == 0);
    // Negations in the source count through their expansion.
    CHECK(expected_length(parse("~P"), r1) == 1);
}

TEST_CASE("path enumeration budget") {
    TranslationSpec ko = builtin_translation("kolmogorov");
    FormulaPtr big = apply_translation(
        ko, parse("(P & Q) & (P & Q) & (P & Q) & (P & Q) & (P & Q) & (P & Q)"));
    CHECK_THROWS_AS(enumerate_all_paths(big, builtin_rule_set("r1"), 50),
                    PathBudgetExceeded);
}

TEST_CASE("maximal enumeration finds exactly the four sets") {
    MaximalEnumeration me = enumerate_maximal({});
    REQUIRE(me.maximal_sets.size() == 4);
    for (const std::string name : {"r1", "r2", "r3", "r4"}) {
        RuleSet rs = builtin_rule_set(name);
        bool found = false;
        for (const auto& s : me.maximal_sets)
            found |= s.side == rs.side && s.n == rs.n && s.rules == rs.rules;
        CHECK(found);
    }
    CHECK(me.undecided.empty());
    // 2 sides x 2 negation choices x 2 quantifiers x 6 shapes.
    CHECK(me.quantifier_candidates.size() == 48);
    int curated = 0, refuted = 0, accepted = 0;
    for (const auto& rep : me.quantifier_candidates) {
        if (rep.outcome == CandidateReport::Curated) ++curated;
        if (rep.outcome == CandidateReport::Refuted) ++refuted;
        if (rep.outcome == CandidateReport::Accepted) ++accepted;
    }
    CHECK(accepted == 4);  // the quantifier rules of r1..r4
    CHECK(curated == 2);   // the two double-negation-shift blockers
    CHECK(refuted > 0);
}
