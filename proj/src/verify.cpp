#include "negtrans/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "negtrans/parser.hpp"

namespace negtrans {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::PassWithGaps: return "pass-with-documented-gaps";
    }
    return "?";
}

namespace {

struct Checker {
    CheckResult res;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    Checker(std::string id, std::vector<std::string> covers) {
        res.id = std::move(id);
        res.covers = std::move(covers);
    }

    void require(bool ok, const std::string& instance, const std::string& verdict,
                 const std::string& witness = "") {
        ++res.instances;
        if (!ok) {
            res.status = CheckStatus::Fail;
            if (res.failures.size() < 64) res.failures.push_back({instance, verdict, witness});
        }
    }

    void gap(const std::string& note) { res.gaps.push_back(note); }

    CheckResult finish() {
        if (res.status == CheckStatus::Pass && !res.gaps.empty())
            res.status = CheckStatus::PassWithGaps;
        res.wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
        return res;
    }
};

// ── The equivalence table ───────────────────────────────────────────────────

struct EquivItem {
    int number;
    FormulaPtr lhs, rhs;
    enum Cat {
        IlProp,           // provable in IL, propositional
        IlQuant,          // provable in IL, quantified
        ClProp,           // classical only; IL failure decided propositionally
        ClQuantFinite,    // classical only; IL failure has a finite countermodel
        ClQuantInfinite,  // classical only; no finite countermodel (documented)
    } cat;
    bool fails_ltr = true;  // classical-only items: which direction fails in IL
};

const std::vector<EquivItem>& equiv_items() {
    static const std::vector<EquivItem> items = [] {
        FormulaPtr A = atom("A"), B = atom("B");
        FormulaPtr Ax = atom("A", {Term::var("x")});
        auto fa = [&](FormulaPtr b) { return forall("x", std::move(b)); };
        auto ex = [&](FormulaPtr b) { return exists("x", std::move(b)); };
        std::vector<EquivItem> v;
        v.push_back({1, negs(2, conj(negs(2, A), negs(2, B))), negs(2, conj(A, B)),
                     EquivItem::IlProp});
        v.push_back({2, negs(2, disj(negs(2, A), negs(2, B))), negs(2, disj(A, B)),
                     EquivItem::IlProp});
        v.push_back({3, negs(2, imp(negs(2, A), negs(2, B))), negs(2, imp(A, B)),
                     EquivItem::IlProp});
        v.push_back({4, negs(2, ex(negs(2, Ax))), negs(2, ex(Ax)), EquivItem::IlQuant});
        v.push_back({5, negs(2, conj(neg(A), neg(B))), neg(disj(A, B)), EquivItem::IlProp});
        v.push_back({6, negs(2, disj(neg(A), neg(B))), neg(conj(A, B)), EquivItem::IlProp});
        v.push_back({7, negs(2, imp(neg(A), neg(B))), neg(conj(neg(A), B)), EquivItem::IlProp});
        v.push_back({8, negs(2, fa(neg(Ax))), neg(ex(Ax)), EquivItem::IlQuant});
        v.push_back({9, negs(2, conj(negs(2, A), negs(2, B))), conj(negs(2, A), negs(2, B)),
                     EquivItem::IlProp});
        v.push_back({10, negs(2, disj(negs(2, A), negs(2, B))), imp(negs(3, A), negs(2, B)),
                     EquivItem::IlProp});
        v.push_back({11, negs(2, imp(negs(2, A), negs(2, B))), imp(negs(2, A), negs(2, B)),
                     EquivItem::IlProp});
        v.push_back({12, negs(2, fa(negs(2, Ax))), fa(negs(2, Ax)), EquivItem::IlQuant});
        v.push_back({13, neg(conj(negs(2, A), negs(2, B))), imp(negs(2, A), neg(B)),
                     EquivItem::IlProp});
        v.push_back({14, neg(disj(negs(2, A), negs(2, B))), conj(neg(A), neg(B)),
                     EquivItem::IlProp});
        v.push_back({15, neg(imp(negs(2, A), negs(2, B))), conj(negs(2, A), neg(B)),
                     EquivItem::IlProp});
        v.push_back({16, neg(ex(negs(2, Ax))), fa(neg(Ax)), EquivItem::IlQuant});
        v.push_back({17, negs(2, fa(negs(2, Ax))), negs(2, fa(Ax)), EquivItem::ClQuantInfinite,
                     true});
        v.push_back({18, negs(2, ex(neg(Ax))), neg(fa(Ax)), EquivItem::ClQuantInfinite, false});
        v.push_back({19, negs(2, disj(negs(2, A), negs(2, B))), disj(negs(2, A), negs(2, B)),
                     EquivItem::ClProp, true});
        v.push_back({20, negs(2, ex(negs(2, Ax))), ex(negs(2, Ax)), EquivItem::ClQuantFinite,
                     true});
        v.push_back({21, neg(fa(negs(2, Ax))), ex(neg(Ax)), EquivItem::ClQuantFinite, true});
        v.push_back({22, neg(conj(negs(2, A), negs(2, B))), disj(neg(A), neg(B)),
                     EquivItem::ClProp, true});
        return v;
    }();
    return items;
}

std::string item_label(const EquivItem& it) {
    return "item " + std::to_string(it.number) + ": " + to_string(it.lhs) +
           " <-> " + to_string(it.rhs);
}

}  // namespace

// ── lemma-equiv ─────────────────────────────────────────────────────────────

CheckResult check_equiv_lemma(const VerifyOptions& opts) {
    Checker ck("lemma-equiv", {"double-negation equivalence table",
                               "classical-only equivalences classified"});
    for (const auto& it : equiv_items()) {
        FormulaPtr ltr = imp(it.lhs, it.rhs), rtl = imp(it.rhs, it.lhs);
        switch (it.cat) {
            case EquivItem::IlProp:
                ck.require(prove_ipc(iff(it.lhs, it.rhs)).proved(), item_label(it),
                           "expected IL-provable equivalence");
                break;
            case EquivItem::IlQuant: {
                bool fwd = prove_fo_bounded(ltr, Logic::Intuitionistic, opts.fo_depth).proved();
                bool bwd = prove_fo_bounded(rtl, Logic::Intuitionistic, opts.fo_depth).proved();
                ck.require(fwd && bwd, item_label(it),
                           "expected both directions IL-provable within depth " +
                               std::to_string(opts.fo_depth));
                break;
            }
            case EquivItem::ClProp: {
                ck.require(prove_cpc(iff(it.lhs, it.rhs)).proved(), item_label(it),
                           "expected CL-provable equivalence");
                const FormulaPtr& bad = it.fails_ltr ? ltr : rtl;
                const FormulaPtr& good = it.fails_ltr ? rtl : ltr;
                ck.require(prove_ipc(bad).refuted(), item_label(it),
                           "expected the failing direction IPC-refuted");
                ck.require(prove_ipc(good).proved(), item_label(it),
                           "expected the other direction IPC-provable");
                break;
            }
            case EquivItem::ClQuantFinite: {
                bool cl = prove_fo_bounded(ltr, Logic::Classical, opts.fo_depth).proved() &&
                          prove_fo_bounded(rtl, Logic::Classical, opts.fo_depth).proved();
                ck.require(cl, item_label(it), "expected both directions CL-provable");
                const FormulaPtr& bad = it.fails_ltr ? ltr : rtl;
                const FormulaPtr& good = it.fails_ltr ? rtl : ltr;
                auto cm = kripke::find_countermodel(bad, opts.bounds);
                ck.require(cm.has_value(), item_label(it),
                           "expected a finite countermodel for " + to_string(bad),
                           cm ? describe(*cm) : "");
                if (cm) {
                    bool small = cm->model.num_worlds <= 2;
                    for (const auto& d : cm->model.domain) small &= d.size() <= 2;
                    ck.require(small, item_label(it),
                               "expected a countermodel with <= 2 worlds and domain <= 2",
                               describe(*cm));
                }
                ck.require(
                    prove_fo_bounded(good, Logic::Intuitionistic, opts.fo_depth).proved(),
                    item_label(it), "expected the other direction IL-provable");
                break;
            }
            case EquivItem::ClQuantInfinite: {
                bool cl = prove_fo_bounded(ltr, Logic::Classical, opts.fo_depth).proved() &&
                          prove_fo_bounded(rtl, Logic::Classical, opts.fo_depth).proved();
                ck.require(cl, item_label(it), "expected both directions CL-provable");
                const FormulaPtr& bad = it.fails_ltr ? ltr : rtl;
                const FormulaPtr& good = it.fails_ltr ? rtl : ltr;
                ck.require(
                    prove_fo_bounded(good, Logic::Intuitionistic, opts.fo_depth).proved(),
                    item_label(it), "expected the other direction IL-provable");
                ck.require(
                    !prove_fo_bounded(bad, Logic::Intuitionistic, opts.fo_depth).proved(),
                    item_label(it), "sound search must not prove the failing direction");
                ck.require(!kripke::find_countermodel(bad, opts.bounds).has_value(),
                           item_label(it), "no finite countermodel expected");
                const auto* entry = kripke::curated_lookup(bad);
                ck.require(entry != nullptr, item_label(it),
                           "failing direction must be in the curated table");
                if (entry)
                    ck.gap("item " + std::to_string(it.number) + " (" + entry->id +
                           "): " + entry->status);
                break;
            }
        }
    }
    return ck.finish();
}

// ── simplification-props ────────────────────────────────────────────────────

namespace {
bool same_rules(const RuleSet& a, const RuleSet& b) {
    return a.side == b.side && a.n == b.n && a.rules == b.rules;
}
}  // namespace

CheckResult check_simplification_props(const VerifyOptions& opts) {
    Checker ck("simplification-props",
               {"maximal simplifications from inside", "maximal simplifications from outside",
                "uniqueness of the four maximal simplifications"});
    ValidationOptions vopts{opts.fo_depth, opts.bounds};

    for (const std::string name : {"r1", "r2", "r3", "r4"}) {
        RuleSet rs = builtin_rule_set(name);
        for (const auto& [sym, rule] : rs.rules) {
            RuleValidation v = validate_rule(rule, vopts);
            ck.require(v.status == RuleValidation::Valid, name + ": " + to_string(rule),
                       "expected a valid simplification rule", v.reason);
        }
    }

    MaximalEnumeration me = enumerate_maximal(vopts);
    ck.require(me.maximal_sets.size() == 4, "enumerate_maximal",
               "expected exactly four maximal sets, found " +
                   std::to_string(me.maximal_sets.size()));
    for (const std::string name : {"r1", "r2", "r3", "r4"}) {
        RuleSet rs = builtin_rule_set(name);
        bool found = false;
        for (const auto& s : me.maximal_sets) found |= same_rules(s, rs);
        ck.require(found, "enumerate_maximal", "maximal set matching " + name + " not found");
    }
    ck.require(me.undecided.empty(), "enumerate_maximal",
               "every rejected quantifier candidate must be countermodeled or curated",
               me.undecided.empty() ? "" : to_string(me.undecided.front().rule));
    for (const auto& rep : me.quantifier_candidates)
        if (rep.outcome == CandidateReport::Curated)
            ck.gap("quantifier candidate " + to_string(rep.rule) + " -> " + rep.detail);

    // Negation minimality of every chosen rule, by exhaustive replacement.
    for (const std::string name : {"r1", "r2", "r3", "r4"}) {
        RuleSet rs = builtin_rule_set(name);
        for (const auto& [sym, rule] : rs.rules) {
            int chosen = count_negs(rhs_schema(rule));
            const Conn conns[] = {Conn::And, Conn::Or, Conn::Imp};
            const Conn quants[] = {Conn::Forall, Conn::Exists};
            const NegMark marks[] = {NegMark::None, NegMark::Single, NegMark::Double};
            bool cheaper = false;
            for (Conn res : rule.quantifier_rule()
                                ? std::vector<Conn>(std::begin(quants), std::end(quants))
                                : std::vector<Conn>(std::begin(conns), std::end(conns)))
                for (NegMark n1 : marks)
                    for (NegMark n2 : rule.quantifier_rule()
                                          ? std::vector<NegMark>{NegMark::None}
                                          : std::vector<NegMark>(std::begin(marks),
                                                                 std::end(marks))) {
                        RewriteRule cand{rule.side, rule.n, rule.symbol, res, n1, n2};
                        if (count_negs(rhs_schema(cand)) >= chosen) continue;
                        if (validate_rule(cand, vopts).status == RuleValidation::Valid)
                            cheaper = true;
                    }
            ck.require(!cheaper, name + ": " + to_string(rule),
                       "no valid replacement may use fewer negations");
        }
    }
    return ck.finish();
}

// ── path-lemmas ─────────────────────────────────────────────────────────────

namespace {

const std::vector<std::string>& length_rule_sets() {
    static const std::vector<std::string> names = {
        "r1", "r2", "r3", "r4", "r3_prime", "r1_tilde", "r3_prime_minus_imp",
        "r3_prime_minus_and", "r1_minus_and"};
    return names;
}

}  // namespace

CheckResult check_path_lemmas(const VerifyOptions& opts) {
    Checker ck("path-lemmas",
               {"standard path length for r1", "standard path lengths for r2, r3, r4",
                "subset rule sets: discounted lengths", "no acting twice on a symbol",
                "length bound for subset simplifications", "longest-path confluence",
                "two-way divergence example", "non-maximal counterexample"});
    TranslationSpec ko = builtin_translation("kolmogorov");

    // Standard-path lengths match the counting formula on a seeded corpus.
    auto corpus = gen_formulas(quantified_config(opts.seed, 4), opts.quant_corpus);
    for (const std::string& name : length_rule_sets()) {
        RuleSet rs = builtin_rule_set(name);
        for (const auto& a : corpus) {
            FormulaPtr start = apply_translation(ko, a);
            int got = standard_path(start, rs).length();
            int want = expected_length(a, rs);
            if (got != want)
                ck.require(false, name + " on " + to_string(a),
                           "standard path length " + std::to_string(got) + " != " +
                               std::to_string(want));
            else
                ck.require(true, "", "");
        }
    }

    // Exhaustive enumeration on small sources: the length bound, longest-path
    // confluence, and the no-revisit property on provenance tags.
    auto pool = gen_formulas(quantified_config(opts.seed + 17, 3), opts.exhaustive_corpus);
    int small_checked = 0;
    for (const auto& a : pool) {
        if (count_connectives(expand_neg(a)).total() > opts.small_symbol_cap) continue;
        ++small_checked;
        for (const std::string& name : length_rule_sets()) {
            RuleSet rs = builtin_rule_set(name);
            std::uint64_t next_tag = 1;
            FormulaPtr start = annotate(apply_translation(ko, a), next_tag);
            auto initial_tags = collect_tags(start);
            int standard_len = standard_path(start, rs).length();
            std::vector<SimplificationPath> paths;
            try {
                paths = enumerate_all_paths(start, rs, opts.path_budget);
            } catch (const PathBudgetExceeded&) {
                ck.require(false, name + " on " + to_string(a), "path budget exceeded");
                continue;
            }
            int max_len = 0;
            for (const auto& p : paths) max_len = std::max(max_len, p.length());
            ck.require(max_len <= standard_len, name + " on " + to_string(a),
                       "a path exceeds the standard length");
            ck.require(max_len == standard_len, name + " on " + to_string(a),
                       "standard path must attain the maximum length");
            FormulaPtr endpoint;
            for (const auto& p : paths) {
                if (p.length() != max_len) continue;
                if (!endpoint)
                    endpoint = p.last();
                else
                    ck.require(equal(endpoint, p.last()), name + " on " + to_string(a),
                               "longest paths must share one final formula",
                               to_string(endpoint) + "  vs  " + to_string(p.last()));
            }
            for (const auto& p : paths) {
                std::set<std::uint64_t> seen;
                for (const auto& st : p.steps) {
                    ck.require(initial_tags.count(st.acted_tag) > 0,
                               name + " on " + to_string(a),
                               "acted symbol must originate in the initial formula");
                    ck.require(seen.insert(st.acted_tag).second, name + " on " + to_string(a),
                               "no symbol may be acted on twice");
                }
            }
        }
    }
    ck.require(small_checked >= 20, "exhaustive corpus",
               "expected at least 20 small sources, got " + std::to_string(small_checked));

    // Two-way divergence figure: under r1 the formula below has two stuck
    // paths of length 2 with distinct endpoints, and a longest path of
    // length 3.
    {
        RuleSet r1 = builtin_rule_set("r1");
        FormulaPtr A = atom("A"), B = atom("B");
        FormulaPtr source = conj(conj(A, B), exists("x", A));
        FormulaPtr start = apply_translation(ko, source);
        ck.require(to_string(start) == "~~(~~(~~A & ~~B) & ~~exists x. ~~A)",
                   to_string(start), "figure start formula");
        auto paths = enumerate_all_paths(start, r1, opts.path_budget);
        auto has_path = [&paths](const std::vector<std::string>& nodes) {
            for (const auto& p : paths) {
                if (p.nodes.size() != nodes.size()) continue;
                bool all = true;
                for (std::size_t i = 0; i < nodes.size(); ++i)
                    all &= to_string(p.nodes[i]) == nodes[i];
                if (all) return true;
            }
            return false;
        };
        ck.require(has_path({"~~(~~(~~A & ~~B) & ~~exists x. ~~A)",
                             "~~(~~(~~A & ~~B) & ~~exists x. A)",
                             "~~(~~A & ~~B & exists x. A)"}),
                   "divergence figure, left path", "missing");
        ck.require(has_path({"~~(~~(~~A & ~~B) & ~~exists x. ~~A)",
                             "~~(~~(A & B) & ~~exists x. ~~A)",
                             "~~(A & B & exists x. ~~A)"}),
                   "divergence figure, right path", "missing");
        int max_len = 0;
        for (const auto& p : paths) max_len = std::max(max_len, p.length());
        ck.require(max_len == 3 && expected_length(source, r1) == 3,
                   "divergence figure, longest path", "expected length 3");
        for (const auto& p : paths)
            if (p.length() == 3)
                ck.require(to_string(p.last()) == "~~(A & B & exists x. A)",
                           "divergence figure, longest endpoint", to_string(p.last()));
    }

    // Non-maximal counterexample figure: both displayed paths act twice on
    // the same symbol and exceed the counting formula.
    {
        RuleSet nm = builtin_rule_set("example_nonmaximal");
        FormulaPtr A = atom("A"), B = atom("B"), C = atom("C");
        FormulaPtr source = conj(A, conj(B, C));
        std::uint64_t next_tag = 1;
        FormulaPtr start = annotate(apply_translation(ko, source), next_tag);
        ck.require(to_string(start) == "~~(~~A & ~~(~~B & ~~C))", to_string(start),
                   "counterexample start formula");
        auto paths = enumerate_all_paths(start, nm, opts.path_budget);
        ck.require(paths.size() == 2, "counterexample figure",
                   "expected exactly two maximal paths, got " + std::to_string(paths.size()));
        std::set<std::string> intermediates;
        for (const auto& p : paths) {
            ck.require(p.length() == 3, "counterexample figure", "expected length 3");
            ck.require(p.length() > expected_length(source, nm), "counterexample figure",
                       "path must exceed the counting formula");
            ck.require(to_string(p.last()) == "~(~A | ~(B & ~~C))", "counterexample figure",
                       "endpoint " + to_string(p.last()));
            std::set<std::uint64_t> seen;
            bool revisit = false;
            for (const auto& st : p.steps) revisit |= !seen.insert(st.acted_tag).second;
            ck.require(revisit, "counterexample figure",
                       "each displayed path must act twice on one symbol");
            if (p.nodes.size() == 4) {
                intermediates.insert(to_string(p.nodes[1]));
                intermediates.insert(to_string(p.nodes[2]));
            }
        }
        std::set<std::string> expected = {"~(~A | ~~~(~~B & ~~C))",
                                          "~~(~~A & ~(~B | ~~~C))",
                                          "~(~A | ~~(~B | ~~~C))"};
        ck.require(intermediates == expected, "counterexample figure",
                   "intermediate nodes must match the displayed formulas");
    }
    return ck.finish();
}

// ── translation-props ───────────────────────────────────────────────────────

CheckResult check_translation_props(const VerifyOptions& opts) {
    Checker ck("translation-props",
               {"r1 endpoint is the kuroda translation", "r2 endpoint is the krivine translation",
                "r3 endpoint is the g translation", "r4 endpoint is the em translation",
                "r3-prime endpoint is goedel-gentzen", "goedel and aczel variants as endpoints",
                "m-prime as a kuroda fragment endpoint", "soundness round trips",
                "pairwise equivalence of the translations",
                "kuroda acts as double negation without universals",
                "avigad m-translation properties", "avigad lemma",
                "gentzen original clauses define the same translation", "bottom clause variants",
                "relating modular translations"});
    TranslationSpec ko = builtin_translation("kolmogorov");
    KernelOptions kopts{opts.fo_depth, opts.bounds};

    // Rewrite endpoints coincide with the translations, structurally.
    const std::vector<std::pair<std::string, std::string>> endpoint_map = {
        {"r1", "kuroda"},           {"r2", "krivine"},
        {"r3", "g"},                {"r4", "em"},
        {"r3_prime", "goedel_gentzen"}, {"r3_prime_minus_imp", "goedel"},
        {"r3_prime_minus_and", "aczel"}, {"r1_tilde", "kuroda_ml"}};
    auto corpus = gen_formulas(quantified_config(opts.seed + 3, 4), opts.quant_corpus);
    for (const auto& [rs_name, tr_name] : endpoint_map) {
        RuleSet rs = builtin_rule_set(rs_name);
        TranslationSpec tr = builtin_translation(tr_name);
        for (const auto& a : corpus) {
            FormulaPtr endpoint = longest_result(apply_translation(ko, a), rs);
            FormulaPtr direct = apply_translation(tr, a);
            ck.require(equal(endpoint, direct), rs_name + " -> " + tr_name + " on " + to_string(a),
                       "endpoint differs from the translation",
                       to_string(endpoint) + "  vs  " + to_string(direct));
        }
    }

    // The modular Avigad variant as the endpoint of r1 without the
    // conjunction rule, on NNF sources (embedding wrapper: double negation).
    {
        RuleSet rs = builtin_rule_set("r1_minus_and");
        auto nnf_corpus = gen_nnf_formulas(quantified_config(opts.seed + 5, 4), opts.nnf_corpus);
        for (const auto& a : nnf_corpus) {
            FormulaPtr endpoint = longest_result(kolmogorov_of_nnf(a), rs);
            FormulaPtr direct = negs(2, avigad_m_prime(a));
            ck.require(equal(endpoint, direct), "r1_minus_and on " + to_string(a),
                       "endpoint differs from the modular Avigad translation",
                       to_string(endpoint) + "  vs  " + to_string(direct));
        }
    }

    // Soundness round trips and pairwise equivalence on propositional input.
    auto prop = gen_formulas(propositional_config(opts.seed + 7, 4), opts.prop_corpus);
    for (const auto& f : prop) {
        bool cl = prove_cpc(f).proved();
        for (const auto& name : builtin_translation_names()) {
            TranslationSpec tr = builtin_translation(name);
            bool il = prove_ipc(apply_translation(tr, f)).proved();
            ck.require(il == cl, name + " round trip on " + to_string(f),
                       cl ? "classically provable but image not IL-provable"
                          : "image IL-provable but source not classically provable");
        }
        bool ml = prove_minimal(apply_translation(builtin_translation("kuroda_ml"), f)).proved();
        ck.require(ml == cl, "kuroda_ml round trip on " + to_string(f),
                   "minimal-logic round trip failed");
    }
    {
        auto sample = gen_formulas(propositional_config(opts.seed + 11, 4), opts.pairwise_corpus);
        for (const auto& f : sample) {
            FormulaPtr base = apply_translation(ko, f);
            for (const auto& name : builtin_translation_names()) {
                if (name == "kolmogorov") continue;
                FormulaPtr other = apply_translation(builtin_translation(name), f);
                ck.require(prove_ipc(iff(base, other)).proved(),
                           "kolmogorov ~ " + name + " on " + to_string(f),
                           "translated formulas must be IL-equivalent");
            }
        }
    }

    // Kuroda is plain double negation in the absence of universals.
    {
        GeneratorConfig cfg = propositional_config(opts.seed + 13, 4);
        cfg.weight_neg = 0.0;
        TranslationSpec kuroda = builtin_translation("kuroda");
        for (const auto& f : gen_formulas(cfg, opts.pairwise_corpus)) {
            ck.require(equal(apply_translation(kuroda, f), negs(2, f)),
                       "kuroda on " + to_string(f), "expected ~~f exactly");
        }
        for (const char* text : {"exists x. P(x)", "exists x. P(x) & Q", "P -> exists y. Q(y)"}) {
            FormulaPtr f = parse(text);
            ck.require(equal(apply_translation(kuroda, f), negs(2, f)), "kuroda on " + std::string(text),
                       "expected ~~f exactly");
        }
    }

    // Avigad properties on propositional NNF formulas.
    {
        TranslationSpec gg = builtin_translation("goedel_gentzen");
        auto nnfs = gen_nnf_formulas(propositional_config(opts.seed + 19, 4), opts.nnf_corpus);
        for (const auto& a : nnfs) {
            FormulaPtr m = avigad_m(a);
            FormulaPtr m_dual = avigad_m(dual(a));
            ck.require(prove_ipc(iff(neg(m_dual), negs(2, m))).proved(),
                       "avigad lemma on " + to_string(a),
                       "~M(~A) must be IL-equivalent to ~~M(A)");
            ck.require(
                prove_ipc(iff(neg(m), neg(apply_translation(gg, embed_nnf(a))))).proved(),
                "avigad property (1) on " + to_string(a),
                "~M(A) must be IL-equivalent to the negated standard translation");
            if (prove_cpc(embed_nnf(a)).proved()) {
                ck.require(prove_ipc(neg(m_dual)).proved(), "avigad property (2) on " + to_string(a),
                           "classically provable A must yield IL |- ~M(~A)");
            }
            // Guaranteed classical tautology built from the same material.
            NnfPtr t = nnf(disj(embed_nnf(a), neg(embed_nnf(a))));
            ck.require(prove_ipc(neg(avigad_m(dual(t)))).proved(),
                       "avigad property (2) on " + to_string(t),
                       "classically provable A must yield IL |- ~M(~A)");
        }
    }

    // Clause-wise relations.
    {
        TranslationSpec gg = builtin_translation("goedel_gentzen");
        TranslationSpec go = builtin_translation("gentzen_original");
        RelatedResult r = translations_related(gg, go, kopts);
        ck.require(r.related(), "goedel_gentzen ~ gentzen_original",
                   "expected clause-wise equivalence");
        RelatedResult nr = translations_related(gg, builtin_translation("kuroda"), kopts);
        ck.require(nr.overall == Verdict::Refuted, "goedel_gentzen ~ kuroda",
                   "expected clause-wise inequivalence");
        for (const auto& name : builtin_translation_names()) {
            TranslationSpec t = builtin_translation(name);
            RelatedResult self = translations_related(t, t, kopts);
            ck.require(self.related(), name + " ~ " + name, "reflexivity");
        }
        // The historical Goedel implication clause defines the same translation.
        TranslationSpec goedel_hist = builtin_translation("goedel");
        goedel_hist.impl = ClauseTemplate{neg(conj(hole_marker(1), neg(hole_marker(2))))};
        RelatedResult gh = translations_related(builtin_translation("goedel"), goedel_hist, kopts);
        ck.require(gh.related(), "goedel ~ goedel (historical implication clause)",
                   "expected clause-wise equivalence");
        // Bottom-clause toggle, for translations whose atom clause keeps bot
        // IL-equivalent to bot.
        for (const std::string name :
             {"kolmogorov", "goedel_gentzen", "goedel", "gentzen_original", "g", "aczel",
              "kuroda", "kuroda_ml"}) {
            TranslationSpec t = builtin_translation(name);
            RelatedResult rb = translations_related(t, t.with_literal_bot(), kopts);
            ck.require(rb.related(), name + " ~ literal-bot variant",
                       "bottom clause variants must be equivalent");
        }
    }
    return ck.finish();
}

// ── ml-and-monads ───────────────────────────────────────────────────────────

namespace {

// Rule schemas with every double negation replaced by the monad operator.
// Only defined for rules whose negation marks are none/double.
std::pair<FormulaPtr, FormulaPtr> monadized_instances(const RewriteRule& r,
                                                      const MonadDescriptor& m) {
    auto T = [&m](const FormulaPtr& x) { return m.wrap(x); };
    auto mwrap = [&](NegMark mark, const FormulaPtr& x) {
        switch (mark) {
            case NegMark::None: return x;
            case NegMark::Double: return T(x);
            case NegMark::Single: throw std::logic_error("monadized rule with single negation");
        }
        return x;
    };
    bool quant = r.quantifier_rule();
    FormulaPtr A = quant ? atom("A", {Term::var("x")}) : atom("A");
    FormulaPtr B = atom("B");
    FormulaPtr lhs, rhs;
    if (r.side == Side::Inside) {
        if (quant) {
            lhs = T(make_quant(r.symbol, "x", mwrap(r.n, A)));
            rhs = mwrap(r.n, make_quant(r.result_symbol, "x", mwrap(r.n1, A)));
        } else {
            lhs = T(make(r.symbol, mwrap(r.n, A), mwrap(r.n, B)));
            rhs = mwrap(r.n, make(r.result_symbol, mwrap(r.n1, A), mwrap(r.n2, B)));
        }
    } else {
        if (quant) {
            lhs = mwrap(r.n, make_quant(r.symbol, "x", T(A)));
            rhs = make_quant(r.result_symbol, "x", mwrap(r.n1, mwrap(r.n, A)));
        } else {
            lhs = mwrap(r.n, make(r.symbol, T(A), T(B)));
            rhs = make(r.result_symbol, mwrap(r.n1, mwrap(r.n, A)), mwrap(r.n2, mwrap(r.n, B)));
        }
    }
    return {lhs, rhs};
}

}  // namespace

CheckResult check_ml_and_monads(const VerifyOptions& opts) {
    Checker ck("ml-and-monads",
               {"kuroda embeds classically provable formulas in il only",
                "minimal-logic variant of kuroda", "r1-tilde maximal in minimal logic",
                "monadic clause validity"});

    // The r1 implication rule is the one transformation valid in IL but not
    // in ML.
    {
        RewriteRule r1_imp = *builtin_rule_set("r1").rule_for(Conn::Imp);
        auto [li, ri] = rule_instances(r1_imp);
        ck.require(prove_ipc(imp(li, ri)).proved(), to_string(r1_imp),
                   "direct implication must be IL-provable");
        ck.require(prove_minimal(imp(li, ri)).refuted(), to_string(r1_imp),
                   "direct implication must fail in ML");
        RewriteRule rt_imp = *builtin_rule_set("r1_tilde").rule_for(Conn::Imp);
        auto [lt, rt] = rule_instances(rt_imp);
        ck.require(prove_minimal(iff(lt, rt)).proved(), to_string(rt_imp),
                   "the adjusted implication rule must be ML-valid");
    }

    // Every other table item holds in minimal logic.
    for (const auto& it : equiv_items()) {
        if (it.number > 16) continue;
        FormulaPtr ltr = imp(it.lhs, it.rhs), rtl = imp(it.rhs, it.lhs);
        if (it.cat == EquivItem::IlQuant) {
            bool fwd = prove_fo_bounded(ltr, Logic::Minimal, opts.fo_depth).proved();
            bool bwd = prove_fo_bounded(rtl, Logic::Minimal, opts.fo_depth).proved();
            ck.require(fwd && bwd, item_label(it), "expected ML-provable both ways");
        } else if (it.number == 3) {
            ck.require(prove_minimal(ltr).refuted(), item_label(it),
                       "the forward direction must fail in ML");
            ck.require(prove_minimal(rtl).proved(), item_label(it),
                       "the backward direction must hold in ML");
        } else {
            ck.require(prove_minimal(iff(it.lhs, it.rhs)).proved(), item_label(it),
                       "expected ML-provable equivalence");
        }
    }

    // Monadic instances of the kuroda-ml and goedel-gentzen rule shapes.
    std::vector<std::pair<std::string, MonadDescriptor>> monads = {
        {"double-negation", MonadDescriptor::double_neg()},
        {"friedman", MonadDescriptor::friedman(atom("R0"))},
        {"peirce", MonadDescriptor::peirce_neg()},
        {"peirce-r", MonadDescriptor::peirce_r(atom("R0"))}};
    for (const auto& [mname, m] : monads) {
        for (const std::string rs_name : {"r1_tilde", "r3_prime"}) {
            RuleSet rs = builtin_rule_set(rs_name);
            for (const auto& [sym, rule] : rs.rules) {
                auto [lhs, rhs] = monadized_instances(rule, m);
                std::string label = mname + " instance of " + rs_name + " " + conn_name(sym) +
                                    ": " + to_string(lhs) + " <-> " + to_string(rhs);
                if (rule.quantifier_rule()) {
                    bool fwd =
                        prove_fo_bounded(imp(lhs, rhs), Logic::Minimal, opts.fo_depth).proved();
                    bool bwd =
                        prove_fo_bounded(imp(rhs, lhs), Logic::Minimal, opts.fo_depth).proved();
                    ck.require(fwd && bwd, label, "expected ML-provable both ways");
                } else {
                    ck.require(prove_minimal(iff(lhs, rhs)).proved(), label,
                               "expected ML-provable equivalence");
                }
            }
        }
    }

    // Classical provability transfers to ML through the adjusted kuroda
    // translation, and back.
    {
        TranslationSpec ku_ml = builtin_translation("kuroda_ml");
        auto prop = gen_formulas(propositional_config(opts.seed + 23, 4), opts.prop_corpus);
        for (const auto& f : prop) {
            bool cl = prove_cpc(f).proved();
            bool ml = prove_minimal(apply_translation(ku_ml, f)).proved();
            ck.require(cl == ml, "kuroda_ml on " + to_string(f),
                       "classical and minimal-logic provability must agree");
        }
    }
    return ck.finish();
}

// ── Harness ─────────────────────────────────────────────────────────────────

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = {"lemma-equiv", "simplification-props",
                                                 "path-lemmas", "translation-props",
                                                 "ml-and-monads"};
    return ids;
}

CheckResult run_check(const std::string& id, const VerifyOptions& opts) {
    if (id == "lemma-equiv") return check_equiv_lemma(opts);
    if (id == "simplification-props") return check_simplification_props(opts);
    if (id == "path-lemmas") return check_path_lemmas(opts);
    if (id == "translation-props") return check_translation_props(opts);
    if (id == "ml-and-monads") return check_ml_and_monads(opts);
    throw std::invalid_argument("unknown check '" + id + "'");
}

const std::vector<std::pair<std::string, std::string>>& named_results() {
    static const std::vector<std::pair<std::string, std::string>> map = {
        {"double-negation equivalence table", "lemma-equiv"},
        {"classical-only equivalences classified", "lemma-equiv"},
        {"maximal simplifications from inside", "simplification-props"},
        {"maximal simplifications from outside", "simplification-props"},
        {"uniqueness of the four maximal simplifications", "simplification-props"},
        {"standard path length for r1", "path-lemmas"},
        {"standard path lengths for r2, r3, r4", "path-lemmas"},
        {"subset rule sets: discounted lengths", "path-lemmas"},
        {"no acting twice on a symbol", "path-lemmas"},
        {"length bound for subset simplifications", "path-lemmas"},
        {"longest-path confluence", "path-lemmas"},
        {"two-way divergence example", "path-lemmas"},
        {"non-maximal counterexample", "path-lemmas"},
        {"r1 endpoint is the kuroda translation", "translation-props"},
        {"r2 endpoint is the krivine translation", "translation-props"},
        {"r3 endpoint is the g translation", "translation-props"},
        {"r4 endpoint is the em translation", "translation-props"},
        {"r3-prime endpoint is goedel-gentzen", "translation-props"},
        {"goedel and aczel variants as endpoints", "translation-props"},
        {"m-prime as a kuroda fragment endpoint", "translation-props"},
        {"soundness round trips", "translation-props"},
        {"pairwise equivalence of the translations", "translation-props"},
        {"kuroda acts as double negation without universals", "translation-props"},
        {"avigad m-translation properties", "translation-props"},
        {"avigad lemma", "translation-props"},
        {"gentzen original clauses define the same translation", "translation-props"},
        {"bottom clause variants", "translation-props"},
        {"relating modular translations", "translation-props"},
        {"kuroda embeds classically provable formulas in il only", "ml-and-monads"},
        {"minimal-logic variant of kuroda", "ml-and-monads"},
        {"r1-tilde maximal in minimal logic", "ml-and-monads"},
        {"monadic clause validity", "ml-and-monads"},
    };
    return map;
}

std::vector<CheckResult> run_all(const VerifyOptions& opts) {
    std::vector<CheckResult> out;
    for (const auto& id : check_ids()) out.push_back(run_check(id, opts));

    // Coverage: every named result must be claimed by exactly one executed
    // check.
    Checker cov("result-coverage", {});
    for (const auto& [result, check_id] : named_results()) {
        int claims = 0;
        for (const auto& r : out)
            if (r.id == check_id)
                for (const auto& c : r.covers) claims += (c == result);
        cov.require(claims == 1, result,
                    "expected exactly one covering check, got " + std::to_string(claims));
    }
    out.push_back(cov.finish());
    return out;
}

Summary summarize(const std::vector<CheckResult>& results) {
    Summary s;
    for (const auto& r : results) {
        switch (r.status) {
            case CheckStatus::Pass: ++s.pass; break;
            case CheckStatus::Fail: ++s.fail; break;
            case CheckStatus::PassWithGaps: ++s.gaps; break;
        }
    }
    return s;
}

}  // namespace negtrans
