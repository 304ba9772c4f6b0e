// negtrans: translate formulas, run and enumerate simplifications, decide
// provability, search for countermodels, relate translations, and run the
// verification suite.
//
// Exit codes: 0 success / proved / pass, 1 refuted / fail, 2 unknown,
// 64 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "negtrans/generator.hpp"
#include "negtrans/kripke.hpp"
#include "negtrans/parser.hpp"
#include "negtrans/proofsearch.hpp"
#include "negtrans/rewrite.hpp"
#include "negtrans/translations.hpp"
#include "negtrans/verify.hpp"

using json = nlohmann::json;
using namespace negtrans;

namespace {

constexpr int kExitProved = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

struct GlobalFlags {
    std::string output = "text";
    std::uint64_t seed = 1;
    int depth = 12;
    int max_worlds = 3;
    int max_domain = 2;
    bool full_posets = false;

    bool machine() const { return output == "machine"; }
    kripke::SearchBounds bounds() const {
        return {max_worlds, max_domain,
                full_posets ? kripke::FrameCatalog::FullPosets
                            : kripke::FrameCatalog::Standard};
    }
};

FormulaPtr parse_or_die(const std::string& text) {
    try {
        return parse(text);
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
        std::exit(kExitUsage);
    }
}

RuleSet load_rule_set(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw std::invalid_argument("cannot open rule file " + spec.substr(1));
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_rule_set(buf.str(), spec.substr(1));
    }
    return builtin_rule_set(spec);
}

std::string list_names(const std::vector<std::string>& names) {
    std::string s;
    for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
    return s;
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::Proved: return kExitProved;
        case Verdict::Refuted: return kExitRefuted;
        case Verdict::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

json check_to_json(const CheckResult& r) {
    json j;
    j["check"] = r.id;
    j["covers"] = r.covers;
    j["status"] = to_string(r.status);
    j["instances"] = r.instances;
    j["failures"] = json::array();
    for (const auto& f : r.failures)
        j["failures"].push_back({{"instance", f.instance}, {"verdict", f.verdict},
                                 {"witness", f.witness}});
    j["documented_gaps"] = r.gaps;
    j["wall_ms"] = r.wall_ms;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for double-negation translations and their simplifications"};
    app.require_subcommand(1);

    GlobalFlags g;
    app.add_option("--output", g.output, "output mode: text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--seed", g.seed, "random seed for the verification corpora");
    app.add_option("--depth", g.depth, "bound for first-order proof search");
    app.add_option("--max-worlds", g.max_worlds, "countermodel search: world bound");
    app.add_option("--max-domain", g.max_domain, "countermodel search: domain bound");
    app.add_flag("--full-posets", g.full_posets,
                 "countermodel search over all preorders instead of the frame catalog");

    // translate
    std::string tr_name, tr_formula;
    bool tr_bot_literal = false;
    auto* translate = app.add_subcommand("translate", "apply a negative translation");
    translate->add_option("--translation", tr_name, "translation name")->required();
    translate->add_flag("--bot-literal", tr_bot_literal, "translate bot to itself");
    translate->add_option("formula", tr_formula, "formula text")->required();

    // simplify
    std::string si_rules = "r1", si_strategy = "standard", si_formula;
    bool si_from_source = false;
    auto* simplify = app.add_subcommand("simplify", "run a simplification");
    simplify->add_option("--rules", si_rules, "rule set name or @file");
    simplify->add_option("--strategy", si_strategy, "standard or enumerate")
        ->check(CLI::IsMember({"standard", "enumerate"}));
    simplify->add_flag("--from-source", si_from_source,
                       "apply the kolmogorov translation before simplifying");
    simplify->add_option("formula", si_formula, "formula text")->required();

    // prove
    std::string pr_logic = "ipc", pr_formula;
    auto* prove_cmd = app.add_subcommand("prove", "decide or search for provability");
    prove_cmd->add_option("--logic", pr_logic, "classical|intuitionistic|minimal (cpc|ipc|ml)");
    prove_cmd->add_option("formula", pr_formula, "formula text")->required();

    // countermodel
    std::string cm_formula;
    auto* counter = app.add_subcommand("countermodel", "search for a finite countermodel");
    counter->add_option("formula", cm_formula, "formula text")->required();

    // related
    std::string re_t1, re_t2;
    auto* related_cmd = app.add_subcommand("related", "clause-wise relation of two translations");
    related_cmd->add_option("t1", re_t1, "first translation")->required();
    related_cmd->add_option("t2", re_t2, "second translation")->required();

    // verify
    std::string ve_check = "all";
    int ve_prop = 500, ve_quant = 500, ve_nnf = 200;
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    verify_cmd->add_option("check", ve_check, "check id or 'all'");
    verify_cmd->add_option("--prop-corpus", ve_prop, "propositional corpus size");
    verify_cmd->add_option("--quant-corpus", ve_quant, "quantified corpus size");
    verify_cmd->add_option("--nnf-corpus", ve_nnf, "nnf corpus size");

    // rulesets / translations listing
    auto* names = app.add_subcommand("names", "list built-in translations and rule sets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*translate) {
            TranslationSpec spec = [&] {
                try {
                    return builtin_translation(tr_name);
                } catch (const std::invalid_argument&) {
                    std::cerr << "unknown translation '" << tr_name << "'; valid: "
                              << list_names(builtin_translation_names()) << "\n";
                    std::exit(kExitUsage);
                }
            }();
            if (tr_bot_literal) spec = spec.with_literal_bot();
            FormulaPtr f = parse_or_die(tr_formula);
            FormulaPtr out = apply_translation(spec, f);
            if (g.machine())
                std::cout << json{{"translation", spec.name},
                                  {"input", to_string(f)},
                                  {"output", to_string(out)}}
                                 .dump()
                          << "\n";
            else
                std::cout << to_string(out) << "\n";
            return 0;
        }

        if (*simplify) {
            RuleSet rs = load_rule_set(si_rules);
            FormulaPtr f = parse_or_die(si_formula);
            if (si_from_source) f = apply_translation(builtin_translation("kolmogorov"), f);
            if (si_strategy == "standard") {
                SimplificationPath p = standard_path(f, rs);
                if (g.machine()) {
                    json steps = json::array();
                    for (std::size_t i = 0; i < p.steps.size(); ++i)
                        steps.push_back({{"position", to_string(p.steps[i].pos)},
                                         {"rule", to_string(p.steps[i].rule)},
                                         {"result", to_string(p.nodes[i + 1])}});
                    std::cout << json{{"rules", rs.name},
                                      {"start", to_string(p.nodes[0])},
                                      {"steps", steps},
                                      {"result", to_string(p.last())},
                                      {"length", p.length()}}
                                     .dump()
                              << "\n";
                } else {
                    for (std::size_t i = 0; i < p.steps.size(); ++i)
                        std::cout << (i + 1) << ". " << to_string(p.nodes[i + 1]) << "\n";
                    std::cout << to_string(p.last()) << "\n";
                }
            } else {
                auto paths = enumerate_all_paths(f, rs, 4000000);
                int max_len = 0;
                for (const auto& p : paths) max_len = std::max(max_len, p.length());
                if (g.machine()) {
                    json arr = json::array();
                    for (const auto& p : paths) {
                        json nodes = json::array();
                        for (const auto& n : p.nodes) nodes.push_back(to_string(n));
                        arr.push_back({{"length", p.length()}, {"nodes", nodes}});
                    }
                    std::cout << json{{"rules", rs.name},
                                      {"paths", arr},
                                      {"longest", max_len}}
                                     .dump()
                              << "\n";
                } else {
                    std::cout << paths.size() << " maximal paths, longest " << max_len << "\n";
                    for (const auto& p : paths) {
                        std::cout << "  [" << p.length() << "]";
                        for (const auto& n : p.nodes) std::cout << "  " << to_string(n);
                        std::cout << "\n";
                    }
                }
            }
            return 0;
        }

        if (*prove_cmd) {
            Logic logic;
            if (pr_logic == "classical" || pr_logic == "cpc" || pr_logic == "cl")
                logic = Logic::Classical;
            else if (pr_logic == "intuitionistic" || pr_logic == "ipc" || pr_logic == "il")
                logic = Logic::Intuitionistic;
            else if (pr_logic == "minimal" || pr_logic == "ml")
                logic = Logic::Minimal;
            else {
                std::cerr << "unknown logic '" << pr_logic
                          << "'; valid: classical|cpc, intuitionistic|ipc, minimal|ml\n";
                return kExitUsage;
            }
            FormulaPtr f = parse_or_die(pr_formula);
            Decision d = prove(f, logic, g.depth);
            if (g.machine())
                std::cout << json{{"formula", to_string(f)},
                                  {"logic", pr_logic},
                                  {"verdict", to_string(d.verdict)}}
                                 .dump()
                          << "\n";
            else
                std::cout << to_string(d.verdict) << "\n";
            return exit_for(d.verdict);
        }

        if (*counter) {
            FormulaPtr f = parse_or_die(cm_formula);
            auto cm = kripke::find_countermodel(f, g.bounds());
            if (g.machine()) {
                json j{{"formula", to_string(f)}, {"found", cm.has_value()}};
                if (cm) {
                    j["world"] = cm->world;
                    j["model"] = describe(cm->model);
                }
                std::cout << j.dump() << "\n";
            } else if (cm) {
                std::cout << describe(*cm);
            } else {
                std::cout << "no countermodel within bounds\n";
            }
            return cm ? kExitRefuted : kExitUnknown;
        }

        if (*related_cmd) {
            KernelOptions opts{g.depth, g.bounds()};
            RelatedResult r = translations_related(builtin_translation(re_t1),
                                                   builtin_translation(re_t2), opts);
            if (g.machine()) {
                json clauses = json::array();
                for (const auto& c : r.clauses)
                    clauses.push_back({{"clause", c.clause},
                                       {"verdict", to_string(c.verdict)},
                                       {"witness", c.witness}});
                std::cout << json{{"t1", re_t1},
                                  {"t2", re_t2},
                                  {"related", to_string(r.overall)},
                                  {"clauses", clauses}}
                                 .dump()
                          << "\n";
            } else {
                for (const auto& c : r.clauses) {
                    std::cout << c.clause << ": "
                              << (c.verdict == Verdict::Proved
                                      ? "equivalent"
                                      : c.verdict == Verdict::Refuted ? "inequivalent"
                                                                      : "unknown")
                              << "\n";
                    if (!c.witness.empty()) std::cout << c.witness;
                }
                std::cout << (r.overall == Verdict::Proved
                                  ? "related"
                                  : r.overall == Verdict::Refuted ? "not related" : "unknown")
                          << "\n";
            }
            return exit_for(r.overall);
        }

        if (*verify_cmd) {
            VerifyOptions opts;
            opts.seed = g.seed;
            opts.fo_depth = g.depth;
            opts.bounds = g.bounds();
            opts.prop_corpus = ve_prop;
            opts.quant_corpus = ve_quant;
            opts.nnf_corpus = ve_nnf;
            std::vector<CheckResult> results;
            if (ve_check == "all") {
                results = run_all(opts);
            } else {
                try {
                    results.push_back(run_check(ve_check, opts));
                } catch (const std::invalid_argument&) {
                    std::cerr << "unknown check '" << ve_check
                              << "'; valid: all, " << list_names(check_ids()) << "\n";
                    return kExitUsage;
                }
            }
            bool any_fail = false;
            for (const auto& r : results) {
                any_fail |= r.status == CheckStatus::Fail;
                if (g.machine()) {
                    std::cout << check_to_json(r).dump() << "\n";
                } else {
                    std::cout << r.id << ": " << to_string(r.status) << " ("
                              << r.instances << " instances, " << static_cast<long>(r.wall_ms)
                              << " ms)\n";
                    for (const auto& f : r.failures) {
                        std::cout << "  FAIL " << f.instance << " -- " << f.verdict << "\n";
                        if (!f.witness.empty()) std::cout << "    " << f.witness << "\n";
                    }
                    for (const auto& gap : r.gaps) std::cout << "  gap: " << gap << "\n";
                }
            }
            if (!g.machine()) {
                Summary s = summarize(results);
                std::cout << "checks: " << s.pass << " pass, " << s.fail << " fail, " << s.gaps
                          << " documented-gap\n";
            }
            return any_fail ? kExitRefuted : kExitProved;
        }

        if (*names) {
            std::cout << "translations: " << list_names(builtin_translation_names()) << "\n";
            std::cout << "rule sets: " << list_names(builtin_rule_set_names()) << "\n";
            std::cout << "checks: " << list_names(check_ids()) << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error at position " << e.position << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
