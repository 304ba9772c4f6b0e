#include "negtrans/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "negtrans/parser.hpp"

namespace negtrans {

const char* to_string(Side s) { return s == Side::Inside ? "inside" : "outside"; }

int neg_count(NegMark m) {
    switch (m) {
        case NegMark::None: return 0;
        case NegMark::Single: return 1;
        case NegMark::Double: return 2;
    }
    return 0;
}

namespace {

FormulaPtr wrap(NegMark m, FormulaPtr f) { return negs(neg_count(m), std::move(f)); }

FormulaPtr with_tag(const FormulaPtr& f, std::uint64_t tag) {
    auto g = std::make_shared<Formula>(*f);
    g->tag = tag;
    return g;
}

const FormulaPtr MA = atom("A");
const FormulaPtr MB = atom("B");

}  // namespace

FormulaPtr lhs_schema(const RewriteRule& r) {
    if (r.quantifier_rule()) {
        if (r.side == Side::Inside) return negs(2, make_quant(r.symbol, "x", wrap(r.n, MA)));
        return wrap(r.n, make_quant(r.symbol, "x", negs(2, MA)));
    }
    if (r.side == Side::Inside) return negs(2, make(r.symbol, wrap(r.n, MA), wrap(r.n, MB)));
    return wrap(r.n, make(r.symbol, negs(2, MA), negs(2, MB)));
}

FormulaPtr rhs_schema(const RewriteRule& r) {
    if (r.quantifier_rule()) {
        if (r.side == Side::Inside)
            return wrap(r.n, make_quant(r.result_symbol, "x", wrap(r.n1, MA)));
        return make_quant(r.result_symbol, "x", wrap(r.n1, wrap(r.n, MA)));
    }
    if (r.side == Side::Inside)
        return wrap(r.n, make(r.result_symbol, wrap(r.n1, MA), wrap(r.n2, MB)));
    return make(r.result_symbol, wrap(r.n1, wrap(r.n, MA)), wrap(r.n2, wrap(r.n, MB)));
}

std::string to_string(const RewriteRule& r) {
    return to_string(lhs_schema(r)) + " => " + to_string(rhs_schema(r));
}

namespace {

// Canonical bound-variable name for schema comparison.
FormulaPtr rename_binders(const FormulaPtr& f, const std::string& name) {
    switch (f->kind) {
        case Conn::Atom:
        case Conn::Bot:
        case Conn::Top: return f;
        case Conn::Neg: return neg(rename_binders(f->left, name));
        case Conn::Forall:
        case Conn::Exists: return make_quant(f->kind, name, rename_binders(f->left, name));
        default:
            return make(f->kind, rename_binders(f->left, name), rename_binders(f->right, name));
    }
}

template <typename Fn>
void for_each_rule_shape(Fn&& fn) {
    const Conn conns[] = {Conn::And, Conn::Or, Conn::Imp};
    const Conn quants[] = {Conn::Forall, Conn::Exists};
    const NegMark marks[] = {NegMark::None, NegMark::Single, NegMark::Double};
    for (Side side : {Side::Inside, Side::Outside})
        for (NegMark n : {NegMark::Single, NegMark::Double}) {
            for (Conn sym : conns)
                for (Conn res : conns)
                    for (NegMark n1 : marks)
                        for (NegMark n2 : marks)
                            fn(RewriteRule{side, n, sym, res, n1, n2});
            for (Conn sym : quants)
                for (Conn res : quants)
                    for (NegMark n1 : marks)
                        fn(RewriteRule{side, n, sym, res, n1, NegMark::None});
        }
}

}  // namespace

std::optional<RewriteRule> recognize_rule(const FormulaPtr& lhs, const FormulaPtr& rhs) {
    FormulaPtr l = rename_binders(lhs, "x");
    FormulaPtr r = rename_binders(rhs, "x");
    std::optional<RewriteRule> found;
    for_each_rule_shape([&](const RewriteRule& cand) {
        if (found) return;
        if (equal(lhs_schema(cand), l) && equal(rhs_schema(cand), r)) found = cand;
    });
    return found;
}

// ── Rule sets ───────────────────────────────────────────────────────────────

const RewriteRule* RuleSet::rule_for(Conn symbol) const {
    auto it = rules.find(symbol);
    return it == rules.end() ? nullptr : &it->second;
}

void RuleSet::add(const RewriteRule& r) {
    if (r.side != side || r.n != n)
        throw std::invalid_argument("rule set '" + name + "': side/N mismatch");
    if (!rules.emplace(r.symbol, r).second)
        throw std::invalid_argument("rule set '" + name + "': duplicate rule for symbol");
}

namespace {

RuleSet make_set(std::string name, Side side, NegMark n,
                 std::initializer_list<RewriteRule> rules) {
    RuleSet rs;
    rs.name = std::move(name);
    rs.side = side;
    rs.n = n;
    for (const auto& r : rules) rs.add(r);
    return rs;
}

const NegMark NONE = NegMark::None, SINGLE = NegMark::Single, DOUBLE = NegMark::Double;

}  // namespace

RuleSet builtin_rule_set(const std::string& name) {
    const Side IN = Side::Inside, OUT = Side::Outside;
    if (name == "r1")
        return make_set(name, IN, DOUBLE,
                        {{IN, DOUBLE, Conn::And, Conn::And, NONE, NONE},
                         {IN, DOUBLE, Conn::Or, Conn::Or, NONE, NONE},
                         {IN, DOUBLE, Conn::Imp, Conn::Imp, NONE, NONE},
                         {IN, DOUBLE, Conn::Exists, Conn::Exists, NONE, NONE}});
    if (name == "r2")
        return make_set(name, IN, SINGLE,
                        {{IN, SINGLE, Conn::And, Conn::Or, NONE, NONE},
                         {IN, SINGLE, Conn::Or, Conn::And, NONE, NONE},
                         {IN, SINGLE, Conn::Imp, Conn::And, SINGLE, NONE},
                         {IN, SINGLE, Conn::Forall, Conn::Exists, NONE, NONE}});
    if (name == "r3")
        return make_set(name, OUT, DOUBLE,
                        {{OUT, DOUBLE, Conn::And, Conn::And, NONE, NONE},
                         {OUT, DOUBLE, Conn::Or, Conn::Imp, SINGLE, NONE},
                         {OUT, DOUBLE, Conn::Imp, Conn::Imp, NONE, NONE},
                         {OUT, DOUBLE, Conn::Forall, Conn::Forall, NONE, NONE}});
    if (name == "r4")
        return make_set(name, OUT, SINGLE,
                        {{OUT, SINGLE, Conn::And, Conn::Imp, SINGLE, NONE},
                         {OUT, SINGLE, Conn::Or, Conn::And, NONE, NONE},
                         {OUT, SINGLE, Conn::Imp, Conn::And, SINGLE, NONE},
                         {OUT, SINGLE, Conn::Exists, Conn::Forall, NONE, NONE}});
    if (name == "r3_prime" || name == "r3_prime_minus_imp" || name == "r3_prime_minus_and") {
        RuleSet r3 = builtin_rule_set("r3");
        RuleSet rs;
        rs.name = name;
        rs.side = r3.side;
        rs.n = r3.n;
        for (const auto& [sym, rule] : r3.rules) {
            if (sym == Conn::Or) continue;
            if (name == "r3_prime_minus_imp" && sym == Conn::Imp) continue;
            if (name == "r3_prime_minus_and" && sym == Conn::And) continue;
            rs.add(rule);
        }
        return rs;
    }
    if (name == "r1_tilde") {
        RuleSet rs = builtin_rule_set("r1");
        rs.name = name;
        rs.rules[Conn::Imp] = {IN, DOUBLE, Conn::Imp, Conn::Imp, NONE, DOUBLE};
        return rs;
    }
    if (name == "r1_minus_and") {
        RuleSet r1 = builtin_rule_set("r1");
        RuleSet rs;
        rs.name = name;
        rs.side = r1.side;
        rs.n = r1.n;
        for (const auto& [sym, rule] : r1.rules)
            if (sym != Conn::And) rs.add(rule);
        return rs;
    }
    if (name == "example_nonmaximal")
        return make_set(name, IN, SINGLE,
                        {{IN, SINGLE, Conn::And, Conn::Or, NONE, DOUBLE},
                         {IN, SINGLE, Conn::Or, Conn::And, NONE, NONE}});
    throw std::invalid_argument("unknown rule set '" + name + "'");
}

const std::vector<std::string>& builtin_rule_set_names() {
    static const std::vector<std::string> names = {
        "r1",       "r2",       "r3",       "r4",           "r3_prime",
        "r3_prime_minus_imp",   "r3_prime_minus_and",       "r1_tilde",
        "r1_minus_and",         "example_nonmaximal"};
    return names;
}

std::string to_text(const RuleSet& rs) {
    std::ostringstream os;
    for (const auto& [sym, rule] : rs.rules) os << to_string(rule) << "\n";
    return os.str();
}

RuleSet parse_rule_set(const std::string& text, const std::string& name) {
    RuleSet rs;
    rs.name = name;
    bool first = true;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto arrow = line.find("=>");
        if (arrow == std::string::npos)
            throw std::invalid_argument("rule set line " + std::to_string(lineno) +
                                        ": expected 'LHS => RHS'");
        FormulaPtr lhs = parse(line.substr(0, arrow));
        FormulaPtr rhs = parse(line.substr(arrow + 2));
        auto rule = recognize_rule(lhs, rhs);
        if (!rule)
            throw std::invalid_argument("rule set line " + std::to_string(lineno) +
                                        ": not a simplification schema");
        if (first) {
            rs.side = rule->side;
            rs.n = rule->n;
            first = false;
        }
        rs.add(*rule);
    }
    if (first) throw std::invalid_argument("rule set '" + name + "' is empty");
    return rs;
}

// ── Validation ──────────────────────────────────────────────────────────────

std::pair<FormulaPtr, FormulaPtr> rule_instances(const RewriteRule& r) {
    FormulaPtr l = lhs_schema(r), h = rhs_schema(r);
    if (r.quantifier_rule()) {
        // The hole depends on the bound variable.
        auto subst_meta = [](const FormulaPtr& f) {
            std::function<FormulaPtr(const FormulaPtr&)> go =
                [&go](const FormulaPtr& g) -> FormulaPtr {
                if (g->kind == Conn::Atom && g->name == "A" && g->args.empty())
                    return atom("A", {Term::var("x")});
                if (g->kind == Conn::Neg) return neg(go(g->left));
                if (is_quantifier(g->kind)) return make_quant(g->kind, g->name, go(g->left));
                if (is_binary(g->kind)) return make(g->kind, go(g->left), go(g->right));
                return g;
            };
            return go(f);
        };
        return {subst_meta(l), subst_meta(h)};
    }
    return {l, h};
}

RuleValidation validate_rule(const RewriteRule& r, const ValidationOptions& opts) {
    bool kinds_ok = r.quantifier_rule() ? is_quantifier(r.result_symbol)
                                        : (is_binary(r.symbol) && is_binary(r.result_symbol));
    if (!kinds_ok || r.n == NegMark::None)
        return {RuleValidation::Invalid, "malformed schema", ""};
    int ln = count_negs(lhs_schema(r)), rn = count_negs(rhs_schema(r));
    if (rn >= ln)
        return {RuleValidation::Invalid,
                "negation count does not decrease (" + std::to_string(ln) + " -> " +
                    std::to_string(rn) + ")",
                ""};
    auto [li, ri] = rule_instances(r);
    if (!r.quantifier_rule()) {
        if (prove_ipc(iff(li, ri)).proved()) return {RuleValidation::Valid, "", ""};
        std::string witness;
        for (const FormulaPtr& dir : {imp(li, ri), imp(ri, li)}) {
            if (prove_ipc(dir).refuted()) {
                if (auto cm = kripke::find_countermodel(dir, opts.bounds))
                    witness = "refuted: " + to_string(dir) + "\n" + describe(*cm);
                else
                    witness = "refuted: " + to_string(dir);
                break;
            }
        }
        return {RuleValidation::Invalid, "sides not equivalent in IL", witness};
    }
    // Countermodel search first: refutations are cheap, exhausted proof
    // searches are not.
    for (const FormulaPtr& dir : {imp(li, ri), imp(ri, li)}) {
        if (auto cm = kripke::find_countermodel(dir, opts.bounds))
            return {RuleValidation::Invalid, "sides not equivalent in IL",
                    "refuted: " + to_string(dir) + "\n" + describe(*cm)};
    }
    bool fwd = prove_fo_bounded(imp(li, ri), Logic::Intuitionistic, opts.fo_depth).proved();
    bool bwd = prove_fo_bounded(imp(ri, li), Logic::Intuitionistic, opts.fo_depth).proved();
    if (fwd && bwd) return {RuleValidation::Valid, "", ""};
    return {RuleValidation::Unknown,
            "proof search bounds exhausted and no countermodel within bounds", ""};
}

// ── Rewriting ───────────────────────────────────────────────────────────────

std::string to_string(const Position& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "." : "") + std::to_string(p[i]);
    return s + "]";
}

FormulaPtr subformula_at(const FormulaPtr& f, const Position& p) {
    FormulaPtr cur = f;
    for (int step : p) {
        cur = step == 0 ? cur->left : cur->right;
        if (!cur) throw std::invalid_argument("position not valid in formula");
    }
    return cur;
}

namespace {

struct MatchResult {
    FormulaPtr a, b;       // b null for quantifier rules
    std::string var;       // quantifier rules
    std::uint64_t principal_tag = 0;
};

// Strips exactly neg_count(m) Neg nodes.
std::optional<FormulaPtr> strip(NegMark m, const FormulaPtr& f) {
    FormulaPtr cur = f;
    for (int i = 0; i < neg_count(m); ++i) {
        if (cur->kind != Conn::Neg) return std::nullopt;
        cur = cur->left;
    }
    return cur;
}

std::optional<MatchResult> match_rule(const FormulaPtr& sub, const RewriteRule& r) {
    if (r.side == Side::Inside) {
        auto body = strip(NegMark::Double, sub);
        if (!body) return std::nullopt;
        if ((*body)->kind != r.symbol) return std::nullopt;
        if (r.quantifier_rule()) {
            auto a = strip(r.n, (*body)->left);
            if (!a) return std::nullopt;
            return MatchResult{*a, nullptr, (*body)->name, (*body)->tag};
        }
        auto a = strip(r.n, (*body)->left);
        auto b = strip(r.n, (*body)->right);
        if (!a || !b) return std::nullopt;
        return MatchResult{*a, *b, "", (*body)->tag};
    }
    auto core = strip(r.n, sub);
    if (!core) return std::nullopt;
    if ((*core)->kind != r.symbol) return std::nullopt;
    if (r.quantifier_rule()) {
        auto a = strip(NegMark::Double, (*core)->left);
        if (!a) return std::nullopt;
        return MatchResult{*a, nullptr, (*core)->name, (*core)->tag};
    }
    auto a = strip(NegMark::Double, (*core)->left);
    auto b = strip(NegMark::Double, (*core)->right);
    if (!a || !b) return std::nullopt;
    return MatchResult{*a, *b, "", (*core)->tag};
}

FormulaPtr build_rhs(const RewriteRule& r, const MatchResult& m) {
    if (r.side == Side::Inside) {
        if (r.quantifier_rule())
            return wrap(r.n, with_tag(make_quant(r.result_symbol, m.var, wrap(r.n1, m.a)),
                                      m.principal_tag));
        return wrap(r.n, with_tag(make(r.result_symbol, wrap(r.n1, m.a), wrap(r.n2, m.b)),
                                  m.principal_tag));
    }
    if (r.quantifier_rule())
        return with_tag(make_quant(r.result_symbol, m.var, wrap(r.n1, wrap(r.n, m.a))),
                        m.principal_tag);
    return with_tag(
        make(r.result_symbol, wrap(r.n1, wrap(r.n, m.a)), wrap(r.n2, wrap(r.n, m.b))),
        m.principal_tag);
}

FormulaPtr replace_at(const FormulaPtr& f, const Position& p, std::size_t i,
                      const FormulaPtr& repl) {
    if (i == p.size()) return repl;
    auto g = std::make_shared<Formula>(*f);
    if (p[i] == 0)
        g->left = replace_at(f->left, p, i + 1, repl);
    else
        g->right = replace_at(f->right, p, i + 1, repl);
    return g;
}

void walk_positions(const FormulaPtr& f, Position& cur,
                    const std::function<void(const Position&, const FormulaPtr&)>& fn) {
    fn(cur, f);
    if (f->left) {
        cur.push_back(0);
        walk_positions(f->left, cur, fn);
        cur.pop_back();
    }
    if (f->right) {
        cur.push_back(1);
        walk_positions(f->right, cur, fn);
        cur.pop_back();
    }
}

// Post-order: descendants before ancestors, left before right.
bool post_before(const Position& a, const Position& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() > b.size();
}

// Pre-order: ancestors before descendants, left before right.
bool pre_before(const Position& a, const Position& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

}  // namespace

std::vector<Redex> find_redexes(const FormulaPtr& f, const RuleSet& rs) {
    std::vector<Redex> out;
    Position cur;
    walk_positions(f, cur, [&](const Position& p, const FormulaPtr& sub) {
        for (const auto& [sym, rule] : rs.rules)
            if (match_rule(sub, rule)) out.push_back({p, rule});
    });
    return out;
}

FormulaPtr apply_at(const FormulaPtr& f, const Position& pos, const RewriteRule& rule) {
    FormulaPtr sub = subformula_at(f, pos);
    auto m = match_rule(sub, rule);
    if (!m) throw std::invalid_argument("apply_at: not a redex of the given rule");
    return replace_at(f, pos, 0, build_rhs(rule, *m));
}

SimplificationPath standard_path(const FormulaPtr& f, const RuleSet& rs) {
    SimplificationPath path;
    path.nodes.push_back(f);
    FormulaPtr cur = f;
    while (true) {
        auto redexes = find_redexes(cur, rs);
        if (redexes.empty()) break;
        auto cmp = [&rs](const Redex& x, const Redex& y) {
            return rs.side == Side::Inside ? post_before(x.pos, y.pos) : pre_before(x.pos, y.pos);
        };
        const Redex& pick = *std::min_element(redexes.begin(), redexes.end(), cmp);
        auto m = match_rule(subformula_at(cur, pick.pos), pick.rule);
        cur = apply_at(cur, pick.pos, pick.rule);
        path.steps.push_back({pick.pos, pick.rule, m->principal_tag});
        path.nodes.push_back(cur);
    }
    return path;
}

FormulaPtr longest_result(const FormulaPtr& f, const RuleSet& rs) {
    return standard_path(f, rs).last();
}

int expected_length(const FormulaPtr& source, const RuleSet& rs) {
    ConnectiveCounts c = count_connectives(expand_neg(source));
    int total = 0;
    if (rs.rule_for(Conn::And)) total += c.conj;
    if (rs.rule_for(Conn::Or)) total += c.disj;
    if (rs.rule_for(Conn::Imp)) total += c.imp;
    if (rs.rule_for(Conn::Forall)) total += c.forall;
    if (rs.rule_for(Conn::Exists)) total += c.exists;
    return total;
}

std::vector<SimplificationPath> enumerate_all_paths(const FormulaPtr& f, const RuleSet& rs,
                                                    long budget) {
    std::vector<SimplificationPath> out;
    SimplificationPath path;
    path.nodes.push_back(f);
    long used = 0;
    std::function<void(const FormulaPtr&)> rec = [&](const FormulaPtr& cur) {
        if (++used > budget) throw PathBudgetExceeded("path enumeration budget exceeded");
        auto redexes = find_redexes(cur, rs);
        if (redexes.empty()) {
            out.push_back(path);
            return;
        }
        for (const auto& rd : redexes) {
            auto m = match_rule(subformula_at(cur, rd.pos), rd.rule);
            FormulaPtr next = apply_at(cur, rd.pos, rd.rule);
            path.steps.push_back({rd.pos, rd.rule, m->principal_tag});
            path.nodes.push_back(next);
            rec(next);
            path.steps.pop_back();
            path.nodes.pop_back();
        }
    };
    rec(f);
    return out;
}

// ── Maximality enumeration ──────────────────────────────────────────────────

MaximalEnumeration enumerate_maximal(const ValidationOptions& opts) {
    MaximalEnumeration out;
    const Conn conns[] = {Conn::And, Conn::Or, Conn::Imp};
    const Conn quants[] = {Conn::Forall, Conn::Exists};
    const NegMark marks[] = {NegMark::None, NegMark::Single, NegMark::Double};

    for (Side side : {Side::Inside, Side::Outside}) {
        for (NegMark n : {NegMark::Single, NegMark::Double}) {
            RuleSet set;
            set.side = side;
            set.n = n;
            set.name = std::string("maximal-") + to_string(side) + "-" +
                       (n == NegMark::Single ? "single" : "double");
            for (Conn sym : {Conn::And, Conn::Or, Conn::Imp, Conn::Forall, Conn::Exists}) {
                std::vector<RewriteRule> candidates;
                bool quant = is_quantifier(sym);
                for (Conn res : quant ? std::vector<Conn>(std::begin(quants), std::end(quants))
                                      : std::vector<Conn>(std::begin(conns), std::end(conns))) {
                    for (NegMark n1 : marks) {
                        for (NegMark n2 : quant ? std::vector<NegMark>{NegMark::None}
                                                : std::vector<NegMark>(std::begin(marks),
                                                                       std::end(marks))) {
                            RewriteRule cand{side, n, sym, res, n1, n2};
                            RuleValidation v = validate_rule(cand, opts);
                            if (quant) {
                                CandidateReport rep{cand, CandidateReport::Undecided, ""};
                                switch (v.status) {
                                    case RuleValidation::Valid:
                                        rep.outcome = CandidateReport::Accepted;
                                        break;
                                    case RuleValidation::Invalid:
                                        rep.outcome =
                                            v.reason.find("not equivalent") != std::string::npos
                                                ? CandidateReport::Refuted
                                                : CandidateReport::CountRejected;
                                        rep.detail = v.witness.empty() ? v.reason : v.witness;
                                        break;
                                    case RuleValidation::Unknown: {
                                        auto [li, ri] = rule_instances(cand);
                                        const kripke::CuratedRefutation* entry = nullptr;
                                        for (const FormulaPtr& dir : {imp(li, ri), imp(ri, li)}) {
                                            if (!prove_fo_bounded(dir, Logic::Intuitionistic,
                                                                  opts.fo_depth)
                                                     .proved())
                                                if ((entry = kripke::curated_lookup(dir)))
                                                    break;
                                        }
                                        if (entry) {
                                            rep.outcome = CandidateReport::Curated;
                                            rep.detail = entry->id + ": " + entry->status;
                                        } else {
                                            rep.outcome = CandidateReport::Undecided;
                                            rep.detail = v.reason;
                                            out.undecided.push_back(rep);
                                        }
                                        break;
                                    }
                                }
                                out.quantifier_candidates.push_back(rep);
                            }
                            if (v.status == RuleValidation::Valid) candidates.push_back(cand);
                        }
                    }
                }
                if (candidates.empty()) continue;
                auto rhs_negs = [](const RewriteRule& r) { return count_negs(rhs_schema(r)); };
                const RewriteRule* best = &candidates.front();
                for (const auto& c : candidates)
                    if (rhs_negs(c) < rhs_negs(*best)) best = &c;
                set.add(*best);
            }
            if (!set.rules.empty()) out.maximal_sets.push_back(set);
        }
    }
    return out;
}

}  // namespace negtrans
