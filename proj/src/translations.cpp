#include "negtrans/translations.hpp"

#include <functional>
#include <stdexcept>

namespace negtrans {

const std::string hole_var = "#x";

FormulaPtr hole_marker(int i) { return atom("#" + std::to_string(i)); }

namespace {

bool is_hole(const FormulaPtr& f, int i) {
    return f->kind == Conn::Atom && f->name == "#" + std::to_string(i) && f->args.empty();
}

FormulaPtr fill(const FormulaPtr& pat, const FormulaPtr& h1, const FormulaPtr& h2,
                const std::string& var) {
    if (is_hole(pat, 1)) return h1;
    if (is_hole(pat, 2)) {
        if (!h2) throw std::logic_error("clause template: missing second hole value");
        return h2;
    }
    switch (pat->kind) {
        case Conn::Atom:
        case Conn::Bot:
        case Conn::Top: return pat;
        case Conn::Neg: return neg(fill(pat->left, h1, h2, var));
        case Conn::Forall:
        case Conn::Exists: {
            std::string v = pat->name == hole_var ? var : pat->name;
            if (v.empty()) throw std::logic_error("clause template: missing bound variable");
            return make_quant(pat->kind, v, fill(pat->left, h1, h2, var));
        }
        default: return make(pat->kind, fill(pat->left, h1, h2, var),
                             fill(pat->right, h1, h2, var));
    }
}

}  // namespace

FormulaPtr ClauseTemplate::instantiate(const FormulaPtr& h1, const FormulaPtr& h2,
                                       const std::string& var) const {
    return fill(pattern, h1, h2, var);
}

ClauseTemplate hole1() { return {hole_marker(1)}; }

namespace {

const FormulaPtr H1 = hole_marker(1);
const FormulaPtr H2 = hole_marker(2);

ClauseTemplate ct(FormulaPtr f) { return {std::move(f)}; }

TranslationSpec base(std::string name) {
    TranslationSpec s;
    s.name = std::move(name);
    s.conj = ct(conj(H1, H2));
    s.disj = ct(disj(H1, H2));
    s.impl = ct(imp(H1, H2));
    s.forall_c = ct(forall(hole_var, H1));
    s.exists_c = ct(exists(hole_var, H1));
    s.atom_c = hole1();
    s.wrapper = hole1();
    return s;
}

void derive_constant_clauses(TranslationSpec& s) {
    s.bot_c = ct(s.atom_c.instantiate(bot()));
    s.top_c = ct(s.atom_c.instantiate(top()));
}

}  // namespace

TranslationSpec TranslationSpec::with_literal_bot() const {
    TranslationSpec s = *this;
    s.bot_c = ct(bot());
    return s;
}

TranslationSpec builtin_translation(const std::string& name) {
    TranslationSpec s = base(name);
    if (name == "kolmogorov") {
        s.atom_c = ct(negs(2, H1));
        s.conj = ct(negs(2, conj(H1, H2)));
        s.disj = ct(negs(2, disj(H1, H2)));
        s.impl = ct(negs(2, imp(H1, H2)));
        s.forall_c = ct(negs(2, forall(hole_var, H1)));
        s.exists_c = ct(negs(2, exists(hole_var, H1)));
    } else if (name == "goedel_gentzen") {
        s.atom_c = ct(negs(2, H1));
        s.disj = ct(negs(2, disj(H1, H2)));
        s.exists_c = ct(negs(2, exists(hole_var, H1)));
    } else if (name == "goedel") {
        // Goedel-Gentzen with a doubly negated implication clause.  The
        // historical form ~(A & ~B) is clause-wise equivalent.
        s.atom_c = ct(negs(2, H1));
        s.disj = ct(negs(2, disj(H1, H2)));
        s.impl = ct(negs(2, imp(H1, H2)));
        s.exists_c = ct(negs(2, exists(hole_var, H1)));
    } else if (name == "gentzen_original") {
        // The {exists, or}-free formulation: both clauses through De Morgan.
        s.atom_c = ct(negs(2, H1));
        s.disj = ct(neg(conj(neg(H1), neg(H2))));
        s.exists_c = ct(neg(forall(hole_var, neg(H1))));
    } else if (name == "kuroda") {
        s.forall_c = ct(forall(hole_var, negs(2, H1)));
        s.wrapper = ct(negs(2, H1));
    } else if (name == "kuroda_ml") {
        // Double negations at the top, after each universal quantifier, and
        // before each implication conclusion; embeds into minimal logic.
        s.impl = ct(imp(H1, negs(2, H2)));
        s.forall_c = ct(forall(hole_var, negs(2, H1)));
        s.wrapper = ct(negs(2, H1));
    } else if (name == "krivine") {
        s.atom_c = ct(neg(H1));
        s.conj = ct(disj(H1, H2));
        s.disj = ct(conj(H1, H2));
        s.impl = ct(conj(neg(H1), H2));
        s.forall_c = ct(exists(hole_var, H1));
        s.exists_c = ct(neg(exists(hole_var, neg(H1))));
        s.wrapper = ct(neg(H1));
    } else if (name == "g") {
        // Goedel-Gentzen except the disjunction clause spends one negation.
        s.atom_c = ct(negs(2, H1));
        s.disj = ct(imp(neg(H1), H2));
        s.exists_c = ct(negs(2, exists(hole_var, H1)));
    } else if (name == "em") {
        // Krivine's mirror image: negations on the {and, forall} clauses.
        s.atom_c = ct(neg(H1));
        s.conj = ct(imp(neg(H1), H2));
        s.disj = ct(conj(H1, H2));
        s.impl = ct(conj(neg(H1), H2));
        s.forall_c = ct(neg(forall(hole_var, neg(H1))));
        s.exists_c = ct(forall(hole_var, H1));
        s.wrapper = ct(neg(H1));
    } else if (name == "aczel") {
        // Goedel-Gentzen with the Kolmogorov conjunction clause kept.
        s.atom_c = ct(negs(2, H1));
        s.conj = ct(negs(2, conj(H1, H2)));
        s.disj = ct(negs(2, disj(H1, H2)));
        s.exists_c = ct(negs(2, exists(hole_var, H1)));
    } else {
        throw std::invalid_argument("unknown translation '" + name + "'");
    }
    derive_constant_clauses(s);
    return s;
}

const std::vector<std::string>& builtin_translation_names() {
    static const std::vector<std::string> names = {
        "kolmogorov", "goedel_gentzen", "goedel",  "gentzen_original", "kuroda",
        "krivine",    "g",              "em",      "aczel",            "kuroda_ml"};
    return names;
}

namespace {

FormulaPtr apply_core(const TranslationSpec& s, const FormulaPtr& f) {
    switch (f->kind) {
        case Conn::Atom: return s.atom_c.instantiate(f);
        case Conn::Bot: return s.bot_c.instantiate(bot());
        case Conn::Top: return s.top_c.instantiate(top());
        case Conn::And: return s.conj.instantiate(apply_core(s, f->left), apply_core(s, f->right));
        case Conn::Or: return s.disj.instantiate(apply_core(s, f->left), apply_core(s, f->right));
        case Conn::Imp: return s.impl.instantiate(apply_core(s, f->left), apply_core(s, f->right));
        case Conn::Forall: return s.forall_c.instantiate(apply_core(s, f->left), nullptr, f->name);
        case Conn::Exists: return s.exists_c.instantiate(apply_core(s, f->left), nullptr, f->name);
        case Conn::Neg: throw std::logic_error("apply_core: unexpanded negation");
    }
    return f;
}

}  // namespace

FormulaPtr apply_translation(const TranslationSpec& spec, const FormulaPtr& f) {
    if (!spec.modular) throw std::invalid_argument("apply_translation: non-modular spec");
    return spec.wrapper.instantiate(apply_core(spec, expand_neg(f)));
}

// ── Clause-wise equivalence ─────────────────────────────────────────────────

namespace {

struct ClauseDecision {
    Verdict verdict;
    std::string witness;
};

ClauseDecision decide_equiv(const FormulaPtr& a, const FormulaPtr& b, const KernelOptions& opts) {
    if (is_propositional(a) && is_propositional(b)) {
        Decision d = prove_ipc(iff(a, b));
        return {d.verdict, ""};
    }
    bool fwd = prove_fo_bounded(imp(a, b), Logic::Intuitionistic, opts.fo_depth).proved();
    bool bwd = prove_fo_bounded(imp(b, a), Logic::Intuitionistic, opts.fo_depth).proved();
    if (fwd && bwd) return {Verdict::Proved, ""};
    for (const FormulaPtr& dir : {imp(a, b), imp(b, a)}) {
        if (auto cm = kripke::find_countermodel(dir, opts.bounds))
            return {Verdict::Refuted, "refuted: " + to_string(dir) + "\n" + describe(*cm)};
    }
    return {Verdict::Unknown, ""};
}

}  // namespace

RelatedResult translations_related(const TranslationSpec& t1, const TranslationSpec& t2,
                                   const KernelOptions& opts) {
    if (!t1.modular || !t2.modular)
        throw std::invalid_argument("translations_related: non-modular spec");
    FormulaPtr a0 = atom("A"), b0 = atom("B");
    FormulaPtr ax = atom("A", {Term::var("x")});
    FormulaPtr p = atom("P");

    RelatedResult out;
    auto record = [&](const std::string& name, const FormulaPtr& f1, const FormulaPtr& f2) {
        ClauseDecision d = decide_equiv(f1, f2, opts);
        out.clauses.push_back({name, d.verdict, d.witness});
    };
    record("and", t1.conj.instantiate(a0, b0), t2.conj.instantiate(a0, b0));
    record("or", t1.disj.instantiate(a0, b0), t2.disj.instantiate(a0, b0));
    record("imp", t1.impl.instantiate(a0, b0), t2.impl.instantiate(a0, b0));
    record("forall", t1.forall_c.instantiate(ax, nullptr, "x"),
           t2.forall_c.instantiate(ax, nullptr, "x"));
    record("exists", t1.exists_c.instantiate(ax, nullptr, "x"),
           t2.exists_c.instantiate(ax, nullptr, "x"));
    record("atom", t1.atom_c.instantiate(p), t2.atom_c.instantiate(p));
    record("bot", t1.bot_c.instantiate(bot()), t2.bot_c.instantiate(bot()));
    record("wrapper", t1.wrapper.instantiate(a0), t2.wrapper.instantiate(a0));

    out.overall = Verdict::Proved;
    for (const auto& c : out.clauses) {
        if (c.verdict == Verdict::Refuted) {
            out.overall = Verdict::Refuted;
            return out;
        }
        if (c.verdict == Verdict::Unknown) out.overall = Verdict::Unknown;
    }
    return out;
}

// ── NNF ─────────────────────────────────────────────────────────────────────

namespace {
NnfPtr nnf_node(NnfFormula::Kind k, bool pos, FormulaPtr a, NnfPtr l, NnfPtr r, std::string v) {
    auto f = std::make_shared<NnfFormula>();
    f->kind = k;
    f->positive = pos;
    f->atom_f = std::move(a);
    f->left = std::move(l);
    f->right = std::move(r);
    f->var = std::move(v);
    return f;
}
}  // namespace

NnfPtr nnf_lit(bool positive, FormulaPtr atom_f) {
    return nnf_node(NnfFormula::Lit, positive, std::move(atom_f), nullptr, nullptr, "");
}
NnfPtr nnf_and(NnfPtr a, NnfPtr b) {
    return nnf_node(NnfFormula::And, true, nullptr, std::move(a), std::move(b), "");
}
NnfPtr nnf_or(NnfPtr a, NnfPtr b) {
    return nnf_node(NnfFormula::Or, true, nullptr, std::move(a), std::move(b), "");
}
NnfPtr nnf_forall(std::string var, NnfPtr body) {
    return nnf_node(NnfFormula::Forall, true, nullptr, std::move(body), nullptr, std::move(var));
}
NnfPtr nnf_exists(std::string var, NnfPtr body) {
    return nnf_node(NnfFormula::Exists, true, nullptr, std::move(body), nullptr, std::move(var));
}

bool equal(const NnfPtr& a, const NnfPtr& b) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case NnfFormula::Lit: return a->positive == b->positive && equal(a->atom_f, b->atom_f);
        case NnfFormula::And:
        case NnfFormula::Or: return equal(a->left, b->left) && equal(a->right, b->right);
        case NnfFormula::Forall:
        case NnfFormula::Exists: return a->var == b->var && equal(a->left, b->left);
    }
    return false;
}

std::string to_string(const NnfPtr& f) { return to_string(embed_nnf(f)); }

namespace {
NnfPtr nnf_rec(const FormulaPtr& f, bool positive) {
    switch (f->kind) {
        case Conn::Atom:
        case Conn::Bot:
        case Conn::Top: return nnf_lit(positive, f);
        case Conn::Neg: return nnf_rec(f->left, !positive);
        case Conn::And: {
            auto l = nnf_rec(f->left, positive), r = nnf_rec(f->right, positive);
            return positive ? nnf_and(l, r) : nnf_or(l, r);
        }
        case Conn::Or: {
            auto l = nnf_rec(f->left, positive), r = nnf_rec(f->right, positive);
            return positive ? nnf_or(l, r) : nnf_and(l, r);
        }
        case Conn::Imp: {
            auto l = nnf_rec(f->left, !positive), r = nnf_rec(f->right, positive);
            return positive ? nnf_or(l, r) : nnf_and(l, r);
        }
        case Conn::Forall: {
            auto b = nnf_rec(f->left, positive);
            return positive ? nnf_forall(f->name, b) : nnf_exists(f->name, b);
        }
        case Conn::Exists: {
            auto b = nnf_rec(f->left, positive);
            return positive ? nnf_exists(f->name, b) : nnf_forall(f->name, b);
        }
    }
    return nullptr;
}
}  // namespace

NnfPtr nnf(const FormulaPtr& f) { return nnf_rec(f, true); }

NnfPtr dual(const NnfPtr& f) {
    switch (f->kind) {
        case NnfFormula::Lit: return nnf_lit(!f->positive, f->atom_f);
        case NnfFormula::And: return nnf_or(dual(f->left), dual(f->right));
        case NnfFormula::Or: return nnf_and(dual(f->left), dual(f->right));
        case NnfFormula::Forall: return nnf_exists(f->var, dual(f->left));
        case NnfFormula::Exists: return nnf_forall(f->var, dual(f->left));
    }
    return nullptr;
}

FormulaPtr embed_nnf(const NnfPtr& f) {
    switch (f->kind) {
        case NnfFormula::Lit: return f->positive ? f->atom_f : neg(f->atom_f);
        case NnfFormula::And: return conj(embed_nnf(f->left), embed_nnf(f->right));
        case NnfFormula::Or: return disj(embed_nnf(f->left), embed_nnf(f->right));
        case NnfFormula::Forall: return forall(f->var, embed_nnf(f->left));
        case NnfFormula::Exists: return exists(f->var, embed_nnf(f->left));
    }
    return nullptr;
}

FormulaPtr avigad_m(const NnfPtr& f) {
    switch (f->kind) {
        case NnfFormula::Lit: return f->positive ? f->atom_f : neg(f->atom_f);
        case NnfFormula::Or: return disj(avigad_m(f->left), avigad_m(f->right));
        case NnfFormula::Exists: return exists(f->var, avigad_m(f->left));
        case NnfFormula::And:
            return neg(disj(avigad_m(dual(f->left)), avigad_m(dual(f->right))));
        case NnfFormula::Forall: return neg(exists(f->var, avigad_m(dual(f->left))));
    }
    return nullptr;
}

FormulaPtr avigad_m_prime(const NnfPtr& f) {
    switch (f->kind) {
        case NnfFormula::Lit: return f->positive ? f->atom_f : neg(f->atom_f);
        case NnfFormula::Or: return disj(avigad_m_prime(f->left), avigad_m_prime(f->right));
        case NnfFormula::Exists: return exists(f->var, avigad_m_prime(f->left));
        case NnfFormula::And:
            return conj(negs(2, avigad_m_prime(f->left)), negs(2, avigad_m_prime(f->right)));
        case NnfFormula::Forall: return forall(f->var, negs(2, avigad_m_prime(f->left)));
    }
    return nullptr;
}

FormulaPtr kolmogorov_of_nnf(const NnfPtr& f) {
    switch (f->kind) {
        case NnfFormula::Lit:
            return negs(2, f->positive ? f->atom_f : neg(f->atom_f));
        case NnfFormula::And:
            return negs(2, conj(kolmogorov_of_nnf(f->left), kolmogorov_of_nnf(f->right)));
        case NnfFormula::Or:
            return negs(2, disj(kolmogorov_of_nnf(f->left), kolmogorov_of_nnf(f->right)));
        case NnfFormula::Forall: return negs(2, forall(f->var, kolmogorov_of_nnf(f->left)));
        case NnfFormula::Exists: return negs(2, exists(f->var, kolmogorov_of_nnf(f->left)));
    }
    return nullptr;
}

// ── Monadic translations ────────────────────────────────────────────────────

MonadDescriptor MonadDescriptor::friedman(FormulaPtr a) {
    if (!is_closed(a)) throw std::invalid_argument("monad target must be closed");
    return {Friedman, std::move(a)};
}

MonadDescriptor MonadDescriptor::peirce_r(FormulaPtr r) {
    if (!is_closed(r)) throw std::invalid_argument("monad target must be closed");
    return {PeirceR, std::move(r)};
}

FormulaPtr MonadDescriptor::wrap(const FormulaPtr& x) const {
    switch (kind) {
        case DoubleNeg: return negs(2, x);
        case Friedman: return imp(imp(x, target), target);
        case PeirceNeg: return imp(neg(x), x);
        case PeirceR: return imp(imp(x, target), x);
    }
    return x;
}

namespace {

FormulaPtr monadic_core(const MonadDescriptor& m, MonadicVariant v, const FormulaPtr& f) {
    auto T = [&m](const FormulaPtr& x) { return m.wrap(x); };
    auto rec = [&](const FormulaPtr& g) { return monadic_core(m, v, g); };
    switch (f->kind) {
        case Conn::Atom:
        case Conn::Bot:
        case Conn::Top:
            return v == MonadicVariant::KurodaMlT ? f : T(f);
        case Conn::And: {
            FormulaPtr c = conj(rec(f->left), rec(f->right));
            return v == MonadicVariant::KolmogorovT ? T(c) : c;
        }
        case Conn::Or: {
            FormulaPtr d = disj(rec(f->left), rec(f->right));
            return v == MonadicVariant::KurodaMlT ? d : T(d);
        }
        case Conn::Imp: {
            FormulaPtr b = rec(f->right);
            if (v == MonadicVariant::KurodaMlT) return imp(rec(f->left), T(b));
            FormulaPtr i = imp(rec(f->left), b);
            return v == MonadicVariant::KolmogorovT ? T(i) : i;
        }
        case Conn::Forall: {
            FormulaPtr body = rec(f->left);
            if (v == MonadicVariant::KurodaMlT) return forall(f->name, T(body));
            FormulaPtr q = forall(f->name, body);
            return v == MonadicVariant::KolmogorovT ? T(q) : q;
        }
        case Conn::Exists: {
            FormulaPtr q = exists(f->name, rec(f->left));
            return v == MonadicVariant::KurodaMlT ? q : T(q);
        }
        case Conn::Neg: throw std::logic_error("monadic_core: unexpanded negation");
    }
    return f;
}

}  // namespace

FormulaPtr monadic_translation(const MonadDescriptor& m, MonadicVariant variant,
                               const FormulaPtr& f) {
    FormulaPtr core = monadic_core(m, variant, expand_neg(f));
    return variant == MonadicVariant::KurodaMlT ? m.wrap(core) : core;
}

}  // namespace negtrans
