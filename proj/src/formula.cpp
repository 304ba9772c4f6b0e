#include "negtrans/formula.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace negtrans {

bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }

int compare(const Term& a, const Term& b) {
    if (a.is_var != b.is_var) return a.is_var ? -1 : 1;
    if (int c = a.name.compare(b.name)) return c < 0 ? -1 : 1;
    if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (int c = compare(a.args[i], b.args[i])) return c;
    return 0;
}

std::string to_string(const Term& t) {
    if (t.is_var) return t.name;
    std::string s = t.name + "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) s += ",";
        s += to_string(t.args[i]);
    }
    return s + ")";
}

const char* conn_name(Conn c) {
    switch (c) {
        case Conn::Atom: return "atom";
        case Conn::Bot: return "bot";
        case Conn::Top: return "top";
        case Conn::Neg: return "~";
        case Conn::And: return "&";
        case Conn::Or: return "|";
        case Conn::Imp: return "->";
        case Conn::Forall: return "forall";
        case Conn::Exists: return "exists";
    }
    return "?";
}

bool is_binary(Conn c) { return c == Conn::And || c == Conn::Or || c == Conn::Imp; }
bool is_quantifier(Conn c) { return c == Conn::Forall || c == Conn::Exists; }

namespace {
FormulaPtr node(Conn k, std::string name, std::vector<Term> args, FormulaPtr l, FormulaPtr r,
                std::uint64_t tag = 0) {
    auto f = std::make_shared<Formula>();
    f->kind = k;
    f->name = std::move(name);
    f->args = std::move(args);
    f->left = std::move(l);
    f->right = std::move(r);
    f->tag = tag;
    return f;
}
}  // namespace

FormulaPtr atom(std::string pred, std::vector<Term> args) {
    return node(Conn::Atom, std::move(pred), std::move(args), nullptr, nullptr);
}
FormulaPtr bot() { return node(Conn::Bot, "", {}, nullptr, nullptr); }
FormulaPtr top() { return node(Conn::Top, "", {}, nullptr, nullptr); }
FormulaPtr neg(FormulaPtr a) { return node(Conn::Neg, "", {}, std::move(a), nullptr); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) {
    return node(Conn::And, "", {}, std::move(a), std::move(b));
}
FormulaPtr disj(FormulaPtr a, FormulaPtr b) {
    return node(Conn::Or, "", {}, std::move(a), std::move(b));
}
FormulaPtr imp(FormulaPtr a, FormulaPtr b) {
    return node(Conn::Imp, "", {}, std::move(a), std::move(b));
}
FormulaPtr iff(FormulaPtr a, FormulaPtr b) { return conj(imp(a, b), imp(b, a)); }
FormulaPtr forall(std::string var, FormulaPtr body) {
    return node(Conn::Forall, std::move(var), {}, std::move(body), nullptr);
}
FormulaPtr exists(std::string var, FormulaPtr body) {
    return node(Conn::Exists, std::move(var), {}, std::move(body), nullptr);
}

FormulaPtr make(Conn kind, FormulaPtr a, FormulaPtr b) {
    if (!is_binary(kind)) throw std::invalid_argument("make: binary connective expected");
    return node(kind, "", {}, std::move(a), std::move(b));
}

FormulaPtr make_quant(Conn kind, std::string var, FormulaPtr body) {
    if (!is_quantifier(kind)) throw std::invalid_argument("make_quant: quantifier expected");
    return node(kind, std::move(var), {}, std::move(body), nullptr);
}

FormulaPtr negs(int n, FormulaPtr a) {
    for (int i = 0; i < n; ++i) a = neg(a);
    return a;
}

int compare(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return 0;
    if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
    if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
    if (a->args.size() != b->args.size()) return a->args.size() < b->args.size() ? -1 : 1;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (int c = compare(a->args[i], b->args[i])) return c;
    if (!a->left != !b->left) return !a->left ? -1 : 1;
    if (a->left)
        if (int c = compare(a->left, b->left)) return c;
    if (!a->right != !b->right) return !a->right ? -1 : 1;
    if (a->right)
        if (int c = compare(a->right, b->right)) return c;
    return 0;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) { return compare(a, b) == 0; }

std::size_t hash_of(const FormulaPtr& f) {
    std::size_t h = std::hash<int>()(static_cast<int>(f->kind));
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    mix(std::hash<std::string>()(f->name));
    for (const auto& t : f->args) mix(std::hash<std::string>()(to_string(t)));
    if (f->left) mix(hash_of(f->left));
    if (f->right) mix(hash_of(f->right));
    return h;
}

// ── Printer ─────────────────────────────────────────────────────────────────
//
// Precedence: ~ (4) > & (3) > | (2) > -> (1, right-assoc); quantifier bodies
// extend maximally right.  A subterm whose right edge ends in an open
// quantifier must be parenthesised whenever more tokens follow it.

namespace {

struct Printed {
    std::string text;
    int prec;
    bool open_right;
};

std::string parens(const std::string& s) { return "(" + s + ")"; }

Printed render(const FormulaPtr& f) {
    switch (f->kind) {
        case Conn::Atom: {
            std::string s = f->name;
            if (!f->args.empty()) {
                s += "(";
                for (std::size_t i = 0; i < f->args.size(); ++i) {
                    if (i) s += ",";
                    s += to_string(f->args[i]);
                }
                s += ")";
            }
            return {s, 5, false};
        }
        case Conn::Bot: return {"bot", 5, false};
        case Conn::Top: return {"top", 5, false};
        case Conn::Neg: {
            Printed c = render(f->left);
            bool wrap = c.prec < 4;
            return {"~" + (wrap ? parens(c.text) : c.text), 4, wrap ? false : c.open_right};
        }
        case Conn::And:
        case Conn::Or:
        case Conn::Imp: {
            int prec = f->kind == Conn::And ? 3 : f->kind == Conn::Or ? 2 : 1;
            // left-assoc for & and |: left child may share the level;
            // right-assoc for ->: right child may share the level.
            int left_min = f->kind == Conn::Imp ? prec + 1 : prec;
            int right_min = f->kind == Conn::Imp ? prec : prec + 1;
            Printed l = render(f->left);
            Printed r = render(f->right);
            bool wl = l.prec < left_min || l.open_right;
            bool wr = r.prec < right_min;
            const char* op = f->kind == Conn::And ? " & " : f->kind == Conn::Or ? " | " : " -> ";
            return {(wl ? parens(l.text) : l.text) + op + (wr ? parens(r.text) : r.text), prec,
                    wr ? false : r.open_right};
        }
        case Conn::Forall:
        case Conn::Exists: {
            Printed b = render(f->left);
            const char* q = f->kind == Conn::Forall ? "forall " : "exists ";
            return {q + f->name + ". " + b.text, 5, true};
        }
    }
    return {"?", 5, false};
}

}  // namespace

std::string to_string(const FormulaPtr& f) { return render(f).text; }

ConnectiveCounts count_connectives(const FormulaPtr& f) {
    ConnectiveCounts c;
    std::function<void(const FormulaPtr&)> go = [&](const FormulaPtr& g) {
        if (!g) return;
        switch (g->kind) {
            case Conn::And: c.conj++; break;
            case Conn::Or: c.disj++; break;
            case Conn::Imp: c.imp++; break;
            case Conn::Forall: c.forall++; break;
            case Conn::Exists: c.exists++; break;
            default: break;
        }
        go(g->left);
        go(g->right);
    };
    go(f);
    return c;
}

int count_negs(const FormulaPtr& f) {
    if (!f) return 0;
    return (f->kind == Conn::Neg ? 1 : 0) + count_negs(f->left) + count_negs(f->right);
}

FormulaPtr expand_neg(const FormulaPtr& f) {
    switch (f->kind) {
        case Conn::Atom:
        case Conn::Bot:
        case Conn::Top: return f;
        case Conn::Neg: return imp(expand_neg(f->left), bot());
        case Conn::And:
        case Conn::Or:
        case Conn::Imp: return make(f->kind, expand_neg(f->left), expand_neg(f->right));
        case Conn::Forall:
        case Conn::Exists: return make_quant(f->kind, f->name, expand_neg(f->left));
    }
    return f;
}

namespace {
void term_vars(const Term& t, std::set<std::string>& out) {
    if (t.is_var) {
        out.insert(t.name);
        return;
    }
    for (const auto& a : t.args) term_vars(a, out);
}

void free_vars_rec(const FormulaPtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f->kind) {
        case Conn::Atom: {
            std::set<std::string> vs;
            for (const auto& t : f->args) term_vars(t, vs);
            for (const auto& v : vs)
                if (!bound.count(v)) out.insert(v);
            return;
        }
        case Conn::Bot:
        case Conn::Top: return;
        case Conn::Forall:
        case Conn::Exists: {
            bool fresh = bound.insert(f->name).second;
            free_vars_rec(f->left, bound, out);
            if (fresh) bound.erase(f->name);
            return;
        }
        default:
            if (f->left) free_vars_rec(f->left, bound, out);
            if (f->right) free_vars_rec(f->right, bound, out);
    }
}

Term subst_term(const Term& t, const std::string& var, const Term& repl) {
    if (t.is_var) return t.name == var ? repl : t;
    Term out = t;
    for (auto& a : out.args) a = subst_term(a, var, repl);
    return out;
}
}  // namespace

std::set<std::string> free_vars(const FormulaPtr& f) {
    std::set<std::string> bound, out;
    free_vars_rec(f, bound, out);
    return out;
}

bool is_propositional(const FormulaPtr& f) {
    if (!f) return true;
    if (is_quantifier(f->kind)) return false;
    return is_propositional(f->left) && is_propositional(f->right);
}

bool is_closed(const FormulaPtr& f) { return free_vars(f).empty(); }

FormulaPtr substitute(const FormulaPtr& f, const std::string& var, const Term& t) {
    switch (f->kind) {
        case Conn::Atom: {
            std::vector<Term> args;
            args.reserve(f->args.size());
            for (const auto& a : f->args) args.push_back(subst_term(a, var, t));
            return atom(f->name, std::move(args));
        }
        case Conn::Bot:
        case Conn::Top: return f;
        case Conn::Forall:
        case Conn::Exists:
            if (f->name == var) return f;  // shadowed
            return make_quant(f->kind, f->name, substitute(f->left, var, t));
        case Conn::Neg: return neg(substitute(f->left, var, t));
        default: return make(f->kind, substitute(f->left, var, t), substitute(f->right, var, t));
    }
}

FormulaPtr replace_bot(const FormulaPtr& f, const FormulaPtr& with) {
    switch (f->kind) {
        case Conn::Bot: return with;
        case Conn::Atom:
        case Conn::Top: return f;
        case Conn::Neg: return neg(replace_bot(f->left, with));
        case Conn::Forall:
        case Conn::Exists: return make_quant(f->kind, f->name, replace_bot(f->left, with));
        default: return make(f->kind, replace_bot(f->left, with), replace_bot(f->right, with));
    }
}

FormulaPtr annotate(const FormulaPtr& f, std::uint64_t& next) {
    auto g = std::make_shared<Formula>(*f);
    if (is_binary(f->kind) || is_quantifier(f->kind)) g->tag = next++;
    if (f->left) g->left = annotate(f->left, next);
    if (f->right) g->right = annotate(f->right, next);
    return g;
}

std::set<std::uint64_t> collect_tags(const FormulaPtr& f) {
    std::set<std::uint64_t> out;
    std::function<void(const FormulaPtr&)> go = [&](const FormulaPtr& g) {
        if (!g) return;
        if (g->tag) out.insert(g->tag);
        go(g->left);
        go(g->right);
    };
    go(f);
    return out;
}

}  // namespace negtrans
