#include "negtrans/proofsearch.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace negtrans {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Proved: return "proved";
        case Verdict::Refuted: return "refuted";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

// ── Classical propositional: evaluate all valuations ───────────────────────

namespace {

void collect_atoms(const FormulaPtr& f, std::vector<FormulaPtr>& atoms) {
    if (!f) return;
    if (f->kind == Conn::Atom) {
        for (const auto& a : atoms)
            if (equal(a, f)) return;
        atoms.push_back(f);
        return;
    }
    collect_atoms(f->left, atoms);
    collect_atoms(f->right, atoms);
}

bool eval_classical(const FormulaPtr& f, const std::vector<FormulaPtr>& atoms,
                    unsigned long valuation) {
    switch (f->kind) {
        case Conn::Atom:
            for (std::size_t i = 0; i < atoms.size(); ++i)
                if (equal(atoms[i], f)) return (valuation >> i) & 1u;
            throw std::logic_error("atom not collected");
        case Conn::Bot: return false;
        case Conn::Top: return true;
        case Conn::Neg: return !eval_classical(f->left, atoms, valuation);
        case Conn::And:
            return eval_classical(f->left, atoms, valuation) &&
                   eval_classical(f->right, atoms, valuation);
        case Conn::Or:
            return eval_classical(f->left, atoms, valuation) ||
                   eval_classical(f->right, atoms, valuation);
        case Conn::Imp:
            return !eval_classical(f->left, atoms, valuation) ||
                   eval_classical(f->right, atoms, valuation);
        default: throw std::invalid_argument("prove_cpc: quantified input");
    }
}

}  // namespace

Decision prove_cpc(const FormulaPtr& f) {
    if (!is_propositional(f)) throw std::invalid_argument("prove_cpc: quantified input");
    std::vector<FormulaPtr> atoms;
    collect_atoms(f, atoms);
    if (atoms.size() > 24) throw std::invalid_argument("prove_cpc: too many distinct atoms");
    unsigned long n = 1ul << atoms.size();
    for (unsigned long v = 0; v < n; ++v)
        if (!eval_classical(f, atoms, v)) return {Verdict::Refuted, 0};
    return {Verdict::Proved, 0};
}

// ── Intuitionistic propositional: G4ip with hash-consing and memoisation ───

namespace {

class G4ip {
public:
    bool prove(const FormulaPtr& goal) {
        std::vector<int> gamma;
        return solve(gamma, intern(expand_neg(goal)));
    }

private:
    struct Node {
        Conn kind;
        std::string label;  // atom name + printed args
        int left = -1, right = -1;
    };

    int intern(const FormulaPtr& f) {
        int l = f->left ? intern(f->left) : -1;
        int r = f->right ? intern(f->right) : -1;
        std::string label = f->name;
        for (const auto& t : f->args) label += "|" + to_string(t);
        return intern_node({f->kind, std::move(label), l, r});
    }

    int intern_node(Node n) {
        auto key = std::make_tuple(static_cast<int>(n.kind), n.label, n.left, n.right);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second;
        nodes_.push_back(std::move(n));
        int id = static_cast<int>(nodes_.size()) - 1;
        index_.emplace(std::move(key), id);
        return id;
    }

    int mk_imp(int a, int b) { return intern_node({Conn::Imp, "", a, b}); }

    const Node& at(int id) const { return nodes_[id]; }

    static void insert_sorted(std::vector<int>& v, int x) {
        auto it = std::lower_bound(v.begin(), v.end(), x);
        if (it == v.end() || *it != x) v.insert(it, x);
    }

    static void erase_one(std::vector<int>& v, int x) {
        auto it = std::lower_bound(v.begin(), v.end(), x);
        if (it != v.end() && *it == x) v.erase(it);
    }

    static bool member(const std::vector<int>& v, int x) {
        return std::binary_search(v.begin(), v.end(), x);
    }

    // gamma is kept sorted and duplicate-free (sound here: G4ip never needs
    // two copies of the same antecedent formula).
    bool solve(std::vector<int> gamma, int goal) {
        auto memo_key = gamma;
        memo_key.push_back(goal);
        if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;
        bool r = step(std::move(gamma), goal);
        memo_.emplace(std::move(memo_key), r);
        return r;
    }

    bool step(std::vector<int> gamma, int goal) {
        // Nodes are copied out of the arena: mk_imp below may reallocate it.
        Node g = at(goal);
        if (g.kind == Conn::Top) return true;
        if (member(gamma, goal)) return true;

        // Left saturation: each transformation strictly reduces the
        // standard G4ip weight, so this loop terminates.
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            int fid = gamma[i];
            Node f = at(fid);
            switch (f.kind) {
                case Conn::Bot: return true;
                case Conn::Top: {
                    auto g2 = gamma;
                    erase_one(g2, fid);
                    return solve(std::move(g2), goal);
                }
                case Conn::And: {
                    auto g2 = gamma;
                    erase_one(g2, fid);
                    insert_sorted(g2, f.left);
                    insert_sorted(g2, f.right);
                    return solve(std::move(g2), goal);
                }
                case Conn::Or: {
                    auto g2 = gamma;
                    erase_one(g2, fid);
                    auto g3 = g2;
                    insert_sorted(g2, f.left);
                    insert_sorted(g3, f.right);
                    return solve(std::move(g2), goal) && solve(std::move(g3), goal);
                }
                case Conn::Imp: {
                    Node prem = at(f.left);
                    if (prem.kind == Conn::Bot) {
                        auto g2 = gamma;
                        erase_one(g2, fid);
                        return solve(std::move(g2), goal);
                    }
                    if (prem.kind == Conn::Top) {
                        auto g2 = gamma;
                        erase_one(g2, fid);
                        insert_sorted(g2, f.right);
                        return solve(std::move(g2), goal);
                    }
                    if (prem.kind == Conn::Atom && member(gamma, f.left)) {
                        auto g2 = gamma;
                        erase_one(g2, fid);
                        insert_sorted(g2, f.right);
                        return solve(std::move(g2), goal);
                    }
                    if (prem.kind == Conn::And) {
                        auto g2 = gamma;
                        erase_one(g2, fid);
                        int curried = mk_imp(prem.right, f.right);
                        insert_sorted(g2, mk_imp(prem.left, curried));
                        return solve(std::move(g2), goal);
                    }
                    if (prem.kind == Conn::Or) {
                        auto g2 = gamma;
                        erase_one(g2, fid);
                        insert_sorted(g2, mk_imp(prem.left, f.right));
                        insert_sorted(g2, mk_imp(prem.right, f.right));
                        return solve(std::move(g2), goal);
                    }
                    break;  // (A -> B) -> C: non-invertible, handled below
                }
                default: break;
            }
        }

        // Invertible right rules.
        if (g.kind == Conn::And)
            return solve(gamma, g.left) && solve(gamma, g.right);
        if (g.kind == Conn::Imp) {
            insert_sorted(gamma, g.left);
            return solve(std::move(gamma), g.right);
        }

        // Choice points.
        if (g.kind == Conn::Or) {
            if (solve(gamma, g.left)) return true;
            if (solve(gamma, g.right)) return true;
        }
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            int fid = gamma[i];
            Node f = at(fid);
            if (f.kind != Conn::Imp || at(f.left).kind != Conn::Imp) continue;
            Node prem = at(f.left);  // (A -> B) -> C
            auto g1 = gamma;
            erase_one(g1, fid);
            auto g2 = g1;
            insert_sorted(g1, prem.left);  // MUTATED: missing B->C
            if (solve(std::move(g1), prem.right)) {
                insert_sorted(g2, f.right);
                if (solve(std::move(g2), goal)) return true;
            }
        }
        return false;
    }

    std::vector<Node> nodes_;
    std::map<std::tuple<int, std::string, int, int>, int> index_;
    std::map<std::vector<int>, bool> memo_;
};

}  // namespace

Decision prove_ipc(const FormulaPtr& f) {
    if (!is_propositional(f)) throw std::invalid_argument("prove_ipc: quantified input");
    G4ip engine;
    return {engine.prove(f) ? Verdict::Proved : Verdict::Refuted, 0};
}

Decision prove_minimal(const FormulaPtr& f) {
    if (!is_propositional(f)) throw std::invalid_argument("prove_minimal: quantified input");
    FormulaPtr g = replace_bot(expand_neg(f), atom("#f"));
    return prove_ipc(g);
}

// ── Bounded first-order search ──────────────────────────────────────────────

namespace {

void collect_params(const FormulaPtr& f, std::vector<Term>& out) {
    auto add = [&out](const Term& t) {
        for (const auto& u : out)
            if (u == t) return;
        out.push_back(t);
    };
    std::function<void(const Term&)> term_go = [&](const Term& t) {
        if (t.is_var) {
            add(t);
        } else if (t.args.empty()) {
            add(t);
        } else {
            for (const auto& a : t.args) term_go(a);
        }
    };
    std::function<void(const FormulaPtr&)> go = [&](const FormulaPtr& g) {
        if (!g) return;
        if (g->kind == Conn::Atom)
            for (const auto& t : g->args) term_go(t);
        go(g->left);
        go(g->right);
    };
    go(f);
}

class BoundedSearch {
public:
    explicit BoundedSearch(bool classical) : classical_(classical) {}

    bool prove(const FormulaPtr& goal, int depth) {
        std::vector<FormulaPtr> gamma, delta{goal};
        return classical_ ? lk(gamma, delta, depth) : lj(gamma, goal, depth);
    }

private:
    static bool contains(const std::vector<FormulaPtr>& v, const FormulaPtr& f) {
        for (const auto& g : v)
            if (equal(g, f)) return true;
        return false;
    }

    static std::vector<FormulaPtr> with(std::vector<FormulaPtr> v, const FormulaPtr& f) {
        if (!contains(v, f)) v.push_back(f);
        return v;
    }

    static std::vector<FormulaPtr> without(const std::vector<FormulaPtr>& v, std::size_t idx) {
        std::vector<FormulaPtr> out;
        out.reserve(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            if (i != idx) out.push_back(v[i]);
        return out;
    }

    // Naming parameters by the remaining budget keeps them fresh on every
    // branch while letting structurally equal sequents share memo entries.
    static Term fresh_param(int depth) {
        return Term::app("#k" + std::to_string(depth), {});
    }

    std::string key(const std::vector<FormulaPtr>& gamma,
                    const std::vector<FormulaPtr>& delta) {
        std::vector<std::string> l, r;
        for (const auto& f : gamma) l.push_back(to_string(f));
        for (const auto& f : delta) r.push_back(to_string(f));
        std::sort(l.begin(), l.end());
        std::sort(r.begin(), r.end());
        std::string out;
        for (const auto& s : l) out += s + ";";
        out += "|-";
        for (const auto& s : r) out += s + ";";
        return out;
    }

    // success at budget d stays valid for budgets >= d; failure at budget d
    // stays valid for budgets <= d.
    bool memo_lookup(const std::string& k, int depth, bool& result) {
        if (auto it = proved_at_.find(k); it != proved_at_.end() && depth >= it->second) {
            result = true;
            return true;
        }
        if (auto it = failed_at_.find(k); it != failed_at_.end() && depth <= it->second) {
            result = false;
            return true;
        }
        return false;
    }

    void memo_store(const std::string& k, int depth, bool result) {
        if (result) {
            auto [it, fresh] = proved_at_.emplace(k, depth);
            if (!fresh && depth < it->second) it->second = depth;
        } else {
            auto [it, fresh] = failed_at_.emplace(k, depth);
            if (!fresh && depth > it->second) it->second = depth;
        }
    }

    std::vector<Term> candidate_terms(const std::vector<FormulaPtr>& gamma,
                                      const std::vector<FormulaPtr>& delta) {
        std::vector<Term> out;
        for (const auto& f : gamma) collect_params(f, out);
        for (const auto& f : delta) collect_params(f, out);
        if (out.empty()) out.push_back(Term::app("#k0", {}));
        return out;
    }

    // Single-succedent intuitionistic sequent.  Invertible rules first
    // (fixed priority), then choice points; every application costs depth.
    bool lj(std::vector<FormulaPtr>& gamma, FormulaPtr goal, int depth) {
        if (goal->kind == Conn::Top) return true;
        if (contains(gamma, goal)) return true;
        for (const auto& f : gamma)
            if (f->kind == Conn::Bot) return true;
        if (depth <= 0) return false;
        std::string k = key(gamma, {goal});
        bool cached;
        if (memo_lookup(k, depth, cached)) return cached;
        bool result = lj_step(gamma, goal, depth);
        memo_store(k, depth, result);
        return result;
    }

    bool lj_step(std::vector<FormulaPtr>& gamma, FormulaPtr goal, int depth) {
        // Invertible right.
        if (goal->kind == Conn::And) {
            return lj(gamma, goal->left, depth - 1) && lj(gamma, goal->right, depth - 1);
        }
        if (goal->kind == Conn::Imp) {
            auto g2 = with(gamma, goal->left);
            return lj(g2, goal->right, depth - 1);
        }
        if (goal->kind == Conn::Forall) {
            Term a = fresh_param(depth);
            FormulaPtr inst = substitute(goal->left, goal->name, a);
            return lj(gamma, inst, depth - 1);
        }

        // Invertible left.
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            const FormulaPtr& f = gamma[i];
            if (f->kind == Conn::Top) {
                auto g2 = without(gamma, i);
                return lj(g2, goal, depth - 1);
            }
            if (f->kind == Conn::And) {
                auto g2 = with(with(without(gamma, i), f->left), f->right);
                return lj(g2, goal, depth - 1);
            }
            if (f->kind == Conn::Or) {
                auto g2 = with(without(gamma, i), f->left);
                auto g3 = with(without(gamma, i), f->right);
                return lj(g2, goal, depth - 1) && lj(g3, goal, depth - 1);
            }
            if (f->kind == Conn::Exists) {
                Term a = fresh_param(depth);
                auto g2 = with(without(gamma, i), substitute(f->left, f->name, a));
                return lj(g2, goal, depth - 1);
            }
        }

        // Choices.
        if (goal->kind == Conn::Or) {
            if (lj(gamma, goal->left, depth - 1)) return true;
            if (lj(gamma, goal->right, depth - 1)) return true;
        }
        if (goal->kind == Conn::Exists) {
            std::vector<FormulaPtr> dl{goal};
            for (const Term& t : candidate_terms(gamma, dl)) {
                FormulaPtr inst = substitute(goal->left, goal->name, t);
                if (lj(gamma, inst, depth - 1)) return true;
            }
        }
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            const FormulaPtr& f = gamma[i];
            if (f->kind == Conn::Imp) {
                // Left premise keeps the implication available.
                if (lj(gamma, f->left, depth - 1)) {
                    auto g2 = with(without(gamma, i), f->right);
                    if (lj(g2, goal, depth - 1)) return true;
                }
            } else if (f->kind == Conn::Forall) {
                std::vector<FormulaPtr> dl{goal};
                for (const Term& t : candidate_terms(gamma, dl)) {
                    FormulaPtr inst = substitute(f->left, f->name, t);
                    if (contains(gamma, inst)) continue;
                    auto g2 = with(gamma, inst);
                    if (lj(g2, goal, depth - 1)) return true;
                }
            }
        }
        return false;
    }

    // Multi-succedent classical sequent.  All propositional rules are
    // invertible; only quantifier instantiation branches.
    bool lk(std::vector<FormulaPtr>& gamma, std::vector<FormulaPtr>& delta, int depth) {
        for (const auto& f : gamma) {
            if (f->kind == Conn::Bot) return true;
            if (contains(delta, f)) return true;
        }
        for (const auto& f : delta)
            if (f->kind == Conn::Top) return true;
        if (depth <= 0) return false;
        std::string k = key(gamma, delta);
        bool cached;
        if (memo_lookup(k, depth, cached)) return cached;
        bool result = lk_step(gamma, delta, depth);
        memo_store(k, depth, result);
        return result;
    }

    bool lk_step(std::vector<FormulaPtr>& gamma, std::vector<FormulaPtr>& delta, int depth) {
        for (std::size_t i = 0; i < delta.size(); ++i) {
            const FormulaPtr& f = delta[i];
            switch (f->kind) {
                case Conn::Bot: {
                    auto d2 = without(delta, i);
                    return lk(gamma, d2, depth - 1);
                }
                case Conn::And: {
                    auto d2 = with(without(delta, i), f->left);
                    auto d3 = with(without(delta, i), f->right);
                    return lk(gamma, d2, depth - 1) && lk(gamma, d3, depth - 1);
                }
                case Conn::Or: {
                    auto d2 = with(with(without(delta, i), f->left), f->right);
                    return lk(gamma, d2, depth - 1);
                }
                case Conn::Imp: {
                    auto g2 = with(gamma, f->left);
                    auto d2 = with(without(delta, i), f->right);
                    return lk(g2, d2, depth - 1);
                }
                case Conn::Forall: {
                    Term a = fresh_param(depth);
                    auto d2 = with(without(delta, i), substitute(f->left, f->name, a));
                    return lk(gamma, d2, depth - 1);
                }
                default: break;
            }
        }
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            const FormulaPtr& f = gamma[i];
            switch (f->kind) {
                case Conn::Top: {
                    auto g2 = without(gamma, i);
                    return lk(g2, delta, depth - 1);
                }
                case Conn::And: {
                    auto g2 = with(with(without(gamma, i), f->left), f->right);
                    return lk(g2, delta, depth - 1);
                }
                case Conn::Or: {
                    auto g2 = with(without(gamma, i), f->left);
                    auto g3 = with(without(gamma, i), f->right);
                    return lk(g2, delta, depth - 1) && lk(g3, delta, depth - 1);
                }
                case Conn::Imp: {
                    auto g2 = without(gamma, i);
                    auto d2 = with(delta, f->left);
                    auto g3 = with(without(gamma, i), f->right);
                    return lk(g2, d2, depth - 1) && lk(g3, delta, depth - 1);
                }
                case Conn::Exists: {
                    Term a = fresh_param(depth);
                    auto g2 = with(without(gamma, i), substitute(f->left, f->name, a));
                    return lk(g2, delta, depth - 1);
                }
                default: break;
            }
        }

        // Quantifier instantiations (principal formula kept for reuse).
        for (std::size_t i = 0; i < gamma.size(); ++i) {
            const FormulaPtr& f = gamma[i];
            if (f->kind != Conn::Forall) continue;
            for (const Term& t : candidate_terms(gamma, delta)) {
                FormulaPtr inst = substitute(f->left, f->name, t);
                if (contains(gamma, inst)) continue;
                auto g2 = with(gamma, inst);
                if (lk(g2, delta, depth - 1)) return true;
            }
        }
        for (std::size_t i = 0; i < delta.size(); ++i) {
            const FormulaPtr& f = delta[i];
            if (f->kind != Conn::Exists) continue;
            for (const Term& t : candidate_terms(gamma, delta)) {
                FormulaPtr inst = substitute(f->left, f->name, t);
                if (contains(delta, inst)) continue;
                auto d2 = with(delta, inst);
                if (lk(gamma, d2, depth - 1)) return true;
            }
        }
        return false;
    }

    bool classical_;
    std::map<std::string, int> proved_at_;  // min budget known to suffice
    std::map<std::string, int> failed_at_;  // max budget known to fail
};

}  // namespace

Decision prove_fo_bounded(const FormulaPtr& f, Logic logic, int depth) {
    FormulaPtr g = expand_neg(f);
    if (logic == Logic::Minimal) g = replace_bot(g, atom("#f"));
    BoundedSearch engine(logic == Logic::Classical);
    bool proved = engine.prove(g, depth);
    return {proved ? Verdict::Proved : Verdict::Unknown, depth};
}

Decision prove(const FormulaPtr& f, Logic logic, int depth) {
    if (is_propositional(f)) {
        switch (logic) {
            case Logic::Classical: return prove_cpc(f);
            case Logic::Intuitionistic: return prove_ipc(f);
            case Logic::Minimal: return prove_minimal(f);
        }
    }
    return prove_fo_bounded(f, logic, depth);
}

bool glivenko_check(const FormulaPtr& f) {
    bool cl = prove_cpc(f).proved();
    bool il = prove_ipc(neg(neg(f))).proved();
    return cl == il;
}

}  // namespace negtrans
