#include "negtrans/kripke.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace negtrans::kripke {

bool KripkeModel::in_domain(int w, int d) const {
    const auto& dom = domain[w];
    return std::find(dom.begin(), dom.end(), d) != dom.end();
}

// ── Forcing ─────────────────────────────────────────────────────────────────

namespace {

int eval_term(const KripkeModel& m, const Environment& env, const Term& t) {
    if (t.is_var) {
        auto it = env.find(t.name);
        if (it == env.end()) throw std::invalid_argument("forces: unbound variable " + t.name);
        return it->second;
    }
    // Uninterpreted ground term: deterministic element of the root domain.
    std::size_t h = std::hash<std::string>()(t.name) ^ (t.args.size() * 31);
    for (const auto& a : t.args) h = h * 131 + static_cast<std::size_t>(eval_term(m, env, a));
    const auto& dom = m.domain[0];
    if (dom.empty()) throw std::invalid_argument("forces: ground term over empty root domain");
    return dom[h % dom.size()];
}

}  // namespace

bool forces(const KripkeModel& m, int w, const Environment& env, const FormulaPtr& f) {
    switch (f->kind) {
        case Conn::Atom: {
            std::vector<int> tuple;
            tuple.reserve(f->args.size());
            for (const auto& t : f->args) tuple.push_back(eval_term(m, env, t));
            return m.holds(w, f->name, tuple);
        }
        case Conn::Bot: return false;
        case Conn::Top: return true;
        case Conn::Neg: {
            for (int v = 0; v < m.num_worlds; ++v)
                if (m.leq[w][v] && forces(m, v, env, f->left)) return false;
            return true;
        }
        case Conn::And: return forces(m, w, env, f->left) && forces(m, w, env, f->right);
        case Conn::Or: return forces(m, w, env, f->left) || forces(m, w, env, f->right);
        case Conn::Imp: {
            for (int v = 0; v < m.num_worlds; ++v)
                if (m.leq[w][v] && forces(m, v, env, f->left) && !forces(m, v, env, f->right))
                    return false;
            return true;
        }
        case Conn::Forall: {
            for (int v = 0; v < m.num_worlds; ++v) {
                if (!m.leq[w][v]) continue;
                for (int d : m.domain[v]) {
                    Environment e2 = env;
                    e2[f->name] = d;
                    if (!forces(m, v, e2, f->left)) return false;
                }
            }
            return true;
        }
        case Conn::Exists: {
            for (int d : m.domain[w]) {
                Environment e2 = env;
                e2[f->name] = d;
                if (forces(m, w, e2, f->left)) return true;
            }
            return false;
        }
    }
    return false;
}

bool check_monotone(const KripkeModel& m) {
    int n = m.num_worlds;
    if (static_cast<int>(m.leq.size()) != n || static_cast<int>(m.domain.size()) != n)
        return false;
    for (int w = 0; w < n; ++w)
        if (!m.leq[w][w]) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m.leq[a][b] && m.leq[b][c] && !m.leq[a][c]) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!m.leq[a][b]) continue;
            for (int d : m.domain[a])
                if (!m.in_domain(b, d)) return false;
        }
    for (const auto& [w, pred, tuple] : m.valuation) {
        for (int d : tuple)
            if (!m.in_domain(w, d)) return false;
        for (int v = 0; v < n; ++v)
            if (m.leq[w][v] && !m.holds(v, pred, tuple)) return false;
    }
    return true;
}

// ── Frame and model enumeration ─────────────────────────────────────────────

namespace {

struct Frame {
    int n;
    std::vector<std::vector<bool>> leq;
};

std::vector<Frame> standard_frames(int max_worlds) {
    std::vector<Frame> out;
    auto blank = [](int n) {
        Frame f{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
        for (int i = 0; i < n; ++i) f.leq[i][i] = true;
        return f;
    };
    // chains 1..max
    for (int n = 1; n <= max_worlds; ++n) {
        Frame f = blank(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) f.leq[i][j] = true;
        out.push_back(f);
    }
    // forks: root 0 below k incomparable leaves
    for (int k = 2; k + 1 <= max_worlds; ++k) {
        Frame f = blank(k + 1);
        for (int i = 1; i <= k; ++i) f.leq[0][i] = true;
        out.push_back(f);
    }
    // diamond
    if (max_worlds >= 4) {
        Frame f = blank(4);
        f.leq[0][1] = f.leq[0][2] = f.leq[0][3] = true;
        f.leq[1][3] = f.leq[2][3] = true;
        out.push_back(f);
    }
    return out;
}

std::vector<Frame> all_preorders(int max_worlds) {
    std::vector<Frame> out;
    for (int n = 1; n <= max_worlds; ++n) {
        int edges = n * n;
        for (long mask = 0; mask < (1l << edges); ++mask) {
            Frame f{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false))};
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n; ++j) f.leq[i][j] = (mask >> (i * n + j)) & 1;
            for (int i = 0; i < n; ++i)
                if (!f.leq[i][i]) ok = false;
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b)
                    for (int c = 0; c < n && ok; ++c)
                        if (f.leq[a][b] && f.leq[b][c] && !f.leq[a][c]) ok = false;
            if (ok) out.push_back(f);
        }
    }
    return out;
}

struct Signature {
    std::vector<std::pair<std::string, int>> predicates;  // name, arity
    bool quantified = false;
};

Signature signature_of(const FormulaPtr& f) {
    Signature sig;
    std::function<void(const FormulaPtr&)> go = [&](const FormulaPtr& g) {
        if (!g) return;
        if (g->kind == Conn::Atom) {
            auto entry = std::make_pair(g->name, static_cast<int>(g->args.size()));
            if (std::find(sig.predicates.begin(), sig.predicates.end(), entry) ==
                sig.predicates.end())
                sig.predicates.push_back(entry);
        }
        if (is_quantifier(g->kind)) sig.quantified = true;
        go(g->left);
        go(g->right);
    };
    go(f);
    std::sort(sig.predicates.begin(), sig.predicates.end());
    return sig;
}

std::vector<int> upto(int k) {
    std::vector<int> v(k);
    for (int i = 0; i < k; ++i) v[i] = i;
    return v;
}

// Monotone domain-size assignments; domains are initial segments 0..size-1,
// so inclusion along leq reduces to size monotonicity.
void domain_assignments(const Frame& fr, int max_domain, bool quantified,
                        std::vector<std::vector<int>>& out_sizes) {
    if (!quantified) {
        out_sizes.push_back(std::vector<int>(fr.n, 1));
        return;
    }
    std::vector<int> sizes(fr.n, 1);
    std::function<void(int)> rec = [&](int w) {
        if (w == fr.n) {
            for (int a = 0; a < fr.n; ++a)
                for (int b = 0; b < fr.n; ++b)
                    if (fr.leq[a][b] && sizes[a] > sizes[b]) return;
            out_sizes.push_back(sizes);
            return;
        }
        for (int s = 1; s <= max_domain; ++s) {
            sizes[w] = s;
            rec(w + 1);
        }
    };
    rec(0);
}

// All tuples over 0..max_elem-1 of the given arity.
std::vector<std::vector<int>> all_tuples(int arity, int max_elem) {
    std::vector<std::vector<int>> out{{}};
    for (int i = 0; i < arity; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& t : out)
            for (int d = 0; d < max_elem; ++d) {
                auto u = t;
                u.push_back(d);
                next.push_back(u);
            }
        out = next;
    }
    return out;
}

// Upward-closed world sets of the frame (the possible truth sets of one
// ground atom).
std::vector<std::vector<bool>> upsets(const Frame& fr) {
    std::vector<std::vector<bool>> out;
    for (long mask = 0; mask < (1l << fr.n); ++mask) {
        std::vector<bool> s(fr.n);
        for (int w = 0; w < fr.n; ++w) s[w] = (mask >> w) & 1;
        bool ok = true;
        for (int a = 0; a < fr.n && ok; ++a)
            for (int b = 0; b < fr.n && ok; ++b)
                if (s[a] && fr.leq[a][b] && !s[b]) ok = false;
        if (ok) out.push_back(s);
    }
    return out;
}

// Enumerates every model over the frame/domains/signature, invoking visit;
// stops early when visit returns true.
bool enumerate_valuations(const Frame& fr, const std::vector<int>& sizes, const Signature& sig,
                          const std::function<bool(const KripkeModel&)>& visit) {
    struct Slot {
        std::string pred;
        std::vector<int> tuple;
        std::vector<std::vector<bool>> options;  // admissible truth sets
    };
    std::vector<Slot> slots;
    auto frame_upsets = upsets(fr);
    int max_elem = *std::max_element(sizes.begin(), sizes.end());
    for (const auto& [pred, arity] : sig.predicates) {
        for (const auto& tuple : all_tuples(arity, max_elem)) {
            // The atom may only hold where the tuple exists.
            std::vector<std::vector<bool>> opts;
            for (const auto& s : frame_upsets) {
                bool ok = true;
                for (int w = 0; w < fr.n && ok; ++w)
                    if (s[w])
                        for (int d : tuple)
                            if (d >= sizes[w]) {
                                ok = false;
                                break;
                            }
                if (ok) opts.push_back(s);
            }
            slots.push_back({pred, tuple, std::move(opts)});
        }
    }

    KripkeModel m;
    m.num_worlds = fr.n;
    m.leq = fr.leq;
    m.domain.resize(fr.n);
    for (int w = 0; w < fr.n; ++w) m.domain[w] = upto(sizes[w]);

    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == slots.size()) return visit(m);
        for (const auto& s : slots[i].options) {
            std::vector<std::tuple<int, std::string, std::vector<int>>> added;
            for (int w = 0; w < fr.n; ++w)
                if (s[w]) {
                    auto key = std::make_tuple(w, slots[i].pred, slots[i].tuple);
                    if (m.valuation.insert(key).second) added.push_back(key);
                }
            if (rec(i + 1)) return true;
            for (const auto& key : added) m.valuation.erase(key);
        }
        return false;
    };
    return rec(0);
}

}  // namespace

std::optional<Countermodel> find_countermodel(const FormulaPtr& f, const SearchBounds& b) {
    Signature sig = signature_of(f);
    auto frames = b.catalog == FrameCatalog::Standard ? standard_frames(b.max_worlds)
                                                      : all_preorders(b.max_worlds);
    FormulaPtr g = expand_neg(f);
    std::optional<Countermodel> found;
    for (const auto& fr : frames) {
        std::vector<std::vector<int>> size_choices;
        domain_assignments(fr, b.max_domain, sig.quantified, size_choices);
        for (const auto& sizes : size_choices) {
            bool stop = enumerate_valuations(fr, sizes, sig, [&](const KripkeModel& m) {
                for (int w = 0; w < m.num_worlds; ++w) {
                    if (!forces(m, w, {}, g)) {
                        found = Countermodel{m, w};
                        return true;
                    }
                }
                return false;
            });
            if (stop) return found;
        }
    }
    return std::nullopt;
}

std::vector<KripkeModel> enumerate_models(const FormulaPtr& f, const SearchBounds& b,
                                          std::size_t limit) {
    Signature sig = signature_of(f);
    auto frames = b.catalog == FrameCatalog::Standard ? standard_frames(b.max_worlds)
                                                      : all_preorders(b.max_worlds);
    std::vector<KripkeModel> out;
    for (const auto& fr : frames) {
        std::vector<std::vector<int>> size_choices;
        domain_assignments(fr, b.max_domain, sig.quantified, size_choices);
        for (const auto& sizes : size_choices) {
            enumerate_valuations(fr, sizes, sig, [&](const KripkeModel& m) {
                out.push_back(m);
                return out.size() >= limit;
            });
            if (out.size() >= limit) return out;
        }
    }
    return out;
}

std::string describe(const KripkeModel& m) {
    std::ostringstream os;
    for (int w = 0; w < m.num_worlds; ++w) {
        os << "world w" << w;
        std::vector<int> above;
        for (int v = 0; v < m.num_worlds; ++v)
            if (v != w && m.leq[w][v]) above.push_back(v);
        if (!above.empty()) {
            os << " <=";
            for (int v : above) os << " w" << v;
        }
        os << " | domain {";
        for (std::size_t i = 0; i < m.domain[w].size(); ++i)
            os << (i ? "," : "") << m.domain[w][i];
        os << "} | true:";
        bool any = false;
        for (const auto& [world, pred, tuple] : m.valuation) {
            if (world != w) continue;
            os << " " << pred;
            if (!tuple.empty()) {
                os << "(";
                for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
                os << ")";
            }
            any = true;
        }
        if (!any) os << " (none)";
        os << "\n";
    }
    return os.str();
}

std::string describe(const Countermodel& c) {
    return describe(c.model) + "refuted at w" + std::to_string(c.world) + "\n";
}

// ── Curated refutation table ────────────────────────────────────────────────

const std::vector<CuratedRefutation>& curated_refutations() {
    static const std::vector<CuratedRefutation> table = [] {
        FormulaPtr ax = atom("A", {Term::var("x")});
        std::vector<CuratedRefutation> t;
        // ~~forall x. ~~A -> ~~forall x. A
        t.push_back({"dns-forall",
                     imp(negs(2, forall("x", negs(2, ax))), negs(2, forall("x", ax))),
                     "intuitionistically invalid; holds in every finite Kripke model "
                     "(maximal worlds force classically), so only infinite frames refute it"});
        // ~forall x. A -> ~~exists x. ~A
        t.push_back({"dns-exists",
                     imp(neg(forall("x", ax)), negs(2, exists("x", neg(ax)))),
                     "intuitionistically invalid; holds in every finite Kripke model "
                     "(maximal worlds force classically), so only infinite frames refute it"});
        return t;
    }();
    return table;
}

const CuratedRefutation* curated_lookup(const FormulaPtr& failing_direction) {
    for (const auto& entry : curated_refutations())
        if (equal(entry.failing, failing_direction)) return &entry;
    return nullptr;
}

}  // namespace negtrans::kripke
