#include "negtrans/parser.hpp"

#include <cctype>
#include <functional>
#include <map>

namespace negtrans {

namespace {

struct Token {
    enum Kind { Ident, LPar, RPar, Comma, Dot, Tilde, Amp, Bar, Arrow, End } kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : src_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
        std::size_t p = i_;
        if (i_ >= src_.size()) {
            tok_ = {Token::End, "", p};
            return;
        }
        char c = src_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            tok_ = {Token::Ident, std::string(src_.substr(i_, j - i_)), p};
            i_ = j;
            return;
        }
        switch (c) {
            case '(': tok_ = {Token::LPar, "(", p}; ++i_; return;
            case ')': tok_ = {Token::RPar, ")", p}; ++i_; return;
            case ',': tok_ = {Token::Comma, ",", p}; ++i_; return;
            case '.': tok_ = {Token::Dot, ".", p}; ++i_; return;
            case '~': tok_ = {Token::Tilde, "~", p}; ++i_; return;
            case '&': tok_ = {Token::Amp, "&", p}; ++i_; return;
            case '|': tok_ = {Token::Bar, "|", p}; ++i_; return;
            case '-':
                if (i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
                    tok_ = {Token::Arrow, "->", p};
                    i_ += 2;
                    return;
                }
                throw ParseError("expected '->'", p);
            default: throw ParseError(std::string("unexpected character '") + c + "'", p);
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Token tok_{Token::End, "", 0};
};

class Parser {
public:
    explicit Parser(std::string_view s) : lex_(s) {}

    FormulaPtr run() {
        FormulaPtr f = implication();
        if (lex_.peek().kind != Token::End)
            throw ParseError("trailing input after formula", lex_.peek().pos);
        return f;
    }

private:
    FormulaPtr implication() {
        FormulaPtr l = disjunction();
        if (lex_.peek().kind == Token::Arrow) {
            lex_.next();
            return imp(l, implication());
        }
        return l;
    }

    FormulaPtr disjunction() {
        FormulaPtr l = conjunction();
        while (lex_.peek().kind == Token::Bar) {
            lex_.next();
            l = disj(l, conjunction());
        }
        return l;
    }

    FormulaPtr conjunction() {
        FormulaPtr l = unary();
        while (lex_.peek().kind == Token::Amp) {
            lex_.next();
            l = conj(l, unary());
        }
        return l;
    }

    FormulaPtr unary() {
        const Token& t = lex_.peek();
        if (t.kind == Token::Tilde) {
            lex_.next();
            return neg(unary());
        }
        if (t.kind == Token::Ident && (t.text == "forall" || t.text == "exists")) {
            Token q = lex_.next();
            Token v = lex_.next();
            if (v.kind != Token::Ident)
                throw ParseError("expected a variable after '" + q.text + "'", v.pos);
            if (v.text == "forall" || v.text == "exists" || v.text == "bot" || v.text == "top")
                throw ParseError("'" + v.text + "' cannot be a variable", v.pos);
            Token d = lex_.next();
            if (d.kind != Token::Dot) throw ParseError("expected '.' after quantified variable",
                                                       d.pos);
            FormulaPtr body = implication();
            return make_quant(q.text == "forall" ? Conn::Forall : Conn::Exists, v.text, body);
        }
        return primary();
    }

    FormulaPtr primary() {
        Token t = lex_.next();
        switch (t.kind) {
            case Token::LPar: {
                FormulaPtr f = implication();
                Token r = lex_.next();
                if (r.kind != Token::RPar) throw ParseError("expected ')'", r.pos);
                return f;
            }
            case Token::Ident: {
                if (t.text == "bot") return bot();
                if (t.text == "top") return top();
                if (t.text == "forall" || t.text == "exists")
                    throw ParseError("quantifier in atom position", t.pos);
                std::vector<Term> args;
                if (lex_.peek().kind == Token::LPar) {
                    lex_.next();
                    if (lex_.peek().kind != Token::RPar) {
                        args.push_back(term());
                        while (lex_.peek().kind == Token::Comma) {
                            lex_.next();
                            args.push_back(term());
                        }
                    }
                    Token r = lex_.next();
                    if (r.kind != Token::RPar) throw ParseError("expected ')'", r.pos);
                }
                check_arity(predicates_, t.text, args.size(), t.pos, "predicate");
                return atom(t.text, std::move(args));
            }
            default: throw ParseError("expected a formula", t.pos);
        }
    }

    Term term() {
        Token t = lex_.next();
        if (t.kind != Token::Ident) throw ParseError("expected a term", t.pos);
        if (t.text == "bot" || t.text == "top" || t.text == "forall" || t.text == "exists")
            throw ParseError("'" + t.text + "' cannot occur in a term", t.pos);
        if (lex_.peek().kind == Token::LPar) {
            lex_.next();
            std::vector<Term> args;
            if (lex_.peek().kind != Token::RPar) {
                args.push_back(term());
                while (lex_.peek().kind == Token::Comma) {
                    lex_.next();
                    args.push_back(term());
                }
            }
            Token r = lex_.next();
            if (r.kind != Token::RPar) throw ParseError("expected ')'", r.pos);
            check_arity(functions_, t.text, args.size(), t.pos, "function");
            return Term::app(t.text, std::move(args));
        }
        return Term::var(t.text);
    }

    void check_arity(std::map<std::string, std::size_t>& table, const std::string& name,
                     std::size_t arity, std::size_t pos, const char* what) {
        auto [it, fresh] = table.emplace(name, arity);
        if (!fresh && it->second != arity)
            throw ParseError(std::string(what) + " '" + name + "' used with arity " +
                                 std::to_string(arity) + " after arity " +
                                 std::to_string(it->second),
                             pos);
    }

    Lexer lex_;
    std::map<std::string, std::size_t> predicates_, functions_;
};

void collect_var_names(const FormulaPtr& f, std::set<std::string>& out) {
    if (!f) return;
    if (f->kind == Conn::Atom) {
        std::function<void(const Term&)> go = [&](const Term& t) {
            if (t.is_var)
                out.insert(t.name);
            else
                for (const auto& a : t.args) go(a);
        };
        for (const auto& t : f->args) go(t);
    }
    if (is_quantifier(f->kind)) out.insert(f->name);
    collect_var_names(f->left, out);
    collect_var_names(f->right, out);
}

// Renames inner binders that shadow an enclosing binder of the same name.
FormulaPtr rename_shadowed(const FormulaPtr& f, std::set<std::string>& in_scope,
                           std::map<std::string, std::string>& renaming,
                           std::set<std::string>& used) {
    switch (f->kind) {
        case Conn::Atom: {
            std::function<Term(const Term&)> go = [&](const Term& t) -> Term {
                if (t.is_var) {
                    auto it = renaming.find(t.name);
                    return it == renaming.end() ? t : Term::var(it->second);
                }
                Term out = t;
                for (auto& a : out.args) a = go(a);
                return out;
            };
            std::vector<Term> args;
            for (const auto& t : f->args) args.push_back(go(t));
            return atom(f->name, std::move(args));
        }
        case Conn::Bot:
        case Conn::Top: return f;
        case Conn::Neg: return neg(rename_shadowed(f->left, in_scope, renaming, used));
        case Conn::And:
        case Conn::Or:
        case Conn::Imp:
            return make(f->kind, rename_shadowed(f->left, in_scope, renaming, used),
                        rename_shadowed(f->right, in_scope, renaming, used));
        case Conn::Forall:
        case Conn::Exists: {
            std::string name = f->name;
            if (in_scope.count(name)) {
                int k = 1;
                while (used.count(name + std::to_string(k))) ++k;
                name = f->name + std::to_string(k);
                used.insert(name);
            }
            auto saved_renaming = renaming;
            renaming[f->name] = name;
            bool fresh_scope = in_scope.insert(name).second;
            FormulaPtr body = rename_shadowed(f->left, in_scope, renaming, used);
            if (fresh_scope) in_scope.erase(name);
            renaming = saved_renaming;
            return make_quant(f->kind, name, body);
        }
    }
    return f;
}

}  // namespace

FormulaPtr parse(std::string_view text) {
    Parser p(text);
    FormulaPtr f = p.run();
    std::set<std::string> used;
    collect_var_names(f, used);
    std::set<std::string> in_scope;
    std::map<std::string, std::string> renaming;
    return rename_shadowed(f, in_scope, renaming, used);
}

}  // namespace negtrans
