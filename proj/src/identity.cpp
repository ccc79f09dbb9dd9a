#include "wedgelab/identity.hpp"

#include <algorithm>
#include <set>

#include "lexer.hpp"

namespace wedgelab {

using detail::Lexer;
using detail::Tok;

IntExprPtr IntExpr::literal(Int v) {
    auto e = std::make_shared<IntExpr>();
    e->kind = Kind::Literal;
    e->lit = std::move(v);
    return e;
}

IntExprPtr IntExpr::symbol_n() {
    auto e = std::make_shared<IntExpr>();
    e->kind = Kind::SymbolN;
    return e;
}

IntExprPtr IntExpr::make(Kind k, IntExprPtr a, IntExprPtr b) {
    if (k == Kind::Neg && a->kind == Kind::Literal) return literal(-a->lit);
    auto e = std::make_shared<IntExpr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

Int eval_int(const IntExpr& e, const Int& n) {
    switch (e.kind) {
        case IntExpr::Kind::Literal: return e.lit;
        case IntExpr::Kind::SymbolN: return n;
        case IntExpr::Kind::Binom: return binomial(eval_int(*e.a, n), eval_int(*e.b, n));
        case IntExpr::Kind::IPow: return ipow(eval_int(*e.a, n), eval_int(*e.b, n));
        case IntExpr::Kind::Add: return eval_int(*e.a, n) + eval_int(*e.b, n);
        case IntExpr::Kind::Sub: return eval_int(*e.a, n) - eval_int(*e.b, n);
        case IntExpr::Kind::Mul: return eval_int(*e.a, n) * eval_int(*e.b, n);
        case IntExpr::Kind::Neg: return -eval_int(*e.a, n);
    }
    throw std::logic_error("eval_int: bad kind");
}

bool int_expr_uses_n(const IntExpr& e) {
    if (e.kind == IntExpr::Kind::SymbolN) return true;
    return (e.a && int_expr_uses_n(*e.a)) || (e.b && int_expr_uses_n(*e.b));
}

bool int_expr_equal(const IntExpr& a, const IntExpr& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == IntExpr::Kind::Literal) return a.lit == b.lit;
    if (a.a && (!b.a || !int_expr_equal(*a.a, *b.a))) return false;
    if (!a.a && b.a) return false;
    if (a.b && (!b.b || !int_expr_equal(*a.b, *b.b))) return false;
    if (!a.b && b.b) return false;
    return true;
}

TermPtr Term::make_var(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::Var;
    t->var = std::move(name);
    return t;
}

TermPtr Term::make_one() {
    auto t = std::make_shared<Term>();
    t->kind = Kind::One;
    return t;
}

TermPtr Term::make(Kind k, std::vector<TermPtr> args, IntExprPtr exp) {
    auto t = std::make_shared<Term>();
    t->kind = k;
    t->args = std::move(args);
    t->exp = std::move(exp);
    return t;
}

bool term_equal(const Term& a, const Term& b) {
    if (a.kind != b.kind || a.var != b.var || a.args.size() != b.args.size()) return false;
    for (size_t i = 0; i < a.args.size(); ++i)
        if (!term_equal(*a.args[i], *b.args[i])) return false;
    if ((a.exp == nullptr) != (b.exp == nullptr)) return false;
    if (a.exp && !int_expr_equal(*a.exp, *b.exp)) return false;
    return true;
}

bool term_contains(const Term& t, Term::Kind k) {
    if (t.kind == k) return true;
    return std::any_of(t.args.begin(), t.args.end(),
                       [&](const TermPtr& c) { return term_contains(*c, k); });
}

bool term_uses_n(const Term& t) {
    if (t.exp && int_expr_uses_n(*t.exp)) return true;
    return std::any_of(t.args.begin(), t.args.end(),
                       [&](const TermPtr& c) { return term_uses_n(*c); });
}

namespace {

// ---- printing ----

std::string print_int_atom(const IntExpr& e) {
    switch (e.kind) {
        case IntExpr::Kind::Literal:
        case IntExpr::Kind::SymbolN:
        case IntExpr::Kind::Binom:
        case IntExpr::Kind::IPow: return print_int_expr(e);
        default: return "(" + print_int_expr(e) + ")";
    }
}

std::string print_factor(const Term& t);

std::string print_atom(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Product:
        case Term::Kind::Power: return "(" + print_term(t) + ")";
        default: return print_term(t);
    }
}

std::string print_factor(const Term& t) {
    if (t.kind == Term::Kind::Product) return "(" + print_term(t) + ")";
    return print_term(t);
}

}  // namespace

std::string print_int_expr(const IntExpr& e) {
    switch (e.kind) {
        case IntExpr::Kind::Literal: return e.lit.str();
        case IntExpr::Kind::SymbolN: return "n";
        case IntExpr::Kind::Binom:
            return "binom(" + print_int_expr(*e.a) + ", " + print_int_expr(*e.b) + ")";
        case IntExpr::Kind::IPow:
            return "ipow(" + print_int_expr(*e.a) + ", " + print_int_expr(*e.b) + ")";
        case IntExpr::Kind::Add: return print_int_expr(*e.a) + " + " + print_int_expr(*e.b);
        case IntExpr::Kind::Sub:
            return print_int_expr(*e.a) + " - " + print_int_atom(*e.b);
        case IntExpr::Kind::Mul: return print_int_atom(*e.a) + " * " + print_int_atom(*e.b);
        case IntExpr::Kind::Neg: return "-" + print_int_atom(*e.a);
    }
    throw std::logic_error("print_int_expr: bad kind");
}

std::string print_term(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Var: return t.var;
        case Term::Kind::One: return "1";
        case Term::Kind::Product: {
            std::string s;
            for (size_t i = 0; i < t.args.size(); ++i) {
                if (i) s += " * ";
                s += print_factor(*t.args[i]);
            }
            return s;
        }
        case Term::Kind::Inverse: return "inv(" + print_term(*t.args[0]) + ")";
        case Term::Kind::Power:
            return print_atom(*t.args[0]) + "^" + print_int_atom(*t.exp);
        case Term::Kind::Comm: {
            std::string s = "[";
            for (size_t i = 0; i < t.args.size(); ++i) {
                if (i) s += ", ";
                s += print_term(*t.args[i]);
            }
            return s + "]";
        }
        case Term::Kind::Conj:
            return "conj(" + print_term(*t.args[0]) + ", " + print_term(*t.args[1]) + ")";
        case Term::Kind::Tensor:
            return "tensor(" + print_term(*t.args[0]) + ", " + print_term(*t.args[1]) + ")";
        case Term::Kind::Wedge:
            return "wedge(" + print_term(*t.args[0]) + ", " + print_term(*t.args[1]) + ")";
    }
    throw std::logic_error("print_term: bad kind");
}

bool IdentityScript::pure_commutator() const {
    return !has_wedge() && !has_tensor();
}

bool IdentityScript::has_wedge() const {
    return term_contains(*lhs, Term::Kind::Wedge) || term_contains(*rhs, Term::Kind::Wedge);
}

bool IdentityScript::has_tensor() const {
    return term_contains(*lhs, Term::Kind::Tensor) || term_contains(*rhs, Term::Kind::Tensor);
}

bool IdentityScript::uses_n() const { return term_uses_n(*lhs) || term_uses_n(*rhs); }

long IdentityScript::min_weight_of(const std::string& var) const {
    long w = 1;
    for (const auto& c : weights)
        if (c.var == var) w = std::max(w, c.min_weight);
    return w;
}

namespace {

const std::set<std::string> kReserved = {
    "identity", "vars", "class", "where", "assert", "inv",  "conj", "pow",
    "tensor",   "wedge", "binom", "ipow",  "n",      "w",    "modsq", "prime"};

class IdentityParser {
  public:
    IdentityParser(Lexer& lx, const std::vector<std::string>& vars) : lx_(lx), vars_(vars) {}

    IntExprPtr int_expr() {
        IntExprPtr e = int_term();
        while (lx_.at(Tok::Plus) || lx_.at(Tok::Minus)) {
            bool add = lx_.accept(Tok::Plus);
            if (!add) lx_.expect(Tok::Minus, "'-'");
            e = IntExpr::make(add ? IntExpr::Kind::Add : IntExpr::Kind::Sub, e, int_term());
        }
        return e;
    }

    TermPtr term() {
        TermPtr t = factor();
        if (!lx_.at(Tok::Star)) return t;
        std::vector<TermPtr> args{t};
        while (lx_.accept(Tok::Star)) args.push_back(factor());
        return Term::make(Term::Kind::Product, std::move(args));
    }

  private:
    IntExprPtr int_term() {
        IntExprPtr e = int_atom();
        while (lx_.accept(Tok::Star)) e = IntExpr::make(IntExpr::Kind::Mul, e, int_atom());
        return e;
    }

    IntExprPtr int_atom() {
        if (lx_.accept(Tok::Minus)) return IntExpr::make(IntExpr::Kind::Neg, int_atom());
        if (lx_.at(Tok::Integer)) {
            Int v(lx_.text());
            lx_.advance();
            return IntExpr::literal(v);
        }
        if (lx_.accept_keyword("n")) return IntExpr::symbol_n();
        if (lx_.accept_keyword("binom")) return int_call(IntExpr::Kind::Binom);
        if (lx_.accept_keyword("ipow")) return int_call(IntExpr::Kind::IPow);
        if (lx_.accept(Tok::LParen)) {
            IntExprPtr e = int_expr();
            lx_.expect(Tok::RParen, "')'");
            return e;
        }
        lx_.fail("expected integer expression");
    }

    IntExprPtr int_call(IntExpr::Kind k) {
        lx_.expect(Tok::LParen, "'('");
        IntExprPtr a = int_expr();
        lx_.expect(Tok::Comma, "','");
        IntExprPtr b = int_expr();
        lx_.expect(Tok::RParen, "')'");
        return IntExpr::make(k, a, b);
    }

    TermPtr factor() {
        TermPtr base = atom();
        if (lx_.accept(Tok::Caret))
            return Term::make(Term::Kind::Power, {base}, int_atom());
        return base;
    }

    TermPtr atom() {
        if (lx_.at(Tok::Integer)) {
            if (lx_.text() != "1") lx_.fail("only the literal 1 denotes a group element");
            lx_.advance();
            return Term::make_one();
        }
        if (lx_.accept(Tok::LParen)) {
            TermPtr t = term();
            lx_.expect(Tok::RParen, "')'");
            return t;
        }
        if (lx_.accept(Tok::LBrack)) {
            std::vector<TermPtr> parts;
            parts.push_back(term());
            while (lx_.accept(Tok::Comma)) parts.push_back(term());
            lx_.expect(Tok::RBrack, "']'");
            if (parts.size() < 2) lx_.fail("commutator needs at least two arguments");
            return Term::make(Term::Kind::Comm, std::move(parts));
        }
        if (lx_.accept_keyword("inv")) {
            lx_.expect(Tok::LParen, "'('");
            TermPtr t = term();
            lx_.expect(Tok::RParen, "')'");
            return Term::make(Term::Kind::Inverse, {t});
        }
        if (lx_.accept_keyword("pow")) {
            lx_.expect(Tok::LParen, "'('");
            TermPtr t = term();
            lx_.expect(Tok::Comma, "','");
            IntExprPtr e = int_expr();
            lx_.expect(Tok::RParen, "')'");
            return Term::make(Term::Kind::Power, {t}, e);
        }
        if (lx_.accept_keyword("conj")) return binary_call(Term::Kind::Conj);
        if (lx_.accept_keyword("tensor")) return binary_call(Term::Kind::Tensor);
        if (lx_.accept_keyword("wedge")) return binary_call(Term::Kind::Wedge);
        if (lx_.at(Tok::Ident)) {
            const std::string& id = lx_.text();
            if (kReserved.count(id)) lx_.fail("reserved word '" + id + "' used as a term");
            if (std::find(vars_.begin(), vars_.end(), id) == vars_.end())
                lx_.fail("undeclared variable '" + id + "'");
            std::string name = id;
            lx_.advance();
            return Term::make_var(std::move(name));
        }
        lx_.fail("expected term");
    }

    TermPtr binary_call(Term::Kind k) {
        lx_.expect(Tok::LParen, "'('");
        TermPtr a = term();
        lx_.expect(Tok::Comma, "','");
        TermPtr b = term();
        lx_.expect(Tok::RParen, "')'");
        return Term::make(k, {a, b});
    }

    Lexer& lx_;
    const std::vector<std::string>& vars_;
};

}  // namespace

IdentityScript parse_identity(const std::string& text) {
    Lexer lx(text);
    IdentityScript s;

    lx.expect_keyword("identity");
    s.name = lx.expect_ident("identity name");
    lx.expect(Tok::Semi, "';'");

    lx.expect_keyword("vars");
    do {
        std::string id = lx.expect_ident("variable name");
        if (kReserved.count(id)) throw ParseError("reserved variable name '" + id + "'", 0, 0);
        if (std::find(s.variables.begin(), s.variables.end(), id) != s.variables.end())
            throw ParseError("duplicate variable '" + id + "'", 0, 0);
        s.variables.push_back(id);
    } while (lx.accept(Tok::Comma));
    lx.expect(Tok::Semi, "';'");

    lx.expect_keyword("class");
    if (!lx.at(Tok::Integer)) lx.fail("expected class number");
    s.klass = std::stol(lx.text());
    lx.advance();
    lx.expect(Tok::Semi, "';'");

    if (lx.accept_keyword("where")) {
        do {
            if (lx.accept_keyword("w")) {
                lx.expect(Tok::LParen, "'('");
                std::string v = lx.expect_ident("variable");
                lx.expect(Tok::RParen, "')'");
                lx.expect(Tok::Ge, "'>='");
                if (!lx.at(Tok::Integer)) lx.fail("expected weight bound");
                long wt = std::stol(lx.text());
                lx.advance();
                if (std::find(s.variables.begin(), s.variables.end(), v) == s.variables.end())
                    lx.fail("weight constraint on undeclared variable '" + v + "'");
                s.weights.push_back({v, wt});
            } else if (lx.accept_keyword("modsq")) {
                lx.expect(Tok::LParen, "'('");
                std::string v = lx.expect_ident("variable");
                lx.expect(Tok::RParen, "')'");
                if (std::find(s.variables.begin(), s.variables.end(), v) == s.variables.end())
                    lx.fail("modsq constraint on undeclared variable '" + v + "'");
                s.modsq_vars.push_back(v);
            } else if (lx.accept_keyword("prime")) {
                lx.expect(Tok::Assign, "'='");
                if (!lx.at(Tok::Integer)) lx.fail("expected prime");
                s.prime = Int(lx.text());
                lx.advance();
            } else {
                lx.fail("expected constraint (w(v) >= k, modsq(v) or prime = p)");
            }
        } while (lx.accept(Tok::Comma));
        lx.expect(Tok::Semi, "';'");
    }

    lx.expect_keyword("assert");
    IdentityParser tp(lx, s.variables);
    s.lhs = tp.term();
    lx.expect(Tok::EqEq, "'=='");
    s.rhs = tp.term();
    lx.accept(Tok::Semi);
    if (!lx.at(Tok::End)) lx.fail("trailing input after assertion");
    return s;
}

std::string print_identity(const IdentityScript& s) {
    std::string out = "identity " + s.name + ";\nvars ";
    for (size_t i = 0; i < s.variables.size(); ++i) {
        if (i) out += ", ";
        out += s.variables[i];
    }
    out += ";\nclass " + std::to_string(s.klass) + ";\n";
    if (!s.weights.empty() || !s.modsq_vars.empty() || s.prime != 0) {
        out += "where ";
        bool first = true;
        for (const auto& c : s.weights) {
            if (!first) out += ", ";
            first = false;
            out += "w(" + c.var + ") >= " + std::to_string(c.min_weight);
        }
        for (const auto& v : s.modsq_vars) {
            if (!first) out += ", ";
            first = false;
            out += "modsq(" + v + ")";
        }
        if (s.prime != 0) {
            if (!first) out += ", ";
            out += "prime = " + s.prime.str();
        }
        out += ";\n";
    }
    out += "assert " + print_term(*s.lhs) + " == " + print_term(*s.rhs) + ";\n";
    return out;
}

}  // namespace wedgelab
