// Identity DSL: quantified equations over group, tensor and wedge terms with
// integer-exponent expressions (symbolic n, binomials).
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wedgelab/presentation.hpp"

namespace wedgelab {

struct IntExpr;
using IntExprPtr = std::shared_ptr<const IntExpr>;

struct IntExpr {
    enum class Kind { Literal, SymbolN, Binom, IPow, Add, Sub, Mul, Neg };
    Kind kind;
    Int lit;           // Literal
    IntExprPtr a, b;   // operands

    static IntExprPtr literal(Int v);
    static IntExprPtr symbol_n();
    static IntExprPtr make(Kind k, IntExprPtr a, IntExprPtr b = nullptr);
};

Int eval_int(const IntExpr& e, const Int& n);
bool int_expr_uses_n(const IntExpr& e);
bool int_expr_equal(const IntExpr& a, const IntExpr& b);
std::string print_int_expr(const IntExpr& e);

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind {
        Var,      // declared variable
        One,      // literal 1
        Product,  // args[0] * args[1] * ...
        Inverse,  // args[0]^-1
        Power,    // args[0] ^ exp
        Comm,     // [args...] right-normed
        Conj,     // ^args[0] args[1] = args[0] args[1] args[0]^-1
        Tensor,   // args[0] (.) args[1]
        Wedge,    // args[0] /\ args[1]
    };
    Kind kind;
    std::string var;
    std::vector<TermPtr> args;
    IntExprPtr exp;

    static TermPtr make_var(std::string name);
    static TermPtr make_one();
    static TermPtr make(Kind k, std::vector<TermPtr> args, IntExprPtr exp = nullptr);
};

bool term_equal(const Term& a, const Term& b);
bool term_contains(const Term& t, Term::Kind k);
bool term_uses_n(const Term& t);
std::string print_term(const Term& t);

struct WeightConstraint {
    std::string var;
    long min_weight;
};

struct IdentityScript {
    std::string name;
    std::vector<std::string> variables;
    long klass = 0;                       // nilpotency class context
    Int prime = 0;                        // 0 = unconstrained
    std::vector<WeightConstraint> weights;
    std::vector<std::string> modsq_vars;  // equality holds modulo commutators
                                          // carrying this variable twice
    TermPtr lhs, rhs;

    bool pure_commutator() const;  // no tensor/wedge on either side
    bool has_wedge() const;
    bool has_tensor() const;
    bool uses_n() const;
    long min_weight_of(const std::string& var) const;  // 1 when unconstrained
};

// Format: identity <name>; vars <ids>; class <c>; [where <constraints>;]
//         assert <term> == <term;  constraints: w(v) >= k | modsq(v) | prime = p
IdentityScript parse_identity(const std::string& text);
std::string print_identity(const IdentityScript& s);

}  // namespace wedgelab
