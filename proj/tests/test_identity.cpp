#include <catch2/catch_amalgamated.hpp>

#include "wedgelab/identity.hpp"

using namespace wedgelab;

static const char* kScript = R"(
identity demo.full;
vars g, h, x;
class 3;
where w(x) >= 2, modsq(h), prime = 3;
assert tensor([g, h], x) == pow(wedge(g, h), binom(n, 2)) * conj(g, x^-1);
)";

TEST_CASE("full script parses with all clause kinds") {
    IdentityScript s = parse_identity(kScript);
    CHECK(s.name == "demo.full");
    CHECK(s.variables == std::vector<std::string>{"g", "h", "x"});
    CHECK(s.klass == 3);
    CHECK(s.prime == 3);
    REQUIRE(s.weights.size() == 1);
    CHECK(s.weights[0].var == "x");
    CHECK(s.weights[0].min_weight == 2);
    CHECK(s.modsq_vars == std::vector<std::string>{"h"});
    CHECK(s.min_weight_of("x") == 2);
    CHECK(s.min_weight_of("g") == 1);

    CHECK(s.has_tensor());
    CHECK(s.has_wedge());
    CHECK_FALSE(s.pure_commutator());
    CHECK(s.uses_n());

    REQUIRE(s.lhs->kind == Term::Kind::Tensor);
    REQUIRE(s.rhs->kind == Term::Kind::Product);
    CHECK(s.rhs->args[0]->kind == Term::Kind::Power);
    CHECK(s.rhs->args[0]->exp->kind == IntExpr::Kind::Binom);
}

TEST_CASE("print round-trips through the parser") {
    IdentityScript s = parse_identity(kScript);
    IdentityScript again = parse_identity(print_identity(s));
    CHECK(again.name == s.name);
    CHECK(again.variables == s.variables);
    CHECK(again.klass == s.klass);
    CHECK(again.prime == s.prime);
    CHECK(again.modsq_vars == s.modsq_vars);
    CHECK(term_equal(*again.lhs, *s.lhs));
    CHECK(term_equal(*again.rhs, *s.rhs));
}

TEST_CASE("commutators are right-normed and need two arguments") {
    IdentityScript s = parse_identity(
        "identity t; vars a, b, c; class 3; assert [a, b, c] == [a, [b, c]];");
    // The printer re-flattens nothing; both sides survive as written.
    REQUIRE(s.lhs->kind == Term::Kind::Comm);
    CHECK(s.lhs->args.size() == 3);
    REQUIRE(s.rhs->kind == Term::Kind::Comm);
    CHECK(s.rhs->args.size() == 2);
    CHECK(s.pure_commutator());
    CHECK_FALSE(s.uses_n());

    CHECK_THROWS_AS(
        parse_identity("identity t; vars a; class 2; assert [a] == 1;"),
        ParseError);
}

TEST_CASE("products need an explicit star") {
    CHECK_THROWS_AS(
        parse_identity("identity t; vars g, h; class 2; assert g h == 1;"),
        ParseError);
    IdentityScript ok =
        parse_identity("identity t; vars g, h; class 2; assert g * h * g == 1;");
    REQUIRE(ok.lhs->kind == Term::Kind::Product);
    CHECK(ok.lhs->args.size() == 3);
}

TEST_CASE("caret powers bind one atom") {
    IdentityScript s = parse_identity(
        "identity t; vars g; class 2; assert g^-3 * g^3 == pow(g, 2 - 2);");
    REQUIRE(s.lhs->args[0]->kind == Term::Kind::Power);
    CHECK(eval_int(*s.lhs->args[0]->exp, 0) == -3);
    CHECK(eval_int(*s.rhs->exp, 0) == 0);
}

TEST_CASE("bad scripts are rejected with positions") {
    // Undeclared variable in the assertion body.
    CHECK_THROWS_AS(
        parse_identity("identity t; vars g; class 2; assert g * z == 1;"),
        ParseError);
    // Reserved word claimed as a variable.
    CHECK_THROWS_AS(parse_identity("identity t; vars tensor; class 2; assert 1 == 1;"),
                    ParseError);
    // Duplicate variable.
    CHECK_THROWS_AS(
        parse_identity("identity t; vars g, g; class 2; assert g == g;"),
        ParseError);
    // Trailing garbage.
    CHECK_THROWS_AS(
        parse_identity("identity t; vars g; class 2; assert g == g; junk"),
        ParseError);
    try {
        parse_identity("identity t; vars g; class 2; assert g *\n* == 1;");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("dotted identifiers work as names") {
    IdentityScript s =
        parse_identity("identity cube.pair_comm; vars g; class 2; assert g == g;");
    CHECK(s.name == "cube.pair_comm");
}

TEST_CASE("integer expressions evaluate with generalized binomials") {
    IdentityScript s = parse_identity(
        "identity t; vars g; class 2;"
        "assert pow(g, binom(n, 3) + ipow(2, n) * n - 1) == 1;");
    const IntExpr& e = *s.lhs->exp;
    CHECK(int_expr_uses_n(e));
    CHECK(eval_int(e, 4) == 4 + 16 * 4 - 1);
    // binom(n, 3) vanishes for n < 3 instead of going negative.
    CHECK(eval_int(e, 2) == 0 + 4 * 2 - 1);
    CHECK(int_expr_equal(e, e));
    CHECK_FALSE(int_expr_equal(e, *IntExpr::literal(5)));

    std::string printed = print_int_expr(e);
    CHECK(printed.find("binom(n, 3)") != std::string::npos);
    CHECK(printed.find("ipow(2, n)") != std::string::npos);
}

TEST_CASE("term_contains sees through nesting") {
    IdentityScript s = parse_identity(
        "identity t; vars g, h; class 2; assert inv([g, wedge(g, h)]) == 1;");
    CHECK(term_contains(*s.lhs, Term::Kind::Wedge));
    CHECK(term_contains(*s.lhs, Term::Kind::Comm));
    CHECK_FALSE(term_contains(*s.lhs, Term::Kind::Tensor));
    CHECK_FALSE(term_uses_n(*s.lhs));
}
