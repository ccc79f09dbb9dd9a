#include <catch2/catch_amalgamated.hpp>

#include "wedgelab/symbolic.hpp"

using namespace wedgelab;

static VerificationReport run(const std::string& text, int k, int c,
                              std::vector<Int> n_range = {}) {
    return verify_symbolic(parse_identity(text), k, c, std::move(n_range));
}

TEST_CASE("hall-witt style identities hold in every class") {
    // Commutator of a product splits with a conjugated correction.
    VerificationReport r = run(
        "identity t; vars a, b, c; class 4;"
        "assert [a * b, c] == conj(a, [b, c]) * [a, c];",
        3, 4);
    CHECK(r.mode == "symbolic");
    CHECK(r.all_equal);
    CHECK_FALSE(r.instances.empty());

    CHECK(run("identity t; vars a, b; class 4;"
              "assert inv([a, b]) == [b, a];",
              2, 4)
              .all_equal);

    CHECK(run("identity t; vars a, b; class 5;"
              "assert conj(a, b) == [a, b] * b;",
              2, 5)
              .all_equal);
}

TEST_CASE("false identities produce differing coordinates") {
    // [g,h] == [h,g] collapses in the abelianization but not at class 2.
    VerificationReport r = run(
        "identity t; vars g, h; class 2; assert [g, h] == [h, g];", 2, 2);
    CHECK_FALSE(r.all_equal);
    CHECK(r.failure_count() >= 1);
    bool explained = false;
    for (const auto& inst : r.instances)
        if (!inst.equal && !inst.differing.empty()) explained = true;
    CHECK(explained);

    // The same script at class 1 degenerates to a true statement.
    CHECK(run("identity t; vars g, h; class 1; assert [g, h] == [h, g];", 2, 1)
              .all_equal);
}

TEST_CASE("weight constraints change what gets substituted") {
    // [g,[g,x]] has weight 2 + w(x), so it dies at class 3 exactly when the
    // constraint pushes x to weight 2.
    const char* body = "assert [g, g, x] == 1;";
    std::string with =
        std::string("identity t; vars g, x; class 3; where w(x) >= 2; ") + body;
    std::string without = std::string("identity t; vars g, x; class 3; ") + body;
    CHECK(run(with, 3, 3).all_equal);
    CHECK_FALSE(run(without, 3, 3).all_equal);
}

TEST_CASE("symbolic n ranges over the requested values") {
    // (g h)^n == g^n h^n fails at class 2 for n >= 2 but holds for n in {0,1}.
    std::string text =
        "identity t; vars g, h; class 2;"
        "assert pow(g * h, n) == pow(g, n) * pow(h, n);";
    CHECK(run(text, 2, 2, {Int(0), Int(1)}).all_equal);
    VerificationReport wide = run(text, 2, 2, {Int(0), Int(1), Int(2), Int(3)});
    CHECK_FALSE(wide.all_equal);
    CHECK(wide.failure_count() == 2);

    // Class-2 correction term with its binomial exponent, over the default
    // n range.
    CHECK(run("identity t; vars g, h; class 2;"
              "assert pow(g * h, n) =="
              " pow(g, n) * pow(h, n) * pow([h, g], binom(n, 2));",
              2, 2)
              .all_equal);
}

TEST_CASE("modsq equalities ignore squares of the marked variable") {
    // [g^2, h] == [g, h]^2 holds modulo the subgroup generated by
    // weight-2 commutators in g, not exactly.
    std::string exact =
        "identity t; vars g, h; class 3; assert [pow(g, 2), h] == [g, h]^2;";
    std::string relaxed =
        "identity t; vars g, h; class 3; where modsq(g);"
        " assert [pow(g, 2), h] == [g, h]^2;";
    CHECK_FALSE(run(exact, 2, 3).all_equal);
    CHECK(run(relaxed, 2, 3).all_equal);
}

TEST_CASE("tensor and wedge terms are refused") {
    CHECK_THROWS_AS(run("identity t; vars g, h; class 2;"
                        "assert tensor(g, h) == tensor(g, h);",
                        2, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(run("identity t; vars g, h; class 2;"
                        "assert wedge(g, h) == wedge(g, h);",
                        2, 2),
                    std::invalid_argument);
}

TEST_CASE("too few generators for the substitution is an error") {
    CHECK_THROWS_AS(run("identity t; vars a, b, c; class 2; assert [a, b, c] == 1;",
                        2, 2),
                    std::invalid_argument);
}
