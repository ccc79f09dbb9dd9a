#include <catch2/catch_amalgamated.hpp>

#include "wedgelab/smith.hpp"

using namespace wedgelab;

namespace {
std::vector<Int> row(std::initializer_list<long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}
}  // namespace

TEST_CASE("smith diagonal of known matrices") {
    // diag(2, 6) already in form.
    CHECK(smith_diagonal({row({2, 0}), row({0, 6})}, 2) == row({2, 6}));
    // Swapped divisibility gets repaired: diag(4, 2) -> (2, 4).
    CHECK(smith_diagonal({row({4, 0}), row({0, 2})}, 2) == row({2, 4}));
    // Classic example with off-diagonal content.
    CHECK(smith_diagonal({row({2, 4, 4}), row({-6, 6, 12}), row({10, 4, 16})}, 3) ==
          row({2, 2, 156}));
    // Rank-deficient: trailing zero.
    CHECK(smith_diagonal({row({1, 1}), row({1, 1})}, 2) == row({1, 0}));
    // No relators at all: all-zero diagonal.
    CHECK(smith_diagonal({}, 2) == row({0, 0}));
    // Negative entries normalize to nonnegative invariants.
    CHECK(smith_diagonal({row({-3})}, 1) == row({3}));
}

TEST_CASE("abelianization from presentations") {
    Presentation c81 = parse_presentation("group C81; prime 3; gens a; rels a^81;");
    CHECK(abelianization(c81).factors == row({81}));

    Presentation c3c3 =
        parse_presentation("group A; prime 3; gens a, b; rels a^3, b^3, [a,b];");
    CHECK(abelianization(c3c3).factors == row({3, 3}));

    // Commutators contribute nothing to the exponent-sum matrix, so Heis3
    // abelianizes to C3 x C3 (c = [a,b] dies).
    Presentation heis = parse_presentation(
        "group H; prime 3; gens a, b, c;"
        " rels a^3, b^3, c^3, [a,b] c^-1, [a,c], [b,c];");
    AbelianInvariants h = abelianization(heis);
    CHECK(h.factors == row({3, 3}));
    CHECK(h.order() == 9);
    CHECK(h.exponent() == 3);

    // C2 x C4 needs a nontrivial divisor chain.
    Presentation c2c4 =
        parse_presentation("group B; prime 2; gens a, b; rels a^2, b^4, [a,b];");
    CHECK(abelianization(c2c4).factors == row({2, 4}));

    // A free generator makes the abelianization infinite.
    Presentation free1 = parse_presentation("group F; prime 3; gens a, b; rels a^3;");
    CHECK_THROWS_AS(abelianization(free1), std::invalid_argument);
}

TEST_CASE("squares of elementary abelian groups") {
    AbelianInvariants a{{Int(3), Int(3)}};
    AbelianSquares s = abelian_squares(a);
    CHECK(s.group.order() == 9);
    CHECK(s.tensor.order() == 81);
    CHECK(s.tensor.exponent() == 3);
    CHECK(s.wedge.order() == 3);
    CHECK(s.wedge.exponent() == 3);
    // |nu(A)| = |A|^2 * |A (x) A|.
    CHECK(s.predicted_nu_order() == Int(81) * 81);
}

TEST_CASE("squares of cyclic groups are trivial") {
    for (long n : {2L, 3L, 27L, 81L}) {
        AbelianSquares s = abelian_squares(AbelianInvariants{{Int(n)}});
        CHECK(s.tensor.order() == n);
        CHECK(s.tensor.exponent() == n);
        CHECK(s.wedge.order() == 1);
        CHECK(s.wedge.exponent() == 1);
        CHECK(s.predicted_nu_order() == Int(n) * n * n);
    }
    // Trivial group edge case.
    AbelianSquares t = abelian_squares(AbelianInvariants{});
    CHECK(t.tensor.order() == 1);
    CHECK(t.wedge.order() == 1);
    CHECK(t.predicted_nu_order() == 1);
}

TEST_CASE("mixed invariant factors use pairwise gcds") {
    // C2 x C4: tensor has factors gcd for pairs (2,2),(2,4),(4,2),(4,4)
    // = 2,2,2,4 -> order 32, exponent 4; wedge keeps the single pair (2,4).
    AbelianSquares s = abelian_squares(AbelianInvariants{{Int(2), Int(4)}});
    CHECK(s.tensor.order() == 32);
    CHECK(s.tensor.exponent() == 4);
    CHECK(s.wedge.order() == 2);
    CHECK(s.wedge.exponent() == 2);

    // C3 x C9 x C27.
    AbelianSquares u = abelian_squares(AbelianInvariants{{Int(3), Int(9), Int(27)}});
    // Pairs: (3,*) gives 3,3,3; (9,3)=3,(9,9)=9,(9,27)=9; (27,3)=3,(27,9)=9,(27,27)=27.
    CHECK(u.tensor.order() == Int(3) * 3 * 3 * 3 * 9 * 9 * 3 * 9 * 27);
    CHECK(u.tensor.exponent() == 27);
    CHECK(u.wedge.order() == Int(3) * 3 * 9);
    CHECK(u.wedge.exponent() == 9);
}
