#include <catch2/catch_amalgamated.hpp>

#include "wedgelab/nilpotent.hpp"

using namespace wedgelab;

namespace {
const GroupWord a = GroupWord::gen(0);
const GroupWord b = GroupWord::gen(1);
}  // namespace

TEST_CASE("generators collect to unit vectors") {
    HallBasis basis = build_hall_basis(2, 3);
    NilpotentElement ea = collect(a, basis);
    REQUIRE(ea.exps.size() == static_cast<size_t>(basis.size()));
    CHECK(ea.exps[0] == 1);
    CHECK(ea.exps[1] == 0);
    CHECK(collect(a * a.inverse(), basis).is_identity());
    CHECK(nf_format(ea, basis) == "x1");
    CHECK(nf_format(nf_identity(basis), basis) == "1");
}

TEST_CASE("class-2 power rule (ab)^n = a^n b^n [b,a]^binom(n,2)") {
    HallBasis basis = build_hall_basis(2, 2);
    for (Int n : {Int(2), Int(3), Int(5), Int(-1)}) {
        NilpotentElement lhs = collect((a * b).pow(n), basis);
        GroupWord rhs_word =
            a.pow(n) * b.pow(n) * commutator(b, a).pow(binomial(n, 2));
        CHECK(lhs == collect(rhs_word, basis));
    }
}

TEST_CASE("commutators past the class vanish") {
    HallBasis basis = build_hall_basis(2, 2);
    CHECK(collect(commutator({a, a, b}), basis).is_identity());
    CHECK_FALSE(collect(commutator(a, b), basis).is_identity());

    // The same bracket survives at class 3.
    HallBasis deeper = build_hall_basis(2, 3);
    CHECK_FALSE(collect(commutator({a, a, b}), deeper).is_identity());
}

TEST_CASE("normal-form arithmetic agrees with word arithmetic") {
    HallBasis basis = build_hall_basis(3, 4);
    GroupWord c = GroupWord::gen(2);
    GroupWord wx = a * b.pow(2) * commutator(c, a);
    GroupWord wy = c.inverse() * a * b;
    NilpotentElement x = collect(wx, basis);
    NilpotentElement y = collect(wy, basis);

    CHECK(nf_multiply(x, y) == collect(wx * wy, basis));
    CHECK(nf_multiply(x, nf_inverse(x)).is_identity());
    CHECK(nf_inverse(x) == collect(wx.inverse(), basis));
    CHECK(nf_power(x, 4) == collect(wx.pow(4), basis));
    CHECK(nf_power(x, -3) == collect(wx.pow(-3), basis));
    CHECK(nf_power(x, 0).is_identity());
    CHECK(nf_commutator({x, y}) == collect(commutator(wx, wy), basis));
    CHECK(nf_commutator({x, y, x}) ==
          collect(commutator({wx, wy, wx}), basis));
}

TEST_CASE("power exponents can be large") {
    HallBasis basis = build_hall_basis(2, 2);
    Int n("1000000000000");
    NilpotentElement e = nf_power(collect(a * b, basis), n);
    CHECK(e.exps[0] == n);
    CHECK(e.exps[1] == n);
    CHECK(e.exps[2] == binomial(n, 2));
}
