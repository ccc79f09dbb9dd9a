#include <catch2/catch_amalgamated.hpp>

#include "wedgelab/group.hpp"

using namespace wedgelab;

namespace {

RegularRep build(const char* text) {
    Presentation p = parse_presentation(text);
    CosetTable t = enumerate(p, {});
    t.audit(p);
    return RegularRep(std::move(t));
}

RegularRep heis3() {
    return build(
        "group Heis3; prime 3;"
        " gens a, b, c;"
        " rels a^3, b^3, c^3, [a,b] c^-1, [a,c], [b,c];");
}

RegularRep mod27() {
    return build(
        "group Mod27; prime 3;"
        " gens a, b;"
        " rels a^9, b^3, [a,b] a^-3;");
}

}  // namespace

TEST_CASE("regular representation arithmetic") {
    RegularRep r = heis3();
    CHECK(r.order() == 27);
    CHECK(r.gens() == 3);

    Elem a = r.generator(0), b = r.generator(1), c = r.generator(2);
    CHECK(r.mul(a, r.inv(a)) == r.id());
    CHECK(r.comm(a, b) == c);
    CHECK(r.comm(b, a) == r.inv(c));
    CHECK(r.conj(a, b) == r.mul(c, b));
    CHECK(r.pow(a, 3) == r.id());
    CHECK(r.pow(a, -1) == r.inv(a));
    CHECK(r.pow(a, Int("3000000000000000001")) == a);
    CHECK(r.order_of(a) == 3);
    CHECK(r.order_of(r.id()) == 1);
    CHECK(r.exponent() == 3);

    // Right-normed list commutator; [a,[b,c]] with c central is trivial.
    CHECK(r.comm({a, b, c}) == r.id());
    CHECK(r.comm({a, b}) == c);

    // Words evaluate and round-trip through the BFS tree.
    GroupWord w = GroupWord::gen(0) * GroupWord::gen(1, 2);
    Elem x = r.eval_word(w);
    CHECK(r.eval_word(r.word_of(x)) == x);
    CHECK(r.word_of(r.id()).trivial());
}

TEST_CASE("mod27 powers fold into the commutator") {
    RegularRep r = mod27();
    CHECK(r.order() == 27);
    Elem a = r.generator(0), b = r.generator(1);
    CHECK(r.comm(a, b) == r.pow(a, 3));
    CHECK(r.order_of(a) == 9);
    CHECK(r.exponent() == 9);
}

TEST_CASE("subgroup closures and structural subgroups") {
    RegularRep r = heis3();
    Elem a = r.generator(0), c = r.generator(2);

    Subgroup whole = whole_group(r);
    CHECK(whole.order() == 27);
    Subgroup triv = trivial_subgroup(r);
    CHECK(triv.is_trivial());
    CHECK(is_subset(triv, whole));

    Subgroup A = subgroup_closure(r, {a});
    CHECK(A.order() == 3);
    CHECK(A.contains(a));
    CHECK(A.contains(r.id()));
    CHECK_FALSE(is_normal(r, A));

    Subgroup C = subgroup_closure(r, {c});
    CHECK(C.order() == 3);
    CHECK(is_normal(r, C));

    Subgroup D = derived_subgroup(r, whole);
    CHECK(D.order() == 3);
    CHECK(D.contains(c));

    Subgroup Z = center(r);
    CHECK(Z.order() == 3);
    CHECK(Z.elems == D.elems);

    CHECK(intersection(r, A, C).is_trivial());
    CHECK(normal_closure(r, {a}).order() == 9);

    // Heis3 has exponent 3, so the first agemo is trivial.
    CHECK(power_subgroup(r, whole, 3).is_trivial());
    CHECK(power_subgroup(r, whole, 1).order() == 27);
}

TEST_CASE("series and quotient exponents") {
    RegularRep r = heis3();
    std::vector<Subgroup> lcs = lower_central_series(r);
    REQUIRE(lcs.size() == 3);
    CHECK(lcs[0].order() == 27);
    CHECK(lcs[1].order() == 3);
    CHECK(lcs[2].order() == 1);

    std::vector<Subgroup> ds = derived_series(r);
    REQUIRE(ds.size() == 3);
    CHECK(ds[1].order() == 3);
    CHECK(ds[2].order() == 1);

    CHECK(subgroup_exponent(r, whole_group(r)) == 3);
    CHECK(subgroup_exponent(r, lcs[1]) == 3);
    // G over its center is C3 x C3.
    CHECK(quotient_exponent(r, whole_group(r), center(r)) == 3);

    RegularRep m = mod27();
    std::vector<Subgroup> mlcs = lower_central_series(m);
    REQUIRE(mlcs.size() == 3);
    CHECK(mlcs[1].order() == 3);
    // Mod27 over its derived subgroup is C3 x C3; the agemo is the derived
    // subgroup itself.
    Subgroup agemo = power_subgroup(m, whole_group(m), 3);
    CHECK(agemo.order() == 3);
    CHECK(quotient_exponent(m, whole_group(m), agemo) == 3);
}

TEST_CASE("quotient exponent validates its arguments") {
    RegularRep r = heis3();
    Subgroup A = subgroup_closure(r, {r.generator(0)});
    // <a> is not normal in G, and G is not contained in <a>.
    CHECK_THROWS(quotient_exponent(r, whole_group(r), A));
    CHECK_THROWS(quotient_exponent(r, A, whole_group(r)));
}

TEST_CASE("member budget is enforced") {
    RegularRep r = heis3();
    try {
        subgroup_closure(r, {r.generator(0), r.generator(1)}, 5);
        FAIL("expected MemberLimitExceeded");
    } catch (const LimitExceeded& e) {
        CHECK(e.resource() == "members");
    }
}
