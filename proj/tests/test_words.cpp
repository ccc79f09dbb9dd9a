#include <catch2/catch_amalgamated.hpp>

#include "wedgelab/words.hpp"

using namespace wedgelab;

TEST_CASE("free reduction cancels and merges") {
    GroupWord w = GroupWord::gen(0) * GroupWord::gen(1) * GroupWord::gen(1, -1) *
                  GroupWord::gen(0, 2);
    GroupWord r = free_reduce(w);
    REQUIRE(r.letters.size() == 1);
    CHECK(r.letters[0].gen == 0);
    CHECK(r.letters[0].exp == 3);

    CHECK(free_reduce(GroupWord::gen(2) * GroupWord::gen(2, -1)).trivial());
    CHECK(free_reduce(GroupWord::one()).trivial());
}

TEST_CASE("inverse reverses and negates") {
    GroupWord w = GroupWord::gen(0, 2) * GroupWord::gen(1, -3);
    GroupWord inv = w.inverse();
    REQUIRE(inv.letters.size() == 2);
    CHECK(inv.letters[0].gen == 1);
    CHECK(inv.letters[0].exp == 3);
    CHECK(inv.letters[1].gen == 0);
    CHECK(inv.letters[1].exp == -2);
    CHECK(free_reduce(w * inv).trivial());
}

TEST_CASE("pow repeats and inverts") {
    GroupWord a = GroupWord::gen(0);
    CHECK(free_reduce(a.pow(4)) == free_reduce(GroupWord::gen(0, 4)));
    CHECK(free_reduce(a.pow(-2)) == free_reduce(GroupWord::gen(0, -2)));
    CHECK(a.pow(0).trivial());

    // Single-syllable powers stay one syllable even for huge exponents.
    GroupWord big = a.pow(Int("123456789012345678901234567890"));
    CHECK(big.letters.size() == 1);

    GroupWord ab = GroupWord::gen(0) * GroupWord::gen(1);
    CHECK(free_reduce(ab.pow(2)) == free_reduce(ab * ab));
    CHECK(free_reduce(ab.pow(-1)) == free_reduce(ab.inverse()));
}

TEST_CASE("commutator and conjugate conventions") {
    GroupWord a = GroupWord::gen(0), b = GroupWord::gen(1), c = GroupWord::gen(2);

    // [a,b] = a b a^-1 b^-1.
    GroupWord expect = a * b * a.inverse() * b.inverse();
    CHECK(free_reduce(commutator(a, b)) == free_reduce(expect));

    // ^a b = a b a^-1.
    CHECK(free_reduce(conjugate(a, b)) == free_reduce(a * b * a.inverse()));

    // Multi-argument form is right-normed: [a,b,c] = [a,[b,c]].
    CHECK(free_reduce(commutator({a, b, c})) ==
          free_reduce(commutator(a, commutator(b, c))));
    CHECK(free_reduce(commutator({a, b})) == free_reduce(commutator(a, b)));
}

TEST_CASE("length counts letters with multiplicity") {
    GroupWord w = GroupWord::gen(0, 3) * GroupWord::gen(1, -2);
    CHECK(w.length() == 5);
    CHECK(GroupWord::one().length() == 0);
}

TEST_CASE("format uses caret powers and round-trips through the parser") {
    std::vector<std::string> names = {"a", "b"};
    GroupWord w = free_reduce(GroupWord::gen(0, 2) * GroupWord::gen(1, -1));
    std::string text = format_word(w, names);
    CHECK(text == "a^2 b^-1");
    CHECK(format_word(GroupWord::one(), names) == "1");
}
