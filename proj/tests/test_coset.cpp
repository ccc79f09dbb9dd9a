#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "wedgelab/coset.hpp"

using namespace wedgelab;

namespace {

const char* kHeis3 =
    "group Heis3; prime 3;\n"
    "gens a, b, c;\n"
    "rels a^3, b^3, c^3, [a,b] c^-1, [a,c], [b,c];";

Presentation heis3() { return parse_presentation(kHeis3); }

}  // namespace

TEST_CASE("cyclic group of order four") {
    Presentation p = parse_presentation("group C4; prime 2; gens a; rels a^4;");
    CosetTable t = enumerate(p, {});
    CHECK(t.size() == 4);
    CHECK(t.gens() == 1);
    CHECK(t.cols() == 2);
    t.audit(p);

    // a acts as a 4-cycle; four steps return home, two do not.
    int32_t c = 0;
    for (int i = 0; i < 4; ++i) c = t.step(c, 0);
    CHECK(c == 0);
    CHECK(t.step(t.step(0, 0), 0) != 0);
    // Inverse column undoes the generator column.
    CHECK(t.step(t.step(0, 0), 0, true) == 0);
}

TEST_CASE("heisenberg group over the cosets of the trivial subgroup") {
    Presentation p = heis3();
    CosetTable t = enumerate(p, {});
    CHECK(t.size() == 27);
    t.audit(p);

    // apply_word follows [a,b] to the same coset as c.
    GroupWord ab = commutator(GroupWord::gen(0), GroupWord::gen(1));
    CHECK(t.apply_word(0, ab) == t.apply_word(0, GroupWord::gen(2)));
    CHECK(t.apply_word(0, GroupWord::gen(2).pow(3)) == 0);
}

TEST_CASE("proper subgroup gives index, both strategies agree") {
    Presentation p = heis3();
    std::vector<GroupWord> sub = {GroupWord::gen(0)};  // <a>, order 3
    CosetTable hlt = enumerate(p, sub, {}, EnumStrategy::HLT);
    CosetTable felsch = enumerate(p, sub, {}, EnumStrategy::Felsch);
    CHECK(hlt.size() == 9);
    CHECK(hlt.subgroup_rank() == 1);
    REQUIRE(felsch.size() == hlt.size());

    // BFS standardization makes the tables equal entry for entry.
    for (int32_t c = 0; c < hlt.size(); ++c)
        for (int col = 0; col < hlt.cols(); ++col)
            CHECK(hlt.entry(c, col) == felsch.entry(c, col));

    // Subgroup generators fix coset 0.
    CHECK(hlt.apply_word(0, sub[0]) == 0);
}

TEST_CASE("coset budget violations raise the named resource") {
    Presentation p = heis3();
    EnumLimits tight;
    tight.max_cosets = 5;
    try {
        enumerate(p, {}, tight);
        FAIL("expected LimitExceeded");
    } catch (const LimitExceeded& e) {
        CHECK(e.resource() == "cosets");
        CHECK(std::string(e.what()).find("cosets") != std::string::npos);
    }
}

TEST_CASE("audit rejects a corrupted table") {
    Presentation p = parse_presentation("group C4; prime 2; gens a; rels a^4;");
    CosetTable good = enumerate(p, {});
    // Swap two entries of the generator column: still a permutation, but the
    // relator a^4 no longer closes from every coset.
    std::vector<int32_t> flat;
    for (int32_t c = 0; c < good.size(); ++c)
        for (int col = 0; col < good.cols(); ++col) flat.push_back(good.entry(c, col));
    std::swap(flat[0 * 2 + 0], flat[1 * 2 + 0]);
    std::swap(flat[0 * 2 + 1], flat[1 * 2 + 1]);
    CosetTable bad = CosetTable::from_rows(good.gens(), good.subgroup_rank(), std::move(flat));
    CHECK_THROWS_AS(bad.audit(p), std::logic_error);
}

TEST_CASE("serialization round-trips") {
    Presentation p = heis3();
    CosetTable t = enumerate(p, {GroupWord::gen(2)});
    CosetTable back = CosetTable::deserialize(t.serialize());
    REQUIRE(back.size() == t.size());
    CHECK(back.gens() == t.gens());
    CHECK(back.subgroup_rank() == t.subgroup_rank());
    for (int32_t c = 0; c < t.size(); ++c)
        for (int col = 0; col < t.cols(); ++col)
            CHECK(back.entry(c, col) == t.entry(c, col));
    back.audit(p);

    CHECK_THROWS(CosetTable::deserialize("not a table"));
}

TEST_CASE("cache writes a file and reloads the same table") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "wedgelab_coset_cache_test";
    fs::remove_all(dir);

    Presentation p = heis3();
    uint64_t key = table_cache_key(p, {});
    uint64_t key_sub = table_cache_key(p, {GroupWord::gen(0)});
    CHECK(key != key_sub);

    CosetTable first = enumerate_cached(p, {}, {}, dir.string());
    CHECK(first.size() == 27);
    size_t files = 0;
    for (auto& entry : fs::directory_iterator(dir)) {
        (void)entry;
        ++files;
    }
    CHECK(files == 1);

    CosetTable second = enumerate_cached(p, {}, {}, dir.string());
    REQUIRE(second.size() == first.size());
    for (int32_t c = 0; c < first.size(); ++c)
        for (int col = 0; col < first.cols(); ++col)
            CHECK(second.entry(c, col) == first.entry(c, col));
    fs::remove_all(dir);
}

TEST_CASE("presentation parser conventions") {
    Presentation p = heis3();
    CHECK(p.name == "Heis3");
    CHECK(p.prime == 3);
    CHECK(p.generators == std::vector<std::string>{"a", "b", "c"});
    CHECK(p.relators.size() == 6);
    CHECK(p.gen_index("b") == 1);
    CHECK(p.gen_index("z") == -1);

    // An equation relator folds into w1 * w2^-1.
    Presentation q = parse_presentation(
        "group T; prime 3; gens a, b; rels a^3, b^3, [a,b] = a;");
    CHECK(q.relators.size() == 3);
    CosetTable t = enumerate(q, {});
    // [a,b] = a collapses a entirely, leaving C3 on b.
    CHECK(t.apply_word(0, GroupWord::gen(0)) == 0);
    CHECK(t.size() == 3);

    CHECK_THROWS_AS(parse_presentation("group X; prime 4; gens a; rels a;"),
                    ParseError);
    CHECK_THROWS_AS(parse_presentation("group X; prime 3; gens a; rels b;"),
                    ParseError);

    // Hash is name-independent but relator-sensitive.
    Presentation renamed = heis3();
    renamed.name = "Other";
    CHECK(renamed.hash() == p.hash());
    Presentation tweaked = heis3();
    tweaked.relators.pop_back();
    CHECK(tweaked.hash() != p.hash());
}
