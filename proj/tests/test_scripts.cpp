#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "wedgelab/scripts.hpp"
#include "wedgelab/symbolic.hpp"

using namespace wedgelab;

TEST_CASE("every script parses and matches its id") {
    const auto& all = builtin_scripts();
    REQUIRE(all.size() >= 80);
    std::set<std::string> ids;
    for (const ScriptSpec& s : all) {
        INFO("script " << s.id);
        IdentityScript parsed = s.parse();
        CHECK(parsed.name == s.id);
        CHECK(ids.insert(s.id).second);  // unique
        CHECK((s.symbolic || s.oracle || s.concrete));
        CHECK_FALSE(s.family.empty());

        // Mode gates reflect the term content: tensor or wedge statements
        // cannot run symbolically or against the matrix oracle.
        if (parsed.has_tensor() || parsed.has_wedge()) {
            CHECK_FALSE(s.symbolic);
            CHECK_FALSE(s.oracle);
        }
        if (s.oracle && !s.oracle_dsl.empty()) {
            IdentityScript alt = parse_identity(s.oracle_dsl);
            CHECK(alt.pure_commutator());
            CHECK(alt.modsq_vars.empty());
        } else if (s.oracle) {
            CHECK(parsed.pure_commutator());
            CHECK(parsed.modsq_vars.empty());
        }
        if (s.symbolic) CHECK(parsed.pure_commutator());
    }
}

TEST_CASE("family coverage matches the required counts exactly") {
    std::map<std::string, int> seen;
    for (const ScriptSpec& s : builtin_scripts()) ++seen[s.family];

    const auto& req = required_families();
    CHECK(req.size() == seen.size());
    int total = 0;
    for (const auto& [family, count] : req) {
        INFO("family " << family);
        auto it = seen.find(family);
        REQUIRE(it != seen.end());
        CHECK(it->second == count);
        total += count;
    }
    CHECK(static_cast<size_t>(total) == builtin_scripts().size());
}

TEST_CASE("lookup by id") {
    const ScriptSpec* s = script_find("collection.binomial");
    REQUIRE(s != nullptr);
    CHECK(s->id == "collection.binomial");
    CHECK_FALSE(s->oracle_dsl.empty());
    CHECK(script_find("no.such.script") == nullptr);
}

TEST_CASE("negative control is marked and actually fails") {
    const ScriptSpec* s = script_find("ghsub.full_printed_variant");
    REQUIRE(s != nullptr);
    CHECK_FALSE(s->expect_equal);

    int negatives = 0;
    for (const ScriptSpec& spec : builtin_scripts())
        if (!spec.expect_equal) ++negatives;
    CHECK(negatives == 1);
}

TEST_CASE("special flags on the scripts that need them") {
    const ScriptSpec* v = script_find("vanish3.single_comm");
    REQUIRE(v != nullptr);
    CHECK(v->parse().prime == 3);
    CHECK(v->n_policy == "exponent_log");
    for (const ScriptSpec& s : builtin_scripts())
        if (s.family == "vanish3") {
            CHECK(s.parse().prime == 3);
            CHECK(s.n_policy == "exponent_log");
        }

    bool abelians_pinned = false;
    for (const ScriptSpec& s : builtin_scripts())
        if (s.family == "abelians" && s.group_filter == "Mod27") abelians_pinned = true;
    CHECK(abelians_pinned);
}

TEST_CASE("symbolic rank pays for weight constraints") {
    IdentityScript plain = parse_identity(
        "identity t; vars a, b; class 2; assert [a, b] == [a, b];");
    CHECK(symbolic_rank(plain) == 2);
    IdentityScript heavy = parse_identity(
        "identity t; vars a, b; class 3; where w(b) >= 2;"
        " assert [a, b] == [a, b];");
    CHECK(symbolic_rank(heavy) == 3);
}

TEST_CASE("the symbolic suite holds end to end on a sample") {
    int ran = 0;
    for (const ScriptSpec& s : builtin_scripts()) {
        if (!s.symbolic || s.family != "wsum") continue;
        IdentityScript id = s.parse();
        VerificationReport r =
            verify_symbolic(id, symbolic_rank(id), static_cast<int>(id.klass));
        INFO("script " << s.id);
        CHECK(r.all_equal == s.expect_equal);
        ++ran;
    }
    CHECK(ran >= 3);
}
