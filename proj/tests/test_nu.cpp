#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "wedgelab/corpus.hpp"
#include "wedgelab/nu.hpp"
#include "wedgelab/smith.hpp"

using namespace wedgelab;

namespace {

const CorpusEntry& entry(const std::string& name) {
    const CorpusEntry* e = corpus_find(name);
    REQUIRE(e != nullptr);
    return *e;
}

// Realizations are expensive (nu(Heis3) has 531441 elements), so each group
// is realized once per test run, against the shared on-disk table cache.
const TensorRealization& realize_named(const std::string& name) {
    static std::map<std::string, TensorRealization> done;
    auto it = done.find(name);
    if (it == done.end())
        it = done.emplace(name, realize(entry(name).pres, {}, "wedgelab_cache")).first;
    return it->second;
}

}  // namespace

TEST_CASE("nu presentation has both copies and the commutation relators") {
    Presentation p = entry("Heis3").pres;
    NuPresentation np = build_nu(p);
    CHECK(np.base_gens == 3);
    CHECK(np.pres.generators.size() == 6);
    CHECK(np.pres.generators[3] == "a'");
    // 2|R| + 2k^3 with |R| = 6, k = 3.
    CHECK(np.pres.relators.size() == 2 * 6 + 2 * 27);
}

TEST_CASE("cyclic groups realize with trivial squares") {
    const TensorRealization& r = realize_named("C3");
    CHECK(r.base.order() == 3);
    CHECK(r.nu.order() == 27);
    CHECK(r.T.order() == 3);
    CHECK(r.nabla.order() == 3);
    CHECK(wedge(r).order == 1);
    CHECK(multiplier(r).order == 1);
}

TEST_CASE("elementary abelian rank two") {
    const TensorRealization& r = realize_named("C3xC3");
    CHECK(r.nu.order() == 6561);
    CHECK(r.T.order() == 81);
    CHECK(subgroup_exponent(r.nu, r.T) == 3);
    CHECK(wedge(r).order == 3);
    CHECK(multiplier(r).order == 3);

    // Matches the Smith-form prediction exactly.
    AbelianSquares sq = abelian_squares(abelianization(r.schema.base));
    CHECK(Int(r.T.order()) == sq.tensor.order());
    CHECK(wedge(r).order == sq.wedge.order());
    CHECK(multiplier(r).order == sq.wedge.order());
    CHECK(wedge(r).exponent == sq.wedge.exponent());
    CHECK(sq.predicted_nu_order() == r.nu.order());
}

TEST_CASE("heisenberg group of order 27") {
    const TensorRealization& r = realize_named("Heis3");
    CHECK(r.base.order() == 27);
    CHECK(r.nu.order() == 531441);
    CHECK(r.T.order() == 729);
    CHECK(r.nabla.order() == 27);
    CHECK(wedge(r).order == 27);
    CHECK(wedge(r).exponent == 3);
    CHECK(multiplier(r).order == 9);
    CHECK(multiplier(r).exponent == 3);
    CHECK(subgroup_exponent(r.nu, r.T) == 3);

    // pi strips hats onto the derived subgroup.
    CHECK(r.derived_base.order() == 3);
    for (Elem t : r.T.elems) CHECK(r.derived_base.contains(r.pi(t)));

    // The tensor pairing lands in T and respects the defining relation.
    Elem g = r.base.generator(0), h = r.base.generator(1);
    CHECK(r.T.contains(r.tensor(g, h)));
    CHECK(r.nu.order_of(r.tensor(g, h)) == 3);
}

TEST_CASE("modular group of order 27") {
    const TensorRealization& r = realize_named("Mod27");
    CHECK(r.nu.order() == 59049);
    CHECK(r.T.order() == 81);
    CHECK(wedge(r).order == 3);
    CHECK(wedge(r).exponent == 3);
    CHECK(multiplier(r).order == 1);
    CHECK(subgroup_exponent(r.nu, r.T) == 3);
}

TEST_CASE("dihedral and quaternion groups of order 8") {
    const TensorRealization& d4 = realize_named("D4");
    CHECK(d4.nu.order() == 2048);
    CHECK(d4.T.order() == 32);
    CHECK(multiplier(d4).order == 2);

    const TensorRealization& q8 = realize_named("Q8");
    CHECK(q8.nu.order() == 4096);
    CHECK(q8.T.order() == 64);
    CHECK(multiplier(q8).order == 1);
}

TEST_CASE("abelian oracle equivalence across the corpus") {
    for (const char* name : {"C2", "C3", "C9", "C81", "C2xC2", "C3xC3"}) {
        const TensorRealization& r = realize_named(name);
        AbelianSquares sq = abelian_squares(abelianization(r.schema.base));
        INFO("group " << name);
        CHECK(Int(r.T.order()) == sq.tensor.order());
        CHECK(subgroup_exponent(r.nu, r.T) == sq.tensor.exponent());
        CHECK(wedge(r).order == sq.wedge.order());
        CHECK(wedge(r).exponent == sq.wedge.exponent());
        CHECK(multiplier(r).order == sq.wedge.order());
        CHECK(multiplier(r).exponent == sq.wedge.exponent());
    }
}

TEST_CASE("order bookkeeping |nu| = |T| * |G|^2") {
    for (const char* name : {"C3", "C3xC3", "Heis3", "Mod27", "D4", "Q8"}) {
        const TensorRealization& r = realize_named(name);
        INFO("group " << name);
        CHECK(r.nu.order() == r.T.order() * r.base.order() * r.base.order());
    }
}

TEST_CASE("relative tensor of the derived subgroup") {
    const TensorRealization& r = realize_named("Heis3");
    GroupWord c = GroupWord::gen(2);
    Subgroup rel = relative_tensor(r, std::vector<GroupWord>{c});
    CHECK(rel.order() == 9);
    CHECK(subgroup_exponent(r.nu, rel) == 3);
    CHECK(is_subset(rel, r.T));

    // Same subgroup given as base elements.
    Subgroup derived = r.derived_base;
    Subgroup rel2 = relative_tensor(r, derived);
    CHECK(rel2.elems == rel.elems);

    // The whole group recovers T; the trivial subgroup gives 1.
    CHECK(relative_tensor(r, whole_group(r.base)).elems == r.T.elems);
    CHECK(relative_tensor(r, trivial_subgroup(r.base)).is_trivial());

    QuotientStats rw = relative_wedge(r, derived);
    CHECK(rw.order == 3);
    CHECK(rw.exponent == 3);

    // Non-normal subgroups are rejected.
    Subgroup slanted = subgroup_closure(r.base, {r.base.generator(0)});
    CHECK_THROWS_AS(relative_tensor(r, slanted), std::invalid_argument);
}

TEST_CASE("crossed module relations hold in realized groups") {
    for (const char* name : {"C3xC3", "Heis3", "D4"}) {
        const TensorRealization& r = realize_named(name);
        VerificationReport rep = crossed_module_audit(r, 200, 7);
        INFO("group " << name);
        CHECK(rep.all_equal);
        CHECK_FALSE(rep.instances.empty());
    }
}

TEST_CASE("quotient presentations feed back into realization") {
    const TensorRealization& r = realize_named("Heis3");
    Presentation q = present_quotient(r.base, r.schema.base, center(r.base), "Heis3_mod_Z");
    AbelianInvariants inv = abelianization(q);
    CHECK(inv.factors == std::vector<Int>{Int(3), Int(3)});

    TensorRealization rq = realize(q);
    CHECK(rq.base.order() == 9);
    CHECK(rq.nu.order() == 6561);

    // Quotient by a non-normal subgroup is rejected.
    Subgroup slanted = subgroup_closure(r.base, {r.base.generator(0)});
    CHECK_THROWS_AS(present_quotient(r.base, r.schema.base, slanted, "bad"),
                    std::invalid_argument);
}

TEST_CASE("realization records carry the headline numbers") {
    const TensorRealization& r = realize_named("Heis3");
    nlohmann::ordered_json rec = realization_record(r);
    CHECK(rec["group"] == "Heis3");
    CHECK(rec["|G|"] == 27);
    CHECK(rec["|GxG|"] == 729);
    CHECK(rec["|G^G|"] == 27);
    CHECK(rec["|M|"] == 9);
    CHECK(rec["e(M)"] == 3);
    CHECK(rec["flags"]["|nabla|"] == 27);
}
