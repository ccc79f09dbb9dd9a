#include <catch2/catch_amalgamated.hpp>

#include "wedgelab/corpus.hpp"
#include "wedgelab/structure.hpp"

using namespace wedgelab;

namespace {

RegularRep rep_of(const std::string& name) {
    const CorpusEntry* e = corpus_find(name);
    REQUIRE(e != nullptr);
    CosetTable t = enumerate(e->pres, {});
    return RegularRep(std::move(t));
}

}  // namespace

TEST_CASE("heisenberg structure report") {
    RegularRep r = rep_of("Heis3");
    StructureReport rep = analyze(r, 3);
    CHECK(rep.order == 27);
    CHECK(rep.exponent == 3);
    CHECK(rep.klass == 2);
    CHECK(rep.derived_length == 2);
    CHECK(rep.center_order == 3);
    CHECK(rep.lcs_orders == std::vector<int64_t>{27, 3, 1});
    CHECK(rep.ds_orders == std::vector<int64_t>{27, 3, 1});
    // Exponent 3 kills the first agemo.
    CHECK(rep.agemo_orders == std::vector<int64_t>{27, 1});
    CHECK(rep.gamma(1).order() == 27);
    CHECK(rep.gamma(2).order() == 3);
    CHECK(rep.gamma(5).order() == 1);
    CHECK(rep.agemo_at(0).order() == 27);
    CHECK(rep.agemo_at(3).order() == 1);

    ConditionFlags f = detect_conditions(r, 3, rep);
    CHECK_FALSE(f.powerful);  // gamma_2 = C3 but G^3 = 1
    CHECK(f.regular == Tri::yes);
    CHECK(f.p_central);  // G^3 = 1 <= Z
    CHECK(f.metabelian);
    CHECK(f.least_central_power == 1);
    CHECK(f.pth_power_closed);
    CHECK(f.condition2);  // gamma_3 = 1
}

TEST_CASE("modular group structure report") {
    RegularRep r = rep_of("Mod27");
    StructureReport rep = analyze(r, 3);
    CHECK(rep.order == 27);
    CHECK(rep.exponent == 9);
    CHECK(rep.klass == 2);
    CHECK(rep.center_order == 3);
    CHECK(rep.agemo_orders == std::vector<int64_t>{27, 3, 1});

    ConditionFlags f = detect_conditions(r, 3, rep);
    CHECK(f.powerful);  // [a,b] = a^3 lies in G^3
    CHECK(f.potent);
    CHECK(f.regular == Tri::yes);
    CHECK(f.p_central);  // G^3 = <a^3> = Z(G)
    CHECK(f.metabelian);
    CHECK(f.pth_power_closed);
}

TEST_CASE("wreath product is irregular of class three") {
    RegularRep r = rep_of("W81");
    StructureReport rep = analyze(r, 3);
    CHECK(rep.order == 81);
    CHECK(rep.exponent == 9);
    CHECK(rep.klass == 3);
    CHECK(rep.derived_length == 2);
    CHECK(rep.lcs_orders == std::vector<int64_t>{81, 9, 3, 1});

    ConditionFlags f = detect_conditions(r, 3, rep);
    CHECK(f.regular == Tri::no);
    CHECK_FALSE(f.powerful);

    // Raising the pair bound past |G| doesn't change the verdict, and
    // shrinking it below |G| withholds one.
    CHECK(detect_conditions(r, 3, rep, 100000).regular == Tri::no);
    CHECK(detect_conditions(r, 3, rep, 27).regular == Tri::undetermined);
}

TEST_CASE("abelian groups are boring on every flag") {
    RegularRep r = rep_of("C9");
    StructureReport rep = analyze(r, 3);
    CHECK(rep.klass == 1);
    CHECK(rep.derived_length == 1);
    CHECK(rep.center_order == 9);
    CHECK(rep.agemo_orders == std::vector<int64_t>{9, 3, 1});

    ConditionFlags f = detect_conditions(r, 3, rep);
    CHECK(f.powerful);
    CHECK(f.potent);
    CHECK(f.regular == Tri::yes);
    CHECK(f.p_central);
    CHECK(f.metabelian);
    CHECK(f.pth_power_closed);
    CHECK(f.least_central_power == 0);
    CHECK(f.n_central(0));
}

TEST_CASE("two-group flags use the p = 2 conventions") {
    RegularRep r = rep_of("D4");
    StructureReport rep = analyze(r, 2);
    CHECK(rep.klass == 2);
    CHECK(rep.exponent == 4);

    ConditionFlags f = detect_conditions(r, 2, rep);
    // gamma_2(D4) = C2 but G^4 = 1, so D4 is not powerful at p = 2.
    CHECK_FALSE(f.powerful);
    CHECK(f.p_central);  // squares land in the center
    CHECK(f.metabelian);

    RegularRep q = rep_of("Q8");
    StructureReport qrep = analyze(q, 2);
    ConditionFlags qf = detect_conditions(q, 2, qrep);
    CHECK(qrep.center_order == 2);
    CHECK(qf.p_central);
}

TEST_CASE("condition1 slots cover 2 <= m <= p-1") {
    RegularRep r = rep_of("C5xC5");
    StructureReport rep = analyze(r, 5);
    ConditionFlags f = detect_conditions(r, 5, rep);
    // Abelian: every gamma_m (m >= 2) is trivial, so all slots hold.
    REQUIRE(f.condition1.size() == 3);
    CHECK(f.condition1_any());

    RegularRep h = rep_of("Heis3");
    ConditionFlags hf = detect_conditions(h, 3, analyze(h, 3));
    // p = 3 leaves exactly one slot (m = 2), and gamma_2 = C3 is not inside
    // G^3 = 1.
    REQUIRE(hf.condition1.size() == 1);
    CHECK_FALSE(hf.condition1_any());
}

TEST_CASE("power sets versus agemo subgroups") {
    RegularRep r = rep_of("Heis3");
    StructureReport rep = analyze(r, 3);
    std::vector<Elem> cubes = power_set(r, rep.gamma(1), 3);
    CHECK(cubes == std::vector<Elem>{0});

    RegularRep m = rep_of("Mod27");
    StructureReport mrep = analyze(m, 3);
    std::vector<Elem> mcubes = power_set(m, mrep.gamma(1), 3);
    CHECK(mcubes.size() == 3);
    CHECK(mcubes == mrep.agemo_at(1).elems);

    CHECK(subgroup_is_powerful(m, mrep.gamma(1), 3));
    CHECK_FALSE(subgroup_is_powerful(r, rep.gamma(1), 3));
    // Cyclic subgroups are always powerful.
    Subgroup cyc = subgroup_closure(r, {r.generator(0)});
    CHECK(subgroup_is_powerful(r, cyc, 3));
}

TEST_CASE("analyze rejects the wrong prime") {
    RegularRep r = rep_of("C9");
    CHECK_THROWS_AS(analyze(r, 2), std::invalid_argument);
}

TEST_CASE("structure records are self-describing") {
    RegularRep r = rep_of("Mod27");
    StructureReport rep = analyze(r, 3);
    ConditionFlags f = detect_conditions(r, 3, rep);
    nlohmann::ordered_json rec = structure_record("Mod27", rep, f);
    CHECK(rec["group"] == "Mod27");
    CHECK(rec["|G|"] == 27);
    CHECK(rec["class"] == 2);
    CHECK(rec["e(G)"] == 9);
    CHECK(rec["flags"]["powerful"] == true);
    CHECK(rec["flags"]["regular"] == "yes");
}
