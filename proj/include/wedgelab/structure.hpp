// Structural invariants and hypothesis detectors on a finite p-group given by
// its regular representation: series, class, exponent, center, agemo chain,
// and the flags the exponent theorems condition on (powerful, potent,
// regular, p-central, metabelian, pth-power closure).
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wedgelab/group.hpp"
#include "wedgelab/ints.hpp"

namespace wedgelab {

// Three-valued flag for tests that refuse to guess past their cost bound.
enum class Tri { no, yes, undetermined };

const char* tri_name(Tri t);

struct StructureReport {
    int64_t order = 1;
    Int prime = 0;
    Int exponent = 1;
    int klass = 0;           // nilpotency class; 0 only for the trivial group
    int derived_length = 0;
    int64_t center_order = 1;
    std::vector<int64_t> lcs_orders;    // |gamma_1| .. |gamma_{c+1}| = 1
    std::vector<int64_t> ds_orders;     // |G^(0)| .. |G^(d)| = 1
    std::vector<int64_t> agemo_orders;  // |G^{p^i}|, i = 0 until the chain hits 1

    // The subgroups behind the numbers, kept for downstream theorem sweeps.
    std::vector<Subgroup> lcs;
    std::vector<Subgroup> ds;
    std::vector<Subgroup> agemo;
    Subgroup zentrum;

    // gamma_m(G) for any m >= 1; values past the computed chain stay trivial.
    const Subgroup& gamma(int m) const;
    // G^{p^i} for any i >= 0, with the same tail convention.
    const Subgroup& agemo_at(int i) const;
};

// Throws std::invalid_argument unless |G| is a power of p.
StructureReport analyze(const RegularRep& r, const Int& p,
                        int64_t max_members = kDefaultMemberBound);

struct ConditionFlags {
    bool powerful = false;  // gamma_2 <= G^p (odd p); gamma_2 <= G^4 when p = 2
    bool potent = false;    // gamma_{p-1} <= G^p (odd p); same as powerful when p = 2
    // condition1[m-2] holds gamma_m(G) <= G^p, one slot per 2 <= m <= p-1.
    std::vector<bool> condition1;
    bool condition2 = false;  // gamma_p(G) <= G^{p^2}
    Tri regular = Tri::undetermined;
    bool p_central = false;         // G^p <= Z(G)
    int least_central_power = 0;    // least n with G^{p^n} <= Z(G); 0 means abelian
    bool metabelian = false;        // derived length <= 2
    bool pth_power_closed = false;  // {g^p : g in G} is already a subgroup

    bool condition1_any() const;
    bool n_central(int n) const { return n >= least_central_power; }
};

// The regularity pair test runs exhaustively while |G| <= regular_pair_bound
// and reports undetermined beyond it; every other flag is always exact.
ConditionFlags detect_conditions(const RegularRep& r, const Int& p, const StructureReport& rep,
                                 int64_t regular_pair_bound = 243);

// Sorted set {x^e : x in s}, before closure.  Comparing it against the agemo
// subgroup decides pth-power closure.
std::vector<Elem> power_set(const RegularRep& r, const Subgroup& s, const Int& e);

// [S,S] <= S^p (S^4 when p = 2), evaluated inside the ambient group.
bool subgroup_is_powerful(const RegularRep& r, const Subgroup& s, const Int& p,
                          int64_t max_members = kDefaultMemberBound);

nlohmann::ordered_json structure_record(const std::string& name, const StructureReport& rep,
                                        const ConditionFlags& flags);

}  // namespace wedgelab
