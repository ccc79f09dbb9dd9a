#include "wedgelab/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wedgelab {

const char* tri_name(Tri t) {
    switch (t) {
        case Tri::no: return "no";
        case Tri::yes: return "yes";
        default: return "undetermined";
    }
}

const Subgroup& StructureReport::gamma(int m) const {
    if (m < 1) throw std::invalid_argument("gamma index must be >= 1");
    size_t i = std::min<size_t>(static_cast<size_t>(m) - 1, lcs.size() - 1);
    return lcs[i];
}

const Subgroup& StructureReport::agemo_at(int i) const {
    if (i < 0) throw std::invalid_argument("agemo index must be >= 0");
    size_t j = std::min<size_t>(static_cast<size_t>(i), agemo.size() - 1);
    return agemo[j];
}

bool ConditionFlags::condition1_any() const {
    return std::find(condition1.begin(), condition1.end(), true) != condition1.end();
}

StructureReport analyze(const RegularRep& r, const Int& p, int64_t max_members) {
    Int n = r.order();
    while (n % p == 0) n /= p;
    if (n != 1)
        throw std::invalid_argument("group of order " + Int(r.order()).str() +
                                    " is not a " + p.str() + "-group");

    StructureReport rep;
    rep.order = r.order();
    rep.prime = p;
    rep.exponent = r.exponent();
    rep.lcs = lower_central_series(r, max_members);
    rep.ds = derived_series(r, max_members);
    rep.klass = static_cast<int>(rep.lcs.size()) - 1;
    rep.derived_length = static_cast<int>(rep.ds.size()) - 1;
    rep.zentrum = center(r);
    rep.center_order = rep.zentrum.order();
    for (const Subgroup& s : rep.lcs) rep.lcs_orders.push_back(s.order());
    for (const Subgroup& s : rep.ds) rep.ds_orders.push_back(s.order());

    Subgroup whole = whole_group(r);
    Int q = 1;
    for (;;) {
        Subgroup a = power_subgroup(r, whole, q, max_members);
        rep.agemo_orders.push_back(a.order());
        bool done = a.is_trivial();
        rep.agemo.push_back(std::move(a));
        if (done) break;
        q *= p;
    }
    return rep;
}

std::vector<Elem> power_set(const RegularRep& r, const Subgroup& s, const Int& e) {
    std::vector<Elem> out;
    out.reserve(s.elems.size());
    for (Elem x : s.elems) out.push_back(r.pow(x, e));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool subgroup_is_powerful(const RegularRep& r, const Subgroup& s, const Int& p,
                          int64_t max_members) {
    Subgroup der = derived_subgroup(r, s, max_members);
    Int q = (p == 2) ? Int(4) : p;
    Subgroup pw = power_subgroup(r, s, q, max_members);
    return is_subset(der, pw);
}

namespace {

// Hall's criterion for one ordered pair: (ab)^p = a^p b^p modulo the subgroup
// generated by pth powers of [H,H], H = <a,b>.
bool regular_pair(const RegularRep& r, const Int& p, const Subgroup& modsub, Elem a, Elem b) {
    Elem lhs = r.pow(r.mul(a, b), p);
    Elem rhs = r.mul(r.pow(a, p), r.pow(b, p));
    return modsub.contains(r.mul(r.inv(rhs), lhs));
}

}  // namespace

ConditionFlags detect_conditions(const RegularRep& r, const Int& p, const StructureReport& rep,
                                 int64_t regular_pair_bound) {
    ConditionFlags f;
    const Subgroup& gp = rep.agemo_at(1);
    int64_t pl = p.convert_to<int64_t>();

    Subgroup gq = (p == 2) ? power_subgroup(r, whole_group(r), 4) : gp;
    f.powerful = is_subset(rep.gamma(2), gq);
    f.potent = (p == 2) ? f.powerful
                        : is_subset(rep.gamma(static_cast<int>(pl) - 1), gp);
    for (int64_t m = 2; m <= pl - 1; ++m)
        f.condition1.push_back(is_subset(rep.gamma(static_cast<int>(m)), gp));
    f.condition2 = is_subset(rep.gamma(static_cast<int>(pl)), rep.agemo_at(2));

    f.metabelian = rep.derived_length <= 2;
    while (!is_subset(rep.agemo_at(f.least_central_power), rep.zentrum))
        ++f.least_central_power;
    f.p_central = f.least_central_power <= 1;
    f.pth_power_closed = power_set(r, whole_group(r), p) == gp.elems;

    if (r.order() > regular_pair_bound) {
        f.regular = Tri::undetermined;
        return f;
    }
    // Distinct pairs often generate the same subgroup, so the pth-power
    // modulus is cached per element set.
    std::map<std::vector<Elem>, Subgroup> modulus_of;
    f.regular = Tri::yes;
    for (Elem a = 0; a < r.order() && f.regular == Tri::yes; ++a) {
        for (Elem b = a; b < r.order(); ++b) {
            Subgroup h = subgroup_closure(r, {a, b});
            auto it = modulus_of.find(h.elems);
            if (it == modulus_of.end()) {
                Subgroup der = derived_subgroup(r, h);
                Subgroup mod = subgroup_closure(r, power_set(r, der, p));
                it = modulus_of.emplace(h.elems, std::move(mod)).first;
            }
            if (!regular_pair(r, p, it->second, a, b) ||
                !regular_pair(r, p, it->second, b, a)) {
                f.regular = Tri::no;
                break;
            }
        }
    }
    return f;
}

nlohmann::ordered_json structure_record(const std::string& name, const StructureReport& rep,
                                        const ConditionFlags& flags) {
    nlohmann::ordered_json rec;
    rec["group"] = name;
    rec["|G|"] = rep.order;
    rec["p"] = rep.prime.convert_to<int64_t>();
    rec["e(G)"] = rep.exponent.convert_to<int64_t>();
    rec["class"] = rep.klass;
    rec["derived_length"] = rep.derived_length;
    rec["|Z(G)|"] = rep.center_order;
    rec["lower_central"] = rep.lcs_orders;
    rec["derived_series"] = rep.ds_orders;
    rec["agemo"] = rep.agemo_orders;
    nlohmann::ordered_json fl;
    fl["powerful"] = flags.powerful;
    fl["potent"] = flags.potent;
    fl["condition1"] = flags.condition1_any();
    fl["condition2"] = flags.condition2;
    fl["regular"] = tri_name(flags.regular);
    fl["p_central"] = flags.p_central;
    fl["least_central_power"] = flags.least_central_power;
    fl["metabelian"] = flags.metabelian;
    fl["pth_power_closed"] = flags.pth_power_closed;
    rec["flags"] = std::move(fl);
    return rec;
}

}  // namespace wedgelab
