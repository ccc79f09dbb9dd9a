// Concrete group arithmetic on a completed coset table over the trivial
// subgroup.  Elements are coset indices; products walk the BFS word of the
// right factor through the table, so nothing beyond the table itself is
// materialized.  Subgroups are explicit element sets with a membership
// bitmap, which keeps closure sweeps and exponent scans simple and exact.
#pragma once

#include <cstdint>
#include <vector>

#include "wedgelab/coset.hpp"
#include "wedgelab/ints.hpp"
#include "wedgelab/words.hpp"

namespace wedgelab {

using Elem = int32_t;

class MemberLimitExceeded : public LimitExceeded {
  public:
    explicit MemberLimitExceeded(const std::string& detail)
        : LimitExceeded("members", detail) {}
};

// Default ceiling for closure sweeps; callers pass their own bound through
// the CLI flag when they need more room.
inline constexpr int64_t kDefaultMemberBound = 200000;

class RegularRep {
  public:
    // The table must be complete over the trivial subgroup (one coset per
    // group element).  Audit it before handing it over; this constructor
    // only rebuilds the BFS spanning tree.
    explicit RegularRep(CosetTable table);

    int64_t order() const { return static_cast<int64_t>(table_.size()); }
    int gens() const { return table_.gens(); }
    Elem id() const { return 0; }
    Elem generator(int g) const { return table_.step(0, g, false); }
    Elem apply_gen(Elem x, int g, bool inverse) const { return table_.step(x, g, inverse); }

    Elem mul(Elem x, Elem y) const;
    Elem inv(Elem x) const;
    // ^g x = g x g^-1.
    Elem conj(Elem g, Elem x) const;
    Elem comm(Elem a, Elem b) const;
    // Right-normed: comm({a,b,c}) = [a,[b,c]].
    Elem comm(const std::vector<Elem>& parts) const;
    Elem pow(Elem x, const Int& e) const;
    int64_t order_of(Elem x) const;
    // lcm of all element orders; full sweep, meant for base groups.
    Int exponent() const;

    Elem eval_word(const GroupWord& w) const;
    // Reduced word along the BFS tree path from the identity.
    GroupWord word_of(Elem x) const;
    // The same path as table columns (2g for x_g, 2g+1 for its inverse).
    std::vector<int> path_cols(Elem x) const;

    const CosetTable& table() const { return table_; }

  private:
    CosetTable table_;
    std::vector<int32_t> parent_;
    std::vector<int16_t> parent_col_;
};

struct Subgroup {
    std::vector<Elem> elems;   // sorted ascending, always contains 0
    std::vector<Elem> gens;    // generating set the closure was built from
    std::vector<char> member;  // indexed by group element

    bool contains(Elem x) const { return member[static_cast<size_t>(x)] != 0; }
    int64_t order() const { return static_cast<int64_t>(elems.size()); }
    bool is_trivial() const { return elems.size() == 1; }
};

Subgroup whole_group(const RegularRep& r);
Subgroup trivial_subgroup(const RegularRep& r);

// Breadth-first closure under right multiplication by the given generators.
// Throws MemberLimitExceeded past max_members.
Subgroup subgroup_closure(const RegularRep& r, std::vector<Elem> gens,
                          int64_t max_members = kDefaultMemberBound);
// Smallest normal subgroup of the whole group containing the seeds.
Subgroup normal_closure(const RegularRep& r, std::vector<Elem> seeds,
                        int64_t max_members = kDefaultMemberBound);

bool is_subset(const Subgroup& inner, const Subgroup& outer);
// ^g S = S for every group generator g.
bool is_normal(const RegularRep& r, const Subgroup& s);
Subgroup intersection(const RegularRep& r, const Subgroup& a, const Subgroup& b);

// Generated by all pairwise commutators of elements of s.  Quadratic in
// |s|; fine for the base groups this project enumerates.
Subgroup derived_subgroup(const RegularRep& r, const Subgroup& s,
                          int64_t max_members = kDefaultMemberBound);
// Agemo: generated by x^e over all x in s.
Subgroup power_subgroup(const RegularRep& r, const Subgroup& s, const Int& e,
                        int64_t max_members = kDefaultMemberBound);
Subgroup center(const RegularRep& r);

// gamma_1 = G down to the first trivial term (inclusive).
std::vector<Subgroup> lower_central_series(const RegularRep& r,
                                           int64_t max_members = kDefaultMemberBound);
// G = G^(0) down to the first trivial term (inclusive).
std::vector<Subgroup> derived_series(const RegularRep& r,
                                     int64_t max_members = kDefaultMemberBound);

Int subgroup_exponent(const RegularRep& r, const Subgroup& s);
// Exponent of s/n.  Requires n <= s and n normal in s (checked).
Int quotient_exponent(const RegularRep& r, const Subgroup& s, const Subgroup& n);

}  // namespace wedgelab
