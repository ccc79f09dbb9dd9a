// The nu-construction: two copies of G (the second one "hatted", spelled
// with a trailing apostrophe) plus commutation relators, so that the
// commutator subgroup [G, G-hat] realizes the nonabelian tensor square.
// Everything downstream (exterior square, multiplier, relative tensors)
// is subgroup arithmetic inside this one finite group.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wedgelab/group.hpp"
#include "wedgelab/presentation.hpp"
#include "wedgelab/report.hpp"

#include "json.hpp"

namespace wedgelab {

struct NuPresentation {
    Presentation base;
    Presentation pres;  // generators: plain copy first, hatted copy after
    int base_gens = 0;
};

// Relators: both copies of the base relators, then for every ordered
// generator triple (z, x, y) the pair  ^z[x,y'] = [^z x, (^z y)']  and
// ^z'[x,y'] = [^z x, (^z y)'].  Total 2|R| + 2k^3.
NuPresentation build_nu(const Presentation& p);

struct QuotientStats {
    Int order;
    Int exponent;
};

struct TensorRealization {
    NuPresentation schema;
    RegularRep base;  // G itself
    RegularRep nu;    // nu(G)
    int k = 0;        // base generator count

    std::vector<Elem> plain_of;  // base element -> its plain copy in nu
    std::vector<Elem> hat_of;    // base element -> its hatted copy

    Subgroup T;                  // [G, G-hat], the tensor square
    Subgroup nabla;              // generated by [g, g-hat] over every g
    Subgroup kappa_kernel_in_T;  // preimage of the multiplier
    Subgroup derived_base;       // G', computed independently in G

    // Strips hats: both copies map onto the same base generators.
    Elem pi(Elem t) const;
    // g (x) h realized as [plain g, hatted h].
    Elem tensor(Elem g, Elem h) const;
};

// Enumerates G and nu(G), builds the subgroups and runs the construction
// audits (pi on relators, |nu| = |T|*|G|^2, nabla inside T, pi(T) = G').
// Audit failures throw logic_error; they mean the realization is unusable.
TensorRealization realize(const Presentation& p, const EnumLimits& limits = {},
                          const std::string& cache_dir = {},
                          EnumStrategy strategy = EnumStrategy::HLT,
                          int64_t max_members = kDefaultMemberBound);

QuotientStats wedge(const TensorRealization& real);
QuotientStats multiplier(const TensorRealization& real);

// [N, G-hat] for N given by generator words (must be normal in G).
Subgroup relative_tensor(const TensorRealization& real, const std::vector<GroupWord>& n_words,
                         int64_t max_members = kDefaultMemberBound);
Subgroup relative_tensor(const TensorRealization& real, const Subgroup& n_base,
                         int64_t max_members = kDefaultMemberBound);
// Image of N^G inside G^G: [N, G-hat] modulo its nabla-intersection.
QuotientStats relative_wedge(const TensorRealization& real, const Subgroup& n_base,
                             int64_t max_members = kDefaultMemberBound);

// Checks the realized crossed-module relations (inversion, conjugation
// and commutator rules for tensors, the Peiffer identity, and triviality
// of the G-action on the multiplier kernel).  Exhaustive when |G| <= 27,
// otherwise sample_size random tuples.
VerificationReport crossed_module_audit(const TensorRealization& real, int sample_size = 500,
                                        uint64_t seed = 0);

// Presentation of G/N: the base relators plus one relator word per element
// of N.  N must be normal.
Presentation present_quotient(const RegularRep& base, const Presentation& p, const Subgroup& n,
                              const std::string& label);

// {group, |G|, e(G), |G(x)G|, |G^G|, |M|, e(M), flags} summary record.
nlohmann::ordered_json realization_record(const TensorRealization& real);

}  // namespace wedgelab
