// Normal forms in the free nilpotent group of class c on k generators:
// exponent vectors over the Hall basis, with exact collection and arithmetic.
#pragma once

#include <string>
#include <vector>

#include "wedgelab/hall.hpp"
#include "wedgelab/words.hpp"

namespace wedgelab {

struct NilpotentElement {
    int rank = 0, klass = 0;  // identifies the (deterministic) Hall basis
    std::vector<Int> exps;    // one exponent per basis entry

    bool operator==(const NilpotentElement&) const = default;
    bool is_identity() const {
        for (const auto& e : exps)
            if (e != 0) return false;
        return true;
    }
};

// Unique normal form of the word's image in the free nilpotent quotient.
NilpotentElement collect(const GroupWord& w, const HallBasis& basis);

NilpotentElement nf_identity(const HallBasis& basis);
NilpotentElement nf_multiply(const NilpotentElement& a, const NilpotentElement& b);
NilpotentElement nf_inverse(const NilpotentElement& a);
NilpotentElement nf_power(const NilpotentElement& a, const Int& n);
// Right-normed: nf_commutator({a,b,c}) = [a,[b,c]].
NilpotentElement nf_commutator(const std::vector<NilpotentElement>& parts);

std::string nf_format(const NilpotentElement& e, const HallBasis& basis);

}  // namespace wedgelab
