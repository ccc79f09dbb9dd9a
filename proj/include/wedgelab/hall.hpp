// Hall basis of basic commutators for the free nilpotent group of class c
// on k generators.  Entries are graded by weight; counts per weight are the
// Witt numbers.
#pragma once

#include <string>
#include <vector>

#include "wedgelab/ints.hpp"

namespace wedgelab {

struct BasisEntry {
    int weight = 1;
    // weight 1: gen >= 0; weight > 1: [left, right] with left > right and,
    // when left = [x,y], y <= right (indices into the entry list).
    int gen = -1;
    int left = -1, right = -1;
    std::vector<int> content;  // generator multiplicities
};

class HallBasis {
  public:
    HallBasis(int rank, int klass);

    int rank() const { return rank_; }
    int klass() const { return klass_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const BasisEntry& entry(int i) const { return entries_.at(static_cast<size_t>(i)); }
    const std::vector<BasisEntry>& entries() const { return entries_; }

    // Half-open index range of the weight-w entries.
    int weight_begin(int w) const { return weight_begin_.at(static_cast<size_t>(w)); }
    int weight_end(int w) const { return weight_begin_.at(static_cast<size_t>(w) + 1); }
    int count_of_weight(int w) const { return weight_end(w) - weight_begin(w); }

    std::string entry_name(int i, const std::vector<std::string>& gen_names) const;
    std::string entry_name(int i) const;  // default names x1..xk

  private:
    int rank_, klass_;
    std::vector<BasisEntry> entries_;
    std::vector<int> weight_begin_;  // size klass_+2
};

HallBasis build_hall_basis(int k, int c);

// Witt number: dimension of the degree-w component of the free Lie algebra
// on k generators; independent count the basis construction is tested against.
Int witt_number(int k, int w);

}  // namespace wedgelab
