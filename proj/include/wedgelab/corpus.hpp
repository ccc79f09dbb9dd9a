// Built-in corpus of small p-groups the theorem sweeps run over: cyclic and
// elementary abelian groups, Heisenberg and modular groups of order p^3, an
// order-81 class-3 wreath product, and the even-order groups the factor-2
// lemmas need.  Entries carry audited expectations (order, class, exponent)
// and a realizability flag from the desk-scale rule |G(x)G| * |G|^2 <= 2e6.
#pragma once

#include <vector>

#include "wedgelab/presentation.hpp"

namespace wedgelab {

struct CorpusEntry {
    std::string name;
    Presentation pres;
    Int prime;
    int64_t expected_order = 0;
    int expected_class = 0;
    Int expected_exponent = 0;
    std::vector<std::string> tags;
    bool realizable = false;  // full nu(G) realization within the coset budget

    bool has_tag(const std::string& t) const;
};

const std::vector<CorpusEntry>& builtin_corpus();

// Null when no entry has that name.
const CorpusEntry* corpus_find(const std::string& name);

}  // namespace wedgelab
