// Concrete verification: evaluate an identity script on tuples drawn from a
// realized group.  Group terms live in G, tensor and wedge terms in nu(G);
// wedge equalities are tested modulo the diagonal subgroup nabla.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wedgelab/nu.hpp"
#include "wedgelab/scripts.hpp"

namespace wedgelab {

struct ConcreteOptions {
    // Tuples are enumerated exhaustively when the domain product stays under
    // the tuple limit and the group is small; otherwise `samples` random
    // tuples are drawn, deterministically from the group, script and seed.
    int64_t exhaustive_tuple_limit = 8192;
    int64_t exhaustive_order_limit = 27;
    int samples = 500;
    uint64_t seed = 0;
    std::vector<Int> n_values;  // overrides the script's n policy when set
};

struct ConcreteOutcome {
    bool applicable = false;
    std::string reason;  // why the script was skipped, when inapplicable
    bool exhaustive = false;
    int64_t tuples_per_n = 0;
    VerificationReport report;
};

ConcreteOutcome run_concrete(const ScriptSpec& spec, const TensorRealization& real,
                             const ConcreteOptions& opt = {});

}  // namespace wedgelab
