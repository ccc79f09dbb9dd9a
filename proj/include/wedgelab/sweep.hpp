// Theorem sweeps: each exponent-divisibility statement is checked across the
// corpus, with hypotheses detected from structure analysis and the measured
// quantities taken from realized tensor squares (or the abelian oracle when a
// realization is out of reach).  Every row carries a verdict; failures must
// carry a witness and resource-limited rows name the exceeded bound.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wedgelab/corpus.hpp"
#include "wedgelab/coset.hpp"
#include "wedgelab/group.hpp"

namespace wedgelab {

struct SweepOptions {
    EnumLimits limits;
    int64_t max_members = kDefaultMemberBound;
    std::string cache_dir;
    uint64_t seed = 0;  // recorded in the output header; sweeps are exhaustive
};

struct CheckResult {
    std::string theorem;
    std::string group;
    std::string subject;  // sub-object (a subgroup, a bound item); may be empty
    nlohmann::ordered_json hypotheses;
    nlohmann::ordered_json measured;
    std::string verdict;  // "holds" | "fails" | "inapplicable" | "undetermined"
    std::string witness;  // mandatory when verdict is "fails"
    std::string reason;   // names the failed hypothesis or exceeded resource
};

const std::vector<std::string>& sweep_ids();

// theorem may be a single id or "all".  Throws std::invalid_argument on an
// unknown id.  Results are ordered by (theorem, corpus position, subject).
std::vector<CheckResult> run_sweep(const std::string& theorem,
                                   const std::vector<CorpusEntry>& corpus,
                                   const SweepOptions& opt = {});

nlohmann::ordered_json checks_to_json(const std::vector<CheckResult>& rows,
                                      const SweepOptions& opt);

}  // namespace wedgelab
