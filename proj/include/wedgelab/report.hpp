// Shared result types for identity verification runs (symbolic, matrix
// oracle, and finite-group evaluation all produce the same shape).
#pragma once

#include <string>
#include <vector>

namespace wedgelab {

struct InstanceResult {
    std::string description;  // instantiation summary, e.g. "w(g)=2 w(h)=1 n=3"
    bool equal = false;
    // Differing normal-form coordinates (or raw monomial diffs when the
    // basis would be too large to extract); empty when equal.
    std::vector<std::string> differing;
};

struct VerificationReport {
    std::string identity;
    std::string mode;  // "symbolic", "oracle", or "concrete"
    bool all_equal = true;
    std::vector<InstanceResult> instances;

    void record(InstanceResult r) {
        if (!r.equal) all_equal = false;
        instances.push_back(std::move(r));
    }
    size_t failure_count() const {
        size_t c = 0;
        for (const auto& i : instances) c += i.equal ? 0 : 1;
        return c;
    }
};

}  // namespace wedgelab
