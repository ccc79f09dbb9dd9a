// Built-in identity scripts: every commutator, tensor and wedge law the
// workbench checks, as DSL text plus the modes it runs under.  Wedge and
// tensor statements run concretely inside realized nu(G); pure-commutator
// statements (including the kappa-images of the wedge laws) also run in the
// free nilpotent engine and against the unitriangular matrix oracle.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wedgelab/identity.hpp"

namespace wedgelab {

struct ScriptSpec {
    std::string id;      // equals the name inside the DSL text
    std::string family;  // coverage-gate key
    std::string dsl;
    bool symbolic = false;
    bool oracle = false;
    bool concrete = false;
    // Most scripts assert equality; negative controls pin known-bad variants.
    bool expect_equal = true;
    // Exact specialization evaluated by the matrix oracle when the main form
    // is a mod-subgroup statement the oracle cannot express.
    std::string oracle_dsl;
    // Values substituted for n in concrete runs: "exponent" walks 1..e(G);
    // "exponent_log" uses the single n with e(G) = p^n.
    std::string n_policy = "exponent";
    // Pinned variable domains for concrete runs, overriding the weight rule:
    // "gen:<name>" cyclic subgroup, "gamma:<k>", "agemo:<i>", "derived".
    std::vector<std::pair<std::string, std::string>> var_domains;
    // Restrict concrete runs to one corpus group or tag; empty = all.
    std::string group_filter;

    IdentityScript parse() const { return parse_identity(dsl); }
};

const std::vector<ScriptSpec>& builtin_scripts();
const ScriptSpec* script_find(const std::string& id);

// Free generators verify_symbolic needs for a script (2 per constrained var).
int symbolic_rank(const IdentityScript& id);

// Families with the script counts the coverage gate demands.
const std::vector<std::pair<std::string, int>>& required_families();

}  // namespace wedgelab
