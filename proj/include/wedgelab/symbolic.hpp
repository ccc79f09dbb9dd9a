// Symbolic verification of pure-commutator identities in the free nilpotent
// group: variables become distinct free generators (weight-constrained ones
// become basic commutators of fresh generators at the stated weight and one
// higher), both sides are expanded and compared exactly.
#pragma once

#include <vector>

#include "wedgelab/identity.hpp"
#include "wedgelab/report.hpp"

namespace wedgelab {

// k is the number of free generators available for substitution; c is the
// nilpotency class of the verification context.  n_range lists the values
// substituted for the symbolic integer n; when empty and the script uses n,
// 1..c+2 is used (agreement there pins exponents polynomial in n of degree
// at most c).  Throws std::invalid_argument when the script contains tensor
// or wedge terms or when k is too small for the variable substitutions.
VerificationReport verify_symbolic(const IdentityScript& id, int k, int c,
                                   std::vector<Int> n_range = {});

}  // namespace wedgelab
