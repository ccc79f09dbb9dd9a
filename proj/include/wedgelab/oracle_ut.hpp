// Independent cross-check for pure-commutator identities: evaluation on
// random tuples from the group of 6x6 upper unitriangular matrices over
// Z/9, which is nilpotent of class exactly 5.
#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "wedgelab/identity.hpp"
#include "wedgelab/report.hpp"

namespace wedgelab {

class UTMatrix {
  public:
    UTMatrix();  // identity

    static UTMatrix random(std::mt19937_64& rng);

    UTMatrix operator*(const UTMatrix& o) const;
    UTMatrix inverse() const;
    UTMatrix pow(const Int& e) const;
    bool operator==(const UTMatrix& o) const = default;

    int at(int r, int c) const { return a_[static_cast<size_t>(6 * r + c)]; }

  private:
    std::array<int, 36> a_;  // row-major, entries reduced mod 9
};

UTMatrix ut_commutator(const UTMatrix& a, const UTMatrix& b);

// Evaluates the identity on random matrix tuples; weight constraints are
// realized by right-normed commutators of fresh random matrices, which land
// in the corresponding lower-central term.  Scripts with tensor, wedge or
// modsq parts are rejected (they need a specialized form or a finite group).
VerificationReport verify_oracle(const IdentityScript& id, int tuples, uint64_t seed,
                                 std::vector<Int> n_range = {});

}  // namespace wedgelab
