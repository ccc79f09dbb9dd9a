// Independent predictions for abelian groups via integer Smith normal form.
// For abelian A the tensor square built in nu.hpp collapses to the ordinary
// Z-module tensor A (x) A, and both the exterior square and the multiplier
// collapse to Lambda^2 A, so their orders and exponents follow from the
// invariant factors alone.  Realizations are cross-checked against these.
#pragma once

#include <vector>

#include "wedgelab/ints.hpp"
#include "wedgelab/presentation.hpp"

namespace wedgelab {

// Cyclic decomposition d_1 | d_2 | ... | d_k with every d_i > 1.
struct AbelianInvariants {
    std::vector<Int> factors;

    Int order() const;     // product of the factors (1 when the list is empty)
    Int exponent() const;  // largest factor, i.e. lcm
};

// Smith normal form of an integer matrix, returned as the full diagonal
// (zeros included).  Rows are relator exponent vectors; cols index generators.
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m, size_t ncols);

// Invariant factors of the abelianization of a presented group, from the
// exponent-sum matrix of its relators.  Throws std::invalid_argument when the
// abelianization is infinite (fewer nonzero diagonal entries than generators).
AbelianInvariants abelianization(const Presentation& p);

struct AbelianSquares {
    AbelianInvariants group;   // A itself
    AbelianInvariants tensor;  // A (x) A, one C_gcd(di,dj) per ordered pair
    AbelianInvariants wedge;   // Lambda^2 A, one C_gcd(di,dj) per unordered pair i<j

    // Coset count a full nu-realization of A would need; the desk-scale gate.
    Int predicted_nu_order() const;
};

AbelianSquares abelian_squares(const AbelianInvariants& a);

}  // namespace wedgelab
