// Normal-form engine shared by collect() and the nf_* operations: converts
// between truncated Magnus series and exponent vectors over the Hall basis.
// One engine per (rank, class) pair, with memoized per-entry series, Lie
// polynomials, and exact linear solvers per (weight, content) class.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "series.hpp"
#include "wedgelab/hall.hpp"
#include "wedgelab/ints.hpp"
#include "wedgelab/nilpotent.hpp"

namespace wedgelab::detail {

class NfEngine {
  public:
    NfEngine(int rank, int klass);

    const HallBasis& basis() const { return basis_; }

    // Extract normal-form exponents by weight peeling; throws when the
    // series is not the image of a group element (internal consistency).
    NilpotentElement from_series(Series s) const;
    Series to_series(const NilpotentElement& e) const;

  private:
    struct ClassSolver {
        std::vector<int> entries;               // basis indices in this class
        std::vector<uint64_t> monos;            // pivot monomials, one per entry
        std::vector<std::vector<Rat>> inverse;  // inverse of the pivot submatrix
    };

    const Series& entry_series_i(int i) const;
    const std::map<uint64_t, Int>& lie_poly_i(int i) const;
    std::vector<int> mono_content(uint64_t m, int deg) const;
    const ClassSolver& solver_for(int w, const std::vector<int>& content) const;

    HallBasis basis_;
    mutable std::mutex mutex_;
    mutable std::map<int, std::unique_ptr<Series>> entry_series_;
    mutable std::map<int, std::map<uint64_t, Int>> lie_poly_;
    mutable std::map<std::pair<int, std::vector<int>>, ClassSolver> solvers_;
};

// Shared per-(rank, class) engine registry.
NfEngine& engine_for(int rank, int klass);

}  // namespace wedgelab::detail
