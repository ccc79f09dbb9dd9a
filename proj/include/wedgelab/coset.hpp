// Todd-Coxeter coset enumeration over a finitely presented group: builds the
// permutation action on cosets of a subgroup, with HLT-plus-lookahead and
// Felsch-style deduction strategies.  Completed tables are immutable,
// auditable against the presentation, and serializable for caching.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wedgelab/presentation.hpp"
#include "wedgelab/words.hpp"

namespace wedgelab {

struct EnumLimits {
    // Bound on simultaneously live cosets; enforced between relator scans,
    // so a scan in flight may transiently run one relator length past it.
    int64_t max_cosets = 2'000'000;
    double max_seconds = 600.0;  // 0 disables the time check
};

class LimitExceeded : public std::runtime_error {
  public:
    LimitExceeded(std::string resource, const std::string& detail)
        : std::runtime_error(resource + " limit exceeded: " + detail),
          resource_(std::move(resource)) {}
    const std::string& resource() const { return resource_; }

  private:
    std::string resource_;  // "cosets", "time", or "members"
};

enum class EnumStrategy { HLT, Felsch };

// A completed table: row per coset (0 is the subgroup itself), one column
// per generator and per inverse generator.  All entries defined.
class CosetTable {
  public:
    int gens() const { return gens_; }
    int cols() const { return 2 * gens_; }
    int64_t size() const { return static_cast<int64_t>(rows_); }
    int subgroup_rank() const { return subgroup_rank_; }

    int32_t step(int32_t coset, int gen, bool inverse = false) const {
        return entry(coset, 2 * gen + (inverse ? 1 : 0));
    }
    int32_t entry(int32_t coset, int col) const {
        return table_[static_cast<size_t>(coset) * static_cast<size_t>(2 * gens_) +
                      static_cast<size_t>(col)];
    }
    int32_t apply_word(int32_t coset, const GroupWord& w) const;

    // Full closure audit: every relator scans back to its start coset from
    // every coset, inverse columns are mutually inverse permutations, and
    // every entry is in range.  Throws std::logic_error with a description.
    void audit(const Presentation& p) const;

    std::string serialize() const;
    static CosetTable deserialize(const std::string& text);

    static CosetTable from_rows(int gens, int subgroup_rank, std::vector<int32_t> flat);

  private:
    int gens_ = 0;
    int subgroup_rank_ = 0;
    int32_t rows_ = 0;
    std::vector<int32_t> table_;
};

// Runs the enumeration to completion; the result is compacted and
// BFS-standardized, so both strategies return the identical table.
CosetTable enumerate(const Presentation& p, const std::vector<GroupWord>& subgroup_gens,
                     const EnumLimits& limits = {},
                     EnumStrategy strategy = EnumStrategy::HLT);

// Cache key and file-backed wrapper: a completed table is stored under the
// hash of (presentation canonical text, subgroup words); cached tables are
// re-audited on load before use.
uint64_t table_cache_key(const Presentation& p, const std::vector<GroupWord>& subgroup_gens);
CosetTable enumerate_cached(const Presentation& p, const std::vector<GroupWord>& subgroup_gens,
                            const EnumLimits& limits, const std::string& cache_dir,
                            EnumStrategy strategy = EnumStrategy::HLT);

}  // namespace wedgelab
