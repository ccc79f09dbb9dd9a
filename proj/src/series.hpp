// Truncated integer power series in noncommuting variables X_0..X_{k-1};
// degrees above the class bound are dropped.  Group words embed through
// x_i -> 1 + X_i, which is faithful on the free nilpotent quotient, so two
// words are equal there iff their series agree.  Private engine header.
#pragma once

#include <map>
#include <vector>

#include "wedgelab/words.hpp"

namespace wedgelab::detail {

// Monomials are packed words: letter i occupies bits [5i, 5i+5) as value
// gen+1; degree is tracked by the container index, so 12 letters fit.
constexpr int kMaxSeriesDegree = 12;
constexpr int kMaxSeriesRank = 30;

inline uint64_t mono_concat(uint64_t a, int deg_a, uint64_t b) {
    return a | (b << (5 * deg_a));
}

inline int mono_letter(uint64_t m, int i) {
    return static_cast<int>((m >> (5 * i)) & 31u) - 1;
}

class Series {
  public:
    explicit Series(int klass) : klass_(klass), comp_(static_cast<size_t>(klass) + 1) {}

    static Series one(int klass) {
        Series s(klass);
        s.comp_[0][0] = 1;
        return s;
    }

    // (1 + X_g)^e for any integer e; exact because X_g is nilpotent here.
    static Series generator_power(int g, const Int& e, int klass);

    int klass() const { return klass_; }
    const std::map<uint64_t, Int>& degree(int d) const {
        return comp_[static_cast<size_t>(d)];
    }
    Int coeff(int d, uint64_t mono) const;
    void add(int d, uint64_t mono, const Int& c);

    bool operator==(const Series&) const = default;
    bool is_one() const;

    Series operator*(const Series&) const;
    Series& operator*=(const Series& o) {
        *this = *this * o;
        return *this;
    }
    Series operator+(const Series&) const;
    Series operator-(const Series&) const;

    // Inverse and powers of group-like series (constant term 1):
    // (1+J)^e = sum_j binomial(e,j) J^j, valid for negative e as well.
    Series group_power(const Int& e) const;
    Series group_inverse() const { return group_power(-1); }

    // Smallest d >= 1 with a nonzero component; klass+1 when none.
    int lowest_positive_degree() const;
    void prune();  // drop explicit zeros

  private:
    int klass_;
    std::vector<std::map<uint64_t, Int>> comp_;
};

Series word_series(const GroupWord& w, int klass);
Series commutator_series(const Series& a, const Series& b);
Series commutator_series(const std::vector<Series>& parts);  // right-normed

}  // namespace wedgelab::detail
