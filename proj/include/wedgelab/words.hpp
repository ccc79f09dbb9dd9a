// Free-group words over indexed generators.  The building block for
// presentations, relator handling and the normal-form engine.
#pragma once

#include <string>
#include <vector>

#include "wedgelab/ints.hpp"

namespace wedgelab {

struct Syllable {
    int gen = 0;  // 0-based generator index
    Int exp = 0;
    bool operator==(const Syllable&) const = default;
};

// A word is a sequence of generator powers.  Construction does not reduce;
// call free_reduce for the canonical representative.
struct GroupWord {
    std::vector<Syllable> letters;

    bool operator==(const GroupWord&) const = default;

    static GroupWord one() { return {}; }
    static GroupWord gen(int g, Int e = 1);

    bool trivial() const { return letters.empty(); }
    GroupWord inverse() const;
    GroupWord& operator*=(const GroupWord& rhs);
    friend GroupWord operator*(GroupWord a, const GroupWord& b) {
        a *= b;
        return a;
    }
    // Word repetition; negative e repeats the inverse.  Single-syllable words
    // keep one syllable, so huge exponents stay cheap there.
    GroupWord pow(const Int& e) const;
    // Letter count with multiplicity |exp| (relator expansion budgets).
    Int length() const;
};

GroupWord free_reduce(const GroupWord& w);

// [a,b] = a b a^-1 b^-1; multi-argument form is right-normed:
// [a,b,c] = [a,[b,c]].
GroupWord commutator(const GroupWord& a, const GroupWord& b);
GroupWord commutator(const std::vector<GroupWord>& ws);
// ^a b = a b a^-1 (conjugation action written on the left).
GroupWord conjugate(const GroupWord& actor, const GroupWord& target);

std::string format_word(const GroupWord& w, const std::vector<std::string>& names);

}  // namespace wedgelab
