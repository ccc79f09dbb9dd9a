#include "wedgelab/corpus.hpp"

#include <algorithm>

namespace wedgelab {

namespace {

CorpusEntry make(const std::string& text, int64_t order, int klass, const Int& exponent,
                 std::vector<std::string> tags, bool realizable) {
    CorpusEntry e;
    e.pres = parse_presentation(text);
    e.name = e.pres.name;
    e.prime = e.pres.prime;
    e.expected_order = order;
    e.expected_class = klass;
    e.expected_exponent = exponent;
    e.tags = std::move(tags);
    e.realizable = realizable;
    return e;
}

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> v;
    v.push_back(make("group C3; prime 3; gens a; rels a^3;",
                     3, 1, 3, {"abelian", "cyclic", "exponent-p"}, true));
    v.push_back(make("group C9; prime 3; gens a; rels a^9;",
                     9, 1, 9, {"abelian", "cyclic"}, true));
    v.push_back(make("group C3xC3; prime 3; gens a, b; rels a^3, b^3, [a,b];",
                     9, 1, 3, {"abelian", "elementary", "exponent-p"}, true));
    v.push_back(make("group C3xC3xC3; prime 3; gens a, b, c; "
                     "rels a^3, b^3, c^3, [a,b], [a,c], [b,c];",
                     27, 1, 3, {"abelian", "elementary", "exponent-p"}, false));
    v.push_back(make("group C81; prime 3; gens a; rels a^81;",
                     81, 1, 81, {"abelian", "cyclic"}, true));
    v.push_back(make("group Heis3; prime 3; gens a, b, c; "
                     "rels a^3, b^3, c^3, [a,b] c^-1, [a,c], [b,c];",
                     27, 2, 3, {"heisenberg", "exponent-p"}, true));
    v.push_back(make("group Mod27; prime 3; gens a, b; rels a^9, b^3, b a b^-1 a^-4;",
                     27, 2, 9, {"modular"}, true));
    // C3 wr C3, the smallest irregular 3-group; class 3, order 81.
    v.push_back(make("group W81; prime 3; gens a, x; "
                     "rels a^3, x^3, [x, a x a^-1], [x, a^2 x a^-2];",
                     81, 3, 9, {"wreath"}, false));
    v.push_back(make("group C5; prime 5; gens a; rels a^5;",
                     5, 1, 5, {"abelian", "cyclic", "exponent-p"}, true));
    v.push_back(make("group C25; prime 5; gens a; rels a^25;",
                     25, 1, 25, {"abelian", "cyclic"}, true));
    v.push_back(make("group C5xC5; prime 5; gens a, b; rels a^5, b^5, [a,b];",
                     25, 1, 5, {"abelian", "elementary", "exponent-p"}, true));
    v.push_back(make("group C5xC5xC5; prime 5; gens a, b, c; "
                     "rels a^5, b^5, c^5, [a,b], [a,c], [b,c];",
                     125, 1, 5, {"abelian", "elementary", "exponent-p"}, false));
    v.push_back(make("group Heis5; prime 5; gens a, b, c; "
                     "rels a^5, b^5, c^5, [a,b] c^-1, [a,c], [b,c];",
                     125, 2, 5, {"heisenberg", "exponent-p"}, false));
    v.push_back(make("group C2; prime 2; gens a; rels a^2;",
                     2, 1, 2, {"abelian", "cyclic", "even", "exponent-p"}, true));
    v.push_back(make("group C4; prime 2; gens a; rels a^4;",
                     4, 1, 4, {"abelian", "cyclic", "even"}, true));
    v.push_back(make("group C2xC2; prime 2; gens a, b; rels a^2, b^2, [a,b];",
                     4, 1, 2, {"abelian", "elementary", "even", "exponent-p"}, true));
    v.push_back(make("group D4; prime 2; gens s, t; rels s^4, t^2, t s t^-1 s;",
                     8, 2, 4, {"dihedral", "even"}, true));
    v.push_back(make("group Q8; prime 2; gens i, j; rels i^4, i^2 j^2, j i j^-1 i;",
                     8, 2, 4, {"quaternion", "even"}, true));
    return v;
}

}  // namespace

bool CorpusEntry::has_tag(const std::string& t) const {
    return std::find(tags.begin(), tags.end(), t) != tags.end();
}

const std::vector<CorpusEntry>& builtin_corpus() {
    static const std::vector<CorpusEntry> corpus = build();
    return corpus;
}

const CorpusEntry* corpus_find(const std::string& name) {
    for (const CorpusEntry& e : builtin_corpus())
        if (e.name == name) return &e;
    return nullptr;
}

}  // namespace wedgelab
