// Finite presentations of p-groups and the text format parser.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "wedgelab/words.hpp"

namespace wedgelab {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ")"),
          line(line_),
          col(col_) {}
};

struct Presentation {
    std::string name;
    Int prime = 0;
    std::vector<std::string> generators;
    std::vector<GroupWord> relators;

    int gen_index(const std::string& id) const;
    // Name-independent deterministic serialization; input to hash().
    std::string canonical_text() const;
    uint64_t hash() const;
};

// Format: group <name>; prime <p>; gens <id>(,<id>)*; rels <word>(,<word>)*
// Word atoms: id, id^k, [w1,w2,...], (w)^k; a relator w1=w2 means w1*w2^-1.
Presentation parse_presentation(const std::string& text);

// Word parser over a fixed generator list (subgroup generators on the CLI).
GroupWord parse_word(const std::string& text, const std::vector<std::string>& generators);

}  // namespace wedgelab
