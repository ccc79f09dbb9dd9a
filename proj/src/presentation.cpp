#include "wedgelab/presentation.hpp"

#include <set>

#include "lexer.hpp"

namespace wedgelab {

namespace {

using detail::Lexer;
using detail::Tok;

Int parse_signed_int(Lexer& lx) {
    bool neg = lx.accept(Tok::Minus);
    if (!lx.at(Tok::Integer)) lx.fail("expected integer exponent");
    Int v(lx.text());
    lx.advance();
    return neg ? -v : v;
}

class WordParser {
  public:
    WordParser(Lexer& lx, const std::vector<std::string>& gens) : lx_(lx), gens_(gens) {}

    // word := atom+; stops at any token that cannot start an atom
    GroupWord word() {
        GroupWord w = atom();
        while (lx_.at(Tok::Ident) || lx_.at(Tok::LBrack) || lx_.at(Tok::LParen)) w *= atom();
        return w;
    }

    // relator := word ('=' word)?  with w1=w2 meaning w1*w2^-1
    GroupWord relator() {
        GroupWord w = word();
        if (lx_.accept(Tok::Assign)) w *= word().inverse();
        return free_reduce(w);
    }

  private:
    GroupWord atom() {
        GroupWord base;
        if (lx_.at(Tok::Ident)) {
            int g = -1;
            for (size_t i = 0; i < gens_.size(); ++i)
                if (gens_[i] == lx_.text()) g = static_cast<int>(i);
            if (g < 0) lx_.fail("unknown generator '" + lx_.text() + "'");
            lx_.advance();
            base = GroupWord::gen(g);
        } else if (lx_.accept(Tok::LBrack)) {
            std::vector<GroupWord> parts;
            parts.push_back(word());
            while (lx_.accept(Tok::Comma)) parts.push_back(word());
            lx_.expect(Tok::RBrack, "']'");
            if (parts.size() < 2) lx_.fail("commutator needs at least two arguments");
            base = commutator(parts);
        } else if (lx_.accept(Tok::LParen)) {
            base = word();
            lx_.expect(Tok::RParen, "')'");
        } else {
            lx_.fail("expected generator, '[' or '('");
        }
        if (lx_.accept(Tok::Caret)) return base.pow(parse_signed_int(lx_));
        return base;
    }

    Lexer& lx_;
    const std::vector<std::string>& gens_;
};

}  // namespace

int Presentation::gen_index(const std::string& id) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == id) return static_cast<int>(i);
    return -1;
}

std::string Presentation::canonical_text() const {
    std::string s = "p=" + prime.str() + ";k=" + std::to_string(generators.size()) + ";";
    for (const auto& r : relators) {
        GroupWord w = free_reduce(r);
        for (const auto& syl : w.letters)
            s += "g" + std::to_string(syl.gen) + "^" + syl.exp.str() + ".";
        s += ";";
    }
    return s;
}

uint64_t Presentation::hash() const { return fnv1a(canonical_text()); }

Presentation parse_presentation(const std::string& text) {
    Lexer lx(text);
    Presentation p;

    lx.expect_keyword("group");
    p.name = lx.expect_ident("group name");
    lx.expect(Tok::Semi, "';'");

    // The prime clause is optional; generic presentations leave it at 0.
    if (lx.accept_keyword("prime")) {
        if (!lx.at(Tok::Integer)) lx.fail("expected prime");
        p.prime = Int(lx.text());
        if (!is_prime(p.prime)) lx.fail("'" + p.prime.str() + "' is not prime");
        lx.advance();
        lx.expect(Tok::Semi, "';'");
    }

    lx.expect_keyword("gens");
    std::set<std::string> seen;
    do {
        std::string id = lx.expect_ident("generator name");
        if (!seen.insert(id).second) lx.fail("duplicate generator '" + id + "'");
        p.generators.push_back(id);
    } while (lx.accept(Tok::Comma));
    lx.expect(Tok::Semi, "';'");

    lx.expect_keyword("rels");
    WordParser wp(lx, p.generators);
    do {
        p.relators.push_back(wp.relator());
    } while (lx.accept(Tok::Comma));
    lx.accept(Tok::Semi);
    if (!lx.at(Tok::End)) lx.fail("trailing input after relator list");
    return p;
}

GroupWord parse_word(const std::string& text, const std::vector<std::string>& generators) {
    Lexer lx(text);
    WordParser wp(lx, generators);
    GroupWord w = wp.relator();
    if (!lx.at(Tok::End)) lx.fail("trailing input after word");
    return w;
}

}  // namespace wedgelab
