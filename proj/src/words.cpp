#include "wedgelab/words.hpp"

#include <stdexcept>

namespace wedgelab {

GroupWord GroupWord::gen(int g, Int e) {
    GroupWord w;
    if (e != 0) w.letters.push_back({g, std::move(e)});
    return w;
}

GroupWord GroupWord::inverse() const {
    GroupWord r;
    r.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        r.letters.push_back({it->gen, -it->exp});
    return r;
}

GroupWord& GroupWord::operator*=(const GroupWord& rhs) {
    letters.insert(letters.end(), rhs.letters.begin(), rhs.letters.end());
    return *this;
}

GroupWord GroupWord::pow(const Int& e) const {
    if (e == 0 || letters.empty()) return {};
    if (letters.size() == 1) {
        return gen(letters[0].gen, letters[0].exp * e);
    }
    const GroupWord& base = (e > 0) ? *this : this->inverse();
    Int count = abs(e);
    if (count > 4096)
        throw std::length_error("GroupWord::pow: repetition count too large");
    GroupWord r;
    for (Int i = 0; i < count; ++i) r *= base;
    return r;
}

Int GroupWord::length() const {
    Int n = 0;
    for (const auto& s : letters) n += abs(s.exp);
    return n;
}

GroupWord free_reduce(const GroupWord& w) {
    GroupWord r;
    for (const auto& s : w.letters) {
        if (s.exp == 0) continue;
        if (!r.letters.empty() && r.letters.back().gen == s.gen) {
            r.letters.back().exp += s.exp;
            if (r.letters.back().exp == 0) r.letters.pop_back();
        } else {
            r.letters.push_back(s);
        }
    }
    return r;
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) {
    return free_reduce(a * b * a.inverse() * b.inverse());
}

GroupWord commutator(const std::vector<GroupWord>& ws) {
    if (ws.size() < 2)
        throw std::invalid_argument("commutator: need at least two arguments");
    GroupWord acc = ws.back();
    for (size_t i = ws.size() - 1; i-- > 0;) acc = commutator(ws[i], acc);
    return acc;
}

GroupWord conjugate(const GroupWord& actor, const GroupWord& target) {
    return free_reduce(actor * target * actor.inverse());
}

std::string format_word(const GroupWord& w, const std::vector<std::string>& names) {
    if (w.letters.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += ' ';
        const auto& s = w.letters[i];
        out += names.at(static_cast<size_t>(s.gen));
        if (s.exp != 1) {
            out += '^';
            out += s.exp.str();
        }
    }
    return out;
}

}  // namespace wedgelab
