#include "wedgelab/group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wedgelab {

RegularRep::RegularRep(CosetTable table) : table_(std::move(table)) {
    if (table_.subgroup_rank() != 0) {
        throw std::invalid_argument(
            "regular representation needs a table over the trivial subgroup");
    }
    const auto n = table_.size();
    parent_.assign(static_cast<size_t>(n), -1);
    parent_col_.assign(static_cast<size_t>(n), -1);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[0] = 1;
    std::vector<int32_t> queue{0};
    for (size_t head = 0; head < queue.size(); ++head) {
        int32_t c = queue[head];
        for (int col = 0; col < table_.cols(); ++col) {
            int32_t d = table_.entry(c, col);
            if (!seen[static_cast<size_t>(d)]) {
                seen[static_cast<size_t>(d)] = 1;
                parent_[static_cast<size_t>(d)] = c;
                parent_col_[static_cast<size_t>(d)] = static_cast<int16_t>(col);
                queue.push_back(d);
            }
        }
    }
    if (queue.size() != static_cast<size_t>(n)) {
        throw std::invalid_argument("coset table is not connected");
    }
}

std::vector<int> RegularRep::path_cols(Elem x) const {
    std::vector<int> cols;
    while (x != 0) {
        cols.push_back(parent_col_[static_cast<size_t>(x)]);
        x = parent_[static_cast<size_t>(x)];
    }
    std::reverse(cols.begin(), cols.end());
    return cols;
}

Elem RegularRep::mul(Elem x, Elem y) const {
    // Walk x along the defining word of y.
    for (int col : path_cols(y)) x = table_.entry(x, col);
    return x;
}

Elem RegularRep::inv(Elem x) const {
    std::vector<int> cols = path_cols(x);
    Elem acc = 0;
    for (auto it = cols.rbegin(); it != cols.rend(); ++it) acc = table_.entry(acc, *it ^ 1);
    return acc;
}

Elem RegularRep::conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }

Elem RegularRep::comm(Elem a, Elem b) const {
    return mul(mul(mul(a, b), inv(a)), inv(b));
}

Elem RegularRep::comm(const std::vector<Elem>& parts) const {
    if (parts.empty()) return 0;
    Elem acc = parts.back();
    for (size_t i = parts.size() - 1; i-- > 0;) acc = comm(parts[i], acc);
    return acc;
}

int64_t RegularRep::order_of(Elem x) const {
    int64_t k = 1;
    Elem acc = x;
    while (acc != 0) {
        acc = mul(acc, x);
        ++k;
        if (k > order()) throw std::logic_error("element order exceeds group order");
    }
    return k;
}

Elem RegularRep::pow(Elem x, const Int& e) const {
    if (x == 0) return 0;
    int64_t ord = order_of(x);
    int64_t r = (e % ord).convert_to<int64_t>();
    if (r < 0) r += ord;
    Elem acc = 0;
    for (int64_t i = 0; i < r; ++i) acc = mul(acc, x);
    return acc;
}

Int RegularRep::exponent() const {
    Int e = 1;
    for (Elem x = 0; x < order(); ++x) e = lcm(e, Int(order_of(x)));
    return e;
}

Elem RegularRep::eval_word(const GroupWord& w) const {
    Elem acc = 0;
    for (const Syllable& s : w.letters) {
        if (s.gen < 0 || s.gen >= gens()) throw std::invalid_argument("word uses unknown generator");
        acc = mul(acc, pow(generator(s.gen), s.exp));
    }
    return acc;
}

GroupWord RegularRep::word_of(Elem x) const {
    GroupWord w;
    for (int col : path_cols(x)) {
        w *= GroupWord::gen(col >> 1, (col & 1) ? Int(-1) : Int(1));
    }
    return free_reduce(w);
}

namespace {

Subgroup finish(std::vector<Elem> elems, std::vector<Elem> gens, std::vector<char> member) {
    std::sort(elems.begin(), elems.end());
    return Subgroup{std::move(elems), std::move(gens), std::move(member)};
}

}  // namespace

Subgroup whole_group(const RegularRep& r) {
    std::vector<Elem> elems(static_cast<size_t>(r.order()));
    std::iota(elems.begin(), elems.end(), 0);
    std::vector<Elem> gens;
    for (int g = 0; g < r.gens(); ++g) gens.push_back(r.generator(g));
    return Subgroup{std::move(elems), std::move(gens),
                    std::vector<char>(static_cast<size_t>(r.order()), 1)};
}

Subgroup trivial_subgroup(const RegularRep& r) {
    std::vector<char> member(static_cast<size_t>(r.order()), 0);
    member[0] = 1;
    return Subgroup{{0}, {}, std::move(member)};
}

Subgroup subgroup_closure(const RegularRep& r, std::vector<Elem> gens, int64_t max_members) {
    std::vector<char> member(static_cast<size_t>(r.order()), 0);
    member[0] = 1;
    std::vector<Elem> frontier{0};
    std::vector<Elem> elems{0};
    // Deduplicate and drop the identity from the generating set.
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::erase(gens, 0);
    for (size_t head = 0; head < frontier.size(); ++head) {
        Elem x = frontier[head];
        for (Elem g : gens) {
            Elem y = r.mul(x, g);
            if (member[static_cast<size_t>(y)]) continue;
            member[static_cast<size_t>(y)] = 1;
            elems.push_back(y);
            frontier.push_back(y);
            if (static_cast<int64_t>(elems.size()) > max_members) {
                throw MemberLimitExceeded("subgroup closure passed " +
                                          std::to_string(max_members) + " elements");
            }
        }
    }
    return finish(std::move(elems), std::move(gens), std::move(member));
}

Subgroup normal_closure(const RegularRep& r, std::vector<Elem> seeds, int64_t max_members) {
    std::vector<Elem> gens = std::move(seeds);
    while (true) {
        Subgroup s = subgroup_closure(r, gens, max_members);
        std::vector<Elem> missing;
        for (Elem x : s.elems) {
            for (int g = 0; g < r.gens(); ++g) {
                Elem y = r.conj(r.generator(g), x);
                if (!s.contains(y)) missing.push_back(y);
            }
        }
        if (missing.empty()) return s;
        gens = s.gens;
        gens.insert(gens.end(), missing.begin(), missing.end());
    }
}

bool is_subset(const Subgroup& inner, const Subgroup& outer) {
    for (Elem x : inner.elems) {
        if (!outer.contains(x)) return false;
    }
    return true;
}

bool is_normal(const RegularRep& r, const Subgroup& s) {
    for (Elem x : s.elems) {
        for (int g = 0; g < r.gens(); ++g) {
            if (!s.contains(r.conj(r.generator(g), x))) return false;
        }
    }
    return true;
}

Subgroup intersection(const RegularRep& r, const Subgroup& a, const Subgroup& b) {
    std::vector<Elem> elems;
    std::vector<char> member(static_cast<size_t>(r.order()), 0);
    const Subgroup& small = a.order() <= b.order() ? a : b;
    const Subgroup& large = a.order() <= b.order() ? b : a;
    for (Elem x : small.elems) {
        if (large.contains(x)) {
            elems.push_back(x);
            member[static_cast<size_t>(x)] = 1;
        }
    }
    std::vector<Elem> gens(elems.begin(), elems.end());
    std::erase(gens, 0);
    return finish(std::move(elems), std::move(gens), std::move(member));
}

Subgroup derived_subgroup(const RegularRep& r, const Subgroup& s, int64_t max_members) {
    std::vector<Elem> comms;
    for (Elem a : s.elems) {
        for (Elem b : s.elems) {
            Elem c = r.comm(a, b);
            if (c != 0) comms.push_back(c);
        }
    }
    return subgroup_closure(r, std::move(comms), max_members);
}

Subgroup power_subgroup(const RegularRep& r, const Subgroup& s, const Int& e,
                        int64_t max_members) {
    std::vector<Elem> powers;
    for (Elem x : s.elems) {
        Elem y = r.pow(x, e);
        if (y != 0) powers.push_back(y);
    }
    return subgroup_closure(r, std::move(powers), max_members);
}

Subgroup center(const RegularRep& r) {
    std::vector<Elem> central;
    for (Elem x = 0; x < r.order(); ++x) {
        bool ok = true;
        for (int g = 0; g < r.gens() && ok; ++g) {
            Elem y = r.generator(g);
            ok = r.mul(x, y) == r.mul(y, x);
        }
        if (ok && x != 0) central.push_back(x);
    }
    return subgroup_closure(r, std::move(central), r.order());
}

std::vector<Subgroup> lower_central_series(const RegularRep& r, int64_t max_members) {
    std::vector<Subgroup> series{whole_group(r)};
    while (series.back().order() > 1) {
        // [gamma_i, G] is the normal closure of the commutators of gamma_i
        // elements with group generators (gamma_i is normal, so conjugates
        // of these seeds reach every [x, g]).
        std::vector<Elem> comms;
        for (Elem x : series.back().elems) {
            for (int g = 0; g < r.gens(); ++g) {
                Elem c = r.comm(x, r.generator(g));
                if (c != 0) comms.push_back(c);
            }
        }
        Subgroup next = normal_closure(r, std::move(comms), max_members);
        if (next.order() == series.back().order()) {
            throw std::invalid_argument("lower central series did not reach 1; group is not nilpotent");
        }
        series.push_back(std::move(next));
    }
    return series;
}

std::vector<Subgroup> derived_series(const RegularRep& r, int64_t max_members) {
    std::vector<Subgroup> series{whole_group(r)};
    while (series.back().order() > 1) {
        Subgroup next = derived_subgroup(r, series.back(), max_members);
        if (next.order() == series.back().order()) {
            throw std::invalid_argument("derived series did not reach 1; group is not solvable");
        }
        series.push_back(std::move(next));
    }
    return series;
}

Int subgroup_exponent(const RegularRep& r, const Subgroup& s) {
    Int e = 1;
    for (Elem x : s.elems) e = lcm(e, Int(r.order_of(x)));
    return e;
}

Int quotient_exponent(const RegularRep& r, const Subgroup& s, const Subgroup& n) {
    if (!is_subset(n, s)) throw std::invalid_argument("quotient modulus is not inside the subgroup");
    for (Elem x : n.elems) {
        for (Elem g : s.gens) {
            if (!n.contains(r.conj(g, x))) {
                throw std::invalid_argument("quotient modulus is not normal in the subgroup");
            }
        }
    }
    Int e = 1;
    for (Elem x : s.elems) {
        Elem acc = x;
        int64_t k = 1;
        while (!n.contains(acc)) {
            acc = r.mul(acc, x);
            ++k;
        }
        e = lcm(e, Int(k));
    }
    return e;
}

}  // namespace wedgelab
