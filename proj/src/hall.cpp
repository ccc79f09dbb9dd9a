#include "wedgelab/hall.hpp"

#include <algorithm>
#include <stdexcept>

namespace wedgelab {

HallBasis build_hall_basis(int k, int c) { return HallBasis(k, c); }

HallBasis::HallBasis(int rank, int klass) : rank_(rank), klass_(klass) {
    if (rank < 1 || klass < 1) throw std::invalid_argument("HallBasis: rank and class must be >= 1");
    weight_begin_.assign(static_cast<size_t>(klass) + 2, 0);
    for (int g = 0; g < rank; ++g) {
        BasisEntry e;
        e.weight = 1;
        e.gen = g;
        e.content.assign(static_cast<size_t>(rank), 0);
        e.content[static_cast<size_t>(g)] = 1;
        entries_.push_back(std::move(e));
    }
    weight_begin_[1] = 0;
    weight_begin_[2] = rank;
    for (int w = 2; w <= klass; ++w) {
        // [u,v] with weight(u)+weight(v) = w, u > v, and for composite
        // u = [x,y] the Hall condition y <= v.  Entries are weight-sorted, so
        // v < u forces weight(v) <= weight(u).
        int limit = static_cast<int>(entries_.size());
        for (int u = 0; u < limit; ++u) {
            int wu = entries_[static_cast<size_t>(u)].weight;
            int wv = w - wu;
            if (wv < 1 || wv > wu) continue;
            int lo = weight_begin(wv);
            int hi = std::min(weight_end(wv), u);
            for (int v = lo; v < hi; ++v) {
                const BasisEntry& ue = entries_[static_cast<size_t>(u)];
                if (ue.gen < 0 && ue.right > v) continue;  // Hall condition
                BasisEntry e;
                e.weight = w;
                e.left = u;
                e.right = v;
                e.content.assign(static_cast<size_t>(rank), 0);
                for (int g = 0; g < rank; ++g)
                    e.content[static_cast<size_t>(g)] =
                        ue.content[static_cast<size_t>(g)] +
                        entries_[static_cast<size_t>(v)].content[static_cast<size_t>(g)];
                entries_.push_back(std::move(e));
            }
        }
        weight_begin_[static_cast<size_t>(w) + 1] = static_cast<int>(entries_.size());
    }
}

std::string HallBasis::entry_name(int i, const std::vector<std::string>& gen_names) const {
    const BasisEntry& e = entry(i);
    if (e.gen >= 0) return gen_names.at(static_cast<size_t>(e.gen));
    return "[" + entry_name(e.left, gen_names) + "," + entry_name(e.right, gen_names) + "]";
}

std::string HallBasis::entry_name(int i) const {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(rank_));
    for (int g = 1; g <= rank_; ++g) names.push_back("x" + std::to_string(g));
    return entry_name(i, names);
}

Int witt_number(int k, int w) {
    // (1/w) sum over d | w of mu(d) k^(w/d)
    Int sum = 0;
    for (int d = 1; d <= w; ++d) {
        if (w % d != 0) continue;
        int m = d, mu = 1;  // Moebius via trial factorization of d
        for (int q = 2; q * q <= m; ++q) {
            if (m % q == 0) {
                m /= q;
                if (m % q == 0) {
                    mu = 0;
                    break;
                }
                mu = -mu;
            }
        }
        if (mu != 0 && m > 1) mu = -mu;
        if (mu == 0) continue;
        sum += Int(mu) * ipow(k, w / d);
    }
    return sum / w;
}

}  // namespace wedgelab
