#include "series.hpp"

#include <stdexcept>

namespace wedgelab::detail {

Series Series::generator_power(int g, const Int& e, int klass) {
    if (g < 0 || g >= kMaxSeriesRank) throw std::out_of_range("Series: generator index");
    Series s(klass);
    uint64_t mono = 0;
    Int c = 1;
    for (int j = 0; j <= klass; ++j) {
        if (j > 0) {
            mono = mono_concat(mono, j - 1, static_cast<uint64_t>(g) + 1);
            c = c * (e - (j - 1)) / j;  // binomial(e, j), exact at each step
        }
        if (c != 0) s.comp_[static_cast<size_t>(j)][mono] = c;
    }
    return s;
}

Int Series::coeff(int d, uint64_t mono) const {
    const auto& m = comp_[static_cast<size_t>(d)];
    auto it = m.find(mono);
    return it == m.end() ? Int(0) : it->second;
}

void Series::add(int d, uint64_t mono, const Int& c) {
    if (c == 0) return;
    auto& slot = comp_[static_cast<size_t>(d)][mono];
    slot += c;
    if (slot == 0) comp_[static_cast<size_t>(d)].erase(mono);
}

bool Series::is_one() const {
    if (coeff(0, 0) != 1 || comp_[0].size() != 1) return false;
    for (int d = 1; d <= klass_; ++d)
        if (!comp_[static_cast<size_t>(d)].empty()) return false;
    return true;
}

Series Series::operator*(const Series& o) const {
    if (klass_ != o.klass_) throw std::invalid_argument("Series: class mismatch");
    Series r(klass_);
    for (int da = 0; da <= klass_; ++da) {
        const auto& ca = comp_[static_cast<size_t>(da)];
        if (ca.empty()) continue;
        for (int db = 0; da + db <= klass_; ++db) {
            const auto& cb = o.comp_[static_cast<size_t>(db)];
            if (cb.empty()) continue;
            auto& out = r.comp_[static_cast<size_t>(da + db)];
            for (const auto& [ma, va] : ca)
                for (const auto& [mb, vb] : cb) {
                    auto& slot = out[mono_concat(ma, da, mb)];
                    slot += va * vb;
                }
        }
    }
    r.prune();
    return r;
}

Series Series::operator+(const Series& o) const {
    if (klass_ != o.klass_) throw std::invalid_argument("Series: class mismatch");
    Series r = *this;
    for (int d = 0; d <= klass_; ++d)
        for (const auto& [m, v] : o.comp_[static_cast<size_t>(d)]) r.add(d, m, v);
    return r;
}

Series Series::operator-(const Series& o) const {
    if (klass_ != o.klass_) throw std::invalid_argument("Series: class mismatch");
    Series r = *this;
    for (int d = 0; d <= klass_; ++d)
        for (const auto& [m, v] : o.comp_[static_cast<size_t>(d)]) r.add(d, m, -v);
    return r;
}

Series Series::group_power(const Int& e) const {
    if (coeff(0, 0) != 1)
        throw std::invalid_argument("Series::group_power: constant term must be 1");
    Series j = *this;
    j.comp_[0].clear();  // J = S - 1
    Series r = Series::one(klass_);
    Series jpow = Series::one(klass_);
    Int c = 1;
    for (int i = 1; i <= klass_; ++i) {
        jpow = jpow * j;
        if (jpow.lowest_positive_degree() > klass_) break;
        c = c * (e - (i - 1)) / i;  // binomial(e, i)
        if (c == 0 && e >= 0 && e < i) break;
        for (int d = 1; d <= klass_; ++d)
            for (const auto& [m, v] : jpow.comp_[static_cast<size_t>(d)]) r.add(d, m, c * v);
    }
    return r;
}

int Series::lowest_positive_degree() const {
    for (int d = 1; d <= klass_; ++d)
        if (!comp_[static_cast<size_t>(d)].empty()) return d;
    return klass_ + 1;
}

void Series::prune() {
    for (auto& m : comp_)
        for (auto it = m.begin(); it != m.end();)
            it = (it->second == 0) ? m.erase(it) : std::next(it);
}

Series word_series(const GroupWord& w, int klass) {
    Series s = Series::one(klass);
    for (const auto& syl : w.letters)
        s *= Series::generator_power(syl.gen, syl.exp, klass);
    return s;
}

Series commutator_series(const Series& a, const Series& b) {
    // [a,b] = (ab)(ba)^{-1} = 1 + (ab - ba)(ba)^{-1}; the difference starts
    // at the summed lowest degrees, which keeps nested commutators sparse.
    Series ab = a * b;
    Series ba = b * a;
    Series diff = ab - ba;
    if (diff.lowest_positive_degree() > ab.klass()) return Series::one(ab.klass());
    return Series::one(ab.klass()) + diff * ba.group_inverse();
}

Series commutator_series(const std::vector<Series>& parts) {
    if (parts.size() < 2)
        throw std::invalid_argument("commutator_series: need at least two arguments");
    Series acc = parts.back();
    for (size_t i = parts.size() - 1; i-- > 0;) acc = commutator_series(parts[i], acc);
    return acc;
}

}  // namespace wedgelab::detail
