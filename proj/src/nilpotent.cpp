#include "wedgelab/nilpotent.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "engine.hpp"
#include "series.hpp"

namespace wedgelab {

using detail::Series;

namespace detail {

NfEngine::NfEngine(int rank, int klass) : basis_(rank, klass) {
    if (rank > kMaxSeriesRank || klass > kMaxSeriesDegree)
        throw std::invalid_argument("NfEngine: rank or class beyond engine limits");
}

// All helpers below assume mutex_ is held by the public entry point.

const Series& NfEngine::entry_series_i(int i) const {
    auto it = entry_series_.find(i);
    if (it != entry_series_.end()) return *it->second;
    const BasisEntry& e = basis_.entry(i);
    std::unique_ptr<Series> s;
    if (e.gen >= 0) {
        s = std::make_unique<Series>(Series::generator_power(e.gen, 1, basis_.klass()));
    } else {
        s = std::make_unique<Series>(
            commutator_series(entry_series_i(e.left), entry_series_i(e.right)));
    }
    return *entry_series_.emplace(i, std::move(s)).first->second;
}

// Lie polynomial of a basic commutator: the bottom (degree = weight) part of
// its group-commutator series, computed directly by bracketing monomials.
const std::map<uint64_t, Int>& NfEngine::lie_poly_i(int i) const {
    auto it = lie_poly_.find(i);
    if (it != lie_poly_.end()) return it->second;
    const BasisEntry& e = basis_.entry(i);
    std::map<uint64_t, Int> p;
    if (e.gen >= 0) {
        p[static_cast<uint64_t>(e.gen) + 1] = 1;
    } else {
        const auto& pl = lie_poly_i(e.left);
        const auto& pr = lie_poly_i(e.right);
        int wl = basis_.entry(e.left).weight;
        int wr = basis_.entry(e.right).weight;
        for (const auto& [ml, vl] : pl)
            for (const auto& [mr, vr] : pr) {
                Int v = vl * vr;
                uint64_t fw = mono_concat(ml, wl, mr);
                uint64_t bw = mono_concat(mr, wr, ml);
                if ((p[fw] += v) == 0) p.erase(fw);
                if ((p[bw] -= v) == 0) p.erase(bw);
            }
    }
    return lie_poly_.emplace(i, std::move(p)).first->second;
}

std::vector<int> NfEngine::mono_content(uint64_t m, int deg) const {
    std::vector<int> c(static_cast<size_t>(basis_.rank()), 0);
    for (int i = 0; i < deg; ++i) {
        int g = mono_letter(m, i);
        if (g < 0 || g >= basis_.rank())
            throw std::invalid_argument("series monomial outside basis rank");
        ++c[static_cast<size_t>(g)];
    }
    return c;
}

const NfEngine::ClassSolver& NfEngine::solver_for(int w, const std::vector<int>& content) const {
    auto key = std::make_pair(w, content);
    auto it = solvers_.find(key);
    if (it != solvers_.end()) return it->second;

    ClassSolver cs;
    for (int b = basis_.weight_begin(w); b < basis_.weight_end(w); ++b)
        if (basis_.entry(b).content == content) cs.entries.push_back(b);

    if (!cs.entries.empty()) {
        std::vector<uint64_t> candidates;
        {
            std::map<uint64_t, char> seen;
            for (int b : cs.entries)
                for (const auto& [m, v] : lie_poly_i(b)) seen[m] = 1;
            for (const auto& [m, v] : seen) candidates.push_back(m);
        }
        size_t ncols = cs.entries.size();
        // Pick monomial rows greedily until the coefficient matrix is square
        // and invertible; basic commutators of one weight are independent in
        // the free Lie ring, so a full-rank selection always exists.
        std::vector<std::vector<Rat>> reduced;
        std::vector<size_t> pivot_col;
        for (uint64_t m : candidates) {
            std::vector<Rat> row(ncols);
            for (size_t c = 0; c < ncols; ++c) {
                const auto& p = lie_poly_i(cs.entries[c]);
                auto pit = p.find(m);
                row[c] = (pit == p.end()) ? Rat(0) : Rat(pit->second);
            }
            std::vector<Rat> work = row;
            for (size_t r = 0; r < reduced.size(); ++r) {
                const Rat& lead = work[pivot_col[r]];
                if (lead != 0) {
                    Rat f = lead / reduced[r][pivot_col[r]];
                    for (size_t c = 0; c < ncols; ++c) work[c] -= f * reduced[r][c];
                }
            }
            size_t pc = ncols;
            for (size_t c = 0; c < ncols; ++c)
                if (work[c] != 0) {
                    pc = c;
                    break;
                }
            if (pc == ncols) continue;
            reduced.push_back(std::move(work));
            pivot_col.push_back(pc);
            cs.monos.push_back(m);
            if (cs.monos.size() == ncols) break;
        }
        if (cs.monos.size() != ncols)
            throw std::logic_error("basic-commutator expansion matrix is rank-deficient");

        // Invert the selected square submatrix by Gauss-Jordan elimination.
        size_t nn = ncols;
        std::vector<std::vector<Rat>> a(nn, std::vector<Rat>(2 * nn));
        for (size_t r = 0; r < nn; ++r) {
            for (size_t c = 0; c < nn; ++c) {
                const auto& p = lie_poly_i(cs.entries[c]);
                auto pit = p.find(cs.monos[r]);
                a[r][c] = (pit == p.end()) ? Rat(0) : Rat(pit->second);
            }
            a[r][nn + r] = 1;
        }
        for (size_t c = 0; c < nn; ++c) {
            size_t piv = c;
            while (piv < nn && a[piv][c] == 0) ++piv;
            if (piv == nn) throw std::logic_error("singular submatrix in normal-form solver");
            std::swap(a[c], a[piv]);
            Rat d = a[c][c];
            for (size_t j = 0; j < 2 * nn; ++j) a[c][j] /= d;
            for (size_t r = 0; r < nn; ++r) {
                if (r == c || a[r][c] == 0) continue;
                Rat f = a[r][c];
                for (size_t j = 0; j < 2 * nn; ++j) a[r][j] -= f * a[c][j];
            }
        }
        cs.inverse.assign(nn, std::vector<Rat>(nn));
        for (size_t r = 0; r < nn; ++r)
            for (size_t c = 0; c < nn; ++c) cs.inverse[r][c] = a[r][nn + c];
    }
    return solvers_.emplace(std::move(key), std::move(cs)).first->second;
}

NilpotentElement NfEngine::from_series(Series s) const {
    std::lock_guard<std::mutex> lock(mutex_);
    NilpotentElement out;
    out.rank = basis_.rank();
    out.klass = basis_.klass();
    out.exps.assign(static_cast<size_t>(basis_.size()), 0);
    if (s.coeff(0, 0) != 1)
        throw std::invalid_argument("from_series: not a group-like series");

    for (int w = 1; w <= basis_.klass(); ++w) {
        const auto& comp = s.degree(w);
        if (!comp.empty()) {
            // Split the degree-w part by letter content; each class is an
            // independent exact linear solve against the Lie polynomials.
            std::map<std::vector<int>, std::map<uint64_t, Int>> by_content;
            for (const auto& [m, v] : comp) by_content[mono_content(m, w)][m] = v;
            for (const auto& [content, part] : by_content) {
                const ClassSolver& cs = solver_for(w, content);
                if (cs.entries.empty())
                    throw std::logic_error("from_series: component outside the Lie span");
                size_t nn = cs.entries.size();
                std::vector<Rat> d(nn);
                for (size_t r = 0; r < nn; ++r) {
                    auto pit = part.find(cs.monos[r]);
                    d[r] = (pit == part.end()) ? Rat(0) : Rat(pit->second);
                }
                for (size_t c = 0; c < nn; ++c) {
                    Rat x(0);
                    for (size_t r = 0; r < nn; ++r) x += cs.inverse[c][r] * d[r];
                    if (denominator(x) != 1)
                        throw std::logic_error("from_series: non-integral exponent");
                    out.exps[static_cast<size_t>(cs.entries[c])] = numerator(x);
                }
                // The pivot rows determine the exponents; demand that they
                // reproduce the whole class part, not just those rows.
                std::map<uint64_t, Int> recon;
                for (size_t c = 0; c < nn; ++c) {
                    const Int& e = out.exps[static_cast<size_t>(cs.entries[c])];
                    if (e == 0) continue;
                    for (const auto& [m, v] : lie_poly_i(cs.entries[c])) {
                        Int add = e * v;
                        if ((recon[m] += add) == 0) recon.erase(m);
                    }
                }
                if (recon != part)
                    throw std::logic_error("from_series: component outside the Lie span");
            }
        }
        // Peel the weight-w block of the normal form off the left.
        Series nf = Series::one(basis_.klass());
        for (int b = basis_.weight_begin(w); b < basis_.weight_end(w); ++b) {
            const Int& e = out.exps[static_cast<size_t>(b)];
            if (e != 0) nf *= entry_series_i(b).group_power(e);
        }
        s = nf.group_inverse() * s;
        for (int d2 = 1; d2 <= w; ++d2)
            if (!s.degree(d2).empty())
                throw std::logic_error("from_series: residue below current weight");
    }
    if (!s.is_one()) throw std::logic_error("from_series: nonzero residue past class bound");
    return out;
}

Series NfEngine::to_series(const NilpotentElement& e) const {
    std::lock_guard<std::mutex> lock(mutex_);
    Series s = Series::one(basis_.klass());
    for (int b = 0; b < basis_.size(); ++b) {
        const Int& x = e.exps[static_cast<size_t>(b)];
        if (x != 0) s *= entry_series_i(b).group_power(x);
    }
    return s;
}

NfEngine& engine_for(int rank, int klass) {
    static std::mutex reg_mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<NfEngine>> engines;
    std::lock_guard<std::mutex> lock(reg_mutex);
    auto key = std::make_pair(rank, klass);
    auto it = engines.find(key);
    if (it == engines.end())
        it = engines.emplace(key, std::make_unique<NfEngine>(rank, klass)).first;
    return *it->second;
}

}  // namespace detail

namespace {

void check_same_basis(const NilpotentElement& a, const NilpotentElement& b) {
    if (a.rank != b.rank || a.klass != b.klass)
        throw std::invalid_argument("nilpotent elements over different bases");
}

}  // namespace

NilpotentElement collect(const GroupWord& w, const HallBasis& basis) {
    for (const auto& syl : w.letters)
        if (syl.gen < 0 || syl.gen >= basis.rank())
            throw std::invalid_argument("collect: word uses a generator outside the basis rank");
    auto& eng = detail::engine_for(basis.rank(), basis.klass());
    return eng.from_series(detail::word_series(w, basis.klass()));
}

NilpotentElement nf_identity(const HallBasis& basis) {
    NilpotentElement e;
    e.rank = basis.rank();
    e.klass = basis.klass();
    e.exps.assign(static_cast<size_t>(basis.size()), 0);
    return e;
}

NilpotentElement nf_multiply(const NilpotentElement& a, const NilpotentElement& b) {
    check_same_basis(a, b);
    auto& eng = detail::engine_for(a.rank, a.klass);
    return eng.from_series(eng.to_series(a) * eng.to_series(b));
}

NilpotentElement nf_inverse(const NilpotentElement& a) {
    auto& eng = detail::engine_for(a.rank, a.klass);
    return eng.from_series(eng.to_series(a).group_inverse());
}

NilpotentElement nf_power(const NilpotentElement& a, const Int& n) {
    auto& eng = detail::engine_for(a.rank, a.klass);
    return eng.from_series(eng.to_series(a).group_power(n));
}

NilpotentElement nf_commutator(const std::vector<NilpotentElement>& parts) {
    if (parts.size() < 2)
        throw std::invalid_argument("nf_commutator: need at least two arguments");
    for (size_t i = 1; i < parts.size(); ++i) check_same_basis(parts[0], parts[i]);
    auto& eng = detail::engine_for(parts[0].rank, parts[0].klass);
    std::vector<detail::Series> ss;
    ss.reserve(parts.size());
    for (const auto& p : parts) ss.push_back(eng.to_series(p));
    return eng.from_series(detail::commutator_series(ss));
}

std::string nf_format(const NilpotentElement& e, const HallBasis& basis) {
    std::string out;
    for (int b = 0; b < basis.size(); ++b) {
        const Int& x = e.exps[static_cast<size_t>(b)];
        if (x == 0) continue;
        if (!out.empty()) out += " ";
        out += basis.entry_name(b);
        if (x != 1) out += "^" + x.str();
    }
    return out.empty() ? "1" : out;
}

}  // namespace wedgelab
