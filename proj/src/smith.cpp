#include "wedgelab/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace wedgelab {

namespace {

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Int int_lcm(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return a / int_gcd(a, b) * b;
}

}  // namespace

Int AbelianInvariants::order() const {
    Int n = 1;
    for (const Int& d : factors) n *= d;
    return n;
}

Int AbelianInvariants::exponent() const {
    Int e = 1;
    for (const Int& d : factors) e = int_lcm(e, d);
    return e;
}

std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m, size_t ncols) {
    for (auto& row : m) row.resize(ncols, 0);
    size_t nrows = m.size();
    size_t rank_bound = std::min(nrows, ncols);

    for (size_t t = 0; t < rank_bound; ++t) {
        // Bring some nonzero entry of the trailing block to the pivot.
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < nrows && !found; ++i)
            for (size_t j = t; j < ncols && !found; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(m[t], m[pi]);
        if (pj != t)
            for (size_t i = 0; i < nrows; ++i) std::swap(m[i][t], m[i][pj]);

        for (bool dirty = true; dirty;) {
            dirty = false;
            // Clear the pivot column by Euclidean row steps.
            for (size_t i = t + 1; i < nrows; ++i) {
                while (m[i][t] != 0) {
                    Int q = m[i][t] / m[t][t];
                    for (size_t j = t; j < ncols; ++j) m[i][j] -= q * m[t][j];
                    if (m[i][t] != 0) std::swap(m[t], m[i]);
                }
            }
            // Clear the pivot row by Euclidean column steps.
            for (size_t j = t + 1; j < ncols; ++j) {
                while (m[t][j] != 0) {
                    Int q = m[t][j] / m[t][t];
                    for (size_t i = t; i < nrows; ++i) m[i][j] -= q * m[i][t];
                    if (m[t][j] != 0) {
                        for (size_t i = 0; i < nrows; ++i) std::swap(m[i][t], m[i][j]);
                        dirty = true;  // column swap may have refilled the pivot column
                    }
                }
            }
            if (dirty) continue;
            // Pivot must divide the rest of the block for the chain property.
            for (size_t i = t + 1; i < nrows && !dirty; ++i)
                for (size_t j = t + 1; j < ncols && !dirty; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (size_t jj = t; jj < ncols; ++jj) m[t][jj] += m[i][jj];
                        dirty = true;
                    }
        }
        if (m[t][t] < 0)
            for (size_t j = t; j < ncols; ++j) m[t][j] = -m[t][j];
    }

    std::vector<Int> diag(ncols, 0);
    for (size_t t = 0; t < rank_bound; ++t) diag[t] = m[t][t];
    return diag;
}

AbelianInvariants abelianization(const Presentation& p) {
    size_t k = p.generators.size();
    std::vector<std::vector<Int>> rows;
    rows.reserve(p.relators.size());
    for (const GroupWord& r : p.relators) {
        std::vector<Int> row(k, 0);
        for (const Syllable& s : r.letters) row[static_cast<size_t>(s.gen)] += s.exp;
        rows.push_back(std::move(row));
    }
    std::vector<Int> diag = smith_diagonal(std::move(rows), k);
    AbelianInvariants inv;
    for (const Int& d : diag) {
        if (d == 0)
            throw std::invalid_argument("abelianization of '" + p.name + "' is infinite");
        if (d > 1) inv.factors.push_back(d);
    }
    return inv;
}

Int AbelianSquares::predicted_nu_order() const {
    return tensor.order() * group.order() * group.order();
}

AbelianSquares abelian_squares(const AbelianInvariants& a) {
    AbelianSquares sq;
    sq.group = a;
    size_t k = a.factors.size();
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) {
            Int g = int_gcd(a.factors[i], a.factors[j]);
            if (g > 1) {
                sq.tensor.factors.push_back(g);
                if (i < j) sq.wedge.factors.push_back(g);
            }
        }
    // Every pairwise gcd equals one of the d_i, so ascending order restores
    // the divisibility chain.
    std::sort(sq.tensor.factors.begin(), sq.tensor.factors.end());
    std::sort(sq.wedge.factors.begin(), sq.wedge.factors.end());
    return sq;
}

}  // namespace wedgelab
