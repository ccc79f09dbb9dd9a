#include "wedgelab/bounds.hpp"

#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace wedgelab {

int64_t floor_log(int64_t base, int64_t x) {
    if (base < 2 || x < 1) throw std::invalid_argument("floor_log needs base >= 2, x >= 1");
    int64_t k = 0;
    Int pw = base;
    while (pw <= x) {
        ++k;
        pw *= base;
    }
    return k;
}

int64_t ceil_log(int64_t base, int64_t x) {
    if (base < 2 || x < 1) throw std::invalid_argument("ceil_log needs base >= 2, x >= 1");
    int64_t k = 0;
    Int pw = 1;
    while (pw < x) {
        ++k;
        pw *= base;
    }
    return k;
}

int64_t ellis_bound(int64_t c) {
    if (c < 1) throw std::invalid_argument("ellis_bound needs c >= 1");
    return (c + 1) / 2;
}

int64_t moravec_bound(int64_t c) {
    if (c < 1) throw std::invalid_argument("moravec_bound needs c >= 1");
    return 2 * floor_log(2, c);
}

int64_t log2_bound(int64_t c) {
    if (c <= 2) throw std::invalid_argument("log2_bound needs c > 2");
    int64_t n = 0;
    Int pw = 3;  // 3 * 2^n
    while (pw < c + 1) {
        ++n;
        pw *= 2;
    }
    return n;
}

int64_t sambonet_bound(int64_t c, int64_t p) {
    if (p < 3 || c < 1) throw std::invalid_argument("sambonet_bound needs odd p, c >= 1");
    return floor_log(p - 1, c) + 1;
}

int64_t logp_bound(int64_t c, int64_t p) {
    if (p < 3 || c < 2) throw std::invalid_argument("logp_bound needs odd p, c != 1");
    return ceil_log(p - 1, c);
}

Int solvable_tensor_bound(const Int& e, int d, bool even_order) {
    if (d < 1) throw std::invalid_argument("derived length must be >= 1");
    Int b = 1;
    for (int i = 0; i < d; ++i) b *= e;
    if (even_order)
        for (int i = 0; i < d - 1; ++i) b *= 2;
    return b;
}

Int solvable_relative_bound(const Int& e, int d, bool even_order) {
    Int b = solvable_tensor_bound(e, d, even_order);
    if (even_order) b *= 2;  // 2^d rather than 2^{d-1}
    return b;
}

namespace {

constexpr std::array<int64_t, 7> kTable1C = {3, 4, 5, 6, 11, 20, 100};

struct Table2Row {
    int64_t c, p, n;
    int64_t cited_exp;  // published exponent k in p^k; not derivable here
};
constexpr std::array<Table2Row, 6> kTable2 = {{
    {5, 3, 1, 2},
    {5, 3, 2, 8},
    {6, 7, 1, 2},
    {12, 13, 2, 12},
    {16, 5, 1, 4},
    {144, 13, 1, 14},
}};

std::string power_str(int64_t p, int64_t k) {
    return std::to_string(p) + "^" + std::to_string(k);
}

}  // namespace

std::string emit_table1() {
    std::ostringstream os;
    os << "  c   ceil(c/2)   2*floor(log2(c))   ceil(log2((c+1)/3))\n";
    for (int64_t c : kTable1C) {
        os << std::setw(3) << c << "   " << std::setw(9) << ellis_bound(c) << "   "
           << std::setw(16) << moravec_bound(c) << "   " << std::setw(19) << log2_bound(c)
           << "\n";
    }
    return os.str();
}

std::string emit_table2() {
    std::ostringstream os;
    os << "  c    p   n   cited     floor-log   ceil-log\n";
    for (const Table2Row& r : kTable2) {
        int64_t s = r.n * sambonet_bound(r.c, r.p);
        int64_t t = r.n * logp_bound(r.c, r.p);
        os << std::setw(3) << r.c << "   " << std::setw(2) << r.p << "   " << r.n << "   "
           << std::setw(7) << std::left << power_str(r.p, r.cited_exp) << std::right << "   "
           << std::setw(9) << std::left << power_str(r.p, s) << std::right << "   "
           << power_str(r.p, t) << "\n";
    }
    return os.str();
}

}  // namespace wedgelab
