// Exponent-bound calculators for e(G^G) and e(M(G)) in terms of nilpotency
// class c, prime p, and derived length d, plus the two comparison tables the
// workbench reproduces.  All logarithms are exact integer arithmetic by
// repeated multiplication; nothing here touches floating point.
#pragma once

#include <string>

#include "wedgelab/ints.hpp"

namespace wedgelab {

// Largest k with base^k <= x, and smallest k with base^k >= x (x >= 1).
int64_t floor_log(int64_t base, int64_t x);
int64_t ceil_log(int64_t base, int64_t x);

// ceil(c/2): the wedge-power bound via gamma_{ceil(c/2)} abelianization.
int64_t ellis_bound(int64_t c);

// 2*floor(log2 c): the earlier general-p bound compared against.
int64_t moravec_bound(int64_t c);

// Smallest n with 3*2^n >= c+1, i.e. ceil(log2((c+1)/3)); needs c > 2.
// Yields e(G^G) | e(G)^n for groups of odd order.
int64_t log2_bound(int64_t c);

// floor(log_{p-1} c) + 1: the earlier odd-p bound compared against.
int64_t sambonet_bound(int64_t c, int64_t p);

// ceil(log_{p-1} c) for c != 1: yields e(G^G) | e(G)^n for p-groups.
int64_t logp_bound(int64_t c, int64_t p);

// Solvable bounds: e(G(x)G) | e(G)^d for odd |G|, with an extra factor
// 2^{d-1} when |G| is even; the relative form e(N(x)G) carries 2^d instead.
Int solvable_tensor_bound(const Int& e, int d, bool even_order);
Int solvable_relative_bound(const Int& e, int d, bool even_order);

// Fixed comparison tables over the published sample rows; byte-stable.
std::string emit_table1();
std::string emit_table2();

}  // namespace wedgelab
