// Arbitrary-precision integer helpers shared by every module: exponents in
// words, binomial coefficients, and the integer-only log bounds.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wedgelab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// binomial(n, k) for arbitrary integer n (generalized: binomial(-1, 2) = 1),
// k >= 0.  Exact product formula n(n-1)...(n-k+1)/k!.
inline Int binomial(const Int& n, const Int& k) {
    if (k < 0) return 0;
    Int result = 1;
    Int i = 0;
    while (i < k) {
        result *= (n - i);
        ++i;
        result /= i;  // divides exactly: product of i consecutive integers
    }
    return result;
}

inline Int ipow(const Int& base, const Int& exp) {
    if (exp < 0) throw std::domain_error("ipow: negative exponent");
    Int r = 1, b = base, e = exp;
    while (e > 0) {
        if ((e & 1) != 0) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// floor(log_b x) by repeated multiplication; no floating point.
inline long floor_log(const Int& b, const Int& x) {
    if (b < 2) throw std::domain_error("floor_log: base must be >= 2");
    if (x < 1) throw std::domain_error("floor_log: argument must be >= 1");
    long e = 0;
    Int pw = b;
    while (pw <= x) {
        pw *= b;
        ++e;
    }
    return e;
}

// ceil(log_b x): least e with b^e >= x.
inline long ceil_log(const Int& b, const Int& x) {
    if (b < 2) throw std::domain_error("ceil_log: base must be >= 2");
    if (x < 1) throw std::domain_error("ceil_log: argument must be >= 1");
    long e = 0;
    Int pw = 1;
    while (pw < x) {
        pw *= b;
        ++e;
    }
    return e;
}

inline bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::string to_string(const Int& n) { return n.str(); }

// FNV-1a over a byte string; used for cache keys and sampling seeds.
inline uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace wedgelab
