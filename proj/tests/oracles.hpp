#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library beyond the Integer type.

#include "sturm/core_arith.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline i64 phi(i64 n) {
    i64 c = 0;
    for (i64 k = 1; k <= n; ++k) c += std::gcd(k, n) == 1 ? 1 : 0;
    return c;
}

inline i64 mod(i64 a, i64 m) { return ((a % m) + m) % m; }

// Repeated multiplication, no squaring.
inline i64 pow_mod(i64 a, i64 e, i64 m) {
    i64 r = 1 % m;
    a = mod(a, m);
    for (i64 k = 0; k < e; ++k) r = r * a % m;
    return r;
}

// Least k >= 1 with a^k = 1 (mod m), 0 if none.
inline i64 order(i64 a, i64 m) {
    a = mod(a, m);
    i64 x = a;
    for (i64 k = 1; k <= m; ++k) {
        if (x == 1 % m) return k;
        x = x * a % m;
    }
    return 0;
}

// Smallest g with order phi(m), 0 if none.
inline i64 smallest_primitive_root(i64 m) {
    const i64 ph = phi(m);
    for (i64 g = 1; g < m; ++g)
        if (std::gcd(g, m) == 1 && order(g, m) == ph) return g;
    return m == 2 ? 1 : 0;
}

inline bool is_square_mod(i64 a, i64 p) {
    for (i64 x = 0; x < p; ++x)
        if (x * x % p == mod(a, p)) return true;
    return false;
}

// Period of the decimal expansion of 1/m by long division remainders.
inline i64 decimal_period(i64 m) {
    std::vector<i64> seen(static_cast<std::size_t>(m), -1);
    i64 r = 1 % m;
    for (i64 pos = 0;; ++pos) {
        if (seen[static_cast<std::size_t>(r)] >= 0) return pos - seen[static_cast<std::size_t>(r)];
        seen[static_cast<std::size_t>(r)] = pos;
        r = r * 10 % m;
    }
}

inline unsigned valuation(sturm::Integer x, const sturm::Integer& p) {
    unsigned v = 0;
    while (x != 0 && x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

// n is a power of two times a divisor of 2^32 - 1 = 3 * 5 * 17 * 257 * 65537.
inline bool constructible(std::uint64_t n) {
    while (n % 2 == 0) n /= 2;
    return 4294967295ull % n == 0;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline i64 uniform(std::mt19937_64& g, i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(g); }

}  // namespace oracle
