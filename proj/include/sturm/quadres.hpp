#pragma once

// Quadratic residues modulo an odd prime.

#include "sturm/core_arith.hpp"

#include <optional>
#include <utility>

namespace sturm {

enum class LegendreValue : int { minus_one = -1, zero = 0, plus_one = 1 };

inline int to_int(LegendreValue v) { return static_cast<int>(v); }

/// Legendre symbol (a/p) by Euler's criterion: a^((p-1)/2) mod p.
LegendreValue legendre_euler(const Integer& a, const Integer& p);

/// Legendre symbol by multiplicativity over the factorization of a, the
/// supplements for -1, 2 and 3, and quadratic reciprocity for odd primes >= 5.
LegendreValue legendre_reciprocity(const Integer& a, const Integer& p);

/// (a/p). Negative a is reduced mod p first; p must be an odd prime.
LegendreValue legendre(const Integer& a, const Integer& p);

/// Both square roots (r, p - r) with r <= p - r; (0, 0) when p | a; absent for non-residues.
std::optional<std::pair<Integer, Integer>> sqrt_mod(const Integer& a, const Integer& p);

struct ResidueCounts {
    Integer residues;
    Integer nonresidues;
};

/// Counts nonzero quadratic residues and non-residues mod p by squaring 1..(p-1)/2.
ResidueCounts count_residues(const Integer& p);

}  // namespace sturm
