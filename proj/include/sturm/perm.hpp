#pragma once

/**
 * @file perm.hpp
 * @brief Permutations of {1..n}: composition, inverse, cycles, order, type,
 *        conjugacy, parity, counting by type.
 *
 * Elements are 1-based throughout. Composition follows (f o g)(x) = f(g(x)).
 * Canonical cycle form: each cycle starts at its minimum, cycles sorted by
 * first element, fixed points included as 1-cycles.
 */

#include "sturm/core_arith.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sturm {

class Permutation {
public:
    /// Identity on {1..n}.
    explicit Permutation(unsigned n = 0);
    /// images[k-1] = f(k); must be a bijection of {1..n}.
    static Permutation from_images(std::vector<unsigned> images);
    /// Product of the given cycles (applied right to left) on {1..n}.
    static Permutation from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles);

    unsigned size() const { return static_cast<unsigned>(images_.size()); }
    unsigned operator()(unsigned x) const { return images_[x - 1]; }
    const std::vector<unsigned>& images() const { return images_; }
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<unsigned> images_;
};

/// Cycle lengths in increasing order, fixed points included.
struct CycleType {
    std::vector<unsigned> lengths;

    CycleType() = default;
    explicit CycleType(std::vector<unsigned> lengths);

    unsigned total() const;
    /// "<1,2,3>"
    std::string to_string() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;
};

enum class Parity { even, odd };

Permutation compose(const Permutation& f, const Permutation& g);
Permutation inverse(const Permutation& f);
Permutation power(const Permutation& f, long long k);
std::vector<std::vector<unsigned>> cycle_decomposition(const Permutation& f);
CycleType cycle_type(const Permutation& f);
unsigned cycle_count(const Permutation& f);
Integer order(const Permutation& f);
bool are_conjugate(const Permutation& a, const Permutation& b);
/// x o a o x^-1
Permutation conjugate_by(const Permutation& a, const Permutation& x);
/// n! / (prod of lengths * prod over lengths of multiplicity!)
Integer count_of_type(unsigned n, const CycleType& t);
Parity parity(const Permutation& f);

/// "(1 3 10)(2 5 11 4 8 14)"; "()" for the identity. Fixed points omitted
/// unless requested.
std::string to_cycle_string(const Permutation& f, bool with_fixed_points = false);
/// Cycle notation with whitespace- or comma-separated elements. The size is
/// max(n, largest element mentioned).
Permutation parse_cycles(std::string_view text, unsigned n = 0);
/// "<2,3>" or "2,3" or "2 3".
CycleType parse_cycle_type(std::string_view text);

}  // namespace sturm
