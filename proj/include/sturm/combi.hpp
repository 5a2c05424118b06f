#pragma once

/**
 * @file combi.hpp
 * @brief Inclusion-exclusion, Bonferroni bounds, derangements, surjections,
 *        circular selections and Burnside orbit counting.
 */

#include "sturm/core_arith.hpp"
#include "sturm/perm.hpp"

#include <utility>
#include <vector>

namespace sturm {

/// M[0] = |U|, M[k] = sum over k-subsets S of |intersection of A_j, j in S|.
struct IntersectionSums {
    std::vector<Integer> M;

    IntersectionSums() = default;
    explicit IntersectionSums(std::vector<Integer> sums);

    /// Number of sets n (M has n + 1 entries).
    unsigned set_count() const { return static_cast<unsigned>(M.size()) - 1; }
    Integer at(unsigned k) const { return k < M.size() ? M[k] : Integer(0); }

    /// Brute-force sums for subsets of {0..universe-1}. Sets may repeat
    /// elements; duplicates are ignored. At most 24 sets.
    static IntersectionSums from_family(unsigned universe, const std::vector<std::vector<unsigned>>& sets);
};

Integer union_size(const IntersectionSums& s);
Integer complement_size(const IntersectionSums& s);

/// Truncations at 2s and 2s+1 terms: lower <= |union| <= upper.
/// Terms M_k with k > n are zero, so large s gives the exact value.
std::pair<Integer, Integer> bonferroni(const IntersectionSums& s, unsigned sdepth);

/// Number of points lying in exactly r of the sets.
Integer exactly_r(const IntersectionSums& s, unsigned r);

Integer derangements(unsigned n);
/// Maps from a k-set onto an n-set.
Integer surjections(unsigned k, unsigned n);
/// k-subsets of an n-cycle with no two chosen elements adjacent.
Integer circular_nonadjacent(unsigned n, unsigned k);

/// A finite permutation group given by its full element list. Closure under
/// composition and inverse is verified on construction.
class GroupAction {
public:
    explicit GroupAction(std::vector<Permutation> elements);
    /// Closure of the generators on {1..degree}.
    static GroupAction generate(unsigned degree, const std::vector<Permutation>& generators);

    unsigned degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }

private:
    unsigned degree_ = 0;
    std::vector<Permutation> elements_;
};

GroupAction cyclic_group(unsigned n);
/// Rotations and reflections of a regular n-gon on its vertices, order 2n.
GroupAction dihedral_group(unsigned n);
/// The 24 rotations of a cube acting on faces U=1 D=2 F=3 B=4 L=5 R=6.
GroupAction cube_face_rotations();

/// Orbits of r-colorings of the points: sum_g r^cycles(g) / |G|.
Integer burnside_orbits(const GroupAction& action, const Integer& colors);

Integer necklaces(unsigned n, const Integer& colors);
/// Necklaces up to rotation and reflection, n odd.
Integer bracelets_odd(unsigned n, const Integer& colors);

}  // namespace sturm
