#include "sturm/combi.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sturm {

namespace {

Integer nonnegative(Integer v, const char* what) {
    if (v < 0) throw std::domain_error(std::string(what) + " is negative: inconsistent intersection sums");
    return v;
}

}  // namespace

IntersectionSums::IntersectionSums(std::vector<Integer> sums) : M(std::move(sums)) {
    if (M.empty()) throw std::domain_error("intersection sums need at least M0");
    for (const auto& m : M)
        if (m < 0) throw std::domain_error("intersection sums must be nonnegative");
}

IntersectionSums IntersectionSums::from_family(unsigned universe, const std::vector<std::vector<unsigned>>& sets) {
    const std::size_t n = sets.size();
    if (n > 24) throw std::domain_error("from_family supports at most 24 sets");
    std::vector<std::vector<bool>> member(n, std::vector<bool>(universe, false));
    for (std::size_t j = 0; j < n; ++j) {
        for (unsigned x : sets[j]) {
            if (x >= universe) throw std::domain_error("set element " + std::to_string(x) + " outside universe");
            member[j][x] = true;
        }
    }
    // For each point, the number of sets containing it is c; it contributes
    // C(c, k) to M_k.
    std::vector<Integer> M(n + 1, 0);
    for (unsigned x = 0; x < universe; ++x) {
        unsigned c = 0;
        for (std::size_t j = 0; j < n; ++j) c += member[j][x] ? 1 : 0;
        for (unsigned k = 0; k <= c; ++k) M[k] += binomial(c, k);
    }
    return IntersectionSums(std::move(M));
}

Integer union_size(const IntersectionSums& s) {
    Integer acc = 0;
    for (unsigned k = 1; k <= s.set_count(); ++k) acc += (k % 2 == 1 ? 1 : -1) * s.M[k];
    return nonnegative(acc, "union size");
}

Integer complement_size(const IntersectionSums& s) { return nonnegative(s.M[0] - union_size(s), "complement size"); }

std::pair<Integer, Integer> bonferroni(const IntersectionSums& s, unsigned sdepth) {
    Integer lower = 0;
    for (unsigned k = 1; k <= 2 * sdepth; ++k) lower += (k % 2 == 1 ? 1 : -1) * s.at(k);
    Integer upper = lower + s.at(2 * sdepth + 1);
    return {lower, upper};
}

Integer exactly_r(const IntersectionSums& s, unsigned r) {
    const unsigned n = s.set_count();
    if (r > n) throw std::domain_error("exactly_r: r exceeds the number of sets");
    Integer acc = 0;
    for (unsigned k = r; k <= n; ++k) acc += ((k - r) % 2 == 0 ? 1 : -1) * binomial(k, r) * s.M[k];
    return nonnegative(acc, "exactly_r count");
}

Integer derangements(unsigned n) {
    if (n == 0) return 1;
    Integer prev2 = 1, prev1 = 0;  // D0, D1
    for (unsigned k = 2; k <= n; ++k) {
        Integer next = Integer(k - 1) * (prev1 + prev2);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

Integer surjections(unsigned k, unsigned n) {
    Integer acc = 0;
    for (unsigned i = 0; i <= n; ++i) {
        Integer term = binomial(n, i) * ipow(Integer(n - i), k);
        acc += (i % 2 == 0) ? term : Integer(-term);
    }
    return acc;
}

Integer circular_nonadjacent(unsigned n, unsigned k) {
    if (n < 3) throw std::domain_error("circular_nonadjacent needs n >= 3");
    if (k == 0) return 1;
    if (2 * k > n) return 0;
    Integer num = Integer(n) * binomial(n - k, k);
    Integer den = n - k;
    if (num % den != 0) throw std::logic_error("circular_nonadjacent: non-integer count");
    return num / den;
}

GroupAction::GroupAction(std::vector<Permutation> elements) {
    if (elements.empty()) throw std::domain_error("group needs at least one element");
    degree_ = elements.front().size();
    std::set<Permutation> seen;
    for (const auto& g : elements) {
        if (g.size() != degree_) throw std::domain_error("group elements act on different point sets");
        if (!seen.insert(g).second) throw std::domain_error("duplicate group element " + to_cycle_string(g));
    }
    for (const auto& g : elements) {
        if (!seen.contains(inverse(g))) throw std::domain_error("not closed under inverse: " + to_cycle_string(g));
        for (const auto& h : elements) {
            if (!seen.contains(compose(g, h))) {
                throw std::domain_error("not closed under composition: " + to_cycle_string(g) + " * " +
                                        to_cycle_string(h));
            }
        }
    }
    elements_ = std::move(elements);
}

GroupAction GroupAction::generate(unsigned degree, const std::vector<Permutation>& generators) {
    std::set<Permutation> seen{Permutation(degree)};
    std::vector<Permutation> frontier{Permutation(degree)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& g : frontier) {
            for (const auto& s : generators) {
                if (s.size() != degree) throw std::domain_error("generator size does not match degree");
                Permutation h = compose(s, g);
                if (seen.insert(h).second) next.push_back(std::move(h));
            }
        }
        frontier = std::move(next);
    }
    return GroupAction(std::vector<Permutation>(seen.begin(), seen.end()));
}

GroupAction cyclic_group(unsigned n) {
    if (n == 0) throw std::domain_error("cyclic_group needs n >= 1");
    std::vector<unsigned> rot(n);
    for (unsigned k = 0; k < n; ++k) rot[k] = (k + 1) % n + 1;
    return GroupAction::generate(n, {Permutation::from_images(rot)});
}

GroupAction dihedral_group(unsigned n) {
    if (n < 3) throw std::domain_error("dihedral_group needs n >= 3");
    std::vector<unsigned> rot(n), flip(n);
    for (unsigned k = 0; k < n; ++k) {
        rot[k] = (k + 1) % n + 1;
        flip[k] = (n - k) % n + 1;
    }
    return GroupAction::generate(n, {Permutation::from_images(rot), Permutation::from_images(flip)});
}

GroupAction cube_face_rotations() {
    // Quarter turns about the U-D and F-B axes generate all rotations.
    return GroupAction::generate(6, {parse_cycles("(3 6 4 5)", 6), parse_cycles("(1 6 2 5)", 6)});
}

Integer burnside_orbits(const GroupAction& action, const Integer& colors) {
    if (colors < 0) throw std::domain_error("color count must be nonnegative");
    Integer total = 0;
    for (const auto& g : action.elements()) total += ipow(colors, cycle_count(g));
    const Integer group_order = action.order();
    if (total % group_order != 0) throw std::logic_error("Burnside quotient is not an integer");
    return total / group_order;
}

Integer necklaces(unsigned n, const Integer& colors) {
    if (n == 0) throw std::domain_error("necklaces needs n >= 1");
    if (colors < 0) throw std::domain_error("color count must be nonnegative");
    Integer total = 0;
    for (const auto& d : divisors(Integer(n))) total += euler_phi(d) * ipow(colors, n / static_cast<unsigned>(d));
    if (total % n != 0) throw std::logic_error("necklace count is not an integer");
    return total / n;
}

Integer bracelets_odd(unsigned n, const Integer& colors) {
    if (n % 2 == 0) throw std::domain_error("bracelets_odd needs odd n");
    const Integer twice = necklaces(n, colors) + ipow(colors, (n + 1) / 2);
    if (twice % 2 != 0) throw std::logic_error("bracelet count is not an integer");
    return twice / 2;
}

}  // namespace sturm
