#include "oracles.hpp"
#include "sturm/perm.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace sturm;

namespace {

Permutation C(const char* s, unsigned n) { return parse_cycles(s, n); }

std::vector<Permutation> all_perms(unsigned n) {
    std::vector<unsigned> im(n);
    std::iota(im.begin(), im.end(), 1u);
    std::vector<Permutation> out;
    do out.push_back(Permutation::from_images(im));
    while (std::next_permutation(im.begin(), im.end()));
    return out;
}

// Order by iteration: least k with f^k = id.
long long brute_order(const Permutation& f) {
    Permutation x = f;
    long long k = 1;
    while (!x.is_identity()) {
        x = compose(f, x);
        ++k;
    }
    return k;
}

// Parity by counting inversions.
Parity inversion_parity(const Permutation& f) {
    int inv = 0;
    for (unsigned i = 1; i <= f.size(); ++i)
        for (unsigned j = i + 1; j <= f.size(); ++j)
            if (f(i) > f(j)) ++inv;
    return inv % 2 == 0 ? Parity::even : Parity::odd;
}

Permutation random_perm(std::mt19937_64& g, unsigned n) {
    std::vector<unsigned> im(n);
    std::iota(im.begin(), im.end(), 1u);
    std::shuffle(im.begin(), im.end(), g);
    return Permutation::from_images(im);
}

}  // namespace

TEST(Perm, CompositionExamples) {
    EXPECT_EQ(to_cycle_string(compose(C("(1 2)", 3), C("(1 3)", 3))), "(1 3 2)");
    EXPECT_TRUE(compose(C("(1 2 3)", 3), C("(1 3 2)", 3)).is_identity());
    EXPECT_EQ(to_cycle_string(Permutation(4)), "()");
    EXPECT_EQ(to_cycle_string(C("(2 4)", 4), true), "(1)(2 4)(3)");
}

TEST(Perm, TypeAndCountExamples) {
    EXPECT_EQ(cycle_type(C("(1 4)(2 5 3)", 5)).to_string(), "<2,3>");
    EXPECT_EQ(count_of_type(5, parse_cycle_type("<2,3>")), 20);
    EXPECT_EQ(count_of_type(6, parse_cycle_type("<3,3>")), 40);
    EXPECT_EQ(count_of_type(4, parse_cycle_type("<1,1,2>")), 6);
    EXPECT_THROW(count_of_type(6, parse_cycle_type("<2,3>")), std::domain_error);
    EXPECT_EQ(cycle_type(Permutation(3)).to_string(), "<1,1,1>");
}

TEST(Perm, ConjugateExample) {
    Permutation a = C("(1 2)", 3), x = C("(1 3)", 3);
    EXPECT_EQ(conjugate_by(a, x), C("(2 3)", 3));
    EXPECT_TRUE(are_conjugate(a, C("(2 3)", 3)));
    EXPECT_FALSE(are_conjugate(a, C("(1 2 3)", 3)));
    EXPECT_THROW(are_conjugate(a, C("(1 2)", 4)), std::domain_error);
}

TEST(Perm, FifteenPointOrder105) {
    Permutation f = C("(1 3 10)(2 5 11 4 8 6 14)(7 15 12 9 13)", 15);
    EXPECT_EQ(order(f), 105);
    EXPECT_EQ(brute_order(f), 105);
    EXPECT_EQ(cycle_type(f).to_string(), "<3,5,7>");
}

TEST(Perm, ParseErrors) {
    EXPECT_THROW(parse_cycles("(1 2", 0), std::invalid_argument);
    EXPECT_THROW(parse_cycles("(1 1)", 0), std::invalid_argument);
    EXPECT_THROW(parse_cycles("(0 1)", 0), std::invalid_argument);
    EXPECT_THROW(parse_cycles("(1 a)", 0), std::invalid_argument);
    EXPECT_THROW(parse_cycle_type("<0,2>"), std::invalid_argument);
    EXPECT_THROW(Permutation::from_images({1, 1, 2}), std::domain_error);
    EXPECT_EQ(parse_cycles("(1,3)(2 4)", 0).size(), 4u);
    EXPECT_EQ(parse_cycles("()", 5), Permutation(5));
}

TEST(Perm, S5OrderParityAndInverse) {
    auto s5 = all_perms(5);
    ASSERT_EQ(s5.size(), 120u);
    int even = 0;
    for (const auto& f : s5) {
        const auto ct = cycle_type(f);
        Integer l = 1;
        for (unsigned len : ct.lengths) l = lcm(l, Integer(len));
        ASSERT_EQ(order(f), l);
        ASSERT_EQ(order(f), brute_order(f));
        ASSERT_EQ(parity(f), inversion_parity(f));
        ASSERT_EQ(ct.total(), 5u);
        ASSERT_TRUE(compose(f, inverse(f)).is_identity());
        ASSERT_TRUE(power(f, order(f).convert_to<long long>()).is_identity());
        ASSERT_EQ(power(f, -1), inverse(f));
        ASSERT_EQ(parse_cycles(to_cycle_string(f), 5), f);
        if (parity(f) == Parity::even) ++even;
    }
    EXPECT_EQ(even, 60);
}

TEST(Perm, ParityIsAHomomorphism) {
    auto s5 = all_perms(5);
    for (const auto& f : s5)
        for (const auto& g : s5)
            ASSERT_EQ(parity(compose(f, g)) == Parity::even, parity(f) == parity(g));
}

TEST(Perm, AssociativeInS4) {
    auto s4 = all_perms(4);
    for (const auto& f : s4)
        for (const auto& g : s4)
            for (const auto& h : s4) ASSERT_EQ(compose(f, compose(g, h)), compose(compose(f, g), h));
}

TEST(Perm, CountOfTypeMatchesEnumeration) {
    for (unsigned n = 1; n <= 7; ++n) {
        std::map<std::vector<unsigned>, long long> tally;
        for (const auto& f : all_perms(n)) ++tally[cycle_type(f).lengths];
        Integer total = 0;
        for (const auto& [lengths, count] : tally) {
            ASSERT_EQ(count_of_type(n, CycleType(lengths)), count) << CycleType(lengths).to_string();
            total += count;
        }
        ASSERT_EQ(total, factorial(n));
    }
}

TEST(Perm, ConjugateIffSameType) {
    auto g = oracle::rng(31);
    for (int t = 0; t < 500; ++t) {
        Permutation a = random_perm(g, 7), b = random_perm(g, 7), x = random_perm(g, 7);
        ASSERT_EQ(are_conjugate(a, b), cycle_type(a) == cycle_type(b));
        Permutation c = conjugate_by(a, x);
        ASSERT_EQ(cycle_type(c), cycle_type(a));
        ASSERT_EQ(compose(c, x), compose(x, a));
    }
}

TEST(Perm, CycleDecompositionCanonical) {
    auto g = oracle::rng(32);
    for (int t = 0; t < 200; ++t) {
        Permutation f = random_perm(g, 9);
        auto cycles = cycle_decomposition(f);
        unsigned covered = 0, prev = 0;
        for (const auto& c : cycles) {
            ASSERT_EQ(*std::min_element(c.begin(), c.end()), c.front());
            ASSERT_GT(c.front(), prev);
            prev = c.front();
            covered += static_cast<unsigned>(c.size());
            for (std::size_t k = 0; k < c.size(); ++k) ASSERT_EQ(f(c[k]), c[(k + 1) % c.size()]);
        }
        ASSERT_EQ(covered, 9u);
        ASSERT_EQ(cycle_count(f), cycles.size());
        ASSERT_EQ(Permutation::from_cycles(9, cycles), f);
    }
}
