#include "oracles.hpp"
#include "sturm/quadres.hpp"

#include <gtest/gtest.h>

using namespace sturm;

namespace {

std::vector<int> odd_primes(int limit) {
    std::vector<int> out;
    for (int p = 3; p <= limit; ++p)
        if (oracle::is_prime(p)) out.push_back(p);
    return out;
}

int brute_legendre(int a, int p) {
    if (oracle::mod(a, p) == 0) return 0;
    return oracle::is_square_mod(a, p) ? 1 : -1;
}

}  // namespace

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre(2, 7), LegendreValue::plus_one);
    EXPECT_EQ(legendre(3, 5), LegendreValue::minus_one);
    EXPECT_EQ(legendre(49, 11), LegendreValue::plus_one);
    EXPECT_EQ(legendre(0, 11), LegendreValue::zero);
    EXPECT_EQ(legendre(-1, 13), LegendreValue::plus_one);
    EXPECT_THROW(legendre(1, 2), std::domain_error);
    EXPECT_THROW(legendre(1, 9), std::domain_error);
}

TEST(Legendre, RoutesAgreeUpTo500) {
    for (int p : odd_primes(500)) {
        for (int a = 0; a < p; ++a) {
            auto e = legendre_euler(a, p);
            ASSERT_EQ(e, legendre_reciprocity(a, p)) << a << "/" << p;
            ASSERT_EQ(to_int(e), brute_legendre(a, p));
        }
        ASSERT_EQ(legendre_reciprocity(-7, p), legendre_euler(-7, p));
    }
}

TEST(Legendre, Supplements) {
    for (int p : odd_primes(500)) {
        const int r8 = p % 8, r12 = p % 12;
        EXPECT_EQ(to_int(legendre(2, p)), (r8 == 1 || r8 == 7) ? 1 : -1) << p;
        if (p != 3) EXPECT_EQ(to_int(legendre(3, p)), (r12 == 1 || r12 == 11) ? 1 : -1) << p;
        EXPECT_EQ(to_int(legendre(-1, p)), p % 4 == 1 ? 1 : -1) << p;
    }
}

TEST(Legendre, Multiplicative) {
    for (int p : odd_primes(100))
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b)
                ASSERT_EQ(to_int(legendre(a * b, p)), to_int(legendre(a, p)) * to_int(legendre(b, p)));
}

TEST(Legendre, GaussLemmaFormula) {
    // (a/p) = (-1)^(sum_{x=1}^{(p-1)/2} floor(2ax/p)).
    for (int p : odd_primes(100)) {
        for (int a = 1; a < p; ++a) {
            long long s = 0;
            for (int x = 1; x <= (p - 1) / 2; ++x) s += (2LL * a * x) / p;
            ASSERT_EQ(to_int(legendre(a, p)), s % 2 == 0 ? 1 : -1) << a << "/" << p;
        }
    }
}

TEST(Wilson, FactorialPlusOne) {
    for (int p = 2; p <= 200; ++p) {
        if (!oracle::is_prime(p)) continue;
        EXPECT_EQ((factorial(p - 1) + 1) % p, 0) << p;
    }
}

TEST(SqrtMod, Examples) {
    auto r = sqrt_mod(2, 7);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->first, 3);
    EXPECT_EQ(r->second, 4);
    EXPECT_FALSE(sqrt_mod(3, 7));
    r = sqrt_mod(0, 7);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->first, 0);
    EXPECT_EQ(r->second, 0);
}

TEST(SqrtMod, MatchesBruteSquares) {
    for (int p : odd_primes(400)) {
        for (int a = 0; a < p; ++a) {
            auto r = sqrt_mod(a, p);
            ASSERT_EQ(r.has_value(), a == 0 || oracle::is_square_mod(a, p));
            if (!r) continue;
            ASSERT_EQ((r->first * r->first - a) % p, 0);
            ASSERT_EQ(r->first + r->second, a == 0 ? 0 : p);
            ASSERT_LE(r->first, r->second);
        }
    }
}

TEST(SqrtMod, LargePrimesTakeTheGeneralPath) {
    // 998244353 - 1 = 119 * 2^23 exercises the full two-adic loop.
    for (const char* ps : {"998244353", "1000000009", "1000000007", "18446744073709551557"}) {
        const Integer p(ps);
        for (int a : {2, 3, 5, 6, 7, 10, 11, 12345}) {
            auto r = sqrt_mod(a, p);
            ASSERT_EQ(r.has_value(), legendre(a, p) == LegendreValue::plus_one);
            if (r) ASSERT_EQ((r->first * r->first - a) % p, 0);
        }
    }
}

TEST(CountResidues, Examples) {
    auto c = count_residues(7);
    EXPECT_EQ(c.residues, 3);
    EXPECT_EQ(c.nonresidues, 3);
    c = count_residues(5);
    EXPECT_EQ(c.residues, 2);
    EXPECT_EQ(c.nonresidues, 2);
    c = count_residues(3);
    EXPECT_EQ(c.residues, 1);
    EXPECT_EQ(c.nonresidues, 1);
}
