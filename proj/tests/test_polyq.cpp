#include "oracles.hpp"
#include "sturm/polyq.hpp"
#include "sturm/radical.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

using namespace sturm;

namespace {

Poly P(const char* s) { return parse_poly(s); }

Poly random_poly(std::mt19937_64& g, int degree, int num, int den) {
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) c.emplace_back(oracle::uniform(g, -num, num), oracle::uniform(g, 1, den));
    if (c.back() == 0) c.back() = 1;
    return Poly(c);
}

std::vector<Integer> positive_divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> out;
    for (Integer d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

// Exhaustive search for a factor of degree 1 or 2 with integer coefficients.
bool has_small_integer_factor(const Poly& f) {
    const Integer an = numerator(f.leading()), a0 = numerator(f.coeff(0));
    if (a0 == 0) return true;
    double norm2 = 0;
    for (const auto& c : f.coefficients()) norm2 += std::pow(c.convert_to<double>(), 2);
    const Integer bound = static_cast<long long>(2 * std::sqrt(norm2)) + 1;
    for (const auto& a : positive_divisors(an)) {
        for (const auto& c0 : positive_divisors(a0)) {
            for (int s : {1, -1}) {
                const Integer c = s * c0;
                if (f(Rational(-c, a)) == 0) return true;
                if (f.degree() < 4) continue;
                for (Integer b = -bound; b <= bound; ++b) {
                    auto [q, r] = poly_divmod(f, Poly{Rational(c), Rational(b), Rational(a)});
                    if (r.is_zero() && q.has_integer_coefficients()) return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

TEST(PolyText, RoundTrip) {
    EXPECT_EQ(to_string(P("x^3 - 3*x + 1")), "x^3 - 3*x + 1");
    EXPECT_EQ(to_string(P("1/2x^2")), "1/2*x^2");
    EXPECT_EQ(to_string(P("0")), "0");
    EXPECT_EQ(to_string(P("-x^2 + x - 1/3")), "-x^2 + x - 1/3");
    EXPECT_EQ(to_string(P("3x^2+2x^2")), "5*x^2");
    EXPECT_EQ(to_string(P("n^2 + 1"), 'n'), "n^2 + 1");
    EXPECT_THROW(P("x^"), std::invalid_argument);
    EXPECT_THROW(P("x*y"), std::invalid_argument);
    auto g = oracle::rng(1);
    for (int t = 0; t < 300; ++t) {
        Poly f = random_poly(g, static_cast<int>(oracle::uniform(g, 0, 8)), 9, 4);
        ASSERT_EQ(parse_poly(to_string(f)), f) << to_string(f);
    }
}

TEST(PolyDivmod, Examples) {
    auto [q, r] = poly_divmod(P("x^3 - 1"), P("x - 1"));
    EXPECT_EQ(q, P("x^2 + x + 1"));
    EXPECT_TRUE(r.is_zero());
    std::tie(q, r) = poly_divmod(P("x^2 + 1"), P("x - 1"));
    EXPECT_EQ(q, P("x + 1"));
    EXPECT_EQ(r, P("2"));
    std::tie(q, r) = poly_divmod(P("3x^2 - x"), P("1"));
    EXPECT_EQ(q, P("3x^2 - x"));
    EXPECT_TRUE(r.is_zero());
    EXPECT_THROW(poly_divmod(P("x"), Poly{}), std::domain_error);
}

TEST(PolyDivmod, RandomIdentity) {
    auto g = oracle::rng(2);
    for (int t = 0; t < 1000; ++t) {
        Poly f = random_poly(g, static_cast<int>(oracle::uniform(g, 0, 8)), 9, 5);
        Poly d = random_poly(g, static_cast<int>(oracle::uniform(g, 0, 8)), 9, 5);
        auto [q, r] = poly_divmod(f, d);
        ASSERT_EQ(q * d + r, f);
        ASSERT_LT(r.degree(), d.degree());
    }
}

TEST(PolyDivmod, BezoutRemainderIsValue) {
    auto g = oracle::rng(3);
    for (int t = 0; t < 500; ++t) {
        Poly f = random_poly(g, static_cast<int>(oracle::uniform(g, 0, 7)), 20, 3);
        Rational a(oracle::uniform(g, -10, 10), oracle::uniform(g, 1, 4));
        auto [q, r] = poly_divmod(f, Poly::linear_root(a));
        ASSERT_EQ(r.coeff(0), f(a));
        ASSERT_LE(r.degree(), 0);
    }
}

TEST(PolyGcd, Examples) {
    EXPECT_EQ(poly_gcd(P("x^2 - 1"), P("x^2 - 2x + 1")), P("x - 1"));
    EXPECT_EQ(poly_gcd(P("x^2 + 1"), P("x^2 + 2")), P("1"));
    EXPECT_EQ(poly_gcd(P("2x^2 + 4"), Poly{}), P("x^2 + 2"));
    EXPECT_THROW(poly_gcd(Poly{}, Poly{}), std::domain_error);
}

TEST(PolyGcd, CommonFactorRecovered) {
    auto g = oracle::rng(4);
    for (int t = 0; t < 200; ++t) {
        Poly c = random_poly(g, static_cast<int>(oracle::uniform(g, 1, 3)), 5, 1);
        Poly a = random_poly(g, 2, 5, 1), b = random_poly(g, 2, 5, 1);
        Poly d = poly_gcd(c * a, c * b);
        ASSERT_TRUE(poly_divmod(d, c.monic()).second.is_zero());
        ASSERT_TRUE(poly_divmod(c * a, d).second.is_zero());
        ASSERT_TRUE(poly_divmod(c * b, d).second.is_zero());
    }
}

TEST(Derivative, Examples) {
    EXPECT_EQ(derivative(P("x^3")), P("3x^2"));
    EXPECT_TRUE(derivative(P("7")).is_zero());
    Poly f = P("x^2 + 1"), g = P("x - 1");
    EXPECT_EQ(derivative(f * g), derivative(f) * g + f * derivative(g));
    auto r = oracle::rng(5);
    for (int t = 0; t < 200; ++t) {
        Poly a = random_poly(r, 4, 9, 3), b = random_poly(r, 5, 9, 3);
        ASSERT_EQ(derivative(a * b), derivative(a) * b + a * derivative(b));
    }
}

TEST(ShiftPoly, Examples) {
    EXPECT_EQ(shift_poly(P("x^2"), 1), P("x^2 + 2x + 1"));
    Poly phi7 = P("x^6 + x^5 + x^4 + x^3 + x^2 + x + 1");
    Poly s = shift_poly(phi7, 1);
    EXPECT_EQ(s.leading(), 1);
    for (int k = 0; k < 6; ++k) EXPECT_EQ(numerator(s.coeff(k)) % 7, 0) << k;
    EXPECT_EQ(shift_poly(phi7, 0), phi7);
}

TEST(Descartes, Examples) {
    EXPECT_EQ(descartes_bound(P("x^2 + 1")), 0);
    EXPECT_EQ(descartes_bound(P("x^3 - 3x + 1")), 2);
    EXPECT_EQ(descartes_bound(P("x^2 - 3x + 2")), 2);
    EXPECT_THROW(descartes_bound(Poly{}), std::domain_error);
}

TEST(Descartes, BoundsPositiveRootsWithParity) {
    auto g = oracle::rng(6);
    int checked = 0;
    for (int t = 0; t < 1000; ++t) {
        const int deg = t % 2 == 0 ? 3 : 4;
        std::vector<Rational> c;
        for (int k = 0; k <= deg; ++k) c.emplace_back(oracle::uniform(g, -20, 20));
        if (c.back() == 0 || c.front() == 0) continue;
        Poly f(c);
        RootSet rs = deg == 3 ? solve_cubic(f) : solve_quartic(f);
        bool ambiguous = false;
        int positive = 0;
        for (auto z : rs.roots) {
            if (std::abs(z.imag()) > 1e-9 && std::abs(z.imag()) < 1e-4) ambiguous = true;
            if (z.imag() == 0.0 && std::abs(z.real()) < 1e-6) ambiguous = true;
            if (z.imag() == 0.0 && z.real() > 0) ++positive;
        }
        if (ambiguous) continue;
        ++checked;
        const int bound = descartes_bound(f);
        ASSERT_GE(bound, positive) << to_string(f);
        ASSERT_EQ((bound - positive) % 2, 0) << to_string(f);
    }
    EXPECT_GT(checked, 900);
}

TEST(CubicCount, Examples) {
    // x^3 + 2x + 7 and x^3 - 4x - 1.
    EXPECT_EQ(cubic_real_root_count(2, 7).distinct, 1);
    EXPECT_EQ(cubic_real_root_count(-4, -1).distinct, 3);
    EXPECT_EQ(cubic_real_root_count(0, 0), (CubicRootCount{1, true}));
    EXPECT_EQ(cubic_real_root_count(-3, 2).distinct, 2);
}

TEST(CubicCount, MatchesGridOracle) {
    // Distinct real roots = simple roots of f / gcd(f, f'), counted by sign
    // changes on a grid. Integer p, q in [-20, 20] keep roots at least
    // 1/1764 apart, well above the grid step.
    auto g = oracle::rng(7);
    for (int t = 0; t < 500; ++t) {
        const long long p = oracle::uniform(g, -20, 20), q = oracle::uniform(g, -20, 20);
        if (p == 0 && q == 0) continue;
        Poly f{Rational(q), Rational(p), Rational(0), Rational(1)};
        Poly sf = poly_divmod(f, poly_gcd(f, derivative(f))).first;
        const double B = 1.0 + static_cast<double>(std::max(std::abs(p), std::abs(q)));
        std::vector<double> c;
        for (const auto& r : sf.coefficients()) c.push_back(r.convert_to<double>());
        auto eval = [&](double x) {
            double v = 0;
            for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
            return v;
        };
        const double step = 1e-4;
        int changes = 0;
        double prev = eval(-B - 0.37 * step);
        for (double x = -B - 0.37 * step + step; x <= B; x += step) {
            double v = eval(x);
            if ((prev < 0 && v > 0) || (prev > 0 && v < 0)) ++changes;
            prev = v;
        }
        ASSERT_EQ(cubic_real_root_count(p, q).distinct, changes) << p << " " << q;
    }
}

TEST(Depress, Examples) {
    Depressed d = depress(P("x^3 + 3x^2 + 5x + 7"));
    EXPECT_EQ(d.poly, P("x^3 + 2x + 4"));
    EXPECT_EQ(d.shift, 1);
    d = depress(P("x^3 - 3x + 1"));
    EXPECT_EQ(d.poly, P("x^3 - 3x + 1"));
    EXPECT_EQ(d.shift, 0);
    d = depress(P("2x^3 + 6x^2 + 10x + 14"));
    EXPECT_EQ(d.poly, P("x^3 + 2x + 4"));
    EXPECT_EQ(d.shift, 1);
    d = depress(P("x^4 + 4x^3"));
    EXPECT_EQ(d.poly.coeff(3), 0);
    EXPECT_EQ(d.shift, 1);
}

TEST(Eisenstein, Examples) {
    EXPECT_TRUE(eisenstein(P("x^5 - 4x + 2"), 2));
    EXPECT_TRUE(eisenstein(shift_poly(P("x^6 + x^5 + x^4 + x^3 + x^2 + x + 1"), 1), 7));
    EXPECT_FALSE(eisenstein(P("x^2 + 1"), 2));
    EXPECT_FALSE(eisenstein(P("x^2 + 4"), 2));
    EXPECT_THROW(eisenstein(P("5"), 2), std::domain_error);
    EXPECT_THROW(eisenstein(P("1/2x^2 + 1"), 2), std::domain_error);
    EXPECT_THROW(eisenstein(P("x^2 + 2"), 4), std::domain_error);
}

TEST(Eisenstein, ImpliesNoSmallFactor) {
    auto g = oracle::rng(8);
    int certified = 0;
    for (int t = 0; t < 600; ++t) {
        const int deg = static_cast<int>(oracle::uniform(g, 2, 4));
        const int p = std::array<int, 3>{2, 3, 5}[t % 3];
        std::vector<Rational> c(deg + 1);
        const bool shaped = t % 2 == 0;
        for (int k = 0; k <= deg; ++k) {
            long long v = oracle::uniform(g, -6, 6);
            if (shaped && k < deg) v *= p;
            c[k] = v;
        }
        if (c[deg] == 0) c[deg] = 1;
        Poly f(c);
        if (!eisenstein(f, p)) continue;
        ++certified;
        ASSERT_FALSE(has_small_integer_factor(f)) << to_string(f);
    }
    EXPECT_GT(certified, 50);
    // Products never pass.
    EXPECT_FALSE(has_small_integer_factor(P("x^4 + 2x + 2")));
    Poly product = P("x^2 + 2") * P("x^2 + 2x + 2");
    EXPECT_TRUE(has_small_integer_factor(product));
    for (int p : {2, 3, 5, 7}) EXPECT_FALSE(eisenstein(product, p));
}
