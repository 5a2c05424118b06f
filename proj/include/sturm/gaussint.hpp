#pragma once

/**
 * @file gaussint.hpp
 * @brief Gaussian integers a + bi: Euclidean division, gcd, primes,
 *        unique factorization and sums of two squares.
 *
 * Canonical associate of a nonzero z: the unique one with re > 0 and
 * -re < im <= re. For primes this is the associate with re > 0, re >= |im|,
 * with 1+i chosen for the norm-2 class.
 */

#include "sturm/core_arith.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sturm {

struct GaussianInt {
    Integer re;
    Integer im;

    GaussianInt() = default;
    GaussianInt(Integer real, Integer imag = 0) : re(std::move(real)), im(std::move(imag)) {}

    Integer norm() const { return re * re + im * im; }
    GaussianInt conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_unit() const { return norm() == 1; }

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator-() const { return {-re, -im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }

    friend bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

/// "a+bi", "a-bi", "bi", "a", "i", "-i".
std::string to_string(const GaussianInt& z);
GaussianInt parse_gaussian(std::string_view text);

/// Associate in the canonical sector (see file comment). z != 0.
GaussianInt canonical(const GaussianInt& z);

/// True iff b divides a exactly.
bool g_divides(const GaussianInt& b, const GaussianInt& a);

/// a = q*b + r with norm(r) <= norm(b)/2. Each coordinate of the exact quotient
/// is rounded to nearest, ties toward minus infinity.
std::pair<GaussianInt, GaussianInt> g_divmod(const GaussianInt& a, const GaussianInt& b);

/// Canonical gcd. (0, 0) is a domain error.
GaussianInt g_gcd(const GaussianInt& a, const GaussianInt& b);

bool is_g_prime(const GaussianInt& z);

struct GaussianPrimePower {
    GaussianInt prime;
    unsigned exponent = 0;

    friend bool operator==(const GaussianPrimePower&, const GaussianPrimePower&) = default;
};

struct GaussianFactorization {
    GaussianInt unit{1};
    std::vector<GaussianPrimePower> factors;

    GaussianInt value() const;
    std::string to_string() const;
};

/// Canonical primes sorted by (norm, re, im); the unit absorbs the rest.
GaussianFactorization g_factor(const GaussianInt& z);

/// Lexicographically smallest (a, b), 0 <= a <= b, with a^2 + b^2 = n.
std::optional<std::pair<Integer, Integer>> two_squares(const Integer& n);

}  // namespace sturm
