#pragma once

/**
 * @file core_arith.hpp
 * @brief Exact integers and rationals, gcd machinery, factorization, Euler phi.
 *
 * Integer and Rational are arbitrary precision. Factorization and primality
 * are limited to |n| < 2^64; larger inputs raise std::domain_error.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sturm {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

// Text forms: integers as optional sign plus decimal digits, rationals as "num/den".
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);
Integer parse_integer(std::string_view text);
Rational parse_rational(std::string_view text);

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// Fits n into uint64_t or throws std::domain_error naming `what`.
std::uint64_t to_u64(const Integer& n, const char* what = "value");
std::int64_t to_i64(const Integer& n, const char* what = "value");

Integer abs(const Integer& n);
/// Floor division and the matching nonnegative remainder (for positive m).
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& m);

/// Nonnegative gcd. gcd(0, 0) is a domain error.
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

struct GcdResult {
    Integer g;
    Integer x;
    Integer y;
};

/// Extended Euclid: g = gcd(a, b) >= 1 and a*x + b*y = g.
GcdResult gcd_ext(const Integer& a, const Integer& b);

/// One solution of a*x + b*y = c plus the step (dx, dy); every solution is
/// (x0 + t*dx, y0 + t*dy). Absent when gcd(a, b) does not divide c.
struct DiophantineSolution {
    Integer x0;
    Integer y0;
    Integer dx;
    Integer dy;
};
std::optional<DiophantineSolution> solve_linear_diophantine(const Integer& a, const Integer& b,
                                                            const Integer& c);

struct PrimePower {
    Integer prime;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
struct FactoredInt {
    int sign = 1;
    std::vector<PrimePower> factors;

    Integer value() const;
    bool has_prime(const Integer& p) const;
    unsigned exponent_of(const Integer& p) const;
    std::string to_string() const;

    friend bool operator==(const FactoredInt&, const FactoredInt&) = default;
};

FactoredInt factorize(const Integer& n);
bool is_prime(const Integer& n);
Integer euler_phi(const Integer& n);

/// Exponent of p in n (n != 0, p >= 2).
unsigned valuation(Integer n, const Integer& p);

/// Positive divisors in increasing order.
std::vector<Integer> divisors(const Integer& n);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);
Integer ipow(const Integer& base, unsigned exponent);

}  // namespace sturm
