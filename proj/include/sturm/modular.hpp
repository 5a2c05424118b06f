#pragma once

/**
 * @file modular.hpp
 * @brief Arithmetic in Z_m: powers, inverses, orders, primitive roots,
 *        discrete logarithms, lifting-the-exponent, decimal periods.
 *
 * Residues are normalized to [0, m) on construction. Combining residues with
 * different moduli throws std::domain_error instead of coercing.
 */

#include "sturm/core_arith.hpp"

#include <optional>
#include <string>

namespace sturm {

class Residue {
public:
    Residue(const Integer& value, const Integer& modulus);

    const Integer& value() const { return value_; }
    const Integer& modulus() const { return modulus_; }
    bool is_unit() const;

    Residue operator+(const Residue& other) const;
    Residue operator-(const Residue& other) const;
    Residue operator*(const Residue& other) const;
    Residue operator-() const;

    friend bool operator==(const Residue&, const Residue&) = default;

    std::string to_string() const;

private:
    void require_same_modulus(const Residue& other) const;

    Integer value_;
    Integer modulus_;
};

/// Witness that `order` is the multiplicative order of `element`.
struct OrderCertificate {
    Residue element;
    Integer order;

    /// Rechecks element^order == 1 and element^(order/q) != 1 for every prime q | order.
    bool holds() const;
};

/// a^e by square-and-multiply; e >= 0.
Residue mod_pow(const Residue& a, const Integer& e);

/// b with a*b == 1, present iff gcd(a, m) == 1.
std::optional<Residue> mod_inverse(const Residue& a);

/// Least k >= 1 with a^k == 1. Throws std::domain_error when gcd(a, m) != 1.
Integer multiplicative_order(const Residue& a);
OrderCertificate certify_order(const Residue& a);

bool is_primitive_root(const Residue& g);

/// Smallest primitive root mod m, present iff m is 2, 4, p^n or 2p^n with p an odd prime.
std::optional<Residue> find_primitive_root(const Integer& m);

/// Primitive roots modulo the prime p: phi(p - 1).
Integer count_primitive_roots(const Integer& p);

/// Least x >= 0 with a^x == b, by baby-step giant-step. Base must be a unit.
std::optional<Integer> discrete_log(const Residue& a, const Residue& b);

/// nu_p(x^t - 1) = nu_p(x - 1) + nu_p(t), for x == 1 (mod p) and additionally
/// x == 1 (mod 4) when p = 2.
Integer lte_valuation(const Integer& x, const Integer& t, const Integer& p);

/// Period length of the decimal expansion of 1/m, i.e. ord_m(10). Needs gcd(m, 10) = 1.
Integer decimal_period(const Integer& m);

/// True iff every group of order n is cyclic: gcd(n, phi(n)) == 1.
bool is_cyclic_order(const Integer& n);

}  // namespace sturm
