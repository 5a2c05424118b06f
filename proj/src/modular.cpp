#include "sturm/modular.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace sturm {

namespace {

// Primitive root test modulo an odd prime p: g^((p-1)/q) != 1 for every prime q | p-1.
bool is_primitive_root_mod_prime(const Integer& g, const Integer& p, const FactoredInt& p_minus_1) {
    if (g % p == 0) return false;
    for (const auto& f : p_minus_1.factors) {
        if (powm(g, (p - 1) / f.prime, p) == 1) return false;
    }
    return true;
}

Integer order_with_bound(const Residue& a, const Integer& bound) {
    Integer order = bound;
    for (const auto& f : factorize(bound).factors) {
        while (order % f.prime == 0 && mod_pow(a, order / f.prime).value() == 1) order /= f.prime;
    }
    return order;
}

}  // namespace

Residue::Residue(const Integer& value, const Integer& modulus) : modulus_(modulus) {
    if (modulus < 2) throw std::domain_error("residue modulus must be >= 2, got " + modulus.str());
    value_ = mod_floor(value, modulus);
}

bool Residue::is_unit() const { return gcd(value_, modulus_) == 1; }

void Residue::require_same_modulus(const Residue& other) const {
    if (modulus_ != other.modulus_) {
        throw std::domain_error("residues with different moduli: " + modulus_.str() + " and " +
                                other.modulus_.str());
    }
}

Residue Residue::operator+(const Residue& other) const {
    require_same_modulus(other);
    return {value_ + other.value_, modulus_};
}

Residue Residue::operator-(const Residue& other) const {
    require_same_modulus(other);
    return {value_ - other.value_, modulus_};
}

Residue Residue::operator*(const Residue& other) const {
    require_same_modulus(other);
    return {value_ * other.value_, modulus_};
}

Residue Residue::operator-() const { return {-value_, modulus_}; }

std::string Residue::to_string() const { return value_.str() + " (mod " + modulus_.str() + ")"; }

bool OrderCertificate::holds() const {
    if (order < 1 || mod_pow(element, order).value() != 1) return false;
    for (const auto& f : factorize(order).factors) {
        if (mod_pow(element, order / f.prime).value() == 1) return false;
    }
    return true;
}

Residue mod_pow(const Residue& a, const Integer& e) {
    if (e < 0) throw std::domain_error("mod_pow expects a nonnegative exponent");
    const Integer& m = a.modulus();
    Integer result = 1;
    Integer base = a.value();
    Integer k = e;
    while (k > 0) {
        if ((k & 1) != 0) result = result * base % m;
        base = base * base % m;
        k >>= 1;
    }
    return {result, m};
}

std::optional<Residue> mod_inverse(const Residue& a) {
    GcdResult e = gcd_ext(a.value(), a.modulus());
    if (e.g != 1) return std::nullopt;
    return Residue(e.x, a.modulus());
}

Integer multiplicative_order(const Residue& a) {
    if (!a.is_unit()) {
        throw std::domain_error("multiplicative order undefined: gcd(" + a.value().str() + ", " +
                                a.modulus().str() + ") != 1");
    }
    return order_with_bound(a, euler_phi(a.modulus()));
}

OrderCertificate certify_order(const Residue& a) { return {a, multiplicative_order(a)}; }

bool is_primitive_root(const Residue& g) {
    if (!g.is_unit()) return false;
    return multiplicative_order(g) == euler_phi(g.modulus());
}

std::optional<Residue> find_primitive_root(const Integer& m) {
    if (m < 2) throw std::domain_error("find_primitive_root expects m >= 2");
    if (m == 2) return Residue(1, 2);
    if (m == 4) return Residue(3, 4);

    const bool doubled = m % 2 == 0;
    const Integer odd_part = doubled ? Integer(m / 2) : m;
    if (odd_part % 2 == 0) return std::nullopt;
    FactoredInt fo = factorize(odd_part);
    if (fo.factors.size() != 1) return std::nullopt;
    const Integer p = fo.factors[0].prime;
    const unsigned k = fo.factors[0].exponent;
    const FactoredInt p_minus_1 = factorize(p - 1);
    const Integer p2 = p * p;

    // A unit a is a primitive root mod p^k (k >= 2) iff it is one mod p and
    // a^(p-1) != 1 mod p^2; mod 2p^k it must additionally be odd.
    auto qualifies = [&](const Integer& a) {
        if (doubled && a % 2 == 0) return false;
        if (!is_primitive_root_mod_prime(a, p, p_minus_1)) return false;
        return k == 1 || powm(a, p - 1, p2) != 1;
    };

    // Lifted root: the least root g mod p, or g + p when g^(p-1) == 1 mod p^2.
    Integer g = 2;
    while (!is_primitive_root_mod_prime(g, p, p_minus_1)) ++g;
    Integer lifted = (k >= 2 && powm(g, p - 1, p2) == 1) ? Integer(g + p) : g;
    if (doubled && lifted % 2 == 0) lifted += odd_part;

    for (Integer a = 1; a < lifted; ++a) {
        if (qualifies(a)) return Residue(a, m);
    }
    return Residue(lifted, m);
}

Integer count_primitive_roots(const Integer& p) {
    if (p < 2 || !is_prime(p)) throw std::domain_error("count_primitive_roots expects a prime, got " + p.str());
    return euler_phi(p - 1);
}

std::optional<Integer> discrete_log(const Residue& a, const Residue& b) {
    if (a.modulus() != b.modulus()) throw std::domain_error("discrete_log: moduli differ");
    if (!a.is_unit()) throw std::domain_error("discrete_log: base is not a unit mod " + a.modulus().str());
    const Integer& m = a.modulus();
    if (b.value() == 1) return Integer(0);

    const Integer order = multiplicative_order(a);
    Integer steps = boost::multiprecision::sqrt(order);
    if (steps * steps < order) ++steps;
    if (steps > (1 << 24)) throw std::domain_error("discrete_log: group too large for baby-step giant-step");
    const auto n = steps.convert_to<std::uint64_t>();

    std::map<Integer, std::uint64_t> baby;
    Integer cur = 1;
    for (std::uint64_t j = 0; j < n; ++j) {
        baby.emplace(cur, j);
        cur = cur * a.value() % m;
    }
    const Integer giant = mod_inverse(mod_pow(a, steps))->value();
    Integer gamma = b.value();
    for (std::uint64_t i = 0; i <= n; ++i) {
        if (auto it = baby.find(gamma); it != baby.end()) return Integer(i) * steps + it->second;
        gamma = gamma * giant % m;
    }
    return std::nullopt;
}

Integer lte_valuation(const Integer& x, const Integer& t, const Integer& p) {
    if (p < 2 || !is_prime(p)) throw std::domain_error("lte_valuation: p must be prime");
    if (t < 1) throw std::domain_error("lte_valuation: t must be >= 1");
    if (x == 1) throw std::domain_error("lte_valuation: x = 1 gives an infinite valuation");
    if (mod_floor(x - 1, p) != 0) throw std::domain_error("lte_valuation: x must be 1 mod p");
    if (p == 2 && mod_floor(x - 1, 4) != 0) {
        throw std::domain_error("lte_valuation: for p = 2 the lemma needs x = 1 mod 4");
    }
    return Integer(valuation(x - 1, p)) + valuation(t, p);
}

Integer decimal_period(const Integer& m) {
    if (m < 2) throw std::domain_error("decimal_period expects m >= 2");
    if (gcd(m, 10) != 1) throw std::domain_error("decimal_period needs gcd(m, 10) = 1, got m = " + m.str());
    return multiplicative_order(Residue(10, m));
}

bool is_cyclic_order(const Integer& n) {
    if (n < 1) throw std::domain_error("is_cyclic_order expects n >= 1");
    return gcd(n, euler_phi(n)) == 1;
}

}  // namespace sturm
