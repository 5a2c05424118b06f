#include "sturm/quadres.hpp"

#include <stdexcept>
#include <vector>

namespace sturm {

namespace {

void require_odd_prime(const Integer& p, const char* who) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) {
        throw std::domain_error(std::string(who) + ": modulus must be an odd prime, got " + p.str());
    }
}

LegendreValue from_sign(bool positive) { return positive ? LegendreValue::plus_one : LegendreValue::minus_one; }

// (2/p) = (-1)^((p^2 - 1)/8): +1 exactly when p = +-1 (mod 8).
LegendreValue two_over(const Integer& p) {
    Integer r = p % 8;
    return from_sign(r == 1 || r == 7);
}

// (3/p) = +1 exactly when p = +-1 (mod 12).
LegendreValue three_over(const Integer& p) {
    Integer r = p % 12;
    return from_sign(r == 1 || r == 11);
}

Integer tonelli_shanks(const Integer& a, const Integer& p) {
    Integer q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (legendre_euler(z, p) != LegendreValue::minus_one) ++z;
    Integer c = powm(z, q, p);
    Integer r = powm(a, (q + 1) / 2, p);
    Integer t = powm(a, q, p);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        Integer t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        Integer b = c;
        for (unsigned j = 0; j + 1 < m - i; ++j) b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return r;
}

}  // namespace

LegendreValue legendre_euler(const Integer& a, const Integer& p) {
    require_odd_prime(p, "legendre");
    Integer r = mod_floor(a, p);
    if (r == 0) return LegendreValue::zero;
    return from_sign(powm(r, (p - 1) / 2, p) == 1);
}

LegendreValue legendre_reciprocity(const Integer& a, const Integer& p) {
    require_odd_prime(p, "legendre");
    Integer r = mod_floor(a, p);
    if (r == 0) return LegendreValue::zero;
    int sign = 1;
    for (const auto& f : factorize(r).factors) {
        if (f.exponent % 2 == 0) continue;
        const Integer& q = f.prime;
        if (q == 2) {
            sign *= to_int(two_over(p));
        } else if (q == 3) {
            sign *= to_int(three_over(p));
        } else {
            // (q/p)(p/q) = (-1)^((p-1)/2 * (q-1)/2)
            int flip = ((p % 4 == 3) && (q % 4 == 3)) ? -1 : 1;
            sign *= flip * to_int(legendre_reciprocity(p % q, q));
        }
    }
    return from_sign(sign > 0);
}

LegendreValue legendre(const Integer& a, const Integer& p) { return legendre_euler(a, p); }

std::optional<std::pair<Integer, Integer>> sqrt_mod(const Integer& a, const Integer& p) {
    require_odd_prime(p, "sqrt_mod");
    Integer r = mod_floor(a, p);
    if (r == 0) return std::pair<Integer, Integer>{0, 0};
    if (legendre_euler(r, p) != LegendreValue::plus_one) return std::nullopt;

    Integer root;
    if (p % 4 == 3) {
        root = powm(r, (p + 1) / 4, p);
    } else if (p < 10'000) {
        for (Integer x = 1;; ++x) {
            if (x * x % p == r) {
                root = x;
                break;
            }
        }
    } else {
        root = tonelli_shanks(r, p);
    }
    Integer other = p - root;
    if (other < root) std::swap(root, other);
    return std::pair<Integer, Integer>{root, other};
}

ResidueCounts count_residues(const Integer& p) {
    require_odd_prime(p, "count_residues");
    if (p > (Integer(1) << 26)) throw std::domain_error("count_residues: p too large to enumerate");
    const auto n = p.convert_to<std::uint64_t>();
    std::vector<bool> is_square(n, false);
    for (std::uint64_t x = 1; x < n; ++x) is_square[static_cast<std::size_t>(x * x % n)] = true;
    std::uint64_t squares = 0;
    for (std::uint64_t v = 1; v < n; ++v) squares += is_square[v] ? 1 : 0;
    return {Integer(squares), Integer(n - 1 - squares)};
}

}  // namespace sturm
