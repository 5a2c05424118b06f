#include "sturm/core_arith.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace sturm {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<u64> out;
        for (u64 i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (u64 j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
    u64 result = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) result = mul_mod(result, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return result;
}

// Strong probable-prime test; the first twelve primes as bases make it exact below 2^64.
bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Brent's variant of Pollard rho. n is odd, composite, and has no factor below kTrialLimit.
u64 pollard_brent(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_large(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& q) {
    if (is_integral(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Integer parse_integer(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (!all_digits(body)) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    Integer value{std::string(body)};
    return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::uint64_t to_u64(const Integer& n, const char* what) {
    if (n < 0 || n > std::numeric_limits<std::uint64_t>::max()) {
        throw std::domain_error(std::string(what) + " outside the supported range [0, 2^64)");
    }
    return n.convert_to<std::uint64_t>();
}

std::int64_t to_i64(const Integer& n, const char* what) {
    if (n < std::numeric_limits<std::int64_t>::min() || n > std::numeric_limits<std::int64_t>::max()) {
        throw std::domain_error(std::string(what) + " does not fit in 64 bits");
    }
    return n.convert_to<std::int64_t>();
}

Integer abs(const Integer& n) { return n < 0 ? Integer(-n) : n; }

Integer floor_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::domain_error("division by zero");
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    if (m <= 0) throw std::domain_error("modulus must be positive");
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) throw std::domain_error("gcd(0, 0) is undefined");
    return boost::multiprecision::gcd(abs(a), abs(b));
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a) / gcd(a, b) * abs(b);
}

GcdResult gcd_ext(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) throw std::domain_error("gcd_ext(0, 0) is undefined");
    Integer old_r = a, r = b;
    Integer old_s = 1, s = 0;
    Integer old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer next = old_r - q * r;
        old_r = r;
        r = next;
        next = old_s - q * s;
        old_s = s;
        s = next;
        next = old_t - q * t;
        old_t = t;
        t = next;
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

std::optional<DiophantineSolution> solve_linear_diophantine(const Integer& a, const Integer& b,
                                                            const Integer& c) {
    GcdResult e = gcd_ext(a, b);
    if (c % e.g != 0) return std::nullopt;
    Integer scale = c / e.g;
    return DiophantineSolution{e.x * scale, e.y * scale, Integer(-b / e.g), Integer(a / e.g)};
}

Integer FactoredInt::value() const {
    Integer v = sign;
    for (const auto& f : factors) v *= ipow(f.prime, f.exponent);
    return v;
}

bool FactoredInt::has_prime(const Integer& p) const { return exponent_of(p) > 0; }

unsigned FactoredInt::exponent_of(const Integer& p) const {
    for (const auto& f : factors)
        if (f.prime == p) return f.exponent;
    return 0;
}

std::string FactoredInt::to_string() const {
    std::string out = sign < 0 ? "-" : "";
    if (factors.empty()) return out + "1";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += " * ";
        out += factors[i].prime.str();
        if (factors[i].exponent > 1) out += "^" + std::to_string(factors[i].exponent);
    }
    return out;
}

FactoredInt factorize(const Integer& n) {
    if (n == 0) throw std::domain_error("cannot factorize 0");
    FactoredInt result;
    result.sign = n < 0 ? -1 : 1;
    u64 m = to_u64(abs(n), "factorize argument");

    std::map<u64, unsigned> found;
    for (u64 p : small_primes()) {
        if (p * p > m) break;
        while (m % p == 0) {
            ++found[p];
            m /= p;
        }
    }
    // Anything left below kTrialLimit^2 has no factor under kTrialLimit, so it is prime.
    if (m > 1) {
        if (m < kTrialLimit * kTrialLimit) ++found[m];
        else split_large(m, found);
    }
    for (auto [p, e] : found) result.factors.push_back({Integer(p), e});
    return result;
}

bool is_prime(const Integer& n) {
    if (n < 0) throw std::domain_error("is_prime expects n >= 0");
    return miller_rabin(to_u64(n, "is_prime argument"));
}

Integer euler_phi(const Integer& n) {
    if (n < 1) throw std::domain_error("euler_phi expects n >= 1");
    Integer phi = 1;
    for (const auto& f : factorize(n).factors) phi *= (f.prime - 1) * ipow(f.prime, f.exponent - 1);
    return phi;
}

unsigned valuation(Integer n, const Integer& p) {
    if (n == 0) throw std::domain_error("valuation of 0 is infinite");
    if (p < 2) throw std::domain_error("valuation base must be >= 2");
    unsigned v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out{1};
    for (const auto& f : factorize(n).factors) {
        std::size_t base = out.size();
        Integer power = 1;
        for (unsigned e = 1; e <= f.exponent; ++e) {
            power *= f.prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer ipow(const Integer& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

}  // namespace sturm
