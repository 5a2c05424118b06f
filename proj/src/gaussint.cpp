#include "sturm/gaussint.hpp"

#include "sturm/quadres.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace sturm {

namespace {

GaussianInt times_i(const GaussianInt& z) { return {-z.im, z.re}; }

// Nearest integer to x/n (n > 0), ties toward minus infinity: ceil((2x - n) / 2n).
Integer round_half_down(const Integer& x, const Integer& n) {
    return -floor_div(n - 2 * x, 2 * n);
}

std::string imag_text(const Integer& b) {
    if (b == 1) return "i";
    if (b == -1) return "-i";
    return b.str() + "i";
}

Integer parse_imag_coefficient(std::string_view text) {
    if (text.empty() || text == "+") return 1;
    if (text == "-") return -1;
    return parse_integer(text);
}

bool lex_less(const GaussianInt& a, const GaussianInt& b) {
    return std::make_tuple(a.norm(), a.re, a.im) < std::make_tuple(b.norm(), b.re, b.im);
}

GaussianInt gpow(GaussianInt base, unsigned e) {
    GaussianInt result{1};
    while (e > 0) {
        if (e & 1u) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

// Exact quotient a / b; caller guarantees divisibility.
GaussianInt exact_div(const GaussianInt& a, const GaussianInt& b) { return g_divmod(a, b).first; }

unsigned strip(GaussianInt& z, const GaussianInt& pi) {
    unsigned e = 0;
    while (g_divides(pi, z)) {
        z = exact_div(z, pi);
        ++e;
    }
    return e;
}

}  // namespace

std::string to_string(const GaussianInt& z) {
    if (z.im == 0) return z.re.str();
    if (z.re == 0) return imag_text(z.im);
    std::string out = z.re.str();
    if (z.im > 0) out += "+";
    return out + imag_text(z.im);
}

GaussianInt parse_gaussian(std::string_view text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty Gaussian integer");
    if (s.back() != 'i') return {parse_integer(s), 0};
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    try {
        if (split == std::string::npos) return {0, parse_imag_coefficient(s)};
        return {parse_integer(s.substr(0, split)), parse_imag_coefficient(s.substr(split))};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a Gaussian integer: '" + std::string(text) + "'");
    }
}

GaussianInt canonical(const GaussianInt& z) {
    if (z.is_zero()) throw std::domain_error("zero has no canonical associate");
    GaussianInt w = z;
    for (int k = 0; k < 4; ++k, w = times_i(w)) {
        if (w.re > 0 && -w.re < w.im && w.im <= w.re) return w;
    }
    throw std::logic_error("canonical: no associate in the sector");
}

bool g_divides(const GaussianInt& b, const GaussianInt& a) {
    if (b.is_zero()) return a.is_zero();
    GaussianInt num = a * b.conj();
    Integer n = b.norm();
    return num.re % n == 0 && num.im % n == 0;
}

std::pair<GaussianInt, GaussianInt> g_divmod(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::domain_error("Gaussian division by zero");
    GaussianInt num = a * b.conj();
    Integer n = b.norm();
    GaussianInt q{round_half_down(num.re, n), round_half_down(num.im, n)};
    return {q, a - q * b};
}

GaussianInt g_gcd(const GaussianInt& a, const GaussianInt& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("g_gcd(0, 0) is undefined");
    GaussianInt x = a, y = b;
    while (!y.is_zero()) {
        GaussianInt r = g_divmod(x, y).second;
        x = y;
        y = r;
    }
    return canonical(x);
}

bool is_g_prime(const GaussianInt& z) {
    if (z.is_zero() || z.is_unit()) throw std::domain_error("is_g_prime: zero and units are excluded");
    if (is_prime(z.norm())) return true;
    if (z.re != 0 && z.im != 0) return false;
    Integer p = abs(z.re == 0 ? z.im : z.re);
    return p % 4 == 3 && is_prime(p);
}

GaussianInt GaussianFactorization::value() const {
    GaussianInt v = unit;
    for (const auto& f : factors) v = v * gpow(f.prime, f.exponent);
    return v;
}

std::string GaussianFactorization::to_string() const {
    std::string out;
    if (unit != GaussianInt{1} || factors.empty()) out = sturm::to_string(unit);
    for (const auto& f : factors) {
        if (!out.empty()) out += " * ";
        out += "(" + sturm::to_string(f.prime) + ")";
        if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
    }
    return out;
}

GaussianFactorization g_factor(const GaussianInt& z) {
    if (z.is_zero()) throw std::domain_error("cannot factor 0");
    GaussianFactorization out;
    GaussianInt rest = z;
    for (const auto& f : factorize(z.norm()).factors) {
        const Integer& p = f.prime;
        if (p == 2) {
            GaussianInt pi{1, 1};
            out.factors.push_back({pi, strip(rest, pi)});
        } else if (p % 4 == 3) {
            GaussianInt pi{p};
            out.factors.push_back({pi, strip(rest, pi)});
        } else {
            Integer r = sqrt_mod(-1, p)->first;
            GaussianInt pi = g_gcd(GaussianInt{p}, GaussianInt{r, 1});
            GaussianInt pi_bar = canonical(pi.conj());
            for (const GaussianInt& q : {pi, pi_bar}) {
                unsigned e = strip(rest, q);
                if (e > 0) out.factors.push_back({q, e});
            }
        }
    }
    if (!rest.is_unit()) throw std::logic_error("g_factor: cofactor is not a unit");
    out.unit = rest;
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return lex_less(a.prime, b.prime); });
    return out;
}

std::optional<std::pair<Integer, Integer>> two_squares(const Integer& n) {
    if (n < 1) throw std::domain_error("two_squares expects n >= 1");
    GaussianFactorization fz = g_factor(GaussianInt{n});

    // Split primes p = pi * conj(pi) contribute pi^j conj(pi)^(e-j); everything
    // else contributes a fixed square root of its part of n.
    GaussianInt fixed{1};
    std::vector<std::pair<GaussianInt, unsigned>> split;  // (pi, e), paired with conj
    std::vector<bool> used(fz.factors.size(), false);
    for (std::size_t k = 0; k < fz.factors.size(); ++k) {
        if (used[k]) continue;
        const auto& f = fz.factors[k];
        Integer norm = f.prime.norm();
        if (f.prime == GaussianInt{1, 1}) {
            fixed = fixed * gpow(f.prime, f.exponent / 2);
        } else if (f.prime.im == 0) {
            if (f.exponent % 2 != 0) return std::nullopt;
            fixed = fixed * gpow(f.prime, f.exponent / 2);
        } else {
            for (std::size_t j = k + 1; j < fz.factors.size(); ++j) {
                if (fz.factors[j].prime.norm() == norm) used[j] = true;
            }
            split.emplace_back(f.prime, f.exponent);
        }
    }

    std::optional<std::pair<Integer, Integer>> best;
    std::vector<unsigned> choice(split.size(), 0);
    while (true) {
        GaussianInt w = fixed;
        for (std::size_t k = 0; k < split.size(); ++k) {
            const auto& [pi, e] = split[k];
            w = w * gpow(pi, choice[k]) * gpow(pi.conj(), e - choice[k]);
        }
        Integer a = abs(w.re), b = abs(w.im);
        if (a > b) std::swap(a, b);
        if (!best || std::make_pair(a, b) < *best) best = std::make_pair(a, b);

        std::size_t k = 0;
        while (k < split.size() && choice[k] == split[k].second) choice[k++] = 0;
        if (k == split.size()) break;
        ++choice[k];
    }
    return best;
}

}  // namespace sturm
