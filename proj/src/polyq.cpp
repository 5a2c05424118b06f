#include "sturm/polyq.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace sturm {

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, unsigned degree) {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::linear_root(const Rational& a) { return Poly{Rational(-a), Rational(1)}; }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Poly::coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational Poly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

bool Poly::has_integer_coefficients() const {
    for (const auto& c : coeffs_)
        if (!is_integral(c)) return false;
    return true;
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out[k] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) out[k] += o.coeffs_[k];
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (auto& a : out) a *= c;
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * Rational(1 / leading());
}

std::string to_string(const Poly& f, char variable) {
    if (f.is_zero()) return "0";
    std::string out;
    const auto& c = f.coefficients();
    for (int k = f.degree(); k >= 0; --k) {
        const Rational& a = c[static_cast<std::size_t>(k)];
        if (a == 0) continue;
        bool negative = a < 0;
        Rational mag = negative ? Rational(-a) : a;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (k == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) out += to_string(mag) + "*";
        out += variable;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

Poly parse_poly(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto fail = [&]() -> Poly { throw std::invalid_argument("not a polynomial: '" + std::string(text) + "'"); };
    if (s.empty()) return fail();

    std::map<unsigned, Rational> terms;
    char variable = 0;
    std::size_t i = 0;
    auto read_digits = [&]() {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    };

    bool first = true;
    while (i < s.size()) {
        Rational sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            return fail();
        }
        first = false;

        Rational coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::string num = read_digits();
            if (i < s.size() && s[i] == '/') {
                ++i;
                std::string den = read_digits();
                if (den.empty()) return fail();
                coef = parse_rational(num + "/" + den);
            } else {
                coef = parse_rational(num);
            }
            have_coef = true;
            if (i < s.size() && s[i] == '*') ++i;
        }
        unsigned power = 0;
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            if (variable != 0 && s[i] != variable) return fail();
            variable = s[i++];
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e = read_digits();
                if (e.empty() || e.size() > 6) return fail();
                power = static_cast<unsigned>(std::stoul(e));
            }
        } else if (!have_coef) {
            return fail();
        }
        terms[power] += sign * coef;
    }
    unsigned top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Rational> c(top + 1, Rational(0));
    for (const auto& [k, v] : terms) c[k] = v;
    return Poly(std::move(c));
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    if (f.degree() < g.degree()) return {Poly{}, f};
    std::vector<Rational> rem = f.coefficients();
    const auto& gc = g.coefficients();
    const std::size_t dg = gc.size() - 1;
    std::vector<Rational> quot(rem.size() - dg, Rational(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational t = rem[k + dg] / gc[dg];
        quot[k] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= t * gc[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("poly_gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly derivative(const Poly& f) {
    const auto& c = f.coefficients();
    if (c.size() <= 1) return {};
    std::vector<Rational> out(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) out[k - 1] = c[k] * static_cast<long long>(k);
    return Poly(std::move(out));
}

Poly shift_poly(const Poly& f, const Rational& c) {
    Poly result;
    const Poly step = Poly{c, Rational(1)};
    const auto& a = f.coefficients();
    for (auto it = a.rbegin(); it != a.rend(); ++it) result = result * step + Poly::constant(*it);
    return result;
}

int descartes_bound(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("descartes_bound of the zero polynomial");
    int changes = 0;
    int last = 0;
    for (const auto& c : f.coefficients()) {
        if (c == 0) continue;
        int s = c > 0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

Rational cubic_discriminant(const Rational& p, const Rational& q) { return -4 * p * p * p - 27 * q * q; }

CubicRootCount cubic_real_root_count(const Rational& p, const Rational& q) {
    if (p == 0 && q == 0) return {1, true};
    Rational d = cubic_discriminant(p, q);
    if (d > 0) return {3, false};
    if (d < 0) return {1, false};
    return {2, false};
}

Depressed depress(const Poly& f) {
    const int n = f.degree();
    if (n != 3 && n != 4) throw std::domain_error("depress expects degree 3 or 4, got " + std::to_string(n));
    Rational shift = f.coeff(static_cast<unsigned>(n - 1)) / (f.leading() * n);
    return {shift_poly(f, -shift).monic(), shift};
}

bool eisenstein(const Poly& f, const Integer& p) {
    if (f.degree() < 1) throw std::domain_error("eisenstein expects a nonconstant polynomial");
    if (!f.has_integer_coefficients()) throw std::domain_error("eisenstein expects integer coefficients");
    if (p < 2 || !is_prime(p)) throw std::domain_error("eisenstein expects a prime, got " + p.str());
    const auto& c = f.coefficients();
    if (numerator(c.back()) % p == 0) return false;
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
        if (numerator(c[k]) % p != 0) return false;
    return numerator(c.front()) % (p * p) != 0;
}

}  // namespace sturm
