#pragma once

/**
 * @file polyq.hpp
 * @brief Dense univariate polynomials over Q.
 *
 * Coefficients are stored lowest degree first with no trailing zeros, so
 * the zero polynomial has an empty coefficient list and degree -1.
 */

#include "sturm/core_arith.hpp"

#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sturm {

class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coefficients);
    Poly(std::initializer_list<Rational> coefficients);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, unsigned degree);
    /// x - a
    static Poly linear_root(const Rational& a);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^k, zero past the degree.
    Rational coeff(unsigned k) const;
    Rational leading() const;
    bool has_integer_coefficients() const;

    Rational operator()(const Rational& x) const;
    double eval(double x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;

    Poly monic() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Canonical text, descending powers: "x^3 - 3*x + 1", "1/2*x^2 - x", "0".
std::string to_string(const Poly& f, char variable = 'x');
/// Parses sums of terms c, c*x, c*x^k, x^k, -x ... with rational c; the
/// variable is any single letter and may appear once per term.
Poly parse_poly(std::string_view text);

/// f = q*g + r with deg r < deg g.
std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g);
/// Monic gcd; both zero is a domain error.
Poly poly_gcd(const Poly& f, const Poly& g);
Poly derivative(const Poly& f);
/// g(x) = f(x + c).
Poly shift_poly(const Poly& f, const Rational& c);

/// Sign changes in the coefficient sequence, zeros skipped.
int descartes_bound(const Poly& f);

struct CubicRootCount {
    int distinct = 1;
    bool triple = false;

    friend bool operator==(const CubicRootCount&, const CubicRootCount&) = default;
};

/// Distinct real roots of x^3 + p x + q from the sign of -4p^3 - 27q^2.
CubicRootCount cubic_real_root_count(const Rational& p, const Rational& q);
Rational cubic_discriminant(const Rational& p, const Rational& q);

struct Depressed {
    Poly poly;
    Rational shift;
};

/// Monic g(y) with no y^(n-1) term, roots of f = roots of g minus shift.
/// f must have degree 3 or 4.
Depressed depress(const Poly& f);

/// Eisenstein's criterion at the prime p for an integer polynomial.
bool eisenstein(const Poly& f, const Integer& p);

}  // namespace sturm
