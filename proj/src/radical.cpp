#include "sturm/radical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sturm {

namespace {

double to_double(const Rational& q) { return q.convert_to<double>(); }

ComplexApprox eval_derivative(const Poly& f, ComplexApprox x) { return eval(derivative(f), x); }

// One Newton step, kept only if it does not increase the residual.
ComplexApprox polish(const Poly& f, ComplexApprox x) {
    ComplexApprox fx = eval(f, x);
    ComplexApprox dfx = eval_derivative(f, x);
    if (std::abs(dfx) == 0.0) return x;
    ComplexApprox y = x - fx / dfx;
    if (!std::isfinite(y.real()) || !std::isfinite(y.imag())) return x;
    return std::abs(eval(f, y)) <= std::abs(fx) ? y : x;
}

RootSet finish(const Poly& f, std::vector<ComplexApprox> roots) {
    RootSet out;
    for (auto& r : roots) {
        r = polish(f, r);
        if (std::abs(r.imag()) < kRealThreshold) r = {r.real(), 0.0};
        out.residual_bound = std::max(out.residual_bound, std::abs(eval(f, r)));
    }
    out.roots = std::move(roots);
    return out;
}

// Roots of y^2 + b y + c, avoiding cancellation.
std::pair<ComplexApprox, ComplexApprox> solve_quadratic(ComplexApprox b, ComplexApprox c) {
    ComplexApprox sq = std::sqrt(b * b - 4.0 * c);
    ComplexApprox plus = b + sq, minus = b - sq;
    ComplexApprox t = -0.5 * (std::abs(plus) >= std::abs(minus) ? plus : minus);
    if (std::abs(t) == 0.0) return {0.0, 0.0};
    return {t, c / t};
}

// Roots of the depressed cubic y^3 + p y + q.
std::vector<ComplexApprox> depressed_cubic_roots(const Rational& p, const Rational& q) {
    if (p == 0 && q == 0) return {0.0, 0.0, 0.0};
    const Rational disc = cubic_discriminant(p, q);
    if (disc == 0) {
        // Double root -3q/(2p) and simple root 3q/p.
        double simple = to_double(3 * q / p);
        double twice = to_double(-3 * q / (2 * p));
        return {simple, twice, twice};
    }
    const double pd = to_double(p), qd = to_double(q);
    if (disc > 0) {
        // Three real roots: y_k = 2 sqrt(-p/3) cos(theta/3 - 2 pi k / 3).
        const double m = 2.0 * std::sqrt(-pd / 3.0);
        double arg = (3.0 * qd / (2.0 * pd)) * std::sqrt(-3.0 / pd);
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg) / 3.0;
        std::vector<ComplexApprox> out;
        for (int k = 0; k < 3; ++k) out.emplace_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0));
        return out;
    }
    // del Ferro: y = u + v with u^3 + v^3 = -q and uv = -p/3.
    const double s = std::sqrt(qd * qd / 4.0 + pd * pd * pd / 27.0);
    const double a = qd > 0 ? -qd / 2.0 - s : -qd / 2.0 + s;
    const double u = std::cbrt(a);
    const double v = -pd / (3.0 * u);
    const double re = -(u + v) / 2.0;
    const double im = std::sqrt(3.0) / 2.0 * (u - v);
    return {ComplexApprox(u + v), ComplexApprox(re, im), ComplexApprox(re, -im)};
}

}  // namespace

std::vector<double> RootSet::real_roots() const {
    std::vector<double> out;
    for (const auto& r : roots)
        if (std::abs(r.imag()) < kRealThreshold) out.push_back(r.real());
    std::sort(out.begin(), out.end());
    return out;
}

ComplexApprox eval(const Poly& f, ComplexApprox x) {
    ComplexApprox acc = 0.0;
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

RootSet solve_cubic(const Poly& f) {
    if (f.degree() != 3) throw std::domain_error("solve_cubic expects degree 3");
    Depressed d = depress(f);
    auto roots = depressed_cubic_roots(d.poly.coeff(1), d.poly.coeff(0));
    const double shift = to_double(d.shift);
    for (auto& r : roots) r -= shift;
    return finish(f, std::move(roots));
}

Poly resolvent_cubic(const Poly& f) {
    if (f.degree() != 4 || f.leading() != 1 || f.coeff(3) != 0) {
        throw std::domain_error("resolvent_cubic expects a depressed monic quartic");
    }
    const Rational p = f.coeff(2), q = f.coeff(1), r = f.coeff(0);
    // Discriminant of (2a - p) x^2 - q x + (a^2 - r), divided by 8.
    return Poly{p * r / 2 - q * q / 8, -r, -p / 2, Rational(1)};
}

RootSet solve_quartic(const Poly& f) {
    if (f.degree() != 4) throw std::domain_error("solve_quartic expects degree 4");
    Depressed d = depress(f);
    const Rational p = d.poly.coeff(2), q = d.poly.coeff(1), r = d.poly.coeff(0);
    std::vector<ComplexApprox> ys;

    if (q == 0) {
        // Biquadratic: z^2 + p z + r with z = y^2.
        auto [z1, z2] = solve_quadratic(to_double(p), to_double(r));
        for (auto z : {z1, z2}) {
            ComplexApprox w = std::sqrt(z);
            ys.push_back(w);
            ys.push_back(-w);
        }
    } else {
        RootSet alphas = solve_cubic(resolvent_cubic(d.poly));
        const double pd = to_double(p), qd = to_double(q);
        double alpha = 0.0;
        double best = -1.0;
        for (double a : alphas.real_roots()) {
            if (std::abs(2.0 * a - pd) > best) {
                best = std::abs(2.0 * a - pd);
                alpha = a;
            }
        }
        // (y^2 + alpha)^2 - (b y + c)^2 with b^2 = 2 alpha - p and 2 b c = -q.
        const ComplexApprox b = std::sqrt(ComplexApprox(2.0 * alpha - pd));
        const ComplexApprox c = -qd / (2.0 * b);
        auto [y1, y2] = solve_quadratic(-b, alpha - c);
        auto [y3, y4] = solve_quadratic(b, alpha + c);
        ys = {y1, y2, y3, y4};
    }
    const double shift = to_double(d.shift);
    for (auto& y : ys) y -= shift;
    return finish(f, std::move(ys));
}

}  // namespace sturm
