#pragma once

/**
 * @file radical.hpp
 * @brief Closed-form cubic and quartic solvers.
 *
 * Cubics are depressed exactly, then solved by del Ferro's formula when the
 * discriminant is negative and by the cosine method when it is positive.
 * Quartics go through Ferrari's resolvent cubic. Every root gets one Newton
 * step on the original polynomial; roots whose imaginary part is then below
 * kRealThreshold are reported as real.
 */

#include "sturm/polyq.hpp"

#include <complex>
#include <vector>

namespace sturm {

using ComplexApprox = std::complex<double>;

inline constexpr double kRealThreshold = 1e-9;

struct RootSet {
    std::vector<ComplexApprox> roots;  // with multiplicity, roots.size() == degree
    double residual_bound = 0.0;       // max |f(root)| over roots

    std::vector<double> real_roots() const;
    int real_count() const { return static_cast<int>(real_roots().size()); }
};

ComplexApprox eval(const Poly& f, ComplexApprox x);

RootSet solve_cubic(const Poly& f);

/// Monic cubic in alpha whose roots make (x^2 + alpha)^2 - f(x) a perfect
/// square in x. f must be a depressed quartic x^4 + p x^2 + q x + r.
Poly resolvent_cubic(const Poly& f);

RootSet solve_quartic(const Poly& f);

}  // namespace sturm
