#pragma once

/**
 * @file seqcalc.hpp
 * @brief Finite differences and sums of polynomial sequences a_n = P(n).
 *
 * Sequences are indexed from n = 1; sigma_poly gives S(n) = P(1) + ... + P(n)
 * with S(0) = 0.
 */

#include "sturm/polyq.hpp"

#include <vector>

namespace sturm {

struct PolySeq {
    Poly P;

    Rational operator()(const Rational& n) const { return P(n); }
    friend bool operator==(const PolySeq&, const PolySeq&) = default;
};

/// Q(n) = P(n+1) - P(n)
PolySeq delta(const PolySeq& s);
PolySeq kth_difference(const PolySeq& s, unsigned k);
/// S(n) = sum_{j=1}^{n} P(j)
PolySeq sigma_poly(const PolySeq& s);

struct DetectionResult {
    bool accepted = false;
    /// Newton interpolant of the samples at n = 1..m (degree < m).
    Poly candidate;
    /// Rows of the difference table, row 0 being the samples.
    std::vector<std::vector<Rational>> table;
};

/// Accepts when the difference table ends in at least two all-zero rows.
DetectionResult detect_polynomial(const std::vector<Rational>& samples);

}  // namespace sturm
