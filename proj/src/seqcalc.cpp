#include "sturm/seqcalc.hpp"

#include <algorithm>

namespace sturm {

namespace {

// Binomial polynomial C(x - offset, j) = (x-offset)(x-offset-1).../j!.
Poly binomial_poly(unsigned j, const Rational& offset) {
    Poly acc = Poly::constant(1);
    for (unsigned i = 0; i < j; ++i) acc = acc * Poly::linear_root(offset + i);
    return acc * Rational(1, factorial(j));
}

bool all_zero(const std::vector<Rational>& row) {
    return std::all_of(row.begin(), row.end(), [](const Rational& v) { return v == 0; });
}

}  // namespace

PolySeq delta(const PolySeq& s) { return {shift_poly(s.P, 1) - s.P}; }

PolySeq kth_difference(const PolySeq& s, unsigned k) {
    PolySeq out = s;
    for (unsigned i = 0; i < k && !out.P.is_zero(); ++i) out = delta(out);
    return out;
}

PolySeq sigma_poly(const PolySeq& s) {
    // S(n) = sum_k (Delta^k P)(1) C(n, k+1).
    Poly acc;
    PolySeq d = s;
    for (unsigned k = 0; !d.P.is_zero(); ++k) {
        acc = acc + binomial_poly(k + 1, 0) * d(1);
        d = delta(d);
    }
    return {acc};
}

DetectionResult detect_polynomial(const std::vector<Rational>& samples) {
    DetectionResult out;
    if (samples.empty()) return out;
    out.table.push_back(samples);
    while (out.table.back().size() > 1) {
        const auto& row = out.table.back();
        std::vector<Rational> next(row.size() - 1);
        for (std::size_t i = 0; i + 1 < row.size(); ++i) next[i] = row[i + 1] - row[i];
        out.table.push_back(std::move(next));
    }
    // Newton forward form at n = 1: sum_k Delta^k a_1 C(n-1, k).
    for (unsigned k = 0; k < out.table.size(); ++k) {
        out.candidate = out.candidate + binomial_poly(k, 1) * out.table[k].front();
    }
    unsigned trailing_zero_rows = 0;
    for (const auto& row : out.table) trailing_zero_rows = all_zero(row) ? trailing_zero_rows + 1 : 0;
    out.accepted = trailing_zero_rows >= 2;
    return out;
}

}  // namespace sturm
