#pragma once

/**
 * @file construct.hpp
 * @brief Constructibility of regular n-gons and Lagrange resolvents for
 *        Fermat primes.
 *
 * For a prime p with p - 1 = 2^m, g a primitive root mod p, eps = e^(2 pi i/p)
 * and beta = e^(2 pi i/(p-1)), the resolvents are
 *
 *     T_r(eps) = sum_{k=0}^{p-2} beta^(r k) eps^(g^k),   r = 0 .. p-2.
 *
 * T_0(eps) = -1, sum_r T_r(eps) = (p-1) eps, and each T_r(eps)^(p-1) lies in
 * Z[beta]. The lattice claim is checked twice: exactly, by expanding
 * T_r(x)^(p-1) mod x^p - 1 with Z[beta] coefficients and confirming the
 * coefficients of x^1..x^(p-1) agree, and numerically, by recovering the
 * beta-coordinates of T_r(eps)^(p-1) from its Galois conjugates
 * T_{rk}(eps)^(p-1), k odd, with an inverse DFT in long double.
 */

#include "sturm/core_arith.hpp"
#include "sturm/radical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sturm {

bool is_fermat_prime(const Integer& p);

enum class ConstructibilityFailure {
    none,
    non_fermat_prime,    // an odd prime factor not of the form 2^(2^s) + 1
    repeated_odd_prime,  // an odd prime dividing n at least twice
};

struct ConstructibilityVerdict {
    Integer n;
    bool constructible = false;
    FactoredInt factorization;
    std::vector<Integer> fermat_primes;
    ConstructibilityFailure failure_reason = ConstructibilityFailure::none;
    std::optional<Integer> offending_prime;

    /// "yes" or "no (<reason> <prime>)".
    std::string summary() const;
};

/// Regular n-gon is constructible iff n = 2^a p_1 ... p_l with distinct Fermat
/// primes p_i. When a non-Fermat prime and a repeated prime both occur, the
/// smallest non-Fermat prime is reported.
ConstructibilityVerdict gauss_constructible(const Integer& n);

struct ResolventSet {
    unsigned p = 0;
    Integer g;                            // primitive root mod p
    ComplexApprox beta;                   // e^(2 pi i/(p-1))
    std::vector<ComplexApprox> values;    // T_r(eps), r = 0 .. p-2
    std::vector<bool> power_checks;       // T_r^(p-1) in Z[beta]
    /// Exact beta-coordinates (basis 1, beta, ..., beta^((p-1)/2 - 1)) of
    /// T_r(eps)^(p-1). Empty when only the modular check ran (p = 257).
    std::vector<std::vector<Integer>> lattice;
    double max_lattice_deviation = 0.0;   // numeric vs exact coordinates; 0 when lattice is empty
    double t0_error = 0.0;                // |T_0 + 1|
    double reconstruction_error = 0.0;    // |sum_r T_r / (p-1) - eps|
};

inline constexpr double kLatticeTolerance = 1e-6;
inline constexpr double kReconstructionTolerance = 1e-9;

/// p in {3, 5, 17}; p = 257 only with allow_slow, checked modulo a prime
/// q = 1 (mod 256) under several embeddings of beta instead of exactly.
ResolventSet lagrange_resolvents(unsigned p, bool allow_slow = false);

struct EpsilonComposition {
    Integer x;
    Integer y;
    double error = 0.0;  // |eps_m^x eps_n^y - eps_mn|
};

/// Bezout pair n x + m y = 1 with the numeric check eps_m^x eps_n^y = eps_mn.
EpsilonComposition epsilon_compose(const Integer& m, const Integer& n);

}  // namespace sturm
