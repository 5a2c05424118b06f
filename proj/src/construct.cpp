#include "sturm/construct.hpp"

#include "sturm/modular.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace sturm {

namespace {

using LComplex = std::complex<long double>;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Element of Z[beta], beta a primitive N-th root of unity with N = 2h a power
// of two, stored on the basis 1, beta, ..., beta^(h-1) using beta^h = -1.
struct ZBeta {
    std::vector<Integer> c;

    explicit ZBeta(std::size_t h) : c(h, Integer(0)) {}

    static ZBeta power_of_beta(std::size_t h, std::size_t j) {
        ZBeta z(h);
        j %= 2 * h;
        if (j < h) z.c[j] = 1;
        else z.c[j - h] = -1;
        return z;
    }

    bool is_zero() const {
        return std::all_of(c.begin(), c.end(), [](const Integer& v) { return v == 0; });
    }

    void add_product(const ZBeta& a, const ZBeta& b) {
        const std::size_t h = c.size();
        for (std::size_t i = 0; i < h; ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < h; ++j) {
                if (b.c[j] == 0) continue;
                const std::size_t k = i + j;
                if (k < h) c[k] += a.c[i] * b.c[j];
                else c[k - h] -= a.c[i] * b.c[j];
            }
        }
    }

    friend bool operator==(const ZBeta&, const ZBeta&) = default;
};

using XPoly = std::vector<ZBeta>;  // coefficients of x^0 .. x^(p-1), reduced mod x^p - 1

XPoly square_mod(const XPoly& a) {
    const std::size_t p = a.size();
    XPoly out(p, ZBeta(a[0].c.size()));
    for (std::size_t i = 0; i < p; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < p; ++j) {
            if (a[j].is_zero()) continue;
            out[(i + j) % p].add_product(a[i], a[j]);
        }
    }
    return out;
}

std::vector<u64> generator_powers(u64 g, u64 p) {
    std::vector<u64> out(p - 1);
    u64 cur = 1;
    for (auto& e : out) {
        e = cur;
        cur = cur * g % p;
    }
    return out;
}

unsigned log2_exact(u64 n) {
    unsigned m = 0;
    while ((u64{1} << m) < n) ++m;
    return m;
}

// Exact route: coordinates of T_r^N(eps) = a_0 - a_1, or nullopt when the
// coefficients of x^1 .. x^(p-1) fail to coincide.
std::optional<std::vector<Integer>> exact_power(unsigned r, u64 p, const std::vector<u64>& gk) {
    const std::size_t n = p - 1, h = n / 2;
    XPoly t(p, ZBeta(h));
    for (std::size_t k = 0; k < n; ++k) t[gk[k]] = ZBeta::power_of_beta(h, r * k % n);
    for (unsigned s = 0; s < log2_exact(n); ++s) t = square_mod(t);
    for (std::size_t k = 2; k < p; ++k)
        if (!(t[k] == t[1])) return std::nullopt;
    std::vector<Integer> diff(h);
    for (std::size_t j = 0; j < h; ++j) diff[j] = t[0].c[j] - t[1].c[j];
    return diff;
}

u64 mul_mod(u64 a, u64 b, u64 q) { return static_cast<u64>(static_cast<u128>(a) * b % q); }

u64 pow_mod(u64 a, u64 e, u64 q) {
    u64 r = 1;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, q);
        a = mul_mod(a, a, q);
        e >>= 1;
    }
    return r;
}

// Modular route: under beta -> w (a primitive N-th root of unity mod q), check
// that T_r(x)^N mod (x^p - 1) has equal coefficients at x^1 .. x^(p-1).
bool modular_power_check(unsigned r, u64 p, const std::vector<u64>& gk, u64 q, u64 w) {
    const std::size_t n = p - 1;
    std::vector<u64> wpow(n);
    wpow[0] = 1;
    for (std::size_t j = 1; j < n; ++j) wpow[j] = mul_mod(wpow[j - 1], w, q);
    std::vector<u64> t(p, 0);
    for (std::size_t k = 0; k < n; ++k) t[gk[k]] = wpow[r * k % n];
    for (unsigned s = 0; s < log2_exact(n); ++s) {
        std::vector<u128> acc(p, 0);
        for (std::size_t i = 0; i < p; ++i) {
            if (t[i] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) {
                std::size_t k = (i + j) % p;
                acc[k] = (acc[k] + static_cast<u128>(t[i]) * t[j]) % q;
            }
        }
        for (std::size_t k = 0; k < p; ++k) t[k] = static_cast<u64>(acc[k]);
    }
    for (std::size_t k = 2; k < p; ++k)
        if (t[k] != t[1]) return false;
    return true;
}

struct ModularSetup {
    u64 q;
    std::vector<u64> roots;  // images of beta: w^1, w^3, w^5, w^7
};

ModularSetup modular_setup(u64 n) {
    u64 q = ((u64{1} << 61) / n) * n + 1;
    while (!is_prime(Integer(q))) q += n;
    u64 w = 0;
    for (u64 z = 2;; ++z) {
        w = pow_mod(z, (q - 1) / n, q);
        if (pow_mod(w, n / 2, q) != 1) break;
    }
    ModularSetup s{q, {}};
    for (u64 k : {1, 3, 5, 7}) s.roots.push_back(pow_mod(w, k, q));
    return s;
}

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(count, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

LComplex power(LComplex z, unsigned squarings) {
    for (unsigned s = 0; s < squarings; ++s) z *= z;
    return z;
}

}  // namespace

bool is_fermat_prime(const Integer& p) {
    if (p < 2) throw std::domain_error("is_fermat_prime expects p >= 2");
    Integer m = p - 1;
    if (m == 0 || (m & (m - 1)) != 0) return false;
    unsigned e = boost::multiprecision::msb(m);
    if (e == 0 || (e & (e - 1)) != 0) return false;
    return is_prime(p);
}

std::string ConstructibilityVerdict::summary() const {
    switch (failure_reason) {
        case ConstructibilityFailure::none:
            return "yes";
        case ConstructibilityFailure::non_fermat_prime:
            return "no (non-Fermat odd prime " + offending_prime->str() + ")";
        case ConstructibilityFailure::repeated_odd_prime:
            return "no (repeated odd prime " + offending_prime->str() + ")";
    }
    return "no";
}

ConstructibilityVerdict gauss_constructible(const Integer& n) {
    if (n < 3) throw std::domain_error("gauss_constructible expects n >= 3");
    ConstructibilityVerdict v;
    v.n = n;
    v.factorization = factorize(n);
    std::optional<Integer> repeated;
    for (const auto& f : v.factorization.factors) {
        if (f.prime == 2) continue;
        if (!is_fermat_prime(f.prime)) {
            if (v.failure_reason != ConstructibilityFailure::non_fermat_prime) {
                v.failure_reason = ConstructibilityFailure::non_fermat_prime;
                v.offending_prime = f.prime;
            }
            continue;
        }
        v.fermat_primes.push_back(f.prime);
        if (f.exponent > 1 && !repeated) repeated = f.prime;
    }
    if (v.failure_reason == ConstructibilityFailure::none && repeated) {
        v.failure_reason = ConstructibilityFailure::repeated_odd_prime;
        v.offending_prime = repeated;
    }
    v.constructible = v.failure_reason == ConstructibilityFailure::none;
    return v;
}

ResolventSet lagrange_resolvents(unsigned p, bool allow_slow) {
    const bool exact = p == 3 || p == 5 || p == 17;
    if (!exact && !(p == 257 && allow_slow)) {
        throw std::domain_error("lagrange_resolvents supports p in {3, 5, 17} (257 with the slow flag), got " +
                                std::to_string(p));
    }
    const std::size_t n = p - 1, h = n / 2;
    const unsigned squarings = log2_exact(n);
    const long double two_pi = 2 * std::numbers::pi_v<long double>;

    ResolventSet out;
    out.p = p;
    out.g = find_primitive_root(p)->value();
    const auto gk = generator_powers(out.g.convert_to<u64>(), p);

    std::vector<LComplex> eps_pow(p), beta_pow(n);
    for (std::size_t j = 0; j < p; ++j) eps_pow[j] = std::polar(1.0L, two_pi * j / p);
    for (std::size_t j = 0; j < n; ++j) beta_pow[j] = std::polar(1.0L, two_pi * j / n);
    out.beta = ComplexApprox(static_cast<double>(beta_pow[1].real()), static_cast<double>(beta_pow[1].imag()));

    std::vector<LComplex> t(n);
    for (std::size_t r = 0; r < n; ++r) {
        LComplex acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += beta_pow[r * k % n] * eps_pow[gk[k]];
        t[r] = acc;
        out.values.emplace_back(static_cast<double>(acc.real()), static_cast<double>(acc.imag()));
    }
    out.t0_error = static_cast<double>(std::abs(t[0] + 1.0L));
    LComplex sum = 0;
    for (const auto& v : t) sum += v;
    out.reconstruction_error = static_cast<double>(std::abs(sum / static_cast<long double>(n) - eps_pow[1]));

    out.power_checks.assign(n, false);
    if (exact) {
        std::vector<LComplex> t_pow(n);
        for (std::size_t r = 0; r < n; ++r) t_pow[r] = power(t[r], squarings);
        out.lattice.assign(n, {});
        std::vector<double> deviation(n, 0.0);
        parallel_for(n, [&](std::size_t r) {
            auto coords = exact_power(static_cast<unsigned>(r), p, gk);
            if (!coords) return;
            // beta-coordinates from the conjugates T_{r(2t+1)}^N via inverse DFT.
            long double worst = 0;
            for (std::size_t j = 0; j < h; ++j) {
                LComplex acc = 0;
                for (std::size_t s = 0; s < h; ++s) acc += t_pow[r * (2 * s + 1) % n] * std::conj(beta_pow[2 * s * j % n]);
                acc *= std::conj(beta_pow[j]) / static_cast<long double>(h);
                long double exact_j = (*coords)[j].convert_to<long double>();
                worst = std::max(worst, std::abs(acc - LComplex(exact_j, 0)));
            }
            deviation[r] = static_cast<double>(worst);
            out.power_checks[r] = worst < kLatticeTolerance;
            out.lattice[r] = std::move(*coords);
        });
        out.max_lattice_deviation = *std::max_element(deviation.begin(), deviation.end());
    } else {
        const ModularSetup setup = modular_setup(n);
        parallel_for(n, [&](std::size_t r) {
            bool ok = true;
            for (u64 w : setup.roots) ok = ok && modular_power_check(static_cast<unsigned>(r), p, gk, setup.q, w);
            out.power_checks[r] = ok;
        });
    }
    return out;
}

EpsilonComposition epsilon_compose(const Integer& m, const Integer& n) {
    if (m < 1 || n < 1) throw std::domain_error("epsilon_compose expects positive m, n");
    if (gcd(m, n) != 1) throw std::domain_error("epsilon_compose needs coprime m, n");
    GcdResult e = gcd_ext(n, m);  // n x + m y = 1
    EpsilonComposition out{e.x, e.y, 0.0};

    const long double two_pi = 2 * std::numbers::pi_v<long double>;
    auto root_power = [&](const Integer& order, const Integer& k) {
        Integer reduced = mod_floor(k, order);
        return std::polar(1.0L, two_pi * reduced.convert_to<long double>() / order.convert_to<long double>());
    };
    LComplex lhs = root_power(m, out.x) * root_power(n, out.y);
    LComplex rhs = std::polar(1.0L, two_pi / (m * n).convert_to<long double>());
    out.error = static_cast<double>(std::abs(lhs - rhs));
    return out;
}

}  // namespace sturm
