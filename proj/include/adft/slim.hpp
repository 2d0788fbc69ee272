#pragma once

// Construction of slim normal basis generators: the tagged coordinate
// assignment per conductor class for prime powers, products of those
// generators for composite moduli, the mu(n) zeta_n generator for squarefree
// n, the integer entry rule Tr(theta* zeta^s) in closed form, the slimness
// test against the first-principles trace oracle, and the decomposition
// criterion Sp(theta) theta = Sp_1(theta) Sp_2(theta).

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adft/cyclo.hpp"
#include "adft/leopoldt.hpp"
#include "adft/numt.hpp"

namespace adft {

// Coordinate assignment making the generator of Q(zeta_{p^s})/Q slim:
//   conductor 1          -> 1
//   conductor p (p odd)  -> -1
//   conductor 2^k >= 4   -> 1/2
//   conductor p^k, k > 1 -> (1/p) sum_i (i/p) conj(chi)(1 + i p^(k-1))
inline ChiCoords slim_coords_prime_power(long p, int s) {
    if (s < 1 || !is_prime(p)) throw std::invalid_argument("slim_coords_prime_power: need a prime power");
    long n = 1;
    for (int i = 0; i < s; ++i) n *= p;
    ChiCoords coords(n);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const long f = coords.char_at(i).conductor();
        if (f == 1) {
            coords.set_value(i, ChiValue::one());
        } else if (p == 2) {
            coords.set_value(i, ChiValue::half());
        } else if (f == p) {
            coords.set_value(i, ChiValue::minus_one());
        } else {
            int k = 0;
            for (long q = 1; q < f; q *= p) ++k;
            coords.set_value(i, ChiValue::quad_sum(p, k));
        }
    }
    return coords;
}

struct SlimBasisSpec {
    long n = 1;
    Factorization factorization;
    ChiCoords coords;
    CycloElem theta;  // materialized in Q(zeta_n)
};

// The slim generator of Q(zeta_{p^s})/Q as a field element.
inline CycloElem slim_theta_prime_power(long p, int s) {
    ChiCoords coords = slim_coords_prime_power(p, s);
    const long n = coords.modulus();
    auto work = ring_create(synthesis_conductor(n));
    return to_subring(synthesize(coords, work), ring_create(n));
}

// Slim generator of Q(zeta_n)/Q: the product over the prime-power parts.
inline SlimBasisSpec slim_nbg(long n) {
    if (n < 1) throw std::invalid_argument("slim_nbg: modulus must be positive");
    if (n == 1) {
        ChiCoords coords(1);
        return {1, {}, coords, CycloElem::from_rational(ring_create(1), 1)};
    }
    Factorization fact = factorize(n);
    if (fact.size() == 1) {
        ChiCoords coords = slim_coords_prime_power(fact[0].prime, fact[0].exponent);
        CycloElem theta = slim_theta_prime_power(fact[0].prime, fact[0].exponent);
        return {n, std::move(fact), std::move(coords), std::move(theta)};
    }
    auto ring = ring_create(n);
    CycloElem theta = CycloElem::from_rational(ring, 1);
    for (const auto& [p, e] : fact) theta *= lift_to(slim_theta_prime_power(p, e), ring);
    ChiCoords coords = chi_coords(theta, n);
    return {n, std::move(fact), std::move(coords), std::move(theta)};
}

// For squarefree n the scaled root of unity mu(n) zeta_n already generates a
// slim basis.
inline CycloElem slim_nbg_squarefree(long n) {
    const int mu = moebius(n);
    if (mu == 0) throw std::invalid_argument("slim_nbg_squarefree: modulus must be squarefree");
    return Rat(mu) * zeta_power(ring_create(n), 1);
}

namespace detail {

inline int entry_rule_prime_power(long q, long p, long s) {
    s %= q;
    if (s < 0) s += q;
    const long g = s == 0 ? q : std::gcd(s, q);
    const long n0 = q / g;
    const long a0 = n0 == 1 ? 1 : (s / g) % n0;
    if (n0 == 1) return 1;
    if (n0 == 2) return -1;
    if (p != 2 && n0 == p) return a0 == 1 ? -1 : 0;
    if (p == 2) {
        if (a0 == 1) return 1;
        if (a0 == 1 + n0 / 2) return -1;
        return 0;
    }
    const long ps1 = n0 / p;  // p^(k-1)
    if ((a0 - 1) % ps1 != 0) return 0;
    const long j = (a0 - 1) / ps1;
    if (j == 0) return 0;
    return legendre(j, p);
}

}  // namespace detail

// Closed form for Tr(theta_n* zeta_n^s), a function of s mod n with values
// in {-1, 0, 1}. Composite n reduces to the prime-power parts through the
// Bezout twist: the q-component of zeta_n is zeta_q^(s t) with t the inverse
// of n/q mod q.
inline int entry_rule(long n, long s) {
    if (n < 1) throw std::invalid_argument("entry_rule: modulus must be positive");
    s %= n;
    if (s < 0) s += n;
    int c = 1;
    for (const auto& [p, e] : factorize(n)) {
        long q = p;
        for (int i = 1; i < e; ++i) q *= p;
        const long t = inv_mod((n / q) % q, q);
        c *= detail::entry_rule_prime_power(q, p, s % q * t % q);
        if (c == 0) return 0;
    }
    return c;
}

// First-principles slimness test: all n dual-trace values lie in {-1, 0, 1}.
inline bool is_slim(const CycloElem& theta, long n) {
    if (theta.ring()->conductor() != n)
        throw std::invalid_argument("is_slim: theta must live in the ring of conductor n");
    const CycloElem dual = dual_nbg(theta);
    for (long s = 0; s < n; ++s) {
        const Rat t = trace(mul_zeta_power(dual, s));
        if (t != -1 && t != 0 && t != 1) return false;
    }
    return true;
}

struct DecomposeResult {
    bool decomposable = false;
    Rat total_trace;
    std::optional<std::pair<CycloElem, CycloElem>> factors;  // (Sp_1, Sp_2) when decomposable
};

// theta in Q(zeta_{n1 n2}) splits as theta_1 theta_2 with theta_j in
// Q(zeta_{n_j}) exactly when Sp(theta) theta = Sp_1(theta) Sp_2(theta).
inline DecomposeResult decompose_check(const CycloElem& theta, long n1, long n2) {
    if (std::gcd(n1, n2) != 1) throw std::invalid_argument("decompose_check: moduli must be coprime");
    const long n = n1 * n2;
    if (theta.ring()->conductor() != n)
        throw std::invalid_argument("decompose_check: theta must live in Q(zeta_{n1 n2})");
    DecomposeResult res;
    res.total_trace = trace(theta);
    CycloElem sp1 = relative_trace(theta, n1);
    CycloElem sp2 = relative_trace(theta, n2);
    const CycloElem lhs = res.total_trace * theta;
    const CycloElem rhs = lift_to(sp1, theta.ring()) * lift_to(sp2, theta.ring());
    res.decomposable = lhs == rhs;
    if (res.decomposable) res.factors = {std::move(sp1), std::move(sp2)};
    return res;
}

}  // namespace adft
