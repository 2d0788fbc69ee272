#pragma once

// Elementary number theory on machine integers: factorization by trial
// division (hard input bound, desk scale), Euler phi, Moebius, Legendre
// symbol, modular inverses, primitive roots of prime powers and Bezout
// coefficients for coprime moduli.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adft {

// Inputs to factorize()/is_prime() must stay below this bound.
inline constexpr long kFactorBound = 1L << 20;

struct PrimePower {
    long prime = 0;
    int exponent = 0;
    bool operator==(const PrimePower&) const = default;
};

// Prime powers sorted by ascending prime; product reconstructs the input.
using Factorization = std::vector<PrimePower>;

inline void check_factor_range(long n, const char* who) {
    if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be positive");
    if (n > kFactorBound)
        throw std::invalid_argument(std::string(who) + ": n exceeds factorization bound");
}

inline Factorization factorize(long n) {
    check_factor_range(n, "factorize");
    Factorization f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) n /= p, ++e;
        f.push_back({p, e});
    }
    if (n > 1) f.push_back({n, 1});
    return f;
}

inline bool is_prime(long n) {
    check_factor_range(n, "is_prime");
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline long euler_phi(long n) {
    check_factor_range(n, "euler_phi");
    long phi = 1;
    for (const auto& [p, e] : factorize(n)) {
        long q = p;
        for (int i = 1; i < e; ++i) q *= p;
        phi *= q - q / p;
    }
    return phi;
}

inline int moebius(long n) {
    check_factor_range(n, "moebius");
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        sign = -sign;
        (void)p;
    }
    return sign;
}

inline long pow_mod(long base, long exp, long mod) {
    if (mod <= 0) throw std::invalid_argument("pow_mod: modulus must be positive");
    long result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

// Quadratic residue symbol (a/p) for an odd prime p; (0/p) = 0.
inline int legendre(long a, long p) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long v = pow_mod(a, (p - 1) / 2, p);
    return v == 1 ? 1 : -1;
}

// Extended Euclid: returns (g, x, y) with x*a + y*b = g = gcd(a, b), g >= 0.
inline std::tuple<long, long, long> ext_gcd(long a, long b) {
    long old_r = a, r = b;
    long old_x = 1, x = 0;
    long old_y = 0, y = 1;
    while (r != 0) {
        long q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_x, x) = std::pair{x, old_x - q * x};
        std::tie(old_y, y) = std::pair{y, old_y - q * y};
    }
    if (old_r < 0) old_r = -old_r, old_x = -old_x, old_y = -old_y;
    return {old_r, old_x, old_y};
}

// Inverse of a modulo m, in [0, m). Requires gcd(a, m) = 1.
inline long inv_mod(long a, long m) {
    if (m < 1) throw std::invalid_argument("inv_mod: modulus must be positive");
    if (m == 1) return 0;
    a %= m;
    if (a < 0) a += m;
    auto [g, x, y] = ext_gcd(a, m);
    (void)y;
    if (g != 1) throw std::invalid_argument("inv_mod: arguments are not coprime");
    x %= m;
    if (x < 0) x += m;
    return x;
}

// Bezout pair (s1, s2) with s1*n1 + s2*n2 = 1 for coprime n1, n2.
inline std::pair<long, long> crt_coefficients(long n1, long n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("crt_coefficients: moduli must be positive");
    auto [g, s1, s2] = ext_gcd(n1, n2);
    if (g != 1) throw std::invalid_argument("crt_coefficients: moduli are not coprime");
    return {s1, s2};
}

inline std::vector<long> divisors(long n) {
    check_factor_range(n, "divisors");
    std::vector<long> ds;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        ds.push_back(d);
        if (d != n / d) ds.push_back(n / d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Generator of the unit group mod q, for q an odd prime power or q in {1, 2, 4}.
inline long primitive_root(long q) {
    check_factor_range(q, "primitive_root");
    if (q == 1 || q == 2) return 1;
    if (q == 4) return 3;
    Factorization f = factorize(q);
    if (f.size() != 1 || f[0].prime == 2)
        throw std::invalid_argument("primitive_root: modulus must be an odd prime power or 1, 2, 4");
    long p = f[0].prime;
    Factorization pm1 = factorize(p - 1);
    long g = 0;
    for (long c = 2; c < p; ++c) {
        bool ok = true;
        for (const auto& [r, e] : pm1) {
            (void)e;
            if (pow_mod(c, (p - 1) / r, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            g = c;
            break;
        }
    }
    if (f[0].exponent == 1) return g;
    // Lift to p^s: g stays primitive unless g^(p-1) = 1 mod p^2.
    if (pow_mod(g, p - 1, p * p) == 1) g += p;
    return g;
}

// Exponent of the unit group mod n (Carmichael function).
inline long carmichael_lambda(long n) {
    check_factor_range(n, "carmichael_lambda");
    long lam = 1;
    for (const auto& [p, e] : factorize(n)) {
        long q = p;
        for (int i = 1; i < e; ++i) q *= p;
        long local = q - q / p;
        if (p == 2 && e >= 3) local = q / 4;
        lam = std::lcm(lam, local);
    }
    return lam;
}

}  // namespace adft
