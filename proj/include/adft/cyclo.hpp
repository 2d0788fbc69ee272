#pragma once

// Exact arithmetic in Q(zeta_N): elements are rational coefficient vectors
// modulo the N-th cyclotomic polynomial Phi_N. The ring precomputes the
// reduction of every power zeta^e, e in [0, N), so Galois action and
// root-of-unity products are table lookups. No embedding into C is used;
// zeta_N is a symbolic root of Phi_N.

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "adft/linalg.hpp"
#include "adft/numt.hpp"
#include "adft/rational.hpp"

namespace adft {

inline constexpr long kDefaultConductorBound = 4096;

namespace detail {

// Dense integer polynomials, lowest coefficient first.
inline std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Exact division, divisor monic; throws if the division leaves a remainder.
inline std::vector<Int> poly_divexact(std::vector<Int> num, const std::vector<Int>& den) {
    if (den.empty() || den.back() != 1)
        throw std::invalid_argument("poly_divexact: divisor must be monic");
    if (num.size() < den.size()) throw std::invalid_argument("poly_divexact: degree underflow");
    std::vector<Int> q(num.size() - den.size() + 1, Int(0));
    for (std::size_t i = q.size(); i-- > 0;) {
        Int c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::runtime_error("poly_divexact: nonzero remainder");
    return q;
}

// Phi_n by the recursion Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
inline std::vector<Int> cyclotomic_poly(long n) {
    std::vector<std::vector<Int>> memo(static_cast<std::size_t>(n) + 1);
    for (long d : divisors(n)) {
        std::vector<Int> num(static_cast<std::size_t>(d) + 1, Int(0));
        num[0] = -1;
        num.back() = 1;
        std::vector<Int> den{Int(1)};
        for (long e : divisors(d))
            if (e < d) den = poly_mul(den, memo[e]);
        memo[d] = poly_divexact(std::move(num), den);
    }
    return memo[n];
}

}  // namespace detail

class CycloRing;
using RingPtr = std::shared_ptr<const CycloRing>;

class CycloRing {
  public:
    long conductor() const { return conductor_; }
    long degree() const { return degree_; }
    const std::vector<Int>& modulus() const { return modulus_; }

    // Reduction of zeta^e to the power basis; e taken mod N (zeta^N = 1).
    const std::vector<Rat>& power(long e) const {
        e %= conductor_;
        if (e < 0) e += conductor_;
        return powers_[static_cast<std::size_t>(e)];
    }

    // Ascending representatives of (Z/NZ)^x; the fixed Galois order used by
    // every matrix indexed by the Galois group.
    const std::vector<long>& units() const { return units_; }

    long unit_index(long a) const {
        if (conductor_ == 1) return 0;
        a %= conductor_;
        if (a < 0) a += conductor_;
        long idx = unit_index_[static_cast<std::size_t>(a)];
        if (idx < 0) throw std::invalid_argument("unit_index: not coprime to the conductor");
        return idx;
    }

    static RingPtr create(long n, long bound);

  private:
    explicit CycloRing(long n);

    long conductor_ = 0;
    long degree_ = 0;
    std::vector<Int> modulus_;
    std::vector<std::vector<Rat>> powers_;
    std::vector<long> units_;
    std::vector<long> unit_index_;
};

inline CycloRing::CycloRing(long n) : conductor_(n) {
    modulus_ = detail::cyclotomic_poly(n);
    degree_ = static_cast<long>(modulus_.size()) - 1;
    if (degree_ != euler_phi(n)) throw std::runtime_error("cyclotomic degree mismatch");

    const std::size_t deg = static_cast<std::size_t>(degree_);
    powers_.resize(static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < powers_.size(); ++e) {
        if (e < deg) {
            powers_[e].assign(deg, Rat(0));
            powers_[e][e] = 1;
        } else {
            // x * powers_[e-1], reduced with x^deg = -(Phi_0 + ... + Phi_{deg-1} x^{deg-1}).
            std::vector<Rat> next(deg, Rat(0));
            const auto& prev = powers_[e - 1];
            for (std::size_t i = 1; i < deg; ++i) next[i] = prev[i - 1];
            const Rat top = prev[deg - 1];
            if (top != 0)
                for (std::size_t i = 0; i < deg; ++i) next[i] -= top * Rat(modulus_[i]);
            powers_[e] = std::move(next);
        }
    }

    if (n == 1) {
        units_ = {1};
    } else {
        unit_index_.assign(static_cast<std::size_t>(n), -1);
        for (long a = 1; a < n; ++a) {
            if (std::gcd(a, n) == 1) {
                unit_index_[static_cast<std::size_t>(a)] = static_cast<long>(units_.size());
                units_.push_back(a);
            }
        }
    }
}

inline RingPtr CycloRing::create(long n, long bound) {
    if (n < 1) throw std::invalid_argument("ring_create: conductor must be positive");
    if (n > bound) throw std::invalid_argument("ring_create: conductor exceeds bound");
    static std::mutex mu;
    static std::map<long, RingPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    RingPtr ring(new CycloRing(n));
    cache.emplace(n, ring);
    return ring;
}

inline RingPtr ring_create(long n, long bound = kDefaultConductorBound) {
    return CycloRing::create(n, bound);
}

class CycloElem {
  public:
    CycloElem() = default;
    explicit CycloElem(RingPtr ring)
        : ring_(std::move(ring)), coeffs_(static_cast<std::size_t>(ring_->degree()), Rat(0)) {}
    CycloElem(RingPtr ring, std::vector<Rat> coeffs)
        : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        if (static_cast<long>(coeffs_.size()) != ring_->degree())
            throw std::invalid_argument("CycloElem: coefficient count must equal the ring degree");
    }

    static CycloElem from_rational(RingPtr ring, const Rat& value) {
        CycloElem x(std::move(ring));
        x.coeffs_[0] = value;
        return x;
    }

    const RingPtr& ring() const { return ring_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& coeff(std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const {
        for (const Rat& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("rational_value: element is not rational");
        return coeffs_[0];
    }

    friend bool operator==(const CycloElem& a, const CycloElem& b) {
        return a.ring_->conductor() == b.ring_->conductor() && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycloElem& a, const CycloElem& b) { return !(a == b); }

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
        require_same_ring(a, b);
        CycloElem r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        return r;
    }
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b) {
        require_same_ring(a, b);
        CycloElem r = a;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
        return r;
    }
    friend CycloElem operator-(const CycloElem& a) {
        CycloElem r = a;
        for (Rat& c : r.coeffs_) c = -c;
        return r;
    }
    friend CycloElem operator*(const Rat& s, const CycloElem& a) {
        CycloElem r = a;
        for (Rat& c : r.coeffs_) c *= s;
        return r;
    }
    friend CycloElem operator*(const CycloElem& a, const Rat& s) { return s * a; }

    friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
        require_same_ring(a, b);
        const CycloRing& ring = *a.ring_;
        const std::size_t deg = a.coeffs_.size();
        std::vector<Rat> conv(2 * deg - 1, Rat(0));
        for (std::size_t i = 0; i < deg; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < deg; ++j) {
                if (b.coeffs_[j] == 0) continue;
                conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        CycloElem r(a.ring_);
        for (std::size_t i = 0; i < deg; ++i) r.coeffs_[i] = std::move(conv[i]);
        for (std::size_t e = deg; e < conv.size(); ++e) {
            if (conv[e] == 0) continue;
            const auto& row = ring.power(static_cast<long>(e));
            for (std::size_t i = 0; i < deg; ++i)
                if (row[i] != 0) r.coeffs_[i] += conv[e] * row[i];
        }
        return r;
    }

    CycloElem& operator+=(const CycloElem& b) { return *this = *this + b; }
    CycloElem& operator-=(const CycloElem& b) { return *this = *this - b; }
    CycloElem& operator*=(const CycloElem& b) { return *this = *this * b; }

  private:
    static void require_same_ring(const CycloElem& a, const CycloElem& b) {
        if (!a.ring_ || !b.ring_ || a.ring_->conductor() != b.ring_->conductor())
            throw std::invalid_argument("CycloElem: operands belong to different rings");
    }

    RingPtr ring_;
    std::vector<Rat> coeffs_;
};

inline CycloElem zeta_power(const RingPtr& ring, long s) {
    return CycloElem(ring, ring->power(s));
}

// x * zeta^e as a table-driven shift.
inline CycloElem mul_zeta_power(const CycloElem& x, long e) {
    const CycloRing& ring = *x.ring();
    const long n = ring.conductor();
    const long deg = ring.degree();
    e %= n;
    if (e < 0) e += n;
    std::vector<Rat> out(static_cast<std::size_t>(deg), Rat(0));
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
        if (x.coeff(j) == 0) continue;
        const long shifted = (static_cast<long>(j) + e) % n;
        if (shifted < deg) {
            out[static_cast<std::size_t>(shifted)] += x.coeff(j);
        } else {
            const auto& row = ring.power(shifted);
            for (long i = 0; i < deg; ++i)
                if (row[static_cast<std::size_t>(i)] != 0)
                    out[static_cast<std::size_t>(i)] += x.coeff(j) * row[static_cast<std::size_t>(i)];
        }
    }
    return CycloElem(x.ring(), std::move(out));
}

// The automorphism zeta -> zeta^a; requires gcd(a, N) = 1.
inline CycloElem galois_apply(const CycloElem& x, long a) {
    const CycloRing& ring = *x.ring();
    const long n = ring.conductor();
    a %= n;
    if (a < 0) a += n;
    if (n > 1 && std::gcd(a, n) != 1)
        throw std::invalid_argument("galois_apply: index not coprime to the conductor");
    std::vector<Rat> out(static_cast<std::size_t>(ring.degree()), Rat(0));
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
        if (x.coeff(j) == 0) continue;
        const auto& row = ring.power(a * static_cast<long>(j));
        for (std::size_t i = 0; i < out.size(); ++i)
            if (row[i] != 0) out[i] += x.coeff(j) * row[i];
    }
    return CycloElem(x.ring(), std::move(out));
}

// Absolute trace: the sum of all Galois conjugates, which must come out
// rational; a non-rational sum indicates an arithmetic bug and throws.
inline Rat trace(const CycloElem& x) {
    CycloElem sum(x.ring());
    for (long a : x.ring()->units()) sum += galois_apply(x, a);
    if (!sum.is_rational()) throw std::runtime_error("trace: sum of conjugates is not rational");
    return sum.coeff(0);
}

// Embedding Q(zeta_t) -> Q(zeta_N) along zeta_t = zeta_N^(N/t).
inline CycloElem lift_to(const CycloElem& x, const RingPtr& super) {
    const long t = x.ring()->conductor();
    const long n = super->conductor();
    if (n % t != 0) throw std::invalid_argument("lift_to: target conductor not a multiple");
    const long stride = n / t;
    std::vector<Rat> out(static_cast<std::size_t>(super->degree()), Rat(0));
    for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
        if (x.coeff(j) == 0) continue;
        const auto& row = super->power(static_cast<long>(j) * stride);
        for (std::size_t i = 0; i < out.size(); ++i)
            if (row[i] != 0) out[i] += x.coeff(j) * row[i];
    }
    return CycloElem(super, std::move(out));
}

// Re-expresses x in Q(zeta_t); hard error when x does not lie there.
inline CycloElem to_subring(const CycloElem& x, const RingPtr& sub) {
    const long n = x.ring()->conductor();
    const long t = sub->conductor();
    if (n % t != 0) throw std::invalid_argument("to_subring: not a subfield conductor");
    if (t == n) return CycloElem(sub, x.coeffs());
    const long stride = n / t;
    const std::size_t rows = static_cast<std::size_t>(x.ring()->degree());
    const std::size_t cols = static_cast<std::size_t>(sub->degree());
    RatRows lift(rows, std::vector<Rat>(cols));
    for (std::size_t j = 0; j < cols; ++j) {
        const auto& row = x.ring()->power(static_cast<long>(j) * stride);
        for (std::size_t i = 0; i < rows; ++i) lift[i][j] = row[i];
    }
    auto sol = solve_linear(std::move(lift), x.coeffs());
    if (!sol) throw std::domain_error("to_subring: element does not lie in the subfield");
    return CycloElem(sub, std::move(*sol));
}

// Relative trace to Q(zeta_t): sum over the automorphisms fixing the subfield.
inline CycloElem relative_trace(const CycloElem& x, long target_modulus) {
    const long n = x.ring()->conductor();
    if (target_modulus < 1 || n % target_modulus != 0)
        throw std::invalid_argument("relative_trace: target must divide the conductor");
    CycloElem sum(x.ring());
    for (long a : x.ring()->units())
        if ((a - 1) % target_modulus == 0) sum += galois_apply(x, a);
    return to_subring(sum, ring_create(target_modulus));
}

// Multiplicative inverse in the field Q(zeta_N).
inline CycloElem inverse(const CycloElem& x) {
    if (x.is_zero()) throw std::domain_error("inverse: zero element");
    const std::size_t deg = x.coeffs().size();
    RatRows m(deg, std::vector<Rat>(deg));
    for (std::size_t j = 0; j < deg; ++j) {
        CycloElem col = mul_zeta_power(x, static_cast<long>(j));
        for (std::size_t i = 0; i < deg; ++i) m[i][j] = col.coeff(i);
    }
    std::vector<Rat> rhs(deg, Rat(0));
    rhs[0] = 1;
    auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol) throw std::runtime_error("inverse: multiplication matrix is singular");
    return CycloElem(x.ring(), std::move(*sol));
}

// Dual normal basis generator: theta* with Tr(theta*^sigma theta^rho) =
// delta_{sigma,rho}, obtained from the exact Gram system. Trace invariance
// collapses the Gram matrix to the phi(N) values Tr(theta theta^c).
inline CycloElem dual_nbg(const CycloElem& theta) {
    const CycloRing& ring = *theta.ring();
    const long n = ring.conductor();
    const auto& units = ring.units();
    const std::size_t k = units.size();

    std::vector<CycloElem> conj(k);
    for (std::size_t i = 0; i < k; ++i) conj[i] = galois_apply(theta, units[i]);
    std::vector<Rat> pair_trace(k);
    for (std::size_t i = 0; i < k; ++i) pair_trace[i] = trace(theta * conj[i]);

    RatRows gram(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i) {
        const long inv_ai = inv_mod(units[i], n);
        for (std::size_t j = 0; j < k; ++j)
            gram[i][j] = pair_trace[static_cast<std::size_t>(ring.unit_index(units[j] * inv_ai % n))];
    }
    std::vector<Rat> rhs(k, Rat(0));
    rhs[static_cast<std::size_t>(ring.unit_index(1))] = 1;
    auto sol = solve_linear(std::move(gram), std::move(rhs));
    if (!sol) throw std::domain_error("dual_nbg: singular Gram matrix, not a normal basis generator");

    CycloElem dual(theta.ring());
    for (std::size_t i = 0; i < k; ++i) dual += (*sol)[i] * conj[i];
    return dual;
}

inline bool is_normal_basis_generator(const CycloElem& theta) {
    try {
        dual_nbg(theta);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

}  // namespace adft
