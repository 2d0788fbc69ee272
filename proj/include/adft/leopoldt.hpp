#pragma once

// Coordinates of cyclotomic numbers against Gauss sums: every theta in
// Q(zeta_n) is (1/|G|) sum_chi y(chi|theta) tau(chi) for a unique family
// y(chi|theta) in Q(chi) that is compatible with conjugation. Analysis
// (chi_coords), synthesis, the dual-basis coordinate map, the trace pairing
// expressed through the coordinates, and the closed form for coordinates of
// roots of unity all live here.
//
// Coordinate values are carried either as small tagged constants (the values
// the slim construction assigns) or as explicit elements of the value ring
// Q(zeta_lambda), lambda the exponent of (Z/nZ)^x.

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adft/cyclo.hpp"
#include "adft/dirichlet.hpp"
#include "adft/numt.hpp"

namespace adft {

enum class ChiTag { One, MinusOne, Half, QuadSum, Explicit };

class ChiValue {
  public:
    static ChiValue one() { return ChiValue(ChiTag::One); }
    static ChiValue minus_one() { return ChiValue(ChiTag::MinusOne); }
    static ChiValue half() { return ChiValue(ChiTag::Half); }
    static ChiValue quad_sum(long p, int s) {
        ChiValue v(ChiTag::QuadSum);
        v.p_ = p;
        v.s_ = s;
        return v;
    }
    static ChiValue explicit_value(CycloElem e) {
        ChiValue v(ChiTag::Explicit);
        v.explicit_ = std::move(e);
        return v;
    }

    ChiTag tag() const { return tag_; }
    long quad_prime() const { return p_; }
    int quad_exponent() const { return s_; }
    const CycloElem& explicit_payload() const { return explicit_; }

    // The value as an element of `ring`; chi is needed for QuadSum entries.
    CycloElem materialize(const DirichletChar& chi, const RingPtr& ring) const {
        switch (tag_) {
            case ChiTag::One:
                return CycloElem::from_rational(ring, 1);
            case ChiTag::MinusOne:
                return CycloElem::from_rational(ring, -1);
            case ChiTag::Half:
                return CycloElem::from_rational(ring, make_rat(1, 2));
            case ChiTag::QuadSum: {
                const long n = ring->conductor();
                const long d = chi.order();
                if (n % d != 0)
                    throw std::invalid_argument("ChiValue: ring cannot hold the character values");
                long q = p_;  // p^(s-1)
                for (int i = 2; i < s_; ++i) q *= p_;
                const DirichletChar bar = chi.conjugate();
                CycloElem sum(ring);
                for (long i = 1; i < p_; ++i) {
                    auto k = bar.eval(1 + i * q);
                    if (!k) throw std::runtime_error("ChiValue: 1 + i p^(s-1) must be a unit");
                    sum += Rat(legendre(i, p_)) * zeta_power(ring, *k * (n / d));
                }
                return make_rat(1, p_) * sum;
            }
            case ChiTag::Explicit:
                if (explicit_.ring()->conductor() == ring->conductor())
                    return CycloElem(ring, explicit_.coeffs());
                return lift_to(explicit_, ring);
        }
        throw std::logic_error("ChiValue: bad tag");
    }

  private:
    explicit ChiValue(ChiTag tag) : tag_(tag) {}

    ChiTag tag_;
    long p_ = 0;
    int s_ = 0;
    CycloElem explicit_;
};

// lcm(n, lambda(n)): the single working conductor in which theta, all
// character values and all Gauss sums mod n coexist.
inline long synthesis_conductor(long n) { return std::lcm(n, carmichael_lambda(n)); }

class ChiCoords {
  public:
    // All-ones placeholder; callers fill entries with set_value.
    explicit ChiCoords(long n) : modulus_(n), chars_(characters(n)) {
        values_.assign(chars_.size(), ChiValue::one());
        long lam = 1;
        for (const auto& chi : chars_) lam = std::lcm(lam, chi.order());
        value_ring_ = ring_create(lam);
    }

    ChiCoords(long n, std::vector<ChiValue> values) : ChiCoords(n) {
        if (values.size() != chars_.size())
            throw std::invalid_argument("ChiCoords: one value per character required");
        values_ = std::move(values);
    }

    long modulus() const { return modulus_; }
    std::size_t size() const { return chars_.size(); }
    const RingPtr& value_ring() const { return value_ring_; }
    const DirichletChar& char_at(std::size_t i) const { return chars_[i]; }
    const ChiValue& value_at(std::size_t i) const { return values_[i]; }

    void set_value(std::size_t i, ChiValue v) { values_[i] = std::move(v); }

    CycloElem materialized(std::size_t i) const {
        return values_[i].materialize(chars_[i], value_ring_);
    }

    // Index of the character with the given exponent vector (mixed radix,
    // matching the enumeration order of characters()).
    std::size_t index_of(const std::vector<long>& exps) const {
        const auto& orders = chars_[0].group()->orders();
        std::size_t idx = 0, stride = 1;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            idx += static_cast<std::size_t>(exps[i]) * stride;
            stride *= static_cast<std::size_t>(orders[i]);
        }
        return idx;
    }

    std::size_t conjugate_index(std::size_t i) const {
        return index_of(chars_[i].conjugate().exponents());
    }
    std::size_t power_index(std::size_t i, long r) const {
        return index_of(chars_[i].power(r).exponents());
    }

  private:
    long modulus_;
    std::vector<DirichletChar> chars_;
    std::vector<ChiValue> values_;
    RingPtr value_ring_;
};

// Compatibility with conjugation: y(chi^rho) = y(chi)^rho for every
// automorphism rho of the value field.
inline bool check_conjugation_consistency(const ChiCoords& coords) {
    const auto& ring = coords.value_ring();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const CycloElem yi = coords.materialized(i);
        for (long r : ring->units()) {
            const std::size_t j = coords.power_index(i, r);
            if (coords.materialized(j) != galois_apply(yi, r)) return false;
        }
    }
    return true;
}

// Analysis: y(chi|theta) = (1/f_chi) sum_sigma chi(sigma) theta^sigma conj(tau(chi)).
inline ChiCoords chi_coords(const CycloElem& theta, long n) {
    if (theta.ring()->conductor() != n)
        throw std::invalid_argument("chi_coords: theta must live in the ring of conductor n");
    const RingPtr work = ring_create(synthesis_conductor(n));
    const long w = work->conductor();

    const auto& units = theta.ring()->units();
    std::vector<CycloElem> conj(units.size());
    for (std::size_t i = 0; i < units.size(); ++i)
        conj[i] = lift_to(galois_apply(theta, units[i]), work);

    ChiCoords coords(n);
    for (std::size_t c = 0; c < coords.size(); ++c) {
        const DirichletChar& chi = coords.char_at(c);
        const long d = chi.order();
        CycloElem sum(work);
        for (std::size_t i = 0; i < units.size(); ++i) {
            const long k = *chi.eval(units[i]);
            sum += mul_zeta_power(conj[i], k * (w / d));
        }
        const CycloElem tau_bar = galois_apply(gauss_sum(chi, work), -1);
        const CycloElem y = make_rat(1, chi.conductor()) * (sum * tau_bar);
        coords.set_value(c, ChiValue::explicit_value(to_subring(y, coords.value_ring())));
    }
    return coords;
}

// Synthesis: theta = (1/|G|) sum_chi y(chi) tau(chi), evaluated in `ring`.
// The coordinates must satisfy the conjugation compatibility and the result
// must land in Q(zeta_n); both are checked.
inline CycloElem synthesize(const ChiCoords& coords, const RingPtr& ring) {
    const long n = coords.modulus();
    const long need = std::lcm(n, coords.value_ring()->conductor());
    if (ring->conductor() % need != 0)
        throw std::invalid_argument("synthesize: ring conductor too small");
    if (!check_conjugation_consistency(coords))
        throw std::domain_error("synthesize: coordinates violate conjugation compatibility");

    CycloElem sum(ring);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const DirichletChar& chi = coords.char_at(i);
        const CycloElem y = coords.value_at(i).materialize(chi, ring);
        if (y.is_zero()) continue;
        sum += y * gauss_sum(chi, ring);
    }
    CycloElem theta = make_rat(1, euler_phi(n)) * sum;
    to_subring(theta, ring_create(n));  // membership assertion
    return theta;
}

// Coordinates of theta^sigma_a: each entry picks up conj(chi)(a).
inline ChiCoords coords_of_conjugate(const ChiCoords& coords, long a) {
    const long n = coords.modulus();
    if (n > 1 && std::gcd(((a % n) + n) % n, n) != 1)
        throw std::invalid_argument("coords_of_conjugate: index not coprime to the modulus");
    ChiCoords out = coords;
    const auto& ring = coords.value_ring();
    const long w = ring->conductor();
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const DirichletChar& chi = coords.char_at(i);
        const long k = *chi.conjugate().eval(a);
        if (k == 0) continue;  // multiplying by 1 keeps the stored form
        CycloElem y = mul_zeta_power(coords.materialized(i), k * (w / chi.order()));
        out.set_value(i, ChiValue::explicit_value(std::move(y)));
    }
    return out;
}

// Coordinates of the dual generator: y(chi|theta*) = chi(-1) / (f_chi y(conj(chi)|theta)).
inline ChiCoords dual_coords(const ChiCoords& coords) {
    ChiCoords out = coords;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const DirichletChar& chi = coords.char_at(i);
        const CycloElem ybar = coords.materialized(coords.conjugate_index(i));
        if (ybar.is_zero())
            throw std::domain_error("dual_coords: zero coordinate, not a normal basis generator");
        CycloElem y = Rat(chi.value_at_minus_one()) * inverse(Rat(chi.conductor()) * ybar);
        out.set_value(i, ChiValue::explicit_value(std::move(y)));
    }
    return out;
}

inline bool is_nbg(const ChiCoords& coords) {
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords.materialized(i).is_zero()) return false;
    return true;
}

// Tr(alpha^sigma beta^rho) evaluated through the coordinates:
// (1/|G|) sum_chi y(chi|alpha) y(conj chi|beta) conj(chi)(sigma) chi(rho) chi(-1) f_chi.
inline Rat trace_pairing(const ChiCoords& ca, const ChiCoords& cb, long sigma, long rho) {
    if (ca.modulus() != cb.modulus())
        throw std::invalid_argument("trace_pairing: coordinate moduli differ");
    const auto& ring = ca.value_ring();
    const long w = ring->conductor();
    CycloElem acc(ring);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        const DirichletChar& chi = ca.char_at(i);
        auto ks = chi.eval(sigma);
        auto kr = chi.eval(rho);
        if (!ks || !kr) throw std::invalid_argument("trace_pairing: index not coprime");
        CycloElem term = ca.materialized(i) * cb.materialized(ca.conjugate_index(i));
        if (term.is_zero()) continue;
        const long d = chi.order();
        const long shift = ((*kr - *ks) % d + d) % d;
        term = mul_zeta_power(term, shift * (w / d));
        acc += Rat(chi.value_at_minus_one() * chi.conductor()) * term;
    }
    return (make_rat(1, euler_phi(ca.modulus())) * acc).rational_value();
}

// Closed form for the coordinates of zeta_n^s: with zeta_n^s = zeta_n0^a0,
// y(chi) = (phi(n)/phi(n0)) mu(n0/f) chi(n0/f) conj(chi)(a0) when f | n0, else 0.
inline ChiCoords root_coords(long n, long s) {
    ChiCoords coords(n);
    const auto& ring = coords.value_ring();
    const long w = ring->conductor();
    s %= n;
    if (s < 0) s += n;
    const long g = s == 0 ? n : std::gcd(s, n);
    const long n0 = n / g;
    const long a0 = n0 == 1 ? 1 : (s / g) % n0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const DirichletChar& chi = coords.char_at(i);
        CycloElem y(ring);
        const long f = chi.conductor();
        if (n0 % f == 0) {
            const long u = n0 / f;
            const int mu_u = moebius(u);
            const DirichletChar prim = chi.primitive();
            auto ku = prim.eval(u);
            auto ka = prim.eval(a0);
            if (mu_u != 0 && ku && ka) {
                const long d = chi.order();
                const long shift = ((*ku - *ka) % d + d) % d;
                const Rat scale = Rat(euler_phi(n) / euler_phi(n0) * mu_u);
                y = scale * zeta_power(ring, shift * (w / d));
            }
        }
        coords.set_value(i, ChiValue::explicit_value(std::move(y)));
    }
    return coords;
}

}  // namespace adft
