#pragma once

// Characters of (Z/mZ)^x. The unit group is presented by independent
// generators (structure theorem: primitive roots for odd prime powers,
// <-1> x <5> for 2^s with s >= 3, CRT products for composites); a character
// stores its exponent vector against those generators, so values are kept as
// root-of-unity exponents and are only materialized into a cyclotomic ring
// at use sites. Gauss sums come in two routes: literal summation and the
// conductor reduction formula.

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "adft/cyclo.hpp"
#include "adft/numt.hpp"
#include "adft/rational.hpp"

namespace adft {

class UnitGroup {
  public:
    long modulus() const { return modulus_; }
    long phi() const { return phi_; }
    long lambda() const { return lambda_; }
    const std::vector<long>& generators() const { return generators_; }
    const std::vector<long>& orders() const { return orders_; }

    // Exponent vector of a against the generators; nullptr when a is not a unit.
    const std::vector<long>* dlog(long a) const {
        if (modulus_ == 1) return &empty_;
        a %= modulus_;
        if (a < 0) a += modulus_;
        const auto& v = dlog_[static_cast<std::size_t>(a)];
        return v.empty() && a != unit_one_ ? nullptr : &v;
    }

    static std::shared_ptr<const UnitGroup> get(long m);

  private:
    explicit UnitGroup(long m);

    long modulus_ = 1;
    long phi_ = 1;
    long lambda_ = 1;
    long unit_one_ = 1;
    std::vector<long> generators_;
    std::vector<long> orders_;
    std::vector<std::vector<long>> dlog_;
    std::vector<long> empty_;
};

inline UnitGroup::UnitGroup(long m) : modulus_(m), phi_(euler_phi(m)) {
    if (m > 1) {
        // Local generators per prime power, lifted to be 1 modulo the cofactor.
        for (const auto& [p, e] : factorize(m)) {
            long q = p;
            for (int i = 1; i < e; ++i) q *= p;
            std::vector<std::pair<long, long>> local;  // (generator mod q, order)
            if (p == 2) {
                if (e == 2) local.push_back({3, 2});
                if (e >= 3) {
                    local.push_back({q - 1, 2});
                    local.push_back({5, q / 4});
                }
            } else {
                local.push_back({primitive_root(q), euler_phi(q)});
            }
            const long cof = m / q;
            for (auto [g, ord] : local) {
                long x = g;
                if (cof > 1) {
                    long k = (g - 1) % q * inv_mod(cof % q, q) % q;
                    x = (1 + k * cof) % m;
                }
                generators_.push_back(x);
                orders_.push_back(ord);
            }
        }
        std::vector<std::vector<long>> gen_pows(generators_.size());
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            gen_pows[i].assign(static_cast<std::size_t>(orders_[i]), 1);
            for (long e = 1; e < orders_[i]; ++e)
                gen_pows[i][static_cast<std::size_t>(e)] =
                    gen_pows[i][static_cast<std::size_t>(e - 1)] * generators_[i] % m;
        }
        dlog_.resize(static_cast<std::size_t>(m));
        std::vector<long> exps(generators_.size(), 0);
        for (;;) {
            long a = 1;
            for (std::size_t i = 0; i < generators_.size(); ++i)
                a = a * gen_pows[i][static_cast<std::size_t>(exps[i])] % m;
            if (!dlog_[static_cast<std::size_t>(a)].empty())
                throw std::runtime_error("unit_group: generators are not independent");
            dlog_[static_cast<std::size_t>(a)] = exps;
            // Mixed-radix increment.
            std::size_t i = 0;
            while (i < exps.size() && ++exps[i] == orders_[i]) exps[i++] = 0;
            if (i == exps.size()) break;
        }
        unit_one_ = 1;
        long prod = 1;
        for (long d : orders_) prod *= d;
        if (prod != phi_) throw std::runtime_error("unit_group: order product mismatch");
    }
    lambda_ = 1;
    for (long d : orders_) lambda_ = std::lcm(lambda_, d);
}

inline std::shared_ptr<const UnitGroup> UnitGroup::get(long m) {
    check_factor_range(m, "unit_group");
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const UnitGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::shared_ptr<const UnitGroup> g(new UnitGroup(m));
    cache.emplace(m, g);
    return g;
}

inline std::shared_ptr<const UnitGroup> unit_group(long m) { return UnitGroup::get(m); }

// Unit representatives of (Z/mZ)^x in ascending order ({1} for m = 1).
inline std::vector<long> units_mod(long m) {
    if (m == 1) return {1};
    std::vector<long> us;
    for (long a = 1; a < m; ++a)
        if (std::gcd(a, m) == 1) us.push_back(a);
    return us;
}

class DirichletChar {
  public:
    DirichletChar(std::shared_ptr<const UnitGroup> group, std::vector<long> exps)
        : group_(std::move(group)), exps_(std::move(exps)) {
        const auto& orders = group_->orders();
        if (exps_.size() != orders.size())
            throw std::invalid_argument("DirichletChar: exponent count mismatch");
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            exps_[i] %= orders[i];
            if (exps_[i] < 0) exps_[i] += orders[i];
        }
        const long lam = group_->lambda();
        long g = lam;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            g = std::gcd(g, exps_[i] * (lam / orders[i]));
        order_ = lam / g;
        conductor_ = compute_conductor();
    }

    long modulus() const { return group_->modulus(); }
    long order() const { return order_; }
    long conductor() const { return conductor_; }
    const std::vector<long>& exponents() const { return exps_; }
    const std::shared_ptr<const UnitGroup>& group() const { return group_; }

    bool is_principal() const { return order_ == 1; }

    // chi(a) as an exponent of zeta_lambda; nullopt when gcd(a, m) > 1.
    std::optional<long> eval_lambda(long a) const {
        const auto* v = group_->dlog(a);
        if (!v) return std::nullopt;
        const long lam = group_->lambda();
        long k = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            k = (k + (*v)[i] % lam * (exps_[i] * (lam / group_->orders()[i]) % lam)) % lam;
        return k;
    }

    // chi(a) as an exponent of zeta_order; nullopt encodes the value 0.
    std::optional<long> eval(long a) const {
        auto k = eval_lambda(a);
        if (!k) return std::nullopt;
        const long lam = group_->lambda();
        const long step = lam / order_;
        if (*k % step != 0) throw std::runtime_error("char_eval: exponent outside value group");
        return *k / step % order_;
    }

    DirichletChar conjugate() const {
        std::vector<long> e = exps_;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = -e[i];
        return DirichletChar(group_, std::move(e));
    }

    DirichletChar power(long r) const {
        std::vector<long> e = exps_;
        for (long& x : e) x = x * (r % group_->lambda());
        return DirichletChar(group_, std::move(e));
    }

    // chi(-1), always +1 or -1.
    int value_at_minus_one() const {
        auto k = eval(-1 + modulus());
        if (!k || (*k != 0 && 2 * *k != order_))
            throw std::runtime_error("char: chi(-1) must be a sign");
        return *k == 0 ? 1 : -1;
    }

    // The primitive character at the conductor that induces this one.
    DirichletChar primitive() const {
        const long f = conductor_;
        if (f == modulus()) return *this;
        auto gf = UnitGroup::get(f);
        const long lam = group_->lambda();
        std::vector<long> e(gf->generators().size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            long y = gf->generators()[i];
            while (std::gcd(y, modulus()) != 1) y += f;
            const long k = *eval_lambda(y);
            const long d = gf->orders()[i];
            if (k * d % lam != 0) throw std::runtime_error("char: primitive lift failed");
            e[i] = k * d / lam % d;
        }
        return DirichletChar(std::move(gf), std::move(e));
    }

    friend bool operator==(const DirichletChar& a, const DirichletChar& b) {
        return a.modulus() == b.modulus() && a.exps_ == b.exps_;
    }

  private:
    long compute_conductor() const {
        // Smallest f | m on whose reduction kernel chi is trivial.
        for (long f : divisors(modulus())) {
            bool trivial = true;
            for (long a = 1; a <= modulus() && trivial; a += f)
                if (std::gcd(a, modulus()) == 1 && *eval_lambda(a) != 0) trivial = false;
            if (trivial) return f;
        }
        return modulus();
    }

    std::shared_ptr<const UnitGroup> group_;
    std::vector<long> exps_;
    long order_ = 1;
    long conductor_ = 1;
};

// All phi(m) characters mod m, principal character first (mixed-radix order
// of exponent vectors).
inline std::vector<DirichletChar> characters(long m) {
    auto group = UnitGroup::get(m);
    std::vector<DirichletChar> chars;
    std::vector<long> exps(group->generators().size(), 0);
    for (;;) {
        chars.emplace_back(group, exps);
        std::size_t i = 0;
        while (i < exps.size() && ++exps[i] == group->orders()[i]) exps[i++] = 0;
        if (i == exps.size()) break;
    }
    return chars;
}

// tau(chi | zeta_m^a) by literal summation; chi is evaluated through its
// primitive character, so any m with f_chi | m is accepted. The ring must
// contain both zeta_m and the character values.
inline CycloElem gauss_sum_direct(const DirichletChar& chi, long m, long a, const RingPtr& ring) {
    if (m < 1 || m % chi.conductor() != 0)
        throw std::invalid_argument("gauss_sum_direct: conductor does not divide the modulus");
    const long n = ring->conductor();
    const long d = chi.order();
    if (n % std::lcm(m, d) != 0)
        throw std::invalid_argument("gauss_sum_direct: ring conductor too small");
    const DirichletChar prim = chi.primitive();
    a %= m;
    if (a < 0) a += m;
    CycloElem sum(ring);
    for (long s : units_mod(m)) {
        auto k = prim.eval(s);
        if (!k) throw std::runtime_error("gauss_sum_direct: unit evaluated to zero");
        sum += zeta_power(ring, *k % d * (n / d) + a * s % m * (n / m));
    }
    return sum;
}

// tau(chi) at the conductor.
inline CycloElem gauss_sum(const DirichletChar& chi, const RingPtr& ring) {
    return gauss_sum_direct(chi, chi.conductor(), 1, ring);
}

// Structured value of tau(chi | zeta_m^a) as a multiple of tau(chi): writing
// zeta_m^a = zeta_m0^a0 with gcd(a0, m0) = 1, the sum vanishes unless
// f_chi | m0, and otherwise equals
// (phi(m)/phi(m0)) mu(m0/f) chi(m0/f) conj(chi)(a0) tau(chi).
struct GaussSumReduction {
    bool zero = true;
    Rat scale = 0;    // (phi(m)/phi(m0)) * mu(m0/f)
    long twist = 0;   // exponent of zeta_order for chi(m0/f) * conj(chi)(a0)
    long order = 1;
    long conductor = 1;
};

inline GaussSumReduction gauss_sum_reduced(const DirichletChar& chi, long m, long a) {
    if (m < 1) throw std::invalid_argument("gauss_sum_reduced: modulus must be positive");
    GaussSumReduction red;
    red.order = chi.order();
    red.conductor = chi.conductor();
    a %= m;
    if (a < 0) a += m;
    const long g = a == 0 ? m : std::gcd(a, m);
    const long m0 = m / g;
    const long a0 = m0 == 1 ? 1 : (a / g) % m0;
    const long f = chi.conductor();
    if (m0 % f != 0) return red;
    const long u = m0 / f;
    const int mu_u = moebius(u);
    if (mu_u == 0) return red;
    const DirichletChar prim = chi.primitive();
    auto ku = prim.eval(u);
    auto ka = prim.eval(a0);
    if (!ku || !ka) return red;  // chi(m0/f) or conj(chi)(a0) hits a non-unit
    red.zero = false;
    red.scale = Rat(euler_phi(m) / euler_phi(m0) * mu_u);
    red.twist = ((*ku - *ka) % red.order + red.order) % red.order;
    return red;
}

// Expands a reduction against tau(chi) computed in the given ring.
inline CycloElem materialize_reduction(const GaussSumReduction& red, const DirichletChar& chi,
                                       const RingPtr& ring) {
    if (red.zero) return CycloElem(ring);
    const long n = ring->conductor();
    if (n % red.order != 0)
        throw std::invalid_argument("materialize_reduction: ring conductor too small");
    CycloElem tau = gauss_sum(chi, ring);
    return red.scale * mul_zeta_power(tau, red.twist * (n / red.order));
}

}  // namespace adft
