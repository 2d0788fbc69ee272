#pragma once

// Named identity suites behind `adft verify`. Each check exercises one of
// the exact identities the library is built on and reports pass/fail with a
// short diagnostic; suites fail loudly rather than tolerantly.

#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "adft/adft_matrix.hpp"
#include "adft/dirichlet.hpp"
#include "adft/fadft.hpp"
#include "adft/io.hpp"
#include "adft/leopoldt.hpp"
#include "adft/slim.hpp"

namespace adft {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

namespace detail {

template <typename F>
CheckResult run_check(std::string name, F&& body) {
    CheckResult r;
    r.name = std::move(name);
    try {
        r.ok = body(r.detail);
    } catch (const std::exception& e) {
        r.ok = false;
        r.detail = e.what();
    }
    return r;
}

inline CycloElem random_field_elem(const RingPtr& ring, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    std::vector<Rat> c(static_cast<std::size_t>(ring->degree()));
    for (Rat& x : c) x = make_rat(num(rng), den(rng));
    return CycloElem(ring, std::move(c));
}

inline std::vector<long> sweep_moduli(long bound) {
    std::vector<long> all{2,  3,  4,  5,  6,  7,  8,  9,  10, 12, 15, 16,
                          20, 21, 24, 25, 27, 30, 32, 36, 45, 49, 64};
    std::vector<long> out;
    for (long n : all)
        if (n <= bound) out.push_back(n);
    return out;
}

}  // namespace detail

inline std::vector<CheckResult> verify_slim(long bound = 64) {
    std::vector<CheckResult> results;

    results.push_back(detail::run_check(
        "closed-form matrix entries = dual-trace oracle on prime powers", [&](std::string& detail) {
            for (long p : {2L, 3L, 5L, 7L, 11L, 13L})
                for (long q = p; q <= bound; q *= p) {
                    CycloElem dual = dual_nbg(slim_nbg(q).theta);
                    for (long s = 0; s < q; ++s)
                        if (Rat(entry_rule(q, s)) != trace(mul_zeta_power(dual, s))) {
                            detail = "mismatch at n=" + std::to_string(q) + " s=" + std::to_string(s);
                            return false;
                        }
                }
            return true;
        }));

    results.push_back(detail::run_check(
        "closed-form matrix entries = dual-trace oracle on composite moduli",
        [&](std::string& detail) {
            for (long n : {12L, 15L, 20L, 24L, 36L, 45L}) {
                if (n > bound) continue;
                CycloElem dual = dual_nbg(slim_nbg(n).theta);
                for (long s = 0; s < n; ++s)
                    if (Rat(entry_rule(n, s)) != trace(mul_zeta_power(dual, s))) {
                        detail = "mismatch at n=" + std::to_string(n) + " s=" + std::to_string(s);
                        return false;
                    }
            }
            return true;
        }));

    results.push_back(detail::run_check(
        "every constructed generator is slim and has unit trace", [&](std::string& detail) {
            for (long n : detail::sweep_moduli(bound)) {
                auto spec = slim_nbg(n);
                if (trace(spec.theta) != 1) {
                    detail = "trace != 1 at n=" + std::to_string(n);
                    return false;
                }
                if (!is_slim(spec.theta, n)) {
                    detail = "not slim at n=" + std::to_string(n);
                    return false;
                }
            }
            return true;
        }));

    results.push_back(detail::run_check(
        "scaled roots of unity are slim generators for squarefree moduli", [&](std::string& detail) {
            for (long n : {2L, 3L, 5L, 6L, 7L, 10L, 14L, 15L, 21L, 30L}) {
                if (n > bound) continue;
                if (!is_slim(slim_nbg_squarefree(n), n)) {
                    detail = "not slim at n=" + std::to_string(n);
                    return false;
                }
            }
            return true;
        }));

    results.push_back(detail::run_check(
        "quadratic-sum coordinates have norm 1/p", [&](std::string& detail) {
            for (auto [p, s] : std::vector<std::pair<long, int>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
                long q = 1;
                for (int i = 0; i < s; ++i) q *= p;
                if (q > bound) continue;
                auto coords = slim_coords_prime_power(p, s);
                for (std::size_t i = 0; i < coords.size(); ++i) {
                    if (coords.value_at(i).tag() != ChiTag::QuadSum) continue;
                    CycloElem y = coords.materialized(i);
                    if (y * galois_apply(y, -1) !=
                        CycloElem::from_rational(coords.value_ring(), make_rat(1, p))) {
                        detail = "norm mismatch at p=" + std::to_string(p);
                        return false;
                    }
                }
            }
            return true;
        }));

    return results;
}

inline std::vector<CheckResult> verify_gauss(long bound = 36) {
    std::vector<CheckResult> results;

    results.push_back(detail::run_check(
        "tau(chi) tau(conj chi) = chi(-1) f_chi for every character", [&](std::string& detail) {
            for (long m = 1; m <= bound; ++m)
                for (const auto& chi : characters(m)) {
                    auto ring = ring_create(std::lcm(chi.conductor(), chi.order()));
                    CycloElem lhs = gauss_sum(chi, ring) * gauss_sum(chi.conjugate(), ring);
                    Rat rhs = Rat(chi.value_at_minus_one()) * Rat(chi.conductor());
                    if (lhs != CycloElem::from_rational(ring, rhs)) {
                        detail = "mismatch at m=" + std::to_string(m);
                        return false;
                    }
                }
            return true;
        }));

    results.push_back(detail::run_check(
        "conductor reduction of tau(chi | zeta_m^a) = literal summation", [&](std::string& detail) {
            for (long m = 1; m <= bound; ++m) {
                auto ring = ring_create(std::lcm(m, carmichael_lambda(m)));
                for (const auto& chi : characters(m))
                    for (long a = 0; a < m; ++a) {
                        CycloElem direct = gauss_sum_direct(chi, m, a, ring);
                        CycloElem red = materialize_reduction(gauss_sum_reduced(chi, m, a), chi, ring);
                        if (direct != red) {
                            detail = "mismatch at m=" + std::to_string(m) + " a=" + std::to_string(a);
                            return false;
                        }
                    }
            }
            return true;
        }));

    results.push_back(detail::run_check(
        "conductors are minimal", [&](std::string& detail) {
            for (long m = 1; m <= bound; ++m)
                for (const auto& chi : characters(m))
                    for (long fp : divisors(chi.conductor())) {
                        if (fp == chi.conductor()) continue;
                        bool trivial_on_kernel = true;
                        for (long a = 1; a <= m && trivial_on_kernel; a += fp)
                            if (std::gcd(a, m) == 1 && *chi.eval_lambda(a) != 0)
                                trivial_on_kernel = false;
                        if (trivial_on_kernel) {
                            detail = "character mod " + std::to_string(m) +
                                     " factors through " + std::to_string(fp);
                            return false;
                        }
                    }
            return true;
        }));

    results.push_back(detail::run_check(
        "character evaluation is completely multiplicative on units", [&](std::string& detail) {
            for (long m = 1; m <= bound; ++m)
                for (const auto& chi : characters(m))
                    for (long a : units_mod(m))
                        for (long b : units_mod(m)) {
                            long lhs = *chi.eval(a * b % std::max<long>(m, 2));
                            long rhs = (*chi.eval(a) + *chi.eval(b)) % chi.order();
                            if (lhs != rhs) {
                                detail = "mismatch at m=" + std::to_string(m);
                                return false;
                            }
                        }
            return true;
        }));

    return results;
}

inline std::vector<CheckResult> verify_leopoldt(long bound = 16) {
    std::vector<CheckResult> results;
    const std::vector<long> fields{3, 4, 5, 7, 8, 9, 12, 15, 16};

    results.push_back(detail::run_check(
        "coordinate analysis followed by synthesis is the identity", [&](std::string& detail) {
            std::mt19937_64 rng(1009);
            for (long n : fields) {
                if (n > bound) continue;
                auto ring = ring_create(n);
                auto work = ring_create(synthesis_conductor(n));
                for (int rep = 0; rep < 50; ++rep) {
                    CycloElem theta = detail::random_field_elem(ring, rng);
                    if (to_subring(synthesize(chi_coords(theta, n), work), ring) != theta) {
                        detail = "round trip failed at n=" + std::to_string(n);
                        return false;
                    }
                }
            }
            return true;
        }));

    results.push_back(detail::run_check(
        "analysis coordinates are conjugation compatible", [&](std::string& detail) {
            std::mt19937_64 rng(1013);
            for (long n : fields) {
                if (n > bound) continue;
                auto ring = ring_create(n);
                if (!check_conjugation_consistency(chi_coords(detail::random_field_elem(ring, rng), n))) {
                    detail = "violation at n=" + std::to_string(n);
                    return false;
                }
            }
            return true;
        }));

    results.push_back(detail::run_check(
        "coordinate trace pairing = direct trace computation", [&](std::string& detail) {
            std::mt19937_64 rng(1019);
            for (long n : fields) {
                if (n > bound) continue;
                auto ring = ring_create(n);
                CycloElem alpha = detail::random_field_elem(ring, rng);
                CycloElem beta = detail::random_field_elem(ring, rng);
                auto ca = chi_coords(alpha, n);
                auto cb = chi_coords(beta, n);
                for (long sigma : ring->units())
                    for (long rho : ring->units()) {
                        Rat direct = trace(galois_apply(alpha, sigma) * galois_apply(beta, rho));
                        if (trace_pairing(ca, cb, sigma, rho) != direct) {
                            detail = "mismatch at n=" + std::to_string(n);
                            return false;
                        }
                    }
            }
            return true;
        }));

    results.push_back(detail::run_check(
        "dual coordinates agree with the Gram-solver dual", [&](std::string& detail) {
            std::mt19937_64 rng(1021);
            for (long n : fields) {
                if (n > bound) continue;
                auto ring = ring_create(n);
                auto work = ring_create(synthesis_conductor(n));
                CycloElem theta;
                do {
                    theta = detail::random_field_elem(ring, rng);
                } while (!is_normal_basis_generator(theta));
                CycloElem lhs = to_subring(synthesize(dual_coords(chi_coords(theta, n)), work), ring);
                if (lhs != dual_nbg(theta)) {
                    detail = "mismatch at n=" + std::to_string(n);
                    return false;
                }
            }
            return true;
        }));

    results.push_back(detail::run_check(
        "closed-form root-of-unity coordinates = analysis", [&](std::string& detail) {
            for (long n : {4L, 8L, 9L, 12L, 15L}) {
                if (n > bound) continue;
                auto ring = ring_create(n);
                for (long s = 0; s < n; ++s) {
                    auto closed = root_coords(n, s);
                    auto analyzed = chi_coords(zeta_power(ring, s), n);
                    for (std::size_t i = 0; i < closed.size(); ++i)
                        if (closed.materialized(i) != analyzed.materialized(i)) {
                            detail = "mismatch at n=" + std::to_string(n) + " s=" + std::to_string(s);
                            return false;
                        }
                }
            }
            return true;
        }));

    return results;
}

inline std::vector<CheckResult> verify_kron(long bound = 20) {
    std::vector<CheckResult> results;

    results.push_back(detail::run_check(
        "permuted Kronecker products of coprime slim matrices coincide", [&](std::string& detail) {
            for (auto [n1, n2] : std::vector<std::pair<long, long>>{{3, 4}, {3, 5}, {4, 5}, {1, 7}}) {
                if (n1 * n2 > bound) continue;
                auto eq = kronecker_equivalence(n1, n2);  // throws on mismatch
                RatMatrix lhs =
                    kronecker(adft_matrix_slim(n1).to_dense(), adft_matrix_slim(n2).to_dense());
                if (apply_col_perm(apply_row_perm(eq.row, lhs), eq.col) !=
                    adft_matrix_slim(n1 * n2).to_dense()) {
                    detail = "mismatch at " + std::to_string(n1) + " x " + std::to_string(n2);
                    return false;
                }
            }
            return true;
        }));

    results.push_back(detail::run_check(
        "Kronecker mixed-product property on random matrices", [&](std::string&) {
            std::mt19937_64 rng(1031);
            std::uniform_int_distribution<long> val(-3, 3);
            auto rnd = [&](long r, long c) {
                RatMatrix m(r, c);
                for (long i = 0; i < r; ++i)
                    for (long j = 0; j < c; ++j) m.at(i, j) = val(rng);
                return m;
            };
            RatMatrix a = rnd(2, 3), c = rnd(3, 2), b = rnd(3, 2), d = rnd(2, 2);
            return kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d);
        }));

    return results;
}

inline std::vector<CheckResult> verify_fadft(long bound = 6) {
    std::vector<CheckResult> results;
    const int max_dense = static_cast<int>(std::min<long>(bound, 8));

    results.push_back(detail::run_check(
        "block factorizations of the gathered transform matrices", [&](std::string& detail) {
            for (int t = 2; t <= max_dense; ++t) {
                auto report = verify_factorizations(t);
                if (!report.ok) {
                    for (const auto& c : report.checks)
                        if (!c.ok) detail = c.name + ": " + c.detail;
                    return false;
                }
            }
            return true;
        }));

    results.push_back(detail::run_check(
        "fast transform output = dense matrix product", [&](std::string& detail) {
            std::mt19937_64 rng(1033);
            std::uniform_int_distribution<long> num(-20, 20);
            std::uniform_int_distribution<long> den(1, 12);
            for (int t = 1; t <= max_dense; ++t) {
                auto p = plan(t);
                auto m = adft_matrix_slim(p.n);
                for (int rep = 0; rep < 5; ++rep) {
                    std::vector<Rat> v(static_cast<std::size_t>(p.n));
                    for (Rat& x : v) x = make_rat(num(rng), den(rng));
                    if (execute(p, v) != m.apply(v)) {
                        detail = "mismatch at t=" + std::to_string(t);
                        return false;
                    }
                }
            }
            return true;
        }));

    results.push_back(detail::run_check(
        "addition counts: total 4n - 2 log2(n) - 4, base change n - 2", [&](std::string& detail) {
            for (int t = 2; t <= std::max<int>(static_cast<int>(bound), 2); ++t) {
                auto p = plan(t);
                long executed = 0;
                std::vector<Rat> v(static_cast<std::size_t>(p.n), Rat(1));
                execute(p, v, &executed);
                if (p.addition_count != 4 * p.n - 2 * t - 4 || executed != p.addition_count ||
                    p.basechange_count != p.n - 2) {
                    detail = "count mismatch at t=" + std::to_string(t);
                    return false;
                }
            }
            return true;
        }));

    results.push_back(detail::run_check(
        "exported straight-line program replays the executor", [&](std::string& detail) {
            std::mt19937_64 rng(1039);
            std::uniform_int_distribution<long> num(-9, 9);
            for (int t = 1; t <= max_dense; ++t) {
                auto p = plan(t);
                std::vector<Rat> v(static_cast<std::size_t>(p.n));
                for (Rat& x : v) x = make_rat(num(rng), 1);
                if (run_straight_line(export_plan(p), v) != execute(p, v)) {
                    detail = "mismatch at t=" + std::to_string(t);
                    return false;
                }
            }
            return true;
        }));

    return results;
}

// Dispatch by suite name; nullopt bound means the suite default.
inline std::vector<CheckResult> run_verify_suite(const std::string& suite,
                                                 std::optional<long> bound) {
    auto with_default = [&](long dflt) { return bound.value_or(dflt); };
    if (suite == "slim") return verify_slim(with_default(64));
    if (suite == "gauss") return verify_gauss(with_default(36));
    if (suite == "leopoldt") return verify_leopoldt(with_default(16));
    if (suite == "kron") return verify_kron(with_default(20));
    if (suite == "fadft") return verify_fadft(with_default(6));
    if (suite == "all") {
        // Per-suite defaults; a single numeric bound does not transfer
        // meaningfully between modulus-bounded and log2-bounded suites.
        std::vector<CheckResult> all;
        for (const char* name : {"slim", "gauss", "leopoldt", "kron", "fadft"}) {
            auto part = run_verify_suite(name, std::nullopt);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
}

}  // namespace adft
