#pragma once

// Addition-only fast transform for n = 2^t. The matrix factorization
//
//   A~_n = (A_2 (x) E_{n/2}) diag(A_{n/2}, N_n)
//   N~_n = diag(N_{n/2}, E_{n/4}) (A_2 (x) E_{n/4})
//
// (columns of A_n gathered evens-first then inverted odds, rows of N_n
// evens-first) turns the transform into butterflies plus index bookkeeping.
// Plans are compiled to straight-line butterfly schedules over a working
// buffer; permutations are absorbed into slot indices and cost nothing.

#include <cstdint>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "adft/adft_matrix.hpp"
#include "adft/numt.hpp"
#include "adft/rational.hpp"

namespace adft {

inline constexpr int kDefaultPlanBound = 20;

inline void require_pow2(long n, int min_t, const char* who) {
    if (n < (1L << min_t) || (n & (n - 1)) != 0)
        throw std::invalid_argument(std::string(who) + ": n must be a power of two >= " +
                                    std::to_string(1L << min_t));
}

// Column gather of A_n: slot j < n/2 holds column 2j, slot n/2 + j holds
// column (2j+1)^-1 mod n.
inline Perm column_permutation(long n) {
    require_pow2(n, 2, "column_permutation");
    std::vector<long> image(static_cast<std::size_t>(n));
    for (long j = 0; j < n / 2; ++j) {
        image[static_cast<std::size_t>(j)] = 2 * j;
        image[static_cast<std::size_t>(n / 2 + j)] = inv_mod(2 * j + 1, n);
    }
    return Perm(std::move(image));
}

// Row gather of N_n on [0, n/2): even rows first, then odd rows.
inline Perm row_permutation_N(long n) {
    require_pow2(n, 2, "row_permutation_N");
    std::vector<long> image(static_cast<std::size_t>(n / 2));
    for (long r = 0; r < n / 4; ++r) {
        image[static_cast<std::size_t>(r)] = 2 * r;
        image[static_cast<std::size_t>(n / 4 + r)] = 2 * r + 1;
    }
    return Perm(std::move(image));
}

// One butterfly: buf[dst_hi] = buf[src_a] + buf[src_b],
//                buf[dst_lo] = buf[src_a] - buf[src_b].
struct Butterfly {
    std::int32_t dst_hi, dst_lo, src_a, src_b;
};

struct TransformPlan {
    int t = 0;
    long n = 0;
    Perm column_perm;                        // top-level input gather (t >= 2)
    std::vector<Perm> inner_perms;           // gathers of the nested half-size transforms
    std::vector<std::vector<Butterfly>> stages;
    std::vector<std::int32_t> output_slots;  // out[k] = buf[output_slots[k]]
    long buffer_size = 0;
    long addition_count = 0;   // total +- operations
    long basechange_count = 0; // operations inside the top-level N_n subtree
};

namespace detail {

// Builds the butterfly DAG over virtual value ids, then assigns buffer slots
// by liveness (every value is consumed by exactly one butterfly).
class PlanBuilder {
  public:
    explicit PlanBuilder(long n) : next_id_(n) {}

    struct VirtualOp {
        long hi, lo, a, b;
    };

    std::vector<long> build_a(int t, const std::vector<long>& in) {
        const long m = 1L << t;
        if (t == 1) {
            auto [hi, lo] = emit_stage_single(in[0], in[1]);
            return {hi, lo};
        }
        std::vector<long> evens(static_cast<std::size_t>(m / 2));
        std::vector<long> odds(static_cast<std::size_t>(m / 2));
        for (long j = 0; j < m / 2; ++j) {
            evens[static_cast<std::size_t>(j)] = in[static_cast<std::size_t>(2 * j)];
            odds[static_cast<std::size_t>(j)] = in[static_cast<std::size_t>(inv_mod(2 * j + 1, m))];
        }
        std::vector<long> top = build_a(t - 1, evens);
        const long before = op_count_;
        std::vector<long> bot = build_n(t, odds);
        if (t == top_t_) n_ops_ = op_count_ - before;

        std::vector<VirtualOp> stage(static_cast<std::size_t>(m / 2));
        std::vector<long> out(static_cast<std::size_t>(m));
        for (long k = 0; k < m / 2; ++k) {
            auto [hi, lo] = new_pair();
            stage[static_cast<std::size_t>(k)] = {hi, lo, top[static_cast<std::size_t>(k)],
                                                  bot[static_cast<std::size_t>(k)]};
            out[static_cast<std::size_t>(k)] = hi;
            out[static_cast<std::size_t>(m / 2 + k)] = lo;
        }
        push_stage(std::move(stage));
        return out;
    }

    // N_m applied to values indexed by the odd Galois representatives in
    // ascending order; returns the rows in natural order.
    std::vector<long> build_n(int t, const std::vector<long>& in) {
        const long m = 1L << t;
        if (t == 2) {
            auto [hi, lo] = emit_stage_single(in[0], in[1]);
            return {hi, lo};
        }
        const long q = m / 4;
        std::vector<VirtualOp> stage(static_cast<std::size_t>(q));
        std::vector<long> sums(static_cast<std::size_t>(q)), diffs(static_cast<std::size_t>(q));
        for (long j = 0; j < q; ++j) {
            auto [hi, lo] = new_pair();
            stage[static_cast<std::size_t>(j)] = {hi, lo, in[static_cast<std::size_t>(j)],
                                                  in[static_cast<std::size_t>(q + j)]};
            sums[static_cast<std::size_t>(j)] = hi;
            diffs[static_cast<std::size_t>(j)] = lo;
        }
        push_stage(std::move(stage));
        std::vector<long> inner = build_n(t - 1, sums);
        std::vector<long> out(static_cast<std::size_t>(m / 2));
        for (long r = 0; r < q; ++r) {
            out[static_cast<std::size_t>(2 * r)] = inner[static_cast<std::size_t>(r)];
            out[static_cast<std::size_t>(2 * r + 1)] = diffs[static_cast<std::size_t>(r)];
        }
        return out;
    }

    void set_top(int t) { top_t_ = t; }
    long basechange_ops() const { return n_ops_; }

    // Liveness-based slot assignment; inputs occupy slots [0, n).
    void assign_slots(long n, const std::vector<long>& outputs, TransformPlan& plan) {
        std::vector<std::int32_t> slot(static_cast<std::size_t>(next_id_), -1);
        for (long i = 0; i < n; ++i) slot[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);
        std::priority_queue<std::int32_t, std::vector<std::int32_t>, std::greater<>> free_slots;
        std::int32_t high_water = static_cast<std::int32_t>(n);
        auto alloc = [&]() {
            if (!free_slots.empty()) {
                std::int32_t s = free_slots.top();
                free_slots.pop();
                return s;
            }
            return high_water++;
        };
        plan.stages.reserve(stages_.size());
        for (const auto& vstage : stages_) {
            std::vector<Butterfly> stage;
            stage.reserve(vstage.size());
            for (const auto& op : vstage) {
                Butterfly bf;
                bf.dst_hi = alloc();
                bf.dst_lo = alloc();
                bf.src_a = slot[static_cast<std::size_t>(op.a)];
                bf.src_b = slot[static_cast<std::size_t>(op.b)];
                slot[static_cast<std::size_t>(op.hi)] = bf.dst_hi;
                slot[static_cast<std::size_t>(op.lo)] = bf.dst_lo;
                free_slots.push(bf.src_a);
                free_slots.push(bf.src_b);
                stage.push_back(bf);
            }
            plan.stages.push_back(std::move(stage));
        }
        plan.buffer_size = high_water;
        plan.output_slots.resize(outputs.size());
        for (std::size_t k = 0; k < outputs.size(); ++k)
            plan.output_slots[k] = slot[static_cast<std::size_t>(outputs[k])];
        plan.addition_count = 2 * op_count_;
        plan.basechange_count = n_ops_ * 2;
    }

  private:
    std::pair<long, long> new_pair() {
        ++op_count_;
        long hi = next_id_++;
        long lo = next_id_++;
        return {hi, lo};
    }

    std::pair<long, long> emit_stage_single(long a, long b) {
        auto [hi, lo] = new_pair();
        push_stage({VirtualOp{hi, lo, a, b}});
        return {hi, lo};
    }

    void push_stage(std::vector<VirtualOp> stage) { stages_.push_back(std::move(stage)); }

    long next_id_;
    long op_count_ = 0;
    long n_ops_ = 0;
    int top_t_ = -1;
    std::vector<std::vector<VirtualOp>> stages_;
};

}  // namespace detail

// Compiles the complete schedule for size 2^t. Executing it on the standard
// basis reproduces the slim ADFT matrix column by column; the operation
// counts follow the recurrences U_A(n) = U_A(n/2) + U_N(n) + n and
// U_N(n) = U_N(n/2) + n/2 with U_A(2) = U_N(4) = 2.
inline TransformPlan plan(int t, int bound = kDefaultPlanBound) {
    if (t < 1 || t > bound) throw std::invalid_argument("plan: log2 size out of range");
    const long n = 1L << t;
    TransformPlan p;
    p.t = t;
    p.n = n;
    if (t >= 2) {
        p.column_perm = column_permutation(n);
        for (long m = n / 2; m >= 4; m /= 2) p.inner_perms.push_back(column_permutation(m));
    } else {
        p.column_perm = Perm({0, 1});
    }
    detail::PlanBuilder builder(n);
    builder.set_top(t);
    std::vector<long> in(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) in[static_cast<std::size_t>(i)] = i;
    std::vector<long> out = builder.build_a(t, in);
    builder.assign_slots(n, out, p);
    if (p.buffer_size > 2 * n) throw std::runtime_error("plan: buffer exceeded 2n slots");
    return p;
}

// Runs the schedule; only additions and subtractions touch the data. The
// number of executed +- operations lands in *executed_ops when given.
inline std::vector<Rat> execute(const TransformPlan& plan, std::span<const Rat> input,
                                long* executed_ops = nullptr) {
    if (static_cast<long>(input.size()) != plan.n)
        throw std::invalid_argument("execute: input length must equal 2^t");
    std::vector<Rat> buf(static_cast<std::size_t>(plan.buffer_size), Rat(0));
    for (std::size_t i = 0; i < input.size(); ++i) buf[i] = input[i];
    long ops = 0;
    for (const auto& stage : plan.stages) {
        for (const Butterfly& bf : stage) {
            const Rat a = buf[static_cast<std::size_t>(bf.src_a)];
            const Rat b = buf[static_cast<std::size_t>(bf.src_b)];
            buf[static_cast<std::size_t>(bf.dst_hi)] = a + b;
            buf[static_cast<std::size_t>(bf.dst_lo)] = a - b;
            ops += 2;
        }
    }
    if (executed_ops) *executed_ops = ops;
    std::vector<Rat> out(static_cast<std::size_t>(plan.n));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = buf[static_cast<std::size_t>(plan.output_slots[k])];
    return out;
}

inline RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (long i = 0; i < b.rows(); ++i)
        for (long j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

struct FactorizationCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct FactorizationReport {
    bool ok = true;
    std::vector<FactorizationCheck> checks;
};

namespace detail {

inline std::string first_difference(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape mismatch";
    for (long r = 0; r < a.rows(); ++r)
        for (long c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c))
                return "first mismatch at (" + std::to_string(r) + ", " + std::to_string(c) +
                       "): " + rat_to_string(a.at(r, c)) + " vs " + rat_to_string(b.at(r, c));
    return "";
}

}  // namespace detail

// Dense reconstruction of both block identities plus the residual-identity
// claim, with exact comparison.
inline FactorizationReport verify_factorizations(int t) {
    if (t < 2 || t > 8) throw std::invalid_argument("verify_factorizations: need 2 <= t <= 8");
    const long n = 1L << t;
    FactorizationReport report;
    auto check = [&](std::string name, const RatMatrix& lhs, const RatMatrix& rhs) {
        FactorizationCheck c;
        c.name = std::move(name);
        c.detail = detail::first_difference(lhs, rhs);
        c.ok = c.detail.empty();
        report.ok = report.ok && c.ok;
        report.checks.push_back(std::move(c));
    };

    RatMatrix a2(2, 2);
    a2.at(0, 0) = a2.at(0, 1) = a2.at(1, 0) = 1;
    a2.at(1, 1) = -1;

    const RatMatrix an = adft_matrix_slim(n).to_dense();
    const RatMatrix gathered = apply_col_perm(an, column_permutation(n));
    const RatMatrix half = adft_matrix_slim(n / 2).to_dense();
    const RatMatrix nn = basis_change_matrix(n).m.to_dense();
    check("A_" + std::to_string(n) + " columns gathered = (A_2 x E) diag(A_" + std::to_string(n / 2) +
              ", N_" + std::to_string(n) + ")",
          gathered, kronecker(a2, RatMatrix::identity(n / 2)) * block_diag(half, nn));

    if (t == 2) {
        check("N_4 = A_2", nn, a2);
    } else {
        const RatMatrix ntilde = apply_row_perm(row_permutation_N(n), nn);
        const RatMatrix nhalf = basis_change_matrix(n / 2).m.to_dense();
        check("N_" + std::to_string(n) + " rows gathered = diag(N_" + std::to_string(n / 2) +
                  ", E) (A_2 x E)",
              ntilde,
              block_diag(nhalf, RatMatrix::identity(n / 4)) * kronecker(a2, RatMatrix::identity(n / 4)));
    }
    check("residual block of N_" + std::to_string(n) + " = identity",
          residual_matrix(n).to_dense(), RatMatrix::identity(n / 4));
    return report;
}

}  // namespace adft
