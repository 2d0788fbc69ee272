#pragma once

// Dense exact ADFT machinery. A_{n,theta} = (Tr(theta* zeta_n^{kl}))_{k,l}
// comes in two independent routes that the tests play against each other:
// the first-principles trace oracle and the closed-form integer entry rule.
// Kronecker products and the CRT permutation pair realizing
// A_{n1} (x) A_{n2} ~ A_{n1 n2} complete the picture.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "adft/cyclo.hpp"
#include "adft/numt.hpp"
#include "adft/rational.hpp"
#include "adft/slim.hpp"

namespace adft {

struct Perm {
    std::vector<long> image;

    Perm() = default;
    explicit Perm(std::vector<long> img) : image(std::move(img)) {
        std::vector<bool> seen(image.size(), false);
        for (long v : image) {
            if (v < 0 || v >= static_cast<long>(image.size()) || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("Perm: image is not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }

    std::size_t size() const { return image.size(); }
    long operator[](std::size_t i) const { return image[i]; }

    Perm inverse() const {
        std::vector<long> inv(image.size());
        for (std::size_t i = 0; i < image.size(); ++i)
            inv[static_cast<std::size_t>(image[i])] = static_cast<long>(i);
        return Perm(std::move(inv));
    }

    bool operator==(const Perm&) const = default;
};

class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), Rat(0)) {}

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    Rat& at(long r, long c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    const Rat& at(long r, long c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

    static RatMatrix identity(long n) {
        RatMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
        RatMatrix c(a.rows_, b.cols_);
        for (long i = 0; i < a.rows_; ++i)
            for (long k = 0; k < a.cols_; ++k) {
                const Rat& aik = a.at(i, k);
                if (aik == 0) continue;
                for (long j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

// Block structure (a_{kl} B).
inline RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            for (long r = 0; r < b.rows(); ++r)
                for (long s = 0; s < b.cols(); ++s)
                    c.at(i * b.rows() + r, j * b.cols() + s) = a.at(i, j) * b.at(r, s);
        }
    return c;
}

// out[k, :] = m[perm[k], :]
inline RatMatrix apply_row_perm(const Perm& perm, const RatMatrix& m) {
    if (static_cast<long>(perm.size()) != m.rows())
        throw std::invalid_argument("apply_row_perm: size mismatch");
    RatMatrix out(m.rows(), m.cols());
    for (long k = 0; k < m.rows(); ++k)
        for (long l = 0; l < m.cols(); ++l) out.at(k, l) = m.at(perm[static_cast<std::size_t>(k)], l);
    return out;
}

// out[:, l] = m[:, perm[l]]
inline RatMatrix apply_col_perm(const RatMatrix& m, const Perm& perm) {
    if (static_cast<long>(perm.size()) != m.cols())
        throw std::invalid_argument("apply_col_perm: size mismatch");
    RatMatrix out(m.rows(), m.cols());
    for (long k = 0; k < m.rows(); ++k)
        for (long l = 0; l < m.cols(); ++l) out.at(k, l) = m.at(k, perm[static_cast<std::size_t>(l)]);
    return out;
}

enum class Provenance { Oracle, ClosedForm };

// n x n exact ADFT matrix; entry (k, l) depends only on kl mod n. Slim
// matrices collapse to int8 storage.
class AdftMatrix {
  public:
    AdftMatrix(long n, Provenance prov, std::vector<Rat> row_values)
        : n_(n), prov_(prov) {
        if (static_cast<long>(row_values.size()) != n)
            throw std::invalid_argument("AdftMatrix: need one value per residue");
        bool small = true;
        for (const Rat& v : row_values)
            if (v != -1 && v != 0 && v != 1) small = false;
        if (small) {
            ivals_.resize(row_values.size());
            for (std::size_t i = 0; i < row_values.size(); ++i)
                ivals_[i] = static_cast<std::int8_t>(row_values[i].get_num().get_si());
        } else {
            rvals_ = std::move(row_values);
        }
    }

    long size() const { return n_; }
    Provenance provenance() const { return prov_; }
    bool integer_storage() const { return !ivals_.empty(); }

    Rat entry(long k, long l) const {
        const std::size_t s = static_cast<std::size_t>(k % n_ * (l % n_) % n_);
        return integer_storage() ? Rat(ivals_[s]) : rvals_[s];
    }

    int integer_entry(long k, long l) const {
        if (!integer_storage()) throw std::logic_error("AdftMatrix: rational storage");
        return ivals_[static_cast<std::size_t>(k % n_ * (l % n_) % n_)];
    }

    // The trace values Tr(theta* zeta^s) indexed by s.
    Rat value_at(long s) const {
        s %= n_;
        if (s < 0) s += n_;
        const std::size_t i = static_cast<std::size_t>(s);
        return integer_storage() ? Rat(ivals_[i]) : rvals_[i];
    }

    bool is_slim() const {
        if (integer_storage()) return true;
        for (const Rat& v : rvals_)
            if (v != -1 && v != 0 && v != 1) return false;
        return true;
    }

    RatMatrix to_dense() const {
        RatMatrix m(n_, n_);
        for (long k = 0; k < n_; ++k)
            for (long l = 0; l < n_; ++l) m.at(k, l) = entry(k, l);
        return m;
    }

    std::vector<Rat> apply(const std::vector<Rat>& v) const {
        if (static_cast<long>(v.size()) != n_) throw std::invalid_argument("AdftMatrix: length mismatch");
        std::vector<Rat> out(v.size(), Rat(0));
        for (long k = 0; k < n_; ++k) {
            Rat acc(0);
            for (long l = 0; l < n_; ++l) {
                if (integer_storage()) {
                    const int c = ivals_[static_cast<std::size_t>(k * l % n_)];
                    if (c == 1)
                        acc += v[static_cast<std::size_t>(l)];
                    else if (c == -1)
                        acc -= v[static_cast<std::size_t>(l)];
                } else {
                    acc += rvals_[static_cast<std::size_t>(k * l % n_)] * v[static_cast<std::size_t>(l)];
                }
            }
            out[static_cast<std::size_t>(k)] = std::move(acc);
        }
        return out;
    }

    friend bool operator==(const AdftMatrix& a, const AdftMatrix& b) {
        if (a.n_ != b.n_) return false;
        for (long s = 0; s < a.n_; ++s)
            if (a.value_at(s) != b.value_at(s)) return false;
        return true;
    }

  private:
    long n_;
    Provenance prov_;
    std::vector<std::int8_t> ivals_;
    std::vector<Rat> rvals_;
};

// First-principles route: dual generator by the Gram solve, entries by trace.
inline AdftMatrix adft_matrix_oracle(const CycloElem& theta, long n) {
    if (theta.ring()->conductor() != n)
        throw std::invalid_argument("adft_matrix_oracle: theta must live in Q(zeta_n)");
    const CycloElem dual = dual_nbg(theta);
    std::vector<Rat> vals(static_cast<std::size_t>(n));
    for (long s = 0; s < n; ++s) vals[static_cast<std::size_t>(s)] = trace(mul_zeta_power(dual, s));
    return AdftMatrix(n, Provenance::Oracle, std::move(vals));
}

// Closed-form route over the slim generator.
inline AdftMatrix adft_matrix_slim(long n) {
    if (n < 1) throw std::invalid_argument("adft_matrix_slim: modulus must be positive");
    std::vector<Rat> vals(static_cast<std::size_t>(n));
    for (long s = 0; s < n; ++s) vals[static_cast<std::size_t>(s)] = entry_rule(n, s);
    return AdftMatrix(n, Provenance::ClosedForm, std::move(vals));
}

struct IntMatrix {
    long rows = 0, cols = 0;
    std::vector<int> entries;

    IntMatrix() = default;
    IntMatrix(long r, long c) : rows(r), cols(c), entries(static_cast<std::size_t>(r * c), 0) {}

    int& at(long r, long c) { return entries[static_cast<std::size_t>(r * cols + c)]; }
    int at(long r, long c) const { return entries[static_cast<std::size_t>(r * cols + c)]; }

    static IntMatrix identity(long n) {
        IntMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    RatMatrix to_dense() const {
        RatMatrix m(rows, cols);
        for (long r = 0; r < rows; ++r)
            for (long c = 0; c < cols; ++c) m.at(r, c) = at(r, c);
        return m;
    }

    bool operator==(const IntMatrix&) const = default;
};

// Galois column order used by the fast transform: odd representatives below
// n/2 first, then those above.
inline std::vector<long> galois_column_order(long n) {
    std::vector<long> cols;
    for (long a = 1; a < n / 2; a += 2) cols.push_back(a);
    for (long a = n / 2 + 1; a < n; a += 2) cols.push_back(a);
    return cols;
}

// N_{n} = (Tr(theta_n*^sigma zeta_n^l))_{l, sigma}: the change of basis
// between the polynomial basis {zeta^l, l < n/2} and the normal basis.
// Entry (l, sigma_a) = Tr(theta* zeta^(l a^-1)).
struct BasisChangeMatrix {
    long n = 0;
    std::vector<long> galois_columns;
    IntMatrix m;
};

inline BasisChangeMatrix basis_change_matrix(long n) {
    if (n < 4 || (n & (n - 1)) != 0)
        throw std::invalid_argument("basis_change_matrix: n must be a power of two >= 4");
    BasisChangeMatrix out;
    out.n = n;
    out.galois_columns = galois_column_order(n);
    out.m = IntMatrix(n / 2, n / 2);
    for (long l = 0; l < n / 2; ++l)
        for (long j = 0; j < n / 2; ++j)
            out.m.at(l, j) = entry_rule(n, l * inv_mod(out.galois_columns[static_cast<std::size_t>(j)], n) % n);
    return out;
}

// R_n = (Tr(theta_n* zeta^(l s^-1)))_{l, s} over odd l, s in [1, n/2); the
// identity for the slim generator.
inline IntMatrix residual_matrix(long n) {
    if (n < 4 || (n & (n - 1)) != 0)
        throw std::invalid_argument("residual_matrix: n must be a power of two >= 4");
    IntMatrix m(n / 4, n / 4);
    for (long i = 0; i < n / 4; ++i)
        for (long j = 0; j < n / 4; ++j) {
            const long l = 2 * i + 1;
            const long s = 2 * j + 1;
            m.at(i, j) = entry_rule(n, l * inv_mod(s, n) % n);
        }
    return m;
}

// CRT permutation pair with P (A_{n1} (x) A_{n2}) Q = A_{n1 n2} for the slim
// matrices: rows are Bezout-twisted CRT splits, columns plain CRT splits.
struct KroneckerEquivalence {
    Perm row;  // P: out[k, :] = M[row[k], :]
    Perm col;  // Q: out[:, l] = M[:, col[l]]
};

inline KroneckerEquivalence kronecker_equivalence(long n1, long n2) {
    if (std::gcd(n1, n2) != 1)
        throw std::invalid_argument("kronecker_equivalence: moduli must be coprime");
    const long n = n1 * n2;
    const long t1 = inv_mod(n2 % n1, n1);
    const long t2 = inv_mod(n1 % n2, n2);
    std::vector<long> row(static_cast<std::size_t>(n)), col(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) {
        row[static_cast<std::size_t>(k)] = k * t1 % n1 * n2 + k * t2 % n2;
        col[static_cast<std::size_t>(k)] = k % n1 * n2 + k % n2;
    }
    KroneckerEquivalence eq{Perm(std::move(row)), Perm(std::move(col))};

    const RatMatrix product = kronecker(adft_matrix_slim(n1).to_dense(), adft_matrix_slim(n2).to_dense());
    if (apply_col_perm(apply_row_perm(eq.row, product), eq.col) != adft_matrix_slim(n).to_dense())
        throw std::runtime_error("kronecker_equivalence: permuted product does not match");
    return eq;
}

}  // namespace adft
