#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "cxpair/matrix.hpp"

namespace cxpair {

enum class PivotOrder {
    RowMajor,   // scan remaining rows, first nonzero entry
    ColMajor,   // scan remaining columns, first nonzero entry
    SmallestFirst,  // prefer units, then smallest entries (default)
};

namespace detail {

/// Working grid of Gaussian integers for the fraction-free elimination.
struct IntGrid {
    size_t rows, cols;
    std::vector<GaussianInt> e;
    GaussianInt& at(size_t i, size_t j) { return e[i * cols + j]; }
    const GaussianInt& at(size_t i, size_t j) const { return e[i * cols + j]; }
};

/// Clear denominators row by row (row scaling preserves rank) and strip
/// the Gaussian-integer content of every row.
inline IntGrid integerize(const Matrix& m) {
    IntGrid g{m.rows(), m.cols(), {}};
    g.e.resize(m.rows() * m.cols());
    for (size_t i = 0; i < m.rows(); ++i) {
        mpz_class lcm = 1;
        for (size_t j = 0; j < m.cols(); ++j) {
            const Gaussian& v = m(i, j);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.re.get_den().get_mpz_t());
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.im.get_den().get_mpz_t());
        }
        mpz_class content = 0;
        for (size_t j = 0; j < m.cols(); ++j) {
            const Gaussian& v = m(i, j);
            mpz_class re = v.re.get_num() * (lcm / v.re.get_den());
            mpz_class im = v.im.get_num() * (lcm / v.im.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), re.get_mpz_t());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), im.get_mpz_t());
            g.at(i, j) = GaussianInt(std::move(re), std::move(im));
        }
        if (content > 1) {
            for (size_t j = 0; j < m.cols(); ++j) {
                GaussianInt& v = g.at(i, j);
                mpz_divexact(v.re.get_mpz_t(), v.re.get_mpz_t(), content.get_mpz_t());
                mpz_divexact(v.im.get_mpz_t(), v.im.get_mpz_t(), content.get_mpz_t());
            }
        }
    }
    return g;
}

/// Strip the common integer content of a row of the active submatrix.
inline void strip_row(IntGrid& g, size_t i, size_t from_col,
                      const std::vector<size_t>& colp) {
    mpz_class content = 0;
    for (size_t j = from_col; j < g.cols; ++j) {
        const GaussianInt& v = g.at(i, colp[j]);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.re.get_mpz_t());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.im.get_mpz_t());
        if (content == 1) return;
    }
    if (content <= 1) return;
    for (size_t j = from_col; j < g.cols; ++j) {
        GaussianInt& v = g.at(i, colp[j]);
        mpz_divexact(v.re.get_mpz_t(), v.re.get_mpz_t(), content.get_mpz_t());
        mpz_divexact(v.im.get_mpz_t(), v.im.get_mpz_t(), content.get_mpz_t());
    }
}

}  // namespace detail

/// Exact rank over the Gaussian rationals (equal to the rank over C),
/// by integer-preserving (Bareiss) elimination on cleared denominators.
///
/// Entry growth is capped by stripping row contents and restarting the
/// Bareiss divisor every few pivots; each restart treats the remaining
/// submatrix as a fresh elimination problem, which keeps the result exact.
inline size_t rank(const Matrix& m, PivotOrder order = PivotOrder::SmallestFirst) {
    using detail::IntGrid;
    if (m.rows() == 0 || m.cols() == 0) return 0;
    IntGrid g = detail::integerize(m);
    std::vector<size_t> rowp(g.rows), colp(g.cols);
    for (size_t i = 0; i < g.rows; ++i) rowp[i] = i;
    for (size_t j = 0; j < g.cols; ++j) colp[j] = j;

    const size_t kmax = std::min(g.rows, g.cols);
    const size_t restart_stride = 8;
    GaussianInt div_prev(1);
    size_t r = 0;
    for (size_t k = 0; k < kmax; ++k) {
        // pivot search over the active submatrix
        size_t pi = g.rows, pj = g.cols;
        size_t best_bits = 0;
        bool found = false;
        if (order == PivotOrder::RowMajor) {
            for (size_t i = k; i < g.rows && !found; ++i)
                for (size_t j = k; j < g.cols && !found; ++j)
                    if (!g.at(rowp[i], colp[j]).is_zero()) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
        } else if (order == PivotOrder::ColMajor) {
            for (size_t j = k; j < g.cols && !found; ++j)
                for (size_t i = k; i < g.rows && !found; ++i)
                    if (!g.at(rowp[i], colp[j]).is_zero()) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
        } else {
            for (size_t i = k; i < g.rows; ++i)
                for (size_t j = k; j < g.cols; ++j) {
                    const GaussianInt& v = g.at(rowp[i], colp[j]);
                    if (v.is_zero()) continue;
                    size_t b = v.bits();
                    if (!found || b < best_bits) {
                        found = true;
                        best_bits = b;
                        pi = i;
                        pj = j;
                        if (b <= 2) break;  // cannot beat a unit
                    }
                }
        }
        if (!found) break;
        std::swap(rowp[k], rowp[pi]);
        std::swap(colp[k], colp[pj]);
        ++r;

        const GaussianInt pivot = g.at(rowp[k], colp[k]);
        const bool identity_scale = (pivot == div_prev);
        for (size_t i = k + 1; i < g.rows; ++i) {
            GaussianInt& lead = g.at(rowp[i], colp[k]);
            if (lead.is_zero()) {
                // the recurrence degenerates to v*pivot/div_prev; still required
                // to keep the minor structure that makes later divisions exact
                if (!identity_scale)
                    for (size_t j = k + 1; j < g.cols; ++j) {
                        GaussianInt& v = g.at(rowp[i], colp[j]);
                        v = GaussianInt::exact_div(v * pivot, div_prev);
                    }
                continue;
            }
            for (size_t j = k + 1; j < g.cols; ++j) {
                GaussianInt& v = g.at(rowp[i], colp[j]);
                v = GaussianInt::exact_div(v * pivot - lead * g.at(rowp[k], colp[j]), div_prev);
            }
            lead = GaussianInt(0);
        }
        div_prev = pivot;

        if ((k + 1) % restart_stride == 0 && k + 1 < kmax) {
            for (size_t i = k + 1; i < g.rows; ++i) detail::strip_row(g, rowp[i], k + 1, colp);
            div_prev = GaussianInt(1);
        }
    }
    return r;
}

/// Reduced row echelon form over the Gaussian rationals (in place).
/// Returns the pivot column indices.
inline std::vector<size_t> rref(Matrix& m) {
    std::vector<size_t> pivots;
    size_t lead = 0;
    for (size_t row = 0; row < m.rows() && lead < m.cols(); ++row) {
        // find a pivot in column `lead` at or below `row`
        size_t i = row;
        while (true) {
            if (i < m.rows() && !m(i, lead).is_zero()) break;
            ++i;
            if (i >= m.rows()) {
                i = row;
                ++lead;
                if (lead >= m.cols()) return pivots;
            }
        }
        if (i != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(i, j), m(row, j));
        Gaussian inv = Gaussian(1) / m(row, lead);
        for (size_t j = lead; j < m.cols(); ++j) m(row, j) *= inv;
        for (size_t k = 0; k < m.rows(); ++k) {
            if (k == row || m(k, lead).is_zero()) continue;
            Gaussian f = m(k, lead);
            for (size_t j = lead; j < m.cols(); ++j) m(k, j) -= f * m(row, j);
        }
        pivots.push_back(lead);
        ++lead;
    }
    return pivots;
}

/// Basis of the right nullspace {x : m x = 0}, one vector per row.
inline std::vector<std::vector<Gaussian>> nullspace(Matrix m) {
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Gaussian>> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Gaussian> v(m.cols());
        v[free] = Gaussian(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// One exact solution of A x = b (free variables set to zero), or nullopt
/// when the system is inconsistent.
inline std::optional<std::vector<Gaussian>> solve_linear(const Matrix& a,
                                                         const std::vector<Gaussian>& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    std::vector<size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // 0 = 1 row
    std::vector<Gaussian> x(a.cols());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
    return x;
}

/// Exact inverse; throws std::domain_error on a singular input.
inline Matrix inverse(const Matrix& a) {
    Matrix::require(a.is_square(), "inverse of non-square matrix");
    size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = Gaussian(1);
    }
    std::vector<size_t> pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Linear span of coordinate vectors in an ambient space of fixed dimension.
/// The dimension is the exact rank of the spanning matrix and does not
/// depend on the choice of spanning set.
class Subspace {
  public:
    Subspace() : ambient_(0) {}
    explicit Subspace(size_t ambient_dim) : ambient_(ambient_dim) {}
    Subspace(size_t ambient_dim, std::vector<std::vector<Gaussian>> vectors)
        : ambient_(ambient_dim), vectors_(std::move(vectors)) {
        for (const auto& v : vectors_)
            if (v.size() != ambient_)
                throw std::invalid_argument("spanning vector has wrong length");
    }

    static Subspace zero(size_t ambient_dim) { return Subspace(ambient_dim); }

    size_t ambient_dim() const { return ambient_; }
    const std::vector<std::vector<Gaussian>>& vectors() const { return vectors_; }
    size_t vector_count() const { return vectors_.size(); }

    void add_vector(std::vector<Gaussian> v) {
        if (v.size() != ambient_) throw std::invalid_argument("spanning vector has wrong length");
        vectors_.push_back(std::move(v));
        dim_.reset();
    }

    Matrix spanning_matrix() const {
        Matrix m(vectors_.size(), ambient_);
        for (size_t i = 0; i < vectors_.size(); ++i)
            for (size_t j = 0; j < ambient_; ++j) m(i, j) = vectors_[i][j];
        return m;
    }

    size_t dim() const {
        if (!dim_) dim_ = rank(spanning_matrix());
        return *dim_;
    }

    bool contains(const std::vector<Gaussian>& v) const {
        Subspace ext = *this;
        ext.add_vector(v);
        return ext.dim() == dim();
    }

    bool contains(const Subspace& other) const {
        return sum_dim(*this, other) == dim();
    }

    bool same_span(const Subspace& other) const {
        return dim() == other.dim() && contains(other);
    }

    /// dim(A + B); throws on ambient mismatch.
    friend size_t sum_dim(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_)
            throw std::invalid_argument("ambient dimension mismatch");
        Matrix m(a.vectors_.size() + b.vectors_.size(), a.ambient_);
        size_t r = 0;
        for (const auto& v : a.vectors_) {
            for (size_t j = 0; j < a.ambient_; ++j) m(r, j) = v[j];
            ++r;
        }
        for (const auto& v : b.vectors_) {
            for (size_t j = 0; j < b.ambient_; ++j) m(r, j) = v[j];
            ++r;
        }
        return rank(m);
    }

    /// dim(A ∩ B) = dim A + dim B - dim(A + B).
    friend size_t intersection_dim(const Subspace& a, const Subspace& b) {
        return a.dim() + b.dim() - sum_dim(a, b);
    }

    /// Sum as a subspace (concatenated spanning sets).
    friend Subspace sum(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_)
            throw std::invalid_argument("ambient dimension mismatch");
        std::vector<std::vector<Gaussian>> vs = a.vectors_;
        vs.insert(vs.end(), b.vectors_.begin(), b.vectors_.end());
        return Subspace(a.ambient_, std::move(vs));
    }

    /// Explicit basis of A ∩ B via the nullspace of [A^T | -B^T].
    friend Subspace intersection(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_)
            throw std::invalid_argument("ambient dimension mismatch");
        size_t na = a.vectors_.size(), nb = b.vectors_.size();
        if (na == 0 || nb == 0) return Subspace::zero(a.ambient_);
        Matrix sys(a.ambient_, na + nb);
        for (size_t j = 0; j < na; ++j)
            for (size_t i = 0; i < a.ambient_; ++i) sys(i, j) = a.vectors_[j][i];
        for (size_t j = 0; j < nb; ++j)
            for (size_t i = 0; i < b.ambient_; ++i) sys(i, na + j) = -b.vectors_[j][i];
        Subspace result(a.ambient_);
        for (const auto& null : nullspace(std::move(sys))) {
            std::vector<Gaussian> v(a.ambient_);
            bool nonzero = false;
            for (size_t j = 0; j < na; ++j) {
                if (null[j].is_zero()) continue;
                for (size_t i = 0; i < a.ambient_; ++i) v[i] += null[j] * a.vectors_[j][i];
            }
            for (const auto& c : v)
                if (!c.is_zero()) {
                    nonzero = true;
                    break;
                }
            if (nonzero) result.add_vector(std::move(v));
        }
        return result;
    }

    /// A reduced (echelon) basis; useful for canonical comparisons.
    Subspace reduced() const {
        Matrix m = spanning_matrix();
        rref(m);
        Subspace r(ambient_);
        for (size_t i = 0; i < m.rows(); ++i) {
            bool nonzero = false;
            std::vector<Gaussian> v(ambient_);
            for (size_t j = 0; j < ambient_; ++j) {
                v[j] = m(i, j);
                nonzero |= !v[j].is_zero();
            }
            if (nonzero) r.add_vector(std::move(v));
        }
        return r;
    }

  private:
    size_t ambient_;
    std::vector<std::vector<Gaussian>> vectors_;
    mutable std::optional<size_t> dim_;
};

/// Span of n x n matrices inside the n^2-dimensional coordinate space.
inline Subspace span_of_matrices(const std::vector<Matrix>& mats, size_t n) {
    Subspace s(n * n);
    for (const auto& m : mats) {
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("matrix of wrong size in span");
        s.add_vector(matrix_to_vec(m));
    }
    return s;
}

}  // namespace cxpair
