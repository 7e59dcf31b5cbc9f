#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cxpair/echelon.hpp"
#include "cxpair/linalg.hpp"
#include "cxpair/matrix.hpp"
#include "cxpair/root_data.hpp"

namespace cxpair {

/// Sampling frame: the data needed to produce exact generic group elements
/// through the big cell. Cocharacters are integral diagonal matrices lying
/// in the algebra, so that substituting a rational value into a cocharacter
/// yields an exact group point of the designated torus.
struct Frame {
    size_t n = 0;
    std::vector<Matrix> cochars;
    std::vector<Matrix> nil_pos;
    std::vector<Matrix> nil_neg;
};

/// A matrix Lie algebra with designated Cartan, nilpotent and Borel parts.
///
/// so(n) and sp(2m) use antidiagonal invariant forms: the split Cartan is
/// then diagonal and the designated Borel is upper triangular, so nilpotent
/// exponentials are exact finite sums.
struct Realization {
    std::string name;
    std::string family;  // "sl", "so", "sp", "gl"
    size_t ambient_size = 0;
    std::vector<Matrix> basis;
    std::optional<Matrix> form;  // J, symmetric for so / alternating for sp
    ReductiveType abstract_type;

    Subspace algebra;
    Subspace cartan;
    Subspace nil_pos;
    Subspace nil_neg;
    Subspace borel;

    std::vector<Matrix> cartan_basis;   // integral diagonal
    std::vector<Matrix> nil_pos_basis;  // strictly upper triangular
    std::vector<Matrix> nil_neg_basis;  // strictly lower triangular
    std::vector<Matrix> simple_pos;     // simple root vectors, diagram order
    std::vector<Matrix> simple_neg;
    std::optional<Matrix> weyl_flip;  // group element conjugating nil_pos onto nil_neg

    size_t dim() const { return basis.size(); }
    size_t coord_dim() const { return ambient_size * ambient_size; }
    size_t rank_semisimple() const { return abstract_type.semisimple_rank(); }

    Frame frame() const { return Frame{ambient_size, cartan_basis, nil_pos_basis, nil_neg_basis}; }

    /// True when g satisfies the defining equations of the group exactly:
    /// det 1 for sl, g^T J g = J for so/sp, invertibility for gl.
    bool group_equations_hold(const Matrix& g) const;
};

namespace detail {

inline void finish_realization(Realization& r) {
    size_t n2 = r.ambient_size * r.ambient_size;
    r.algebra = Subspace(n2);
    for (const auto& b : r.basis) r.algebra.add_vector(matrix_to_vec(b));
    r.cartan = Subspace(n2);
    for (const auto& b : r.cartan_basis) r.cartan.add_vector(matrix_to_vec(b));
    r.nil_pos = Subspace(n2);
    for (const auto& b : r.nil_pos_basis) r.nil_pos.add_vector(matrix_to_vec(b));
    r.nil_neg = Subspace(n2);
    for (const auto& b : r.nil_neg_basis) r.nil_neg.add_vector(matrix_to_vec(b));
    r.borel = Subspace(n2);
    for (const auto& b : r.cartan_basis) r.borel.add_vector(matrix_to_vec(b));
    for (const auto& b : r.nil_pos_basis) r.borel.add_vector(matrix_to_vec(b));
}

}  // namespace detail

inline Realization build_gl(size_t n) {
    if (n < 1) throw std::invalid_argument("gl needs size >= 1");
    Realization r;
    r.name = "gl" + std::to_string(n);
    r.family = "gl";
    r.ambient_size = n;
    r.abstract_type = type_gl(n);
    for (size_t i = 0; i < n; ++i) r.cartan_basis.push_back(Matrix::unit(n, i, i));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i < j) r.nil_pos_basis.push_back(Matrix::unit(n, i, j));
            if (i > j) r.nil_neg_basis.push_back(Matrix::unit(n, i, j));
        }
    r.basis = r.cartan_basis;
    r.basis.insert(r.basis.end(), r.nil_pos_basis.begin(), r.nil_pos_basis.end());
    r.basis.insert(r.basis.end(), r.nil_neg_basis.begin(), r.nil_neg_basis.end());
    for (size_t i = 0; i + 1 < n; ++i) {
        r.simple_pos.push_back(Matrix::unit(n, i, i + 1));
        r.simple_neg.push_back(Matrix::unit(n, i + 1, i));
    }
    if (n >= 2) {
        Matrix w(n, n);
        for (size_t i = 0; i < n; ++i) w(i, n - 1 - i) = Gaussian(1);
        r.weyl_flip = w;
    }
    detail::finish_realization(r);
    return r;
}

inline Realization build_sl(size_t n) {
    if (n < 2) throw std::invalid_argument("sl needs size >= 2");
    Realization r;
    r.name = "sl" + std::to_string(n);
    r.family = "sl";
    r.ambient_size = n;
    r.abstract_type = type_sl(n);
    for (size_t i = 0; i + 1 < n; ++i)
        r.cartan_basis.push_back(Matrix::unit(n, i, i) - Matrix::unit(n, i + 1, i + 1));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i < j) r.nil_pos_basis.push_back(Matrix::unit(n, i, j));
            if (i > j) r.nil_neg_basis.push_back(Matrix::unit(n, i, j));
        }
    r.basis = r.cartan_basis;
    r.basis.insert(r.basis.end(), r.nil_pos_basis.begin(), r.nil_pos_basis.end());
    r.basis.insert(r.basis.end(), r.nil_neg_basis.begin(), r.nil_neg_basis.end());
    for (size_t i = 0; i + 1 < n; ++i) {
        r.simple_pos.push_back(Matrix::unit(n, i, i + 1));
        r.simple_neg.push_back(Matrix::unit(n, i + 1, i));
    }
    Matrix w(n, n);
    for (size_t i = 0; i < n; ++i) w(i, n - 1 - i) = Gaussian(1);
    if ((n * (n - 1) / 2) % 2 == 1) w(0, n - 1) = Gaussian(-1);  // restore det 1
    r.weyl_flip = w;
    detail::finish_realization(r);
    return r;
}

/// so(n) for the split symmetric form J with J[i][n-1-i] = 1.
/// The algebra is { x : x_{ij} = -x_{s(j) s(i)} } with s(i) = n-1-i.
inline Realization build_so(size_t n) {
    if (n < 1) throw std::invalid_argument("so needs size >= 1");
    Realization r;
    r.name = "so" + std::to_string(n);
    r.family = "so";
    r.ambient_size = n;
    r.abstract_type = type_so(n);
    Matrix J(n, n);
    auto s = [n](size_t i) { return n - 1 - i; };
    for (size_t i = 0; i < n; ++i) J(i, s(i)) = Gaussian(1);
    r.form = J;
    size_t m = n / 2;
    for (size_t i = 0; i < m; ++i)
        r.cartan_basis.push_back(Matrix::unit(n, i, i) - Matrix::unit(n, s(i), s(i)));
    auto make = [&](size_t i, size_t j) {
        return Matrix::unit(n, i, j) - Matrix::unit(n, s(j), s(i));
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (i + j == n - 1) continue;                  // on the antidiagonal: zero
            if (std::make_pair(s(j), s(i)) < std::make_pair(i, j)) continue;  // orbit rep
            r.nil_pos_basis.push_back(make(i, j));
            r.nil_neg_basis.push_back(make(j, i));
        }
    r.basis = r.cartan_basis;
    r.basis.insert(r.basis.end(), r.nil_pos_basis.begin(), r.nil_pos_basis.end());
    r.basis.insert(r.basis.end(), r.nil_neg_basis.begin(), r.nil_neg_basis.end());
    if (n >= 3 && n % 2 == 1) {  // B_m
        for (size_t i = 0; i + 1 < m; ++i) {
            r.simple_pos.push_back(make(i, i + 1));
            r.simple_neg.push_back(make(i + 1, i));
        }
        r.simple_pos.push_back(make(m - 1, m));
        r.simple_neg.push_back(make(m, m - 1));
    } else if (n >= 4) {  // D_m
        for (size_t i = 0; i + 1 < m; ++i) {
            r.simple_pos.push_back(make(i, i + 1));
            r.simple_neg.push_back(make(i + 1, i));
        }
        r.simple_pos.push_back(make(m - 2, m));
        r.simple_neg.push_back(make(m, m - 2));
    }
    if (n >= 2) r.weyl_flip = J;  // J in O(J); conjugation flips the triangle
    detail::finish_realization(r);
    return r;
}

/// sp(n) for even n, with the split alternating form J[i][n-1-i] = eps(i),
/// eps = +1 on the first half and -1 on the second.
inline Realization build_sp(size_t n) {
    if (n < 2 || n % 2) throw std::invalid_argument("sp needs even size >= 2");
    Realization r;
    r.name = "sp" + std::to_string(n);
    r.family = "sp";
    r.ambient_size = n;
    r.abstract_type = type_sp(n);
    size_t m = n / 2;
    auto s = [n](size_t i) { return n - 1 - i; };
    auto eps = [m](size_t i) { return i < m ? 1 : -1; };
    Matrix J(n, n);
    for (size_t i = 0; i < n; ++i) J(i, s(i)) = Gaussian(eps(i));
    r.form = J;
    for (size_t i = 0; i < m; ++i)
        r.cartan_basis.push_back(Matrix::unit(n, i, i) - Matrix::unit(n, s(i), s(i)));
    auto make = [&](size_t i, size_t j) {
        if (i + j == n - 1) return Matrix::unit(n, i, j);
        Matrix f = Matrix::unit(n, i, j);
        if (eps(i) * eps(j) > 0)
            f -= Matrix::unit(n, s(j), s(i));
        else
            f += Matrix::unit(n, s(j), s(i));
        return f;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (i + j != n - 1 && std::make_pair(s(j), s(i)) < std::make_pair(i, j)) continue;
            r.nil_pos_basis.push_back(make(i, j));
            r.nil_neg_basis.push_back(make(j, i));
        }
    r.basis = r.cartan_basis;
    r.basis.insert(r.basis.end(), r.nil_pos_basis.begin(), r.nil_pos_basis.end());
    r.basis.insert(r.basis.end(), r.nil_neg_basis.begin(), r.nil_neg_basis.end());
    for (size_t i = 0; i + 1 < m; ++i) {
        r.simple_pos.push_back(make(i, i + 1));
        r.simple_neg.push_back(make(i + 1, i));
    }
    r.simple_pos.push_back(make(m - 1, m));  // long root 2*eps_{m-1}
    r.simple_neg.push_back(make(m, m - 1));
    Matrix w(n, n);
    for (size_t i = 0; i < n; ++i) w(i, s(i)) = Gaussian(eps(i) > 0 ? 1 : -1);
    r.weyl_flip = w;
    detail::finish_realization(r);
    return r;
}

/// build(family, size): the four classical families over Gaussian rationals.
inline Realization build(const std::string& family, size_t size) {
    if (family == "sl") return build_sl(size);
    if (family == "so") return build_so(size);
    if (family == "sp") return build_sp(size);
    if (family == "gl") return build_gl(size);
    throw std::invalid_argument("unknown family: " + family);
}

inline bool Realization::group_equations_hold(const Matrix& g) const {
    if (g.rows() != ambient_size || g.cols() != ambient_size) return false;
    if (form) {
        Matrix lhs = g.transpose() * (*form) * g;
        return lhs == *form;
    }
    if (family == "sl") {
        // det(g) = 1, checked through elimination on an augmented copy
        Matrix a = g;
        Gaussian det(1);
        size_t n = a.rows();
        for (size_t k = 0; k < n; ++k) {
            size_t p = k;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return false;
            if (p != k) {
                for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
                det = -det;
            }
            det *= a(k, k);
            Gaussian inv = Gaussian(1) / a(k, k);
            for (size_t i = k + 1; i < n; ++i) {
                Gaussian f = a(i, k) * inv;
                if (f.is_zero()) continue;
                for (size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            }
        }
        return det == Gaussian(1);
    }
    // gl: invertibility
    try {
        inverse(g);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

/// Ad(g): conjugate every spanning vector of s (read as a matrix) by g.
inline Subspace adjoint(const Matrix& g, const Subspace& s) {
    size_t n = g.rows();
    Matrix::require(g.is_square(), "adjoint needs a square matrix");
    if (s.ambient_dim() != n * n) throw std::invalid_argument("ambient size mismatch in adjoint");
    Matrix ginv = inverse(g);  // throws on singular g
    Subspace out(n * n);
    for (const auto& v : s.vectors()) out.add_vector(matrix_to_vec(g * vec_to_matrix(v, n) * ginv));
    return out;
}

/// Per-check validation report.
struct ValidationReport {
    struct Entry {
        std::string check;
        bool pass;
        std::string detail;
    };
    std::vector<Entry> entries;
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    void add(const std::string& check, bool pass, const std::string& detail = "") {
        entries.push_back({check, pass, detail});
    }
};

inline bool strictly_triangular(const Matrix& m, bool upper) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            bool allowed = upper ? (i < j) : (i > j);
            if (!allowed && !m(i, j).is_zero()) return false;
        }
    return true;
}

inline ValidationReport validate(const Realization& r) {
    ValidationReport rep;
    size_t n = r.ambient_size;

    EchelonBasis span(n * n);
    for (const auto& b : r.basis) span.add(matrix_to_vec(b));
    bool closed = true;
    for (size_t i = 0; i < r.basis.size() && closed; ++i)
        for (size_t j = i + 1; j < r.basis.size(); ++j)
            if (!span.contains(matrix_to_vec(bracket(r.basis[i], r.basis[j])))) {
                closed = false;
                break;
            }
    rep.add("bracket-closure", closed);

    if (r.form) {
        bool ok = true;
        for (const auto& b : r.basis)
            if (!(b.transpose() * (*r.form) + (*r.form) * b).is_zero()) {
                ok = false;
                break;
            }
        rep.add("form-compatibility", ok);
    }

    rep.add("dimension", span.dim() == r.abstract_type.dimension(),
            "span " + std::to_string(span.dim()) + " vs type " +
                std::to_string(r.abstract_type.dimension()));
    rep.add("nil-pos-dimension", r.nil_pos.dim() == r.abstract_type.unipotent_dim());
    rep.add("cartan-rank", r.cartan.dim() == r.abstract_type.total_rank());
    rep.add("borel-additive", r.borel.dim() == r.cartan.dim() + r.nil_pos.dim());

    bool tri = true;
    for (const auto& b : r.nil_pos_basis) tri &= strictly_triangular(b, true);
    for (const auto& b : r.nil_neg_basis) tri &= strictly_triangular(b, false);
    rep.add("nilpotent-triangular", tri);

    rep.add("big-cell-intersection", intersection_dim(r.borel, r.nil_neg) == 0);
    rep.add("big-cell-spans", sum_dim(r.borel, r.nil_neg) == r.algebra.dim());
    return rep;
}

}  // namespace cxpair
