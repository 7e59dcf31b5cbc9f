#pragma once

#include <array>

#include "cxpair/builders.hpp"
#include "cxpair/embedding.hpp"

namespace cxpair {

namespace octonion {

/// Split octonions as Zorn vector matrices [[a, v], [w, b]] over Q, in the
/// basis u+, u-, x1, x2, x3, y1, y2, y3 (indices 0..7). Returns the
/// structure constants: mult[p][q] = coordinates of (basis_p * basis_q).
inline std::array<std::array<std::array<long, 8>, 8>, 8> multiplication_table() {
    std::array<std::array<std::array<long, 8>, 8>, 8> t{};
    auto X = [](size_t i) { return 2 + i; };
    auto Y = [](size_t i) { return 5 + i; };
    const size_t UP = 0, UM = 1;
    // idempotents
    t[UP][UP][UP] = 1;
    t[UM][UM][UM] = 1;
    for (size_t i = 0; i < 3; ++i) {
        t[UP][X(i)][X(i)] = 1;   // u+ x = x
        t[X(i)][UM][X(i)] = 1;   // x u- = x
        t[UM][Y(i)][Y(i)] = 1;   // u- y = y
        t[Y(i)][UP][Y(i)] = 1;   // y u+ = y
        t[X(i)][Y(i)][UP] = 1;   // x_i y_i = u+
        t[Y(i)][X(i)][UM] = 1;   // y_i x_i = u-
    }
    // cross products: x_i x_j = eps_ijk y_k, y_i y_j = -eps_ijk x_k
    auto eps = [](size_t i, size_t j, size_t k) -> long {
        if (i == j || j == k || i == k) return 0;
        if ((i + 1) % 3 == j) return 1;
        return -1;
    };
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) {
            if (i == j) continue;
            size_t k = 3 - i - j;
            t[X(i)][X(j)][Y(k)] = eps(i, j, k);
            t[Y(i)][Y(j)][X(k)] = -eps(i, j, k);
        }
    return t;
}

}  // namespace octonion

/// The 14-dimensional algebra of derivations of the split octonions,
/// restricted to the trace-zero part and written in coordinates where the
/// norm form is the standard antidiagonal one. The result is a subalgebra
/// of so(7) whose intersections with the designated Borel data of so(7)
/// give the designated parts of G2.
inline Embedding g2_in_so7(const Realization& so7, std::string id, EmbeddingMeta meta) {
    if (so7.name != "so7") throw std::invalid_argument("g2_in_so7 needs the so(7) realization");
    auto mult = octonion::multiplication_table();

    // Leibniz system: D(pq) = D(p)q + p D(q); unknowns D (8x8, row-major).
    // For basis pair (p,q): sum_r mult[p][q][r] D[.][r]-coordinates give the
    // left side; right side uses D columns p and q.
    std::vector<std::vector<Gaussian>> rows;
    for (size_t p = 0; p < 8; ++p)
        for (size_t q = 0; q < 8; ++q)
            for (size_t comp = 0; comp < 8; ++comp) {
                std::vector<Gaussian> row(64);
                // D applied to (pq): sum_r mult[p][q][r] * D[comp][r]
                for (size_t r = 0; r < 8; ++r)
                    if (mult[p][q][r])
                        row[comp * 8 + r] += Gaussian(mult[p][q][r]);
                // minus D(p) q: D(p) = sum_a D[a][p] e_a; (e_a q)_comp = mult[a][q][comp]
                for (size_t a = 0; a < 8; ++a)
                    if (mult[a][q][comp]) row[a * 8 + p] -= Gaussian(mult[a][q][comp]);
                // minus p D(q)
                for (size_t a = 0; a < 8; ++a)
                    if (mult[p][a][comp]) row[a * 8 + q] -= Gaussian(mult[p][a][comp]);
                bool nonzero = false;
                for (const auto& c : row) nonzero |= !c.is_zero();
                if (nonzero) rows.push_back(std::move(row));
            }
    Matrix sys(rows.size(), 64);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < 64; ++j) sys(i, j) = rows[i][j];
    auto ders = nullspace(std::move(sys));
    if (ders.size() != 14)
        throw std::logic_error("derivation space of split octonions has dim " +
                               std::to_string(ders.size()));

    // Coordinates on the trace-zero part with antidiagonal Gram matrix for
    // q = -N: f = (2 y3, 2 x1, 2 x2, u0, y2, y1, x3), ordered by decreasing
    // weight of the regular toral derivation (2, 1, -3). u0 = u+ - u-.
    // Columns of T express the f-basis in octonion coordinates.
    Matrix T(8, 7);
    auto set_col = [&](size_t col, std::initializer_list<std::pair<size_t, long>> entries) {
        for (auto [row, val] : entries) T(row, col) = Gaussian(val);
    };
    set_col(0, {{7, 2}});            // 2 y3
    set_col(1, {{2, 2}});            // 2 x1
    set_col(2, {{3, 2}});            // 2 x2
    set_col(3, {{0, 1}, {1, -1}});   // u0
    set_col(4, {{6, 1}});            // y2
    set_col(5, {{5, 1}});            // y1
    set_col(6, {{4, 1}});            // x3

    // express the restriction of each derivation in the f-basis
    std::vector<Matrix> g2;
    for (const auto& dvec : ders) {
        Matrix D(8, 8);
        for (size_t i = 0; i < 8; ++i)
            for (size_t j = 0; j < 8; ++j) D(i, j) = dvec[i * 8 + j];
        Matrix img(8, 7);  // D applied to each f-column
        for (size_t c = 0; c < 7; ++c)
            for (size_t i = 0; i < 8; ++i) {
                Gaussian s;
                for (size_t k = 0; k < 8; ++k) s += D(i, k) * T(k, c);
                img(i, c) = s;
            }
        // solve T * M = img column-wise
        Matrix M(7, 7);
        for (size_t c = 0; c < 7; ++c) {
            std::vector<Gaussian> rhs(8);
            for (size_t i = 0; i < 8; ++i) rhs[i] = img(i, c);
            auto sol = solve_linear(T, rhs);
            if (!sol) throw std::logic_error("derivation does not preserve the trace-zero part");
            for (size_t r = 0; r < 7; ++r) M(r, c) = (*sol)[r];
        }
        g2.push_back(M);
    }

    // designated parts by intersecting with the so(7) designated subspaces
    Subspace span = detail::space_of(g2, 7);
    Subspace cart = intersection(span, so7.cartan);
    Subspace npos = intersection(span, so7.nil_pos);
    Subspace nneg = intersection(span, so7.nil_neg);
    if (cart.dim() != 2 || npos.dim() != 6 || nneg.dim() != 6)
        throw std::logic_error("G2 designated parts have unexpected dimensions");
    auto to_mats = [](const Subspace& s, size_t n) {
        std::vector<Matrix> out;
        Subspace red = s.reduced();
        for (const auto& v : red.vectors()) out.push_back(vec_to_matrix(v, n));
        return out;
    };
    return make_embedding(so7, std::move(id), g2, to_mats(cart, 7), to_mats(npos, 7),
                          to_mats(nneg, 7), std::move(meta));
}

namespace clifford {

/// Clifford action matrices of the split so(7) form on the 8-dimensional
/// spinor space Lambda W, W = <w1,w2,w3>, with the monomial basis ordered
///   [w123, w12, w13, w1, w23, w2, w3, 1]
/// (decreasing weight; complementary monomials sit at mirrored positions).
struct SpinorSpace {
    std::array<std::array<int, 3>, 8> subsets;  // membership flags per basis monomial
    std::array<Matrix, 7> c;                    // c(e_a) for the so(7) coordinates

    SpinorSpace() {
        const std::array<std::array<int, 3>, 8> subs = {{
            {1, 1, 1},  // w123
            {1, 1, 0},  // w12
            {1, 0, 1},  // w13
            {1, 0, 0},  // w1
            {0, 1, 1},  // w23
            {0, 1, 0},  // w2
            {0, 0, 1},  // w3
            {0, 0, 0},  // 1
        }};
        subsets = subs;
        auto index_of = [&](const std::array<int, 3>& s) -> size_t {
            for (size_t p = 0; p < 8; ++p)
                if (subsets[p] == s) return p;
            throw std::logic_error("bad subset");
        };
        auto sign_below = [&](const std::array<int, 3>& s, size_t i) {
            int cnt = 0;
            for (size_t j = 0; j < i; ++j) cnt += s[j];
            return cnt % 2 ? -1 : 1;
        };
        // ext(w_i) and 2*iota(w_i*)
        std::array<Matrix, 3> ext, iota2;
        for (size_t i = 0; i < 3; ++i) {
            ext[i] = Matrix(8, 8);
            iota2[i] = Matrix(8, 8);
            for (size_t p = 0; p < 8; ++p) {
                auto s = subsets[p];
                if (!s[i]) {
                    auto t = s;
                    t[i] = 1;
                    ext[i](index_of(t), p) = Gaussian(sign_below(s, i));
                } else {
                    auto t = s;
                    t[i] = 0;
                    iota2[i](index_of(t), p) = Gaussian(2 * sign_below(t, i));
                }
            }
        }
        Matrix parity(8, 8);
        for (size_t p = 0; p < 8; ++p) {
            int deg = subsets[p][0] + subsets[p][1] + subsets[p][2];
            parity(p, p) = Gaussian(deg % 2 ? -1 : 1);
        }
        // so(7) coordinates: e0,e1,e2 isotropic (-> ext), e3 middle (-> parity),
        // e4,e5,e6 dual wing: pairing partner of e_a is e_{6-a}
        c[0] = ext[0];
        c[1] = ext[1];
        c[2] = ext[2];
        c[3] = parity;
        c[4] = iota2[2];
        c[5] = iota2[1];
        c[6] = iota2[0];
    }
};

}  // namespace clifford

/// Image of so(7) under the 8-dimensional spin representation, as a
/// subalgebra of so(8) for the standard antidiagonal form. The image is
/// certified non-conjugate to the corner so(7) by the common-fixed-vector
/// dimension (0 for the spin image, 1 for the corner).
inline Embedding spin7_in_so8(const Realization& so8, const Realization& so7, std::string id,
                              EmbeddingMeta meta) {
    if (so8.name != "so8" || so7.name != "so7")
        throw std::invalid_argument("spin7_in_so8 needs so(8) and so(7) realizations");
    clifford::SpinorSpace S;

    // sanity: Clifford relations c(e_a)c(e_b) + c(e_b)c(e_a) = 2 B(e_a,e_b)
    for (size_t a = 0; a < 7; ++a)
        for (size_t b = 0; b < 7; ++b) {
            Matrix anti = S.c[a] * S.c[b] + S.c[b] * S.c[a];
            Gaussian expected = (*so7.form)(a, b) * Gaussian(2);
            Matrix want = Matrix::identity(8) * expected;
            if (anti != want) throw std::logic_error("Clifford relations violated");
        }

    // tau(x): the unique traceless M with [M, c(e_b)] = c(x e_b) for all b
    auto tau = [&](const Matrix& x) {
        std::vector<std::vector<Gaussian>> rows;
        std::vector<Gaussian> rhs;
        for (size_t b = 0; b < 7; ++b) {
            // right side c(x e_b) = sum_a x(a,b) c(e_a)
            Matrix R(8, 8);
            for (size_t a = 0; a < 7; ++a)
                if (!x(a, b).is_zero()) R += S.c[a] * x(a, b);
            const Matrix& cb = S.c[b];
            for (size_t i = 0; i < 8; ++i)
                for (size_t j = 0; j < 8; ++j) {
                    std::vector<Gaussian> row(64);
                    // [M, cb]_(i,j) = sum_k M(i,k) cb(k,j) - cb(i,k) M(k,j)
                    for (size_t k = 0; k < 8; ++k) {
                        if (!cb(k, j).is_zero()) row[i * 8 + k] += cb(k, j);
                        if (!cb(i, k).is_zero()) row[k * 8 + j] -= cb(i, k);
                    }
                    rows.push_back(std::move(row));
                    rhs.push_back(R(i, j));
                }
        }
        {
            std::vector<Gaussian> tr(64);
            for (size_t i = 0; i < 8; ++i) tr[i * 8 + i] = Gaussian(1);
            rows.push_back(std::move(tr));
            rhs.push_back(Gaussian(0));
        }
        Matrix A(rows.size(), 64);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < 64; ++j) A(i, j) = rows[i][j];
        auto sol = solve_linear(A, rhs);
        if (!sol) throw std::logic_error("spin lift is inconsistent");
        Matrix M(8, 8);
        for (size_t i = 0; i < 8; ++i)
            for (size_t j = 0; j < 8; ++j) M(i, j) = (*sol)[i * 8 + j];
        return M;
    };

    // raw images preserve a bilinear form Q, antidiagonal in this basis;
    // rescale so Q becomes the standard so(8) form exactly
    std::vector<Matrix> raw;
    for (const auto& b : so7.basis) raw.push_back(tau(b));
    {
        std::vector<std::vector<Gaussian>> rows;
        for (const auto& m : raw)
            for (size_t i = 0; i < 8; ++i)
                for (size_t j = 0; j < 8; ++j) {
                    // (m^T Q + Q m)(i,j) = sum_k m(k,i) Q(k,j) + Q(i,k) m(k,j)
                    std::vector<Gaussian> row(64);
                    for (size_t k = 0; k < 8; ++k) {
                        row[k * 8 + j] += m(k, i);
                        row[i * 8 + k] += m(k, j);
                    }
                    rows.push_back(std::move(row));
                }
        Matrix A(rows.size(), 64);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < 64; ++j) A(i, j) = rows[i][j];
        auto forms = nullspace(std::move(A));
        if (forms.size() != 1) throw std::logic_error("invariant spinor form is not unique");
        Matrix Q(8, 8);
        for (size_t i = 0; i < 8; ++i)
            for (size_t j = 0; j < 8; ++j) Q(i, j) = forms[0][i * 8 + j];
        for (size_t i = 0; i < 8; ++i)
            for (size_t j = 0; j < 8; ++j)
                if (i + j != 7 && !Q(i, j).is_zero())
                    throw std::logic_error("spinor form is not antidiagonal in this order");
        Matrix C = Matrix::identity(8);
        for (size_t p = 0; p < 4; ++p) C(p, p) = Q(p, 7 - p);
        Matrix Cinv = inverse(C);
        for (auto& m : raw) m = C * m * Cinv;
    }

    // map designated so(7) parts through the (conjugated) lift
    Matrix basis_cols(49, so7.basis.size());
    for (size_t k = 0; k < so7.basis.size(); ++k) {
        auto v = matrix_to_vec(so7.basis[k]);
        for (size_t i = 0; i < 49; ++i) basis_cols(i, k) = v[i];
    }
    auto phi = [&, raw](const Matrix& x) {
        auto sol = solve_linear(basis_cols, matrix_to_vec(x));
        if (!sol) throw std::invalid_argument("not in so(7)");
        Matrix out(8, 8);
        for (size_t k = 0; k < raw.size(); ++k)
            if (!(*sol)[k].is_zero()) out += raw[k] * (*sol)[k];
        return out;
    };
    return map_realization(so8, so7, phi, std::move(id), std::move(meta));
}

}  // namespace cxpair
