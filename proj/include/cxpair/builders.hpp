#pragma once

#include <functional>

#include "cxpair/embedding.hpp"

namespace cxpair {

using AlgMap = std::function<Matrix(const Matrix&)>;

namespace maps {

/// Monotone index padding small -> big; preserves triangularity.
inline AlgMap pad(size_t big_n, std::vector<size_t> index_map) {
    return [big_n, index_map = std::move(index_map)](const Matrix& x) {
        Matrix out(big_n, big_n);
        for (size_t i = 0; i < x.rows(); ++i)
            for (size_t j = 0; j < x.cols(); ++j)
                if (!x(i, j).is_zero()) out(index_map[i], index_map[j]) = x(i, j);
        return out;
    };
}

inline AlgMap compose(AlgMap outer, AlgMap inner) {
    return [outer = std::move(outer), inner = std::move(inner)](const Matrix& x) {
        return outer(inner(x));
    };
}

inline AlgMap conjugate_by(const Matrix& c) {
    Matrix cinv = inverse(c);
    return [c, cinv](const Matrix& x) { return c * x * cinv; };
}

/// Identity except an explicit 2x2 block at rows/cols (p, p+1).
inline Matrix central_block(size_t n, size_t p, const Gaussian& a, const Gaussian& b,
                            const Gaussian& c, const Gaussian& d) {
    Matrix m = Matrix::identity(n);
    m(p, p) = a;
    m(p, p + 1) = b;
    m(p + 1, p) = c;
    m(p + 1, p + 1) = d;
    return m;
}

}  // namespace maps

enum class Placement { Outer, Centered };

/// so(m) inside so(N) along the split form.
///  - even m: outermost hyperbolic slots, or a centered contiguous block.
///  - odd m, odd N: centered contiguous block.
///  - odd m, even N: centered, with the middle line carried to a unit vector
///    inside the central hyperbolic plane (exact isometry over Q(i)).
inline AlgMap so_sub_map(size_t N, size_t m, Placement place = Placement::Outer) {
    if (m > N) throw std::invalid_argument("so_sub: m > N");
    if (m % 2 == 0) {
        std::vector<size_t> idx(m);
        if (place == Placement::Outer) {
            size_t a = m / 2;
            for (size_t j = 0; j < a; ++j) idx[j] = j;
            for (size_t j = a; j < m; ++j) idx[j] = N - m + j;
        } else {
            if ((N - m) % 2) throw std::invalid_argument("so_sub: centered even block needs even gap");
            size_t off = (N - m) / 2;
            for (size_t j = 0; j < m; ++j) idx[j] = off + j;
        }
        return maps::pad(N, std::move(idx));
    }
    if (N % 2 == 1) {
        size_t off = (N - m) / 2;
        std::vector<size_t> idx(m);
        for (size_t j = 0; j < m; ++j) idx[j] = off + j;
        return maps::pad(N, std::move(idx));
    }
    // m odd, N even: central-plane isometry
    size_t c = N / 2, a = (m - 1) / 2;
    std::vector<size_t> idx(m);
    for (size_t j = 0; j < a; ++j) idx[j] = c - 1 - a + j;
    idx[a] = c - 1;
    for (size_t j = a + 1; j < m; ++j) idx[j] = c + j - a;
    // columns c-1, c of the frame change: n~ = -i e_{c-1} + (i/2) e_c (unit),
    // v = e_{c-1} + (1/2) e_c (unit, fixed by the image)
    Matrix M = maps::central_block(N, c - 1, -Gaussian::i(), Gaussian(1),
                                   Gaussian::i() * Gaussian(1, 2), Gaussian(1, 2));
    return maps::compose(maps::conjugate_by(M), maps::pad(N, std::move(idx)));
}

/// Second factor of an odd+odd orthogonal product in even N: its middle
/// goes to the complementary unit vector v of the central plane.
inline AlgMap so_sub_map_second_odd(size_t N, size_t m, size_t inner_gap) {
    // slots: left block ends inner_gap slots before the central plane
    size_t c = N / 2, a = (m - 1) / 2;
    std::vector<size_t> idx(m);
    for (size_t j = 0; j < a; ++j) idx[j] = c - 1 - inner_gap - a + j;
    idx[a] = c;  // middle slot maps to v after conjugation
    for (size_t j = a + 1; j < m; ++j) idx[j] = c + inner_gap + j - a;
    Matrix M = maps::central_block(N, c - 1, -Gaussian::i(), Gaussian(1),
                                   Gaussian::i() * Gaussian(1, 2), Gaussian(1, 2));
    return maps::compose(maps::conjugate_by(M), maps::pad(N, std::move(idx)));
}

/// Complementary pair so(m) + so(n) inside so(m+n): commuting images on
/// orthogonal nondegenerate subspaces. Returns the two factor maps.
inline std::pair<AlgMap, AlgMap> so_product_maps(size_t m, size_t n) {
    size_t N = m + n;
    if (m % 2 == 0)
        return {so_sub_map(N, m, Placement::Outer), so_sub_map(N, n, Placement::Centered)};
    if (n % 2 == 0)
        return {so_sub_map(N, m, Placement::Centered), so_sub_map(N, n, Placement::Outer)};
    // both odd: the two middles go to orthogonal unit vectors of the central plane
    size_t gap = (n - 1) / 2;
    return {so_sub_map_second_odd(N, m, gap), so_sub_map(N, n, Placement::Centered)};
}

/// sp(m) inside sp(N) on the middle slots (both even).
inline AlgMap sp_sub_map(size_t N, size_t m) {
    if (m > N || m % 2 || N % 2) throw std::invalid_argument("sp_sub: bad sizes");
    size_t off = (N - m) / 2;
    std::vector<size_t> idx(m);
    for (size_t j = 0; j < m; ++j) idx[j] = off + j;
    return maps::pad(N, std::move(idx));
}

/// sp(m) on the outermost slots of sp(N).
inline AlgMap sp_outer_map(size_t N, size_t m) {
    size_t a = m / 2;
    std::vector<size_t> idx(m);
    for (size_t j = 0; j < a; ++j) idx[j] = j;
    for (size_t j = a; j < m; ++j) idx[j] = N - m + j;
    return maps::pad(N, std::move(idx));
}

/// Corner block at the top-left of sl/gl(N).
inline AlgMap corner_map(size_t N, size_t m, size_t offset = 0) {
    std::vector<size_t> idx(m);
    for (size_t j = 0; j < m; ++j) idx[j] = offset + j;
    return maps::pad(N, std::move(idx));
}

/// gl(a) inside so(2a) or sp(2a): A on the top-left block, the mirrored
/// block carries -A reflected along the antidiagonal. The image is the
/// stabilizer of the two complementary isotropic coordinate subspaces.
inline AlgMap gl_block_map(size_t two_a) {
    size_t a = two_a / 2;
    return [two_a, a](const Matrix& x) {
        Matrix out(two_a, two_a);
        for (size_t i = 0; i < a; ++i)
            for (size_t j = 0; j < a; ++j) {
                if (x(i, j).is_zero()) continue;
                out(i, j) = x(i, j);
                out(two_a - 1 - j, two_a - 1 - i) = -x(i, j);
            }
        return out;
    };
}

/// Kronecker factors for sp(2a) (x) sp(2b) inside so(4ab): lexicographic
/// tensor basis, rescaled so the product form is the standard antidiagonal.
struct TensorSoMaps {
    AlgMap left;   // x -> D (x (x) 1) D^-1
    AlgMap right;  // y -> D (1 (x) y) D^-1
};

inline TensorSoMaps tensor_sp_sp_maps(size_t two_a, size_t two_b) {
    size_t N = two_a * two_b;
    auto epsa = [two_a](size_t i) { return i < two_a / 2 ? 1 : -1; };
    auto epsb = [two_b](size_t j) { return j < two_b / 2 ? 1 : -1; };
    Matrix D = Matrix::identity(N);
    for (size_t p = 0; p < N / 2; ++p) {
        size_t i = p / two_b, j = p % two_b;
        D(p, p) = Gaussian(epsa(i) * epsb(j));
    }
    Matrix Dinv = inverse(D);
    AlgMap left = [two_a, two_b, N, D, Dinv](const Matrix& x) {
        Matrix out(N, N);
        for (size_t i = 0; i < two_a; ++i)
            for (size_t k = 0; k < two_a; ++k) {
                if (x(i, k).is_zero()) continue;
                for (size_t j = 0; j < two_b; ++j) out(i * two_b + j, k * two_b + j) = x(i, k);
            }
        return D * out * Dinv;
    };
    AlgMap right = [two_a, two_b, N, D, Dinv](const Matrix& y) {
        Matrix out(N, N);
        for (size_t j = 0; j < two_b; ++j)
            for (size_t l = 0; l < two_b; ++l) {
                if (y(j, l).is_zero()) continue;
                for (size_t i = 0; i < two_a; ++i) out(i * two_b + j, i * two_b + l) = y(j, l);
            }
        return D * out * Dinv;
    };
    return {left, right};
}

/// One-dimensional torus embedding from a single integral cocharacter.
inline Embedding torus_embedding(const Realization& parent, const Matrix& cochar,
                                 std::string id, size_t torus_rank = 1) {
    EmbeddingMeta meta;
    meta.abstract_type = ReductiveType::torus(torus_rank);
    meta.is_reductive = true;
    return make_embedding(parent, std::move(id), {cochar}, {cochar}, {}, {}, meta);
}

inline Embedding torus_embedding(const Realization& parent, const std::vector<Matrix>& cochars,
                                 std::string id) {
    EmbeddingMeta meta;
    meta.abstract_type = ReductiveType::torus(cochars.size());
    meta.is_reductive = true;
    return make_embedding(parent, std::move(id), cochars, cochars, {}, {}, meta);
}

/// The trivial subgroup.
inline Embedding trivial_embedding(const Realization& parent, std::string id) {
    EmbeddingMeta meta;
    meta.abstract_type = ReductiveType::trivial();
    meta.is_reductive = true;
    return make_embedding(parent, std::move(id), {}, {}, {}, {}, meta);
}

/// Whole-group embedding (the parent as a subgroup of itself).
inline Embedding full_embedding(const Realization& parent, std::string id) {
    EmbeddingMeta meta;
    meta.abstract_type = parent.abstract_type;
    meta.is_reductive = true;
    return make_embedding(parent, std::move(id), parent.basis, parent.cartan_basis,
                          parent.nil_pos_basis, parent.nil_neg_basis, meta);
}

/// Borel and related designated subalgebras, packaged as embeddings.
inline Embedding borel_embedding(const Realization& parent, std::string id) {
    std::vector<Matrix> basis = parent.cartan_basis;
    basis.insert(basis.end(), parent.nil_pos_basis.begin(), parent.nil_pos_basis.end());
    EmbeddingMeta meta;
    meta.is_reductive = parent.nil_pos_basis.empty();
    meta.abstract_type = ReductiveType::torus(parent.cartan_basis.size());
    return make_embedding(parent, std::move(id), basis, parent.cartan_basis,
                          parent.nil_pos_basis, {}, meta);
}

inline Embedding borel_neg_embedding(const Realization& parent, std::string id) {
    std::vector<Matrix> basis = parent.cartan_basis;
    basis.insert(basis.end(), parent.nil_neg_basis.begin(), parent.nil_neg_basis.end());
    EmbeddingMeta meta;
    meta.is_reductive = parent.nil_neg_basis.empty();
    meta.abstract_type = ReductiveType::torus(parent.cartan_basis.size());
    // designated parts: for the opposite Borel the nil part is the negative one
    Embedding e = make_embedding(parent, std::move(id), basis, parent.cartan_basis, {},
                                 parent.nil_neg_basis, meta);
    // its own "Borel" is itself: cartan + negative part
    std::vector<Matrix> all = parent.cartan_basis;
    all.insert(all.end(), parent.nil_neg_basis.begin(), parent.nil_neg_basis.end());
    e.sub_borel = detail::space_of(all, parent.ambient_size);
    e.sub_nil = detail::space_of(parent.nil_neg_basis, parent.ambient_size);
    return e;
}

inline Embedding nilpos_embedding(const Realization& parent, std::string id) {
    EmbeddingMeta meta;
    meta.is_reductive = parent.nil_pos_basis.empty();
    meta.abstract_type = ReductiveType::trivial();
    return make_embedding(parent, std::move(id), parent.nil_pos_basis, {},
                          parent.nil_pos_basis, {}, meta);
}

inline Embedding cartan_embedding(const Realization& parent, std::string id) {
    return torus_embedding(parent, parent.cartan_basis, std::move(id));
}

}  // namespace cxpair
