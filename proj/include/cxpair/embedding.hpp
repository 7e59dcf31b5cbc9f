#pragma once

#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cxpair/echelon.hpp"
#include "cxpair/realization.hpp"

namespace cxpair {

struct EmbeddingMeta {
    ReductiveType abstract_type;
    bool is_reductive = true;
    bool is_levi = false;
    bool is_symmetric = false;
    std::vector<std::pair<std::string, std::string>> table_refs;  // (table, row)
};

/// A subalgebra of a realization with designated Borel data and metadata.
/// Every catalog constructor ships designated sub-Cartan and nilpotent
/// bases; the engine never derives Borel subalgebras of arbitrary inputs.
struct Embedding {
    std::string id;
    std::string parent_name;
    size_t parent_ambient = 0;

    std::vector<Matrix> basis_mats;
    std::vector<Matrix> cochars;  // integral diagonal, spanning the sub-Cartan
    std::vector<Matrix> nil_pos_mats;
    std::vector<Matrix> nil_neg_mats;

    Subspace sub_basis;
    Subspace sub_borel;
    Subspace sub_nil;

    EmbeddingMeta meta;

    size_t dim() const { return sub_basis.dim(); }
    size_t coord_dim() const { return parent_ambient * parent_ambient; }

    Frame frame() const { return Frame{parent_ambient, cochars, nil_pos_mats, nil_neg_mats}; }

    /// Ad(g)-image: all subspaces and frame matrices conjugated by g.
    Embedding conjugated(const Matrix& g) const {
        Matrix ginv = inverse(g);
        Embedding e = *this;
        auto conj_mats = [&](std::vector<Matrix>& v) {
            for (auto& m : v) m = g * m * ginv;
        };
        conj_mats(e.basis_mats);
        conj_mats(e.cochars);  // no longer diagonal in general; frame unusable, spans fine
        conj_mats(e.nil_pos_mats);
        conj_mats(e.nil_neg_mats);
        auto conj_space = [&](Subspace& s) {
            Subspace out(s.ambient_dim());
            for (const auto& v : s.vectors())
                out.add_vector(matrix_to_vec(g * vec_to_matrix(v, parent_ambient) * ginv));
            s = out;
        };
        conj_space(e.sub_basis);
        conj_space(e.sub_borel);
        conj_space(e.sub_nil);
        return e;
    }
};

namespace detail {

inline Subspace space_of(const std::vector<Matrix>& mats, size_t n) {
    Subspace s(n * n);
    for (const auto& m : mats) s.add_vector(matrix_to_vec(m));
    return s;
}

/// Rescale a diagonal matrix to integer entries (clears denominators).
inline Matrix integral_cochar(const Matrix& d) {
    mpz_class lcm = 1;
    for (size_t i = 0; i < d.rows(); ++i) {
        if (d(i, i).im != 0)
            throw std::invalid_argument("cocharacter must be real diagonal");
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), d(i, i).re.get_den().get_mpz_t());
    }
    return d * Gaussian(mpq_class(lcm));
}

}  // namespace detail

/// Assemble an Embedding from designated parts. Cocharacters are cleared to
/// integral diagonals; throws if one is not diagonal.
inline Embedding make_embedding(const Realization& parent, std::string id,
                                std::vector<Matrix> basis, std::vector<Matrix> cochars,
                                std::vector<Matrix> nil_pos, std::vector<Matrix> nil_neg,
                                EmbeddingMeta meta) {
    Embedding e;
    e.id = std::move(id);
    e.parent_name = parent.name;
    e.parent_ambient = parent.ambient_size;
    e.basis_mats = std::move(basis);
    for (auto& c : cochars) {
        for (size_t i = 0; i < c.rows(); ++i)
            for (size_t j = 0; j < c.cols(); ++j)
                if (i != j && !c(i, j).is_zero())
                    throw std::invalid_argument("cocharacter is not diagonal: " + e.id);
        c = detail::integral_cochar(c);
    }
    e.cochars = std::move(cochars);
    e.nil_pos_mats = std::move(nil_pos);
    e.nil_neg_mats = std::move(nil_neg);
    size_t n = parent.ambient_size;
    e.sub_basis = detail::space_of(e.basis_mats, n);
    std::vector<Matrix> borel = e.cochars;
    borel.insert(borel.end(), e.nil_pos_mats.begin(), e.nil_pos_mats.end());
    e.sub_borel = detail::space_of(borel, n);
    e.sub_nil = detail::space_of(e.nil_pos_mats, n);
    e.meta = std::move(meta);
    return e;
}

/// Map a whole source realization through an algebra homomorphism given as
/// a matrix-to-matrix function; designated parts map to designated parts.
inline Embedding map_realization(const Realization& parent, const Realization& source,
                                 const std::function<Matrix(const Matrix&)>& phi,
                                 std::string id, EmbeddingMeta meta) {
    std::vector<Matrix> basis, cochars, npos, nneg;
    for (const auto& m : source.basis) basis.push_back(phi(m));
    for (const auto& m : source.cartan_basis) cochars.push_back(phi(m));
    for (const auto& m : source.nil_pos_basis) npos.push_back(phi(m));
    for (const auto& m : source.nil_neg_basis) nneg.push_back(phi(m));
    return make_embedding(parent, std::move(id), std::move(basis), std::move(cochars),
                          std::move(npos), std::move(nneg), std::move(meta));
}

/// Union of two commuting embeddings in the same parent (direct product).
inline Embedding product_embedding(const Realization& parent, const Embedding& a,
                                   const Embedding& b, std::string id) {
    auto cat = [](std::vector<Matrix> x, const std::vector<Matrix>& y) {
        x.insert(x.end(), y.begin(), y.end());
        return x;
    };
    EmbeddingMeta meta;
    meta.abstract_type = a.meta.abstract_type.times(b.meta.abstract_type);
    meta.is_reductive = a.meta.is_reductive && b.meta.is_reductive;
    return make_embedding(parent, std::move(id), cat(a.basis_mats, b.basis_mats),
                          cat(a.cochars, b.cochars), cat(a.nil_pos_mats, b.nil_pos_mats),
                          cat(a.nil_neg_mats, b.nil_neg_mats), std::move(meta));
}

/// Smallest bracket-closed span containing the generators. Returns matrices
/// whose span is the generated subalgebra.
inline std::vector<Matrix> generate_subalgebra(const std::vector<Matrix>& gens, size_t n) {
    EchelonBasis span(n * n);
    std::vector<Matrix> reps;
    std::deque<size_t> work;
    for (const auto& g : gens)
        if (span.add(matrix_to_vec(g))) {
            reps.push_back(g);
            work.push_back(reps.size() - 1);
        }
    while (!work.empty()) {
        size_t i = work.front();
        work.pop_front();
        for (size_t j = 0; j < reps.size(); ++j) {
            Matrix br = bracket(reps[i], reps[j]);
            if (br.is_zero()) continue;
            if (span.add(matrix_to_vec(br))) {
                reps.push_back(br);
                work.push_back(reps.size() - 1);
            }
        }
    }
    return reps;
}

/// Derived series termination check (solvability of a span of matrices).
inline bool is_solvable_span(const std::vector<Matrix>& mats, size_t n) {
    std::vector<Matrix> current = mats;
    size_t dim_prev = detail::space_of(current, n).dim();
    while (dim_prev > 0) {
        EchelonBasis next(n * n);
        std::vector<Matrix> reps;
        for (size_t i = 0; i < current.size(); ++i)
            for (size_t j = i + 1; j < current.size(); ++j) {
                Matrix br = bracket(current[i], current[j]);
                if (!br.is_zero() && next.add(matrix_to_vec(br))) reps.push_back(br);
            }
        size_t d = next.dim();
        if (d == 0) return true;
        if (d >= dim_prev) return false;
        current = std::move(reps);
        dim_prev = d;
    }
    return true;
}

/// Lower central series termination (nilpotency of a span of matrices).
inline bool is_nilpotent_span(const std::vector<Matrix>& mats, size_t n) {
    std::vector<Matrix> current = mats;
    size_t dim_prev = detail::space_of(current, n).dim();
    for (size_t iter = 0; iter < n * n + 1; ++iter) {
        if (dim_prev == 0) return true;
        EchelonBasis next(n * n);
        std::vector<Matrix> reps;
        for (const auto& a : mats)
            for (const auto& c : current) {
                Matrix br = bracket(a, c);
                if (!br.is_zero() && next.add(matrix_to_vec(br))) reps.push_back(br);
            }
        size_t d = next.dim();
        if (d == 0) return true;
        if (d >= dim_prev && iter > 0) return false;
        current = std::move(reps);
        dim_prev = d;
    }
    return false;
}

/// Standard parabolic subalgebra attached to a subset of simple roots,
/// with its nilradical and block Levi.
struct ParabolicSpec {
    std::string parent_name;
    size_t parent_ambient = 0;
    std::vector<size_t> simple_root_subset;  // 0-based diagram indices
    Subspace parabolic;
    Subspace nilradical;
    Embedding levi;
};

/// Levi type bookkeeping: the abstract type of the standard Levi of the
/// parabolic for the given subset, computed per family from the diagram.
ReductiveType levi_type(const Realization& r, const std::vector<size_t>& subset);

/// Builds the standard parabolic p = b + <negative simple roots in subset>,
/// its Levi (generated by the Cartan and the +-simple vectors in subset) and
/// the nilradical (largest ad(levi)-stable complement inside p's nil part).
inline ParabolicSpec levi_of_parabolic(const Realization& r, const std::vector<size_t>& subset) {
    size_t n = r.ambient_size;
    size_t rank = r.simple_pos.size();
    for (size_t s : subset)
        if (s >= rank) throw std::out_of_range("simple root index out of range");

    std::vector<Matrix> gens;
    for (const auto& c : r.cartan_basis) gens.push_back(c);
    for (const auto& e : r.nil_pos_basis) gens.push_back(e);
    for (size_t s : subset) gens.push_back(r.simple_neg[s]);
    std::vector<Matrix> par = generate_subalgebra(gens, n);

    std::vector<Matrix> levi_gens = r.cartan_basis;
    for (size_t s : subset) {
        levi_gens.push_back(r.simple_pos[s]);
        levi_gens.push_back(r.simple_neg[s]);
    }
    std::vector<Matrix> levi_mats = generate_subalgebra(levi_gens, n);
    Subspace levi_span = detail::space_of(levi_mats, n);

    // nilradical: start from the strictly-positive part of p not in the Levi,
    // then shrink to the largest subspace stable under the negative simple
    // generators of the Levi.
    Subspace p_span = detail::space_of(par, n);
    Subspace nil_all = r.nil_pos;
    Subspace candidate(n * n);
    {
        // nil_pos ∩ (complement of levi inside p): take vectors of nil_pos
        // not already in levi, i.e. solve for the stable part below
        candidate = nil_all;
    }
    // iterate: W <- {x in W : [x, f_s] in W for all s in subset}
    Subspace W = candidate;
    bool changed = true;
    while (changed) {
        changed = false;
        // W_mats: matrices spanning W
        std::vector<Matrix> wmats;
        Subspace w_red = W.reduced();
        for (const auto& v : w_red.vectors()) wmats.push_back(vec_to_matrix(v, n));
        if (subset.empty()) break;
        // solve the linear condition on coefficient vectors
        EchelonBasis wbasis(n * n);
        for (const auto& m : wmats) wbasis.add(matrix_to_vec(m));
        // collect constraints: x = sum c_i w_i with [x, f_s] in W for all s
        // build matrix: rows index (s, coordinates of residue), unknowns c_i
        size_t k = wmats.size();
        std::vector<std::vector<Gaussian>> residues;  // per (i, s): residue vector
        Matrix sys(0, 0);
        std::vector<std::vector<Gaussian>> rows;
        for (size_t s : subset) {
            std::vector<std::vector<Gaussian>> images;
            for (const auto& wm : wmats) {
                std::vector<Gaussian> img = matrix_to_vec(bracket(wm, r.simple_neg[s]));
                wbasis.reduce(img);  //残り = component outside W
                images.push_back(std::move(img));
            }
            for (size_t coord = 0; coord < n * n; ++coord) {
                bool nonzero = false;
                std::vector<Gaussian> row(k);
                for (size_t i = 0; i < k; ++i) {
                    row[i] = images[i][coord];
                    nonzero |= !row[i].is_zero();
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        if (!rows.empty()) {
            Matrix m(rows.size(), k);
            for (size_t i = 0; i < rows.size(); ++i)
                for (size_t j = 0; j < k; ++j) m(i, j) = rows[i][j];
            auto null = nullspace(std::move(m));
            Subspace newW(n * n);
            for (const auto& coeff : null) {
                std::vector<Gaussian> v(n * n);
                for (size_t i = 0; i < k; ++i) {
                    if (coeff[i].is_zero()) continue;
                    auto wi = matrix_to_vec(wmats[i]);
                    for (size_t c = 0; c < n * n; ++c) v[c] += coeff[i] * wi[c];
                }
                newW.add_vector(std::move(v));
            }
            if (newW.dim() < W.dim()) {
                W = newW;
                changed = true;
            }
        }
    }
    Subspace nilrad = W;

    ParabolicSpec spec;
    spec.parent_name = r.name;
    spec.parent_ambient = n;
    spec.simple_root_subset = subset;
    spec.parabolic = p_span;
    spec.nilradical = nilrad.reduced();

    // Levi embedding with designated parts: Cartan plus the +-parts inside it
    std::vector<Matrix> lpos, lneg;
    for (const auto& e : r.nil_pos_basis)
        if (levi_span.contains(matrix_to_vec(e))) lpos.push_back(e);
    for (const auto& f : r.nil_neg_basis)
        if (levi_span.contains(matrix_to_vec(f))) lneg.push_back(f);
    EmbeddingMeta meta;
    meta.abstract_type = levi_type(r, subset);
    meta.is_reductive = true;
    meta.is_levi = true;
    spec.levi = make_embedding(r, r.name + ".levi", levi_mats, r.cartan_basis, lpos, lneg, meta);
    return spec;
}

/// Abstract type of the standard Levi, from the Dynkin diagram induced on
/// the chosen node subset. Node adjacency is the chain 0..rank-2 for all
/// families, except type D where the fork node (rank-1) attaches to node
/// rank-3 instead of rank-2.
inline ReductiveType levi_type(const Realization& r, const std::vector<size_t>& subset) {
    size_t rank = r.simple_pos.size();
    const std::string& fam = r.family;
    bool type_d = (fam == "so" && r.ambient_size % 2 == 0);
    auto adjacent = [&](size_t a, size_t b) {
        if (a > b) std::swap(a, b);
        if (type_d && b == rank - 1) return rank >= 3 && a == rank - 3;
        return b == a + 1;
    };
    std::vector<bool> in(rank, false);
    for (size_t s : subset) in[s] = true;
    std::vector<bool> seen(rank, false);
    ReductiveType t;
    size_t ss_rank_used = 0;
    for (size_t start = 0; start < rank; ++start) {
        if (!in[start] || seen[start]) continue;
        // collect the connected component of `start`
        std::vector<size_t> comp{start};
        seen[start] = true;
        for (size_t qi = 0; qi < comp.size(); ++qi)
            for (size_t v = 0; v < rank; ++v)
                if (in[v] && !seen[v] && adjacent(comp[qi], v)) {
                    seen[v] = true;
                    comp.push_back(v);
                }
        size_t len = comp.size();
        ss_rank_used += len;
        bool has_last = false, has_second_last = false;
        for (size_t v : comp) {
            has_last |= (v == rank - 1);
            has_second_last |= (rank >= 2 && v == rank - 2);
        }
        if (fam == "sl" || fam == "gl") {
            t.simple_factors.emplace_back(Family::A, len);
        } else if (fam == "sp") {
            if (has_last && len >= 2)
                t.simple_factors.emplace_back(Family::C, len);
            else
                t.simple_factors.emplace_back(Family::A, len);
        } else if (fam == "so" && !type_d) {
            if (has_last)
                t.simple_factors.emplace_back(Family::B, len);
            else
                t.simple_factors.emplace_back(Family::A, len);
        } else {  // type D
            if (has_last && has_second_last)
                t.simple_factors.emplace_back(Family::D, len);  // len >= 3 by connectivity
            else
                t.simple_factors.emplace_back(Family::A, len);
        }
    }
    std::sort(t.simple_factors.begin(), t.simple_factors.end());
    size_t total_rank = r.abstract_type.total_rank();
    t.central_torus_rank = total_rank - ss_rank_used;
    return t;
}

/// Horospherical subalgebra nilradical(p) + L' + chosen central subtorus.
/// The Levi part is the commutator L' plus the span of the given central
/// cocharacters; choices outside the allowed interval throw.
inline Embedding horospherical_from_parabolic(const Realization& r, const ParabolicSpec& p,
                                              const std::vector<Matrix>& center_cochars,
                                              std::string id) {
    size_t n = r.ambient_size;
    // commutator of the Levi
    std::vector<Matrix> comm_gens;
    for (const auto& e : p.levi.nil_pos_mats) comm_gens.push_back(e);
    for (const auto& f : p.levi.nil_neg_mats) comm_gens.push_back(f);
    std::vector<Matrix> comm = generate_subalgebra(comm_gens, n);
    Subspace comm_span = detail::space_of(comm, n);

    // verify the chosen cochars are central in the Levi and inside it
    for (const auto& c : center_cochars) {
        if (!p.levi.sub_basis.contains(matrix_to_vec(c)))
            throw std::invalid_argument("torus choice outside the Levi");
        for (const auto& b : p.levi.basis_mats)
            if (!bracket(c, b).is_zero())
                throw std::invalid_argument("torus choice is not central in the Levi");
    }

    std::vector<Matrix> nilrad_mats;
    for (const auto& v : p.nilradical.vectors()) nilrad_mats.push_back(vec_to_matrix(v, n));

    std::vector<Matrix> basis = nilrad_mats;
    basis.insert(basis.end(), comm.begin(), comm.end());
    basis.insert(basis.end(), center_cochars.begin(), center_cochars.end());

    // designated parts: cochars span (commutator ∩ Cartan) plus the chosen center
    std::vector<Matrix> cochars;
    {
        Subspace comm_cartan = intersection(comm_span, r.cartan).reduced();
        for (const auto& v : comm_cartan.vectors())
            cochars.push_back(detail::integral_cochar(vec_to_matrix(v, n)));
    }
    cochars.insert(cochars.end(), center_cochars.begin(), center_cochars.end());
    std::vector<Matrix> npos = nilrad_mats;
    npos.insert(npos.end(), p.levi.nil_pos_mats.begin(), p.levi.nil_pos_mats.end());
    std::vector<Matrix> nneg = p.levi.nil_neg_mats;

    EmbeddingMeta meta;
    meta.is_reductive = p.nilradical.dim() == 0;
    // abstract type: commutator factors plus the chosen torus; the nilradical
    // is unipotent and does not contribute to the reductive type label.
    ReductiveType ct;
    for (const auto& f : p.levi.meta.abstract_type.simple_factors) ct.simple_factors.push_back(f);
    ct.central_torus_rank = detail::space_of(center_cochars, n).dim();
    meta.abstract_type = ct;  // descriptive only for horosphericals
    Embedding e = make_embedding(r, std::move(id), basis, cochars, npos, nneg, meta);
    return e;
}

/// Validation for embeddings: closure, designated-part bookkeeping,
/// solvability of the Borel and nilpotency of the nil part.
inline ValidationReport validate(const Realization& parent, const Embedding& e) {
    ValidationReport rep;
    size_t n = parent.ambient_size;
    EchelonBasis span(n * n);
    for (const auto& b : e.basis_mats) span.add(matrix_to_vec(b));
    bool closed = true;
    for (size_t i = 0; i < e.basis_mats.size() && closed; ++i)
        for (size_t j = i + 1; j < e.basis_mats.size(); ++j)
            if (!span.contains(matrix_to_vec(bracket(e.basis_mats[i], e.basis_mats[j])))) {
                closed = false;
                break;
            }
    rep.add("bracket-closure", closed);
    rep.add("inside-parent", parent.algebra.contains(e.sub_basis));
    rep.add("borel-inside", e.sub_basis.contains(e.sub_borel));
    rep.add("nil-inside-borel", e.sub_borel.contains(e.sub_nil));
    if (e.meta.is_reductive) {
        rep.add("dimension", e.sub_basis.dim() == e.meta.abstract_type.dimension(),
                std::to_string(e.sub_basis.dim()) + " vs " +
                    std::to_string(e.meta.abstract_type.dimension()));
        rep.add("nil-dimension", e.sub_nil.dim() == e.meta.abstract_type.unipotent_dim());
    }
    std::vector<Matrix> borel_mats = e.cochars;
    borel_mats.insert(borel_mats.end(), e.nil_pos_mats.begin(), e.nil_pos_mats.end());
    rep.add("borel-solvable", is_solvable_span(borel_mats, n));
    rep.add("nil-nilpotent", is_nilpotent_span(e.nil_pos_mats, n));
    return rep;
}

}  // namespace cxpair
