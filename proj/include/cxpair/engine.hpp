#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cxpair/embedding.hpp"
#include "cxpair/sampler.hpp"

namespace cxpair {

/// Result of a generic orbit-dimension computation.
/// value = ambient_dim (of the variety acted on) - max observed orbit dim.
/// The engine reports a maximum over samples and never claims a proof;
/// the generic rank is attained off a proper closed subvariety, so the
/// max over a few samples with large coefficient boxes is the generic
/// value with overwhelming probability.
struct ComplexityResult {
    size_t value = 0;
    size_t max_orbit_dim = 0;
    size_t ambient_dim = 0;
    size_t samples_used = 0;
    uint64_t seed = 0;
    std::vector<size_t> witnesses;  // sample indices attaining the max
};

namespace detail {

inline Subspace conjugate_space(const Matrix& g, const Matrix& ginv, const Subspace& s,
                                size_t n) {
    Subspace out(n * n);
    for (const auto& v : s.vectors()) out.add_vector(matrix_to_vec(g * vec_to_matrix(v, n) * ginv));
    return out;
}

inline void check_ambient(const Realization& r, const Subspace& s) {
    if (s.ambient_dim() != r.coord_dim())
        throw std::invalid_argument("subspace ambient does not match realization");
}

inline void check_parent(const Realization& r, const Embedding& e) {
    if (e.parent_name != r.name || e.parent_ambient != r.ambient_size)
        throw std::invalid_argument("embedding parent mismatch: " + e.id + " not in " + r.name);
}

}  // namespace detail

/// Generic value of dim(Ad(g^-1)x + y) over sampled g, reported as the
/// codimension inside the group: value = dim g - max_i dim(Ad(g_i^-1)x + y).
/// Stops early once the max cannot grow further.
inline ComplexityResult generic_sum_codim(const Realization& r, const Subspace& x,
                                          const Subspace& y, const SamplerConfig& cfg) {
    detail::check_ambient(r, x);
    detail::check_ambient(r, y);
    size_t dim_g = r.algebra.dim();
    size_t cap = std::min(dim_g, x.dim() + y.dim());
    ComplexityResult res;
    res.ambient_dim = dim_g;
    res.seed = cfg.seed;
    size_t best = 0;
    for (size_t i = 0; i < cfg.samples; ++i) {
        Matrix g = sample_element(r, cfg, i);
        Matrix ginv = inverse(g);
        Subspace xg = detail::conjugate_space(ginv, g, x, r.ambient_size);  // Ad(g^-1) x
        size_t d = sum_dim(xg, y);
        res.samples_used = i + 1;
        if (d > best) {
            best = d;
            res.witnesses.clear();
        }
        if (d == best) res.witnesses.push_back(i);
        if (best == cap) break;
    }
    res.max_orbit_dim = best;
    res.value = dim_g - best;
    return res;
}

/// Complexity of the two-sided action (g1,g2).h = g1 h g2^{-1} on G,
/// computed through the designated Borel subalgebras of the two embeddings.
inline ComplexityResult complexity_pair(const Realization& r, const Embedding& e1,
                                        const Embedding& e2, const SamplerConfig& cfg) {
    detail::check_parent(r, e1);
    detail::check_parent(r, e2);
    return generic_sum_codim(r, e1.sub_borel, e2.sub_borel, cfg);
}

/// Complexity of the left-translation action on G/H.
inline ComplexityResult complexity_homspace(const Realization& r, const Embedding& h,
                                            const SamplerConfig& cfg) {
    detail::check_parent(r, h);
    ComplexityResult raw = generic_sum_codim(r, r.borel, h.sub_basis, cfg);
    // re-express on the variety G/H
    size_t dim_h = h.sub_basis.dim();
    ComplexityResult res = raw;
    res.ambient_dim = raw.ambient_dim - dim_h;
    res.max_orbit_dim = raw.max_orbit_dim - dim_h;
    return res;
}

inline bool is_spherical_subgroup(const Realization& r, const Embedding& h,
                                  const SamplerConfig& cfg) {
    return complexity_homspace(r, h, cfg).value == 0;
}

/// Open-orbit certificate for G = G1 G2. For reductive pairs the certificate
/// decides the decomposition (density of closed double cosets); otherwise
/// the conclusion is withheld and only the open orbit is reported.
struct DecompositionResult {
    bool open_orbit = false;
    bool conclusive = false;  // both embeddings reductive
    ComplexityResult details;
    std::string label() const {
        if (!conclusive) return open_orbit ? "open-orbit certificate only" : "no open orbit";
        return open_orbit ? "decomposition" : "no decomposition";
    }
};

inline DecompositionResult is_decomposition(const Realization& r, const Embedding& e1,
                                            const Embedding& e2, const SamplerConfig& cfg) {
    detail::check_parent(r, e1);
    detail::check_parent(r, e2);
    DecompositionResult out;
    out.details = generic_sum_codim(r, e1.sub_basis, e2.sub_basis, cfg);
    out.open_orbit = out.details.value == 0;
    out.conclusive = e1.meta.is_reductive && e2.meta.is_reductive;
    return out;
}

/// Containment of a conjugate of the designated maximal unipotent subalgebra.
/// A negative answer is a certificate only up to the tested conjugates and is
/// reported as "no containment found".
struct HorosphericalResult {
    bool contains_max_unipotent = false;
    std::string witness;  // which conjugate succeeded
    std::string label() const {
        return contains_max_unipotent ? "horospherical (containment at " + witness + ")"
                                      : "no containment found";
    }
};

inline HorosphericalResult is_horospherical(const Realization& r, const Embedding& s,
                                            const SamplerConfig& cfg) {
    detail::check_parent(r, s);
    HorosphericalResult out;
    size_t sdim = s.sub_basis.dim();
    if (s.sub_basis.ambient_dim() != r.coord_dim())
        throw std::invalid_argument("ambient mismatch");
    auto contained = [&](const Subspace& u) { return sum_dim(s.sub_basis, u) == sdim; };
    if (contained(r.nil_pos)) {
        out.contains_max_unipotent = true;
        out.witness = "identity";
        return out;
    }
    if (r.weyl_flip) {
        Matrix w = *r.weyl_flip;
        Subspace flipped = detail::conjugate_space(w, inverse(w), r.nil_pos, r.ambient_size);
        if (contained(flipped)) {
            out.contains_max_unipotent = true;
            out.witness = "weyl-flip";
            return out;
        }
    }
    for (size_t i = 0; i < cfg.samples; ++i) {
        Matrix g = sample_element(r, cfg, i);
        Subspace conj = detail::conjugate_space(g, inverse(g), r.nil_pos, r.ambient_size);
        if (contained(conj)) {
            out.contains_max_unipotent = true;
            out.witness = "sample-" + std::to_string(i);
            return out;
        }
    }
    return out;
}

/// Complexity of the diagonal action on G/P x G/H. The orbit of B through
/// (g1 P, g2 H) has dimension dim b - dim(b ∩ Ad(g1)p ∩ Ad(g2)h).
inline ComplexityResult diagonal_complexity(const Realization& r, const ParabolicSpec& p,
                                            const Embedding& h, const SamplerConfig& cfg) {
    detail::check_parent(r, h);
    if (p.parent_name != r.name) throw std::invalid_argument("parabolic parent mismatch");
    size_t dim_g = r.algebra.dim();
    size_t dim_gp = dim_g - p.parabolic.dim();
    size_t dim_gh = dim_g - h.sub_basis.dim();
    size_t ambient = dim_gp + dim_gh;
    size_t dim_b = r.borel.dim();
    size_t cap = std::min(dim_b, ambient);
    ComplexityResult res;
    res.ambient_dim = ambient;
    res.seed = cfg.seed;
    size_t best = 0;
    bool any = false;
    for (size_t i = 0; i < cfg.samples; ++i) {
        auto [g1, g2] = sample_pair(r, cfg, i);
        Subspace pg = detail::conjugate_space(g1, inverse(g1), p.parabolic, r.ambient_size);
        Subspace hg = detail::conjugate_space(g2, inverse(g2), h.sub_basis, r.ambient_size);
        Subspace meet = intersection(r.borel, pg);
        size_t triple = intersection_dim(meet, hg);
        size_t orbit = dim_b - triple;
        res.samples_used = i + 1;
        if (!any || orbit > best) {
            best = orbit;
            res.witnesses.clear();
            any = true;
        }
        if (orbit == best) res.witnesses.push_back(i);
        if (best == cap) break;
    }
    res.max_orbit_dim = best;
    res.value = ambient - best;
    return res;
}

}  // namespace cxpair
