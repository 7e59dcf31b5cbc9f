#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>

#include "cxpair/builders.hpp"
#include "cxpair/engine.hpp"

using namespace cxpair;

namespace {

/// Independent floating oracle for the sl(2) nil-pair value: parametrize
/// g = l(s) t(c) u(r) with doubles and take the max rank of {g^-1 e g, e}.
size_t sl2_nilpair_max_rank_float() {
    size_t best = 0;
    for (int k = 1; k <= 20; ++k) {
        double s = 0.37 * k + 0.11, c = 1.0 + 0.21 * k, r = -0.53 * k + 0.07;
        Eigen::Matrix2d l, t, u, e;
        l << 1, 0, s, 1;
        t << c, 0, 0, 1 / c;
        u << 1, r, 0, 1;
        e << 0, 1, 0, 0;
        Eigen::Matrix2d g = l * t * u;
        Eigen::Matrix2d eg = g.inverse() * e * g;
        Eigen::Matrix<double, 2, 4> stack;
        stack.row(0) << eg(0, 0), eg(0, 1), eg(1, 0), eg(1, 1);
        stack.row(1) << e(0, 0), e(0, 1), e(1, 0), e(1, 1);
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(stack);
        size_t rank = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-8) ++rank;
        best = std::max(best, rank);
    }
    return best;
}

}  // namespace

TEST_CASE("generic_sum_codim on sl(2): frozen oracle values") {
    Realization sl2 = build("sl", 2);
    SamplerConfig cfg;

    // big cell: borel against opposite borel is open
    Subspace borel_neg = sl2.cartan;
    Subspace bneg = sum(sl2.cartan, sl2.nil_neg);
    REQUIRE(generic_sum_codim(sl2, sl2.borel, bneg, cfg).value == 0);

    // nil against nil: the independent float oracle gives max rank 2,
    // hence codimension 3 - 2 = 1
    REQUIRE(sl2_nilpair_max_rank_float() == 2);
    ComplexityResult nil = generic_sum_codim(sl2, sl2.nil_pos, sl2.nil_pos, cfg);
    REQUIRE(nil.value == 1);
    REQUIRE(nil.max_orbit_dim == 2);

    // cartan against borel: T g B is generically open in SL(2)
    REQUIRE(generic_sum_codim(sl2, sl2.cartan, sl2.borel, cfg).value == 0);
}

TEST_CASE("complexity_pair basics") {
    Realization sl2 = build("sl", 2);
    SamplerConfig cfg;
    Embedding full = full_embedding(sl2, "sl2.full");
    Embedding triv = trivial_embedding(sl2, "sl2.trivial");
    Embedding borel = borel_embedding(sl2, "sl2.borel");

    REQUIRE(complexity_pair(sl2, full, full, cfg).value == 0);
    REQUIRE(complexity_pair(sl2, triv, borel, cfg).value == 1);

    Realization sl3 = build("sl", 3);
    Embedding b3 = borel_embedding(sl3, "sl3.borel");
    REQUIRE_THROWS_AS(complexity_pair(sl2, full, b3, cfg), std::invalid_argument);
}

TEST_CASE("pair symmetry and value monotone in sample budget") {
    Realization sl2 = build("sl", 2);
    SamplerConfig cfg;
    Embedding t = cartan_embedding(sl2, "sl2.torus");
    Embedding b = borel_embedding(sl2, "sl2.borel");
    REQUIRE(complexity_pair(sl2, t, b, cfg).value == complexity_pair(sl2, b, t, cfg).value);

    // value is non-increasing as the sample budget grows (fixed seed stream)
    size_t prev = SIZE_MAX;
    for (size_t k = 1; k <= 5; ++k) {
        SamplerConfig c2 = cfg;
        c2.samples = k;
        size_t v = complexity_pair(sl2, t, t, c2).value;
        REQUIRE(v <= prev);
        prev = v;
    }
}

TEST_CASE("complexity_homspace: trivial subgroup and U in sl(2)") {
    Realization sl2 = build("sl", 2);
    SamplerConfig cfg;
    Embedding triv = trivial_embedding(sl2, "sl2.trivial");
    ComplexityResult r = complexity_homspace(sl2, triv, cfg);
    REQUIRE(r.value == 1);  // dim G - dim B
    REQUIRE(r.ambient_dim == 3);

    Embedding u = nilpos_embedding(sl2, "sl2.u");
    REQUIRE(is_spherical_subgroup(sl2, u, cfg));       // U B^- open
    REQUIRE_FALSE(is_spherical_subgroup(sl2, triv, cfg));
}

TEST_CASE("decomposition certificates") {
    Realization sl2 = build("sl", 2);
    SamplerConfig cfg;
    Embedding t = cartan_embedding(sl2, "sl2.torus");
    DecompositionResult tt = is_decomposition(sl2, t, t, cfg);
    REQUIRE_FALSE(tt.open_orbit);
    REQUIRE(tt.conclusive);

    // U against B^-: open orbit but no decomposition conclusion (U unipotent)
    Embedding u = nilpos_embedding(sl2, "sl2.u");
    Embedding bneg = borel_neg_embedding(sl2, "sl2.borelneg");
    DecompositionResult ub = is_decomposition(sl2, u, bneg, cfg);
    REQUIRE(ub.open_orbit);
    REQUIRE_FALSE(ub.conclusive);
    REQUIRE(ub.label() == "open-orbit certificate only");
}

TEST_CASE("horosphericality checks") {
    Realization sl2 = build("sl", 2);
    SamplerConfig cfg;
    REQUIRE(is_horospherical(sl2, borel_embedding(sl2, "b"), cfg).contains_max_unipotent);
    REQUIRE_FALSE(is_horospherical(sl2, cartan_embedding(sl2, "t"), cfg).contains_max_unipotent);
    // the opposite Borel contains U^-, found through the designated flip
    HorosphericalResult neg = is_horospherical(sl2, borel_neg_embedding(sl2, "bn"), cfg);
    REQUIRE(neg.contains_max_unipotent);
    REQUIRE(neg.witness == "weyl-flip");
}

TEST_CASE("diagonal complexity on sl(2)") {
    Realization sl2 = build("sl", 2);
    SamplerConfig cfg;
    ParabolicSpec pb = levi_of_parabolic(sl2, {});     // Borel as parabolic
    ParabolicSpec pg = levi_of_parabolic(sl2, {0});    // the whole group

    Embedding t = cartan_embedding(sl2, "sl2.torus");
    ComplexityResult diag = diagonal_complexity(sl2, pb, t, cfg);
    REQUIRE(diag.value == 1);  // equals c_T(SL(2)/T)

    Embedding b = borel_embedding(sl2, "sl2.borel");
    REQUIRE(diagonal_complexity(sl2, pg, b, cfg).value == 0);  // G/P a point, G/B spherical
}

TEST_CASE("monotonicity: enlarging a side never increases the codimension") {
    Realization so4 = build("so", 4);
    SamplerConfig cfg;
    REQUIRE(generic_sum_codim(so4, so4.nil_pos, so4.nil_pos, cfg).value >=
            generic_sum_codim(so4, so4.borel, so4.nil_pos, cfg).value);
    REQUIRE(generic_sum_codim(so4, so4.borel, so4.nil_pos, cfg).value >=
            generic_sum_codim(so4, so4.borel, so4.borel, cfg).value);
}

TEST_CASE("conjugation invariance of pair complexity") {
    Realization sl3 = build("sl", 3);
    SamplerConfig cfg;
    Embedding t = cartan_embedding(sl3, "sl3.torus");
    Embedding b = borel_embedding(sl3, "sl3.borel");
    size_t base = complexity_pair(sl3, t, b, cfg).value;
    SamplerConfig conj_cfg;
    conj_cfg.seed = 5150;
    for (size_t i = 0; i < 3; ++i) {
        Matrix g = sample_element(sl3, conj_cfg, i);
        REQUIRE(complexity_pair(sl3, t, b.conjugated(g), cfg).value == base);
    }
}
