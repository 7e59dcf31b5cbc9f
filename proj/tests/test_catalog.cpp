#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cxpair/catalog.hpp"
#include "cxpair/engine.hpp"

using namespace cxpair;

namespace {
Catalog& catalog() {
    static Catalog cat({10, true});
    return cat;
}
}  // namespace

TEST_CASE("catalog table shapes") {
    Catalog& cat = catalog();
    REQUIRE(cat.t1_rows().size() == 8);
    std::set<size_t> t3_rows;
    for (const auto& i : cat.t3_instances()) t3_rows.insert(i.row);
    REQUIRE(t3_rows.size() == 17);
    REQUIRE(cat.t4_instances().size() > 100);
}

TEST_CASE("ids are stable and resolvable") {
    Catalog& cat = catalog();
    for (const char* id :
         {"T4.Z.sl4-sp4", "T4.Z.sl2-torus", "T4.Z.so7-g2", "T4.O.so5-so3", "T4.O.sp4-sp2",
          "T3.1.K1@n2", "T3.14.K2", "HORO.sl2.borel", "HORO.so4.p1.min", "sl2.trivial",
          "so8.spin7", "sl3.borelneg", "sp4.torus"}) {
        INFO(id);
        REQUIRE(cat.has_embedding(id));
        REQUIRE(cat.embedding(id).id == std::string(id));
    }
    REQUIRE_FALSE(cat.has_embedding("T4.Z.nonsense"));
    REQUIRE_THROWS_AS(cat.embedding("T4.Z.nonsense"), std::invalid_argument);
}

TEST_CASE("every instantiable suite embedding validates") {
    Catalog& cat = catalog();
    for (const auto& [id, expected] : cat.t4_verification_suite()) {
        const Embedding& e = cat.embedding(id);
        const Realization& r = cat.realization(e.parent_name);
        INFO(id);
        ValidationReport rep = validate(r, e);
        for (const auto& en : rep.entries) {
            INFO(en.check << " " << en.detail);
            CHECK(en.pass);
        }
        REQUIRE(rep.all_pass());
        // designated sub-Borel sits inside the parent Borel
        REQUIRE(sum_dim(e.sub_borel, r.borel) == r.borel.dim());
    }
}

TEST_CASE("metadata-only rows have consistent dimension bookkeeping") {
    Catalog& cat = catalog();
    size_t checked = 0;
    for (const auto& i : cat.t4_instances()) {
        if (!i.metadata_only) continue;
        INFO(i.display);
        REQUIRE(i.h_type.dimension() < i.g_type.dimension());
        REQUIRE(i.h_type.unipotent_dim() <= i.g_type.unipotent_dim());
        REQUIRE(i.h_type.total_rank() <= i.g_type.total_rank());
        ++checked;
    }
    REQUIRE(checked >= 20);
    for (const auto& i : cat.t3_instances())
        if (i.metadata_only)
            REQUIRE(i.dim_k1 + i.dim_k2 - i.expected_intersection_dim == i.dim_g);
}

TEST_CASE("levi rows carry is_levi and decompose against their parabolic") {
    Catalog& cat = catalog();
    const Embedding& gl2 = cat.embedding("T4.Z.so4-gl2");
    REQUIRE(gl2.meta.is_levi);
    const Embedding& sgl = cat.embedding("T4.Z.sl4-sgl3gl1");
    REQUIRE(sgl.meta.is_levi);
    // levi + nilradical = parabolic, direct
    ParabolicSpec p = cat.parabolic("sl4", {1, 2});
    REQUIRE(sum_dim(p.levi.sub_basis, p.nilradical) == p.parabolic.dim());
    REQUIRE(intersection_dim(p.levi.sub_basis, p.nilradical) == 0);
}

TEST_CASE("symmetric tags on the candidate-table rows") {
    Catalog& cat = catalog();
    size_t symmetric = 0;
    for (const auto& row : cat.t1_rows())
        if (row.selected && row.h_symmetric) ++symmetric;
    REQUIRE(symmetric == 3);  // three of the four selected rows
    for (const auto& row : cat.t1_rows())
        if (row.no == 7) REQUIRE_FALSE(row.h_symmetric);
}

TEST_CASE("spin gating") {
    Catalog plain({10, false});
    size_t gated = 0, open = 0;
    for (const auto& i : plain.t3_instances())
        if (i.needs_spin)
            ++gated;
        else if (!i.metadata_only)
            ++open;
    REQUIRE(gated == 6);   // the six SO(8) rows
    REQUIRE(open >= 15);
    // the spin embedding itself is reachable regardless of the flag
    REQUIRE(plain.has_embedding("so8.spin7"));
}

TEST_CASE("parabolic spec parsing") {
    Catalog& cat = catalog();
    ParabolicSpec p1 = cat.parabolic_by_spec("so7:2,3");
    REQUIRE(p1.levi.meta.abstract_type == ReductiveType({SimpleType(Family::B, 2)}, 1));
    ParabolicSpec p2 = cat.parabolic_by_spec("sl2:none");
    REQUIRE(p2.parabolic.dim() == 2);
    ParabolicSpec p3 = cat.parabolic_by_spec("sl4:all");
    REQUIRE(p3.parabolic.dim() == 15);
    REQUIRE_THROWS_AS(cat.parabolic_by_spec("nocolon"), std::invalid_argument);
    REQUIRE_THROWS_AS(cat.parabolic_by_spec("sl4:0,1"), std::invalid_argument);
}

TEST_CASE("horospherical id grammar") {
    Catalog& cat = catalog();
    auto ids = cat.horo_ids("so4");
    REQUIRE(ids.size() == 8);
    for (const auto& id : ids) {
        INFO(id);
        const Embedding& e = cat.embedding(id);
        REQUIRE(e.dim() >= 2);
        // every horospherical contains the full positive nilpotent part
        const Realization& r = cat.realization("so4");
        REQUIRE(sum_dim(e.sub_basis, r.nil_pos) == e.dim());
    }
    REQUIRE_THROWS_AS(cat.embedding("HORO.so4.p9.min"), std::exception);
}

TEST_CASE("type pair enumeration matches the matrix catalog on shared ground") {
    Catalog& cat = catalog();
    auto types = cat.t4_type_pairs(8);
    REQUIRE(types.size() > 150);
    // every instantiated family instance has a matching type pair
    size_t matched = 0;
    for (const auto& inst : cat.t4_instances()) {
        if (inst.metadata_only || inst.g_type.total_rank() > 8) continue;
        bool found = false;
        for (const auto& t : types)
            if (t.family == inst.family && t.g_type == inst.g_type && t.h_type == inst.h_type)
                found = true;
        INFO(inst.id);
        REQUIRE(found);
        ++matched;
    }
    REQUIRE(matched > 100);
}
