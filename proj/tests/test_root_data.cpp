#include <catch2/catch_amalgamated.hpp>

#include "cxpair/root_data.hpp"

using namespace cxpair;

TEST_CASE("dimensions of simple types") {
    REQUIRE(ReductiveType::simple(Family::A, 1).dimension() == 3);   // SL(2)
    REQUIRE(ReductiveType::simple(Family::B, 3).dimension() == 21);  // SO(7)
    REQUIRE(type_gl(2).dimension() == 4);
    REQUIRE(ReductiveType::simple(Family::G, 2).dimension() == 14);
    REQUIRE(ReductiveType::simple(Family::F, 4).dimension() == 52);
    REQUIRE(ReductiveType::simple(Family::E, 8).dimension() == 248);
}

TEST_CASE("unipotent dimensions") {
    REQUIRE(ReductiveType::simple(Family::B, 3).unipotent_dim() == 9);
    REQUIRE(ReductiveType::simple(Family::D, 2).unipotent_dim() == 2);  // SO(4)
    REQUIRE(ReductiveType::torus(5).unipotent_dim() == 0);
}

TEST_CASE("dimension minus rank is even, and unipotent dim is half of it") {
    std::vector<SimpleType> all;
    for (auto f : {Family::A, Family::B, Family::C})
        for (size_t r = 1; r <= 9; ++r) all.emplace_back(f, r);
    for (size_t r = 2; r <= 9; ++r) all.emplace_back(Family::D, r);
    for (size_t r : {6, 7, 8}) all.emplace_back(Family::E, r);
    all.emplace_back(Family::F, 4);
    all.emplace_back(Family::G, 2);
    for (const auto& t : all) {
        REQUIRE((t.dimension() - t.rank) % 2 == 0);
        REQUIRE(t.positive_roots() == (t.dimension() - t.rank) / 2);
    }
}

TEST_CASE("rank bounds are enforced") {
    REQUIRE_THROWS_AS(SimpleType(Family::D, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(SimpleType(Family::E, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(SimpleType(Family::F, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(SimpleType(Family::G, 3), std::invalid_argument);
    REQUIRE_NOTHROW(SimpleType(Family::B, 1));
}

TEST_CASE("coincidence normalization preserves invariants and is idempotent") {
    std::vector<ReductiveType> cases = {
        ReductiveType::simple(Family::B, 1),  ReductiveType::simple(Family::C, 1),
        ReductiveType::simple(Family::C, 2),  ReductiveType::simple(Family::D, 3),
        ReductiveType::simple(Family::D, 2),  type_gl(3),
        ReductiveType({SimpleType(Family::D, 2), SimpleType(Family::C, 1)}, 2),
    };
    for (const auto& t : cases) {
        ReductiveType n = coincidence_normalize(t);
        REQUIRE(n.dimension() == t.dimension());
        REQUIRE(n.unipotent_dim() == t.unipotent_dim());
        REQUIRE(n.total_rank() == t.total_rank());
        REQUIRE(coincidence_normalize(n) == n);
    }
    REQUIRE(coincidence_normalize(ReductiveType::simple(Family::B, 1)) ==
            ReductiveType::simple(Family::A, 1));
    REQUIRE(coincidence_normalize(ReductiveType::simple(Family::D, 2)) ==
            ReductiveType({SimpleType(Family::A, 1), SimpleType(Family::A, 1)}, 0));
}

TEST_CASE("theorem A filter on the named pairs") {
    // (SO(4), GL(2)): unipotent dims 2 vs 1, semisimple ranks 2 vs 1
    REQUIRE(theorem_a_filter(type_so(4), type_gl(2)));
    // (SO(7), G2): unipotent dims 9 vs 6
    REQUIRE_FALSE(theorem_a_filter(type_so(7), ReductiveType::simple(Family::G, 2)));
    // (SL(2), {e})
    REQUIRE(theorem_a_filter(type_sl(2), ReductiveType::trivial()));
    // (SO(4), SO(3)) and (SO(3), SO(2))
    REQUIRE(theorem_a_filter(type_so(4), type_so(3)));
    REQUIRE(theorem_a_filter(type_so(3), type_so(2)));
    // negatives
    REQUIRE_FALSE(theorem_a_filter(type_sp(4), type_sp(2)));
    REQUIRE_FALSE(theorem_a_filter(type_so(5), type_so(3)));
}

TEST_CASE("theorem A filter is invariant under coincidence replacement") {
    std::vector<std::pair<ReductiveType, ReductiveType>> pairs = {
        {type_so(4), type_gl(2)},
        {type_so(3), type_so(2)},
        {type_sp(2), ReductiveType::trivial()},
        {type_sp(4), type_sp(2)},
        {type_so(7), ReductiveType::simple(Family::G, 2)},
    };
    for (const auto& [g, h] : pairs) {
        bool direct = theorem_a_filter(g, h);
        bool normalized = theorem_a_filter(coincidence_normalize(g), coincidence_normalize(h));
        REQUIRE(direct == normalized);
    }
}
