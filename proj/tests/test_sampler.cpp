#include <catch2/catch_amalgamated.hpp>

#include "cxpair/sampler.hpp"

using namespace cxpair;

TEST_CASE("identical config gives identical samples") {
    Realization so5 = build("so", 5);
    SamplerConfig cfg;
    cfg.seed = 42;
    for (size_t i = 0; i < cfg.samples; ++i) {
        REQUIRE(sample_element(so5, cfg, i) == sample_element(so5, cfg, i));
    }
    auto [a1, b1] = sample_pair(so5, cfg, 2);
    auto [a2, b2] = sample_pair(so5, cfg, 2);
    REQUIRE(a1 == a2);
    REQUIRE(b1 == b2);
}

TEST_CASE("samples satisfy the group equations exactly") {
    SamplerConfig cfg;
    cfg.seed = 7;
    for (const auto& spec : std::vector<std::pair<std::string, size_t>>{
             {"sl", 3}, {"so", 5}, {"so", 6}, {"sp", 4}, {"gl", 3}}) {
        Realization r = build(spec.first, spec.second);
        for (size_t i = 0; i < cfg.samples; ++i) {
            Matrix g = sample_element(r, cfg, i);
            INFO(r.name << " sample " << i);
            REQUIRE(r.group_equations_hold(g));
        }
    }
}

TEST_CASE("pair components differ across 1000 seeds") {
    Realization sl2 = build("sl", 2);
    SamplerConfig cfg;
    for (uint64_t s = 0; s < 1000; ++s) {
        cfg.seed = s;
        auto [a, b] = sample_pair(sl2, cfg, 0);
        REQUIRE(a != b);
    }
}

TEST_CASE("different seeds give different samples") {
    Realization sl3 = build("sl", 3);
    SamplerConfig a, b;
    a.seed = 1;
    b.seed = 2;
    REQUIRE(sample_element(sl3, a, 0) != sample_element(sl3, b, 0));
}

TEST_CASE("out-of-budget index is an error") {
    Realization sl2 = build("sl", 2);
    SamplerConfig cfg;
    REQUIRE_THROWS_AS(sample_element(sl2, cfg, cfg.samples), std::out_of_range);
}

TEST_CASE("draws stay inside the coefficient box") {
    DrawStream d(11, 0);
    for (int k = 0; k < 500; ++k) {
        long v = d.nonzero_int(1000);
        REQUIRE(v != 0);
        REQUIRE(v >= -1000);
        REQUIRE(v <= 1000);
    }
}
