#include <catch2/catch_amalgamated.hpp>

#include "cxpair/report.hpp"

using namespace cxpair;

namespace {
Catalog& catalog() {
    static Catalog cat({10, false});
    return cat;
}
}  // namespace

TEST_CASE("config json carries every field") {
    RunConfig cfg;
    ordered_json j = report::config_json(cfg);
    for (const char* key : {"seed", "samples", "coeff_bound", "max_rank", "max_param",
                            "enable_spin", "output_format", "expect_paper"})
        REQUIRE(j.contains(key));
}

TEST_CASE("result json schema") {
    Catalog& cat = catalog();
    const Embedding& h = cat.embedding("T4.Z.sl4-sp4");
    const Realization& r = cat.realization("sl4");
    SamplerConfig cfg;
    ComplexityResult res = complexity_homspace(r, h, cfg);
    ordered_json j = report::result_json({"T4.Z.sl4-sp4"}, res);
    for (const char* key :
         {"ids", "value", "max_orbit_dim", "ambient_dim", "samples_used", "witnesses"})
        REQUIRE(j.contains(key));
    REQUIRE(j["value"] == 0);
}

TEST_CASE("identical inputs give byte-identical serialized reports") {
    Catalog& cat = catalog();
    ClaimsHarness h(cat, SamplerConfig{});
    std::string a = report::claim_json(h.run_claim("C2")).dump(2);
    std::string b = report::claim_json(h.run_claim("C2")).dump(2);
    REQUIRE(a == b);

    std::string ta1 = report::theorem_a_json(h.reproduce_theorem_a(8)).dump(2);
    std::string ta2 = report::theorem_a_json(h.reproduce_theorem_a(8)).dump(2);
    REQUIRE(ta1 == ta2);
}

TEST_CASE("markdown table mirrors the candidate rows") {
    Catalog& cat = catalog();
    ClaimsHarness h(cat, SamplerConfig{});
    Table1Report rep = h.reproduce_table1(2);
    std::string md = report::table1_markdown(rep, cat);
    for (const char* needle : {"| no. |", "| 1. |", "| 8. |", "Sp(2n)", "G2", "selected rows"})
        REQUIRE(md.find(needle) != std::string::npos);
}

TEST_CASE("claim json records mode, title and instances") {
    Catalog& cat = catalog();
    ClaimsHarness h(cat, SamplerConfig{});
    ordered_json j = report::claim_json(h.run_claim("C9"));
    REQUIRE(j["mode"] == "asserted");
    REQUIRE(j["passed"] == true);
    REQUIRE(j["instances"].is_array());
    REQUIRE_FALSE(j["instances"].empty());
    for (const auto& inst : j["instances"]) {
        REQUIRE(inst.contains("status"));
        REQUIRE(inst.contains("replay"));
    }
}
