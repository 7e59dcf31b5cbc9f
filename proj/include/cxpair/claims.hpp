#pragma once

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cxpair/catalog.hpp"
#include "cxpair/engine.hpp"

namespace cxpair {

using ordered_json = nlohmann::ordered_json;

/// One evaluated instance of a claim: enough data to replay the computation
/// (catalog ids + sampler config) plus computed-versus-expected outcomes.
struct InstanceRecord {
    std::string instance;
    std::string computed;
    std::string expected;
    std::string status;  // "PASS" | "FAIL" | "REPORTED"
    ordered_json replay = ordered_json::object();
};

/// Asserted claims gate verification; reported claims never fail the run,
/// they carry computed witnesses for statements whose scope exceeds what a
/// finite instance set can certify.
struct ClaimReport {
    std::string id;
    std::string title;
    std::string mode;  // "asserted" | "reported"
    std::vector<InstanceRecord> instances;
    uint64_t seed = 0;
    size_t samples = 0;

    bool passed() const {
        if (mode != "asserted") return true;
        for (const auto& r : instances)
            if (r.status == "FAIL") return false;
        return true;
    }
};

struct TheoremAReport {
    size_t max_rank = 0;
    struct Candidate {
        std::string display;
        int column;
        size_t ambient_rank;
        bool filter_pass;
    };
    std::vector<Candidate> candidates;
    std::vector<std::string> survivors;  // canonical pair names after normalization
    struct Verification {
        std::string pair_display;
        std::string g1_id, g2_id;
        size_t complexity;
        bool asserted;  // part of the acceptance contract
        bool pass;      // complexity == 1
        ordered_json replay;
    };
    std::vector<Verification> verifications;
    struct HoroRecord {
        std::string pair_display;
        std::string g1_id, horo_id;
        size_t complexity;
    };
    std::vector<HoroRecord> horo_sweep;  // reported, cases with a full torus in G1
    bool list_matches_expected = false;
    bool prefilter_rank_bound_holds = false;
};

struct Table1Report {
    size_t max_param = 0;
    struct SourceRow {
        size_t t3_row;
        std::string display;
        bool k1_tag, k2_tag;
        bool enters_t1;
        std::string note;
        struct Confirm {
            std::string parent;
            bool decomposition;
            int k1_spherical = -1;  // -1 unknown (no model), else 0/1
            int k2_spherical = -1;
            std::string note;
        };
        std::vector<Confirm> confirms;
    };
    std::vector<SourceRow> sources;
    std::vector<size_t> recovered_rows;  // T1 numbers found from metadata
    struct Selection {
        size_t t1_no;
        std::string k_desc;
        bool k_is_levi;
        bool k_spherical;
        bool selected;
        bool h_symmetric;
    };
    std::vector<Selection> selection;
    std::vector<size_t> selected_rows;
    struct Verify {
        size_t t1_no;
        std::string parent;
        std::string h_id;
        size_t diag_value = 0;
        size_t cross_value = 0;
        bool equivalence_holds = false;
        bool pass = false;
        ordered_json replay;
    };
    std::vector<Verify> verifications;
    bool rows_match_expected = false;
    bool selection_matches_expected = false;
};

// ---------------------------------------------------------------------------

class ClaimsHarness {
  public:
    ClaimsHarness(const Catalog& cat, SamplerConfig cfg) : cat_(cat), cfg_(cfg) {}

    static const std::vector<std::string>& all_ids() {
        static std::vector<std::string> ids = {"C1", "C2",  "C3",  "C4",  "C5",
                                               "C6", "C7",  "C8",  "C9",  "C10",
                                               "C11", "C12", "C13", "C14", "C15"};
        return ids;
    }

    std::vector<ClaimReport> run_claims(const std::vector<std::string>& ids) const {
        std::vector<ClaimReport> out;
        for (const auto& id : ids) out.push_back(run_claim(id));
        return out;
    }

    ClaimReport run_claim(const std::string& id) const;

    TheoremAReport reproduce_theorem_a(size_t max_rank) const;
    Table1Report reproduce_table1(size_t max_param) const;

  private:
    const Catalog& cat_;
    SamplerConfig cfg_;

    const Realization& real_of(const Embedding& e) const {
        return cat_.realization(e.parent_name);
    }

    ordered_json replay_of(const std::vector<std::string>& ids, const ComplexityResult& r) const {
        ordered_json j;
        j["ids"] = ids;
        j["seed"] = cfg_.seed;
        j["samples"] = cfg_.samples;
        j["samples_used"] = r.samples_used;
        j["value"] = r.value;
        j["max_orbit_dim"] = r.max_orbit_dim;
        j["ambient_dim"] = r.ambient_dim;
        j["witnesses"] = r.witnesses;
        return j;
    }

    size_t pair_value(const std::string& id1, const std::string& id2) const {
        const Embedding& a = cat_.embedding(id1);
        const Embedding& b = cat_.embedding(id2);
        return complexity_pair(real_of(a), a, b, cfg_).value;
    }
    size_t homspace_value(const std::string& id) const {
        const Embedding& h = cat_.embedding(id);
        return complexity_homspace(real_of(h), h, cfg_).value;
    }

    static std::string canonical_pair_name(const ReductiveType& g, const ReductiveType& h);

    ClaimReport c1() const, c2() const, c3() const, c4() const, c5() const, c6() const,
        c7() const, c8() const, c9() const, c10() const, c11() const, c12() const, c13() const,
        c14() const, c15() const;
};

inline ClaimReport ClaimsHarness::run_claim(const std::string& id) const {
    if (id == "C1") return c1();
    if (id == "C2") return c2();
    if (id == "C3") return c3();
    if (id == "C4") return c4();
    if (id == "C5") return c5();
    if (id == "C6") return c6();
    if (id == "C7") return c7();
    if (id == "C8") return c8();
    if (id == "C9") return c9();
    if (id == "C10") return c10();
    if (id == "C11") return c11();
    if (id == "C12") return c12();
    if (id == "C13") return c13();
    if (id == "C14") return c14();
    if (id == "C15") return c15();
    throw std::invalid_argument("unknown claim id: " + id);
}

// --- canonical naming of normalized classification pairs -------------------

inline std::string ClaimsHarness::canonical_pair_name(const ReductiveType& g,
                                                      const ReductiveType& h) {
    ReductiveType gn = coincidence_normalize(g), hn = coincidence_normalize(h);
    auto is_a1 = [](const ReductiveType& t) {
        return t.simple_factors.size() == 1 && t.simple_factors[0] == SimpleType(Family::A, 1) &&
               t.central_torus_rank == 0;
    };
    auto is_a1a1 = [](const ReductiveType& t) {
        return t.simple_factors.size() == 2 && t.simple_factors[0] == SimpleType(Family::A, 1) &&
               t.simple_factors[1] == SimpleType(Family::A, 1) && t.central_torus_rank == 0;
    };
    if (is_a1(gn)) {
        if (hn.is_trivial()) return "(SL(2),{e})";
        if (hn == ReductiveType::torus(1)) return "(SO(3),SO(2))";
    }
    if (is_a1a1(gn)) {
        if (is_a1(hn)) return "(SO(4),SO(3))";
        if (hn.simple_factors.size() == 1 && hn.simple_factors[0] == SimpleType(Family::A, 1) &&
            hn.central_torus_rank == 1)
            return "(SO(4),GL(2))";
    }
    return "(" + gn.str() + ", " + hn.str() + ")";
}

// --- the claims -------------------------------------------------------------

inline ClaimReport ClaimsHarness::c1() const {
    ClaimReport rep{"C1", "a spherical pair has spherical homogeneous spaces on both sides",
                    "reported", {}, cfg_.seed, cfg_.samples};
    struct Case {
        std::string g1, g2;
    };
    for (const Case& c : {Case{"T4.Z.sl4-sp4", "sl4.borel"}, Case{"sl2.u", "sl2.borelneg"},
                          Case{"sl2.torus", "HORO.sl2.borel"}, Case{"sl2.u", "sl2.u"}}) {
        const Embedding& a = cat_.embedding(c.g1);
        const Embedding& b = cat_.embedding(c.g2);
        const Realization& r = real_of(a);
        ComplexityResult pr = complexity_pair(r, a, b, cfg_);
        InstanceRecord rec;
        rec.instance = "(" + c.g1 + ", " + c.g2 + ")";
        rec.replay = replay_of({c.g1, c.g2}, pr);
        if (pr.value != 0) {
            rec.computed = "pair complexity " + std::to_string(pr.value);
            rec.expected = "hypothesis not met; implication vacuous";
            rec.status = "REPORTED";
        } else {
            size_t h1 = complexity_homspace(r, a, cfg_).value;
            size_t h2 = complexity_homspace(r, b, cfg_).value;
            rec.computed = "pair 0; c(G/G1) = " + std::to_string(h1) +
                           ", c(G/G2) = " + std::to_string(h2);
            rec.expected = "both homogeneous-space complexities 0";
            rec.status = "REPORTED";
            rec.replay["homspace_values"] = {h1, h2};
        }
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c2() const {
    ClaimReport rep{"C2",
                    "the maximal unipotent subgroup is spherical, yet the (U,U) pair is not",
                    "asserted", {}, cfg_.seed, cfg_.samples};
    struct Case {
        std::string real;
        size_t expected_pair;
    };
    for (const Case& c : {Case{"sl2", 1}, Case{"sl3", 2}}) {
        const Embedding& u = cat_.embedding(c.real + ".u");
        const Realization& r = real_of(u);
        size_t sph = complexity_homspace(r, u, cfg_).value;
        ComplexityResult pr = complexity_pair(r, u, u, cfg_);
        InstanceRecord rec;
        rec.instance = c.real + ": U spherical, (U,U) not";
        rec.computed = "c(G/U) = " + std::to_string(sph) + ", pair = " + std::to_string(pr.value);
        rec.expected = "c(G/U) = 0, pair = " + std::to_string(c.expected_pair);
        rec.status = (sph == 0 && pr.value == c.expected_pair) ? "PASS" : "FAIL";
        rec.replay = replay_of({c.real + ".u", c.real + ".u"}, pr);
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c3() const {
    ClaimReport rep{"C3", "pair complexity is invariant under conjugating either side",
                    "asserted", {}, cfg_.seed, cfg_.samples};
    struct Case {
        std::string g1, g2;
    };
    for (const Case& c : {Case{"T4.Z.so4-gl2", "HORO.so4.borel"},
                          Case{"T4.Z.sl4-sp4", "T3.1.K2@n2"}, Case{"sl2.torus", "sl2.borel"}}) {
        const Embedding& a = cat_.embedding(c.g1);
        const Embedding& b = cat_.embedding(c.g2);
        const Realization& r = real_of(a);
        size_t base = complexity_pair(r, a, b, cfg_).value;
        SamplerConfig conj_cfg = cfg_;
        conj_cfg.seed = cfg_.seed ^ 0x5eedULL;
        bool ok = true;
        std::vector<size_t> values;
        for (size_t i = 0; i < 3 && i < conj_cfg.samples; ++i) {
            Matrix g = sample_element(r, conj_cfg, i);
            size_t v = complexity_pair(r, a, b.conjugated(g), cfg_).value;
            values.push_back(v);
            ok &= (v == base);
        }
        InstanceRecord rec;
        rec.instance = "(" + c.g1 + ", Ad(g)." + c.g2 + ")";
        rec.computed = "base " + std::to_string(base);
        rec.expected = "all conjugated values equal the base";
        rec.status = ok ? "PASS" : "FAIL";
        rec.replay["ids"] = {c.g1, c.g2};
        rec.replay["seed"] = cfg_.seed;
        rec.replay["conjugation_seed"] = conj_cfg.seed;
        rec.replay["values"] = values;
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c4() const {
    ClaimReport rep{"C4",
                    "with a Borel-containing partner, pair sphericality tracks subgroup "
                    "sphericality",
                    "reported", {}, cfg_.seed, cfg_.samples};
    struct Case {
        std::string h;
        std::string partner;
    };
    for (const Case& c :
         {Case{"sl2.torus", "HORO.sl2.borel"}, Case{"sl2.u", "HORO.sl2.borel"},
          Case{"sl2.trivial", "HORO.sl2.borel"}, Case{"T4.Z.so4-gl2", "HORO.so4.borel"},
          Case{"T4.Z.sl4-sp4", "HORO.sl4.p23.full"}}) {
        const Embedding& h = cat_.embedding(c.h);
        const Embedding& b = cat_.embedding(c.partner);
        const Realization& r = real_of(h);
        size_t sph = complexity_homspace(r, h, cfg_).value;
        ComplexityResult pr = complexity_pair(r, h, b, cfg_);
        bool equiv = (sph == 0) == (pr.value == 0);
        InstanceRecord rec;
        rec.instance = "(" + c.h + ", " + c.partner + ")";
        rec.computed = "c(G/H) = " + std::to_string(sph) + ", pair = " + std::to_string(pr.value) +
                       (equiv ? "; equivalent" : "; NOT equivalent");
        rec.expected = "pair spherical iff H spherical";
        rec.status = "REPORTED";
        rec.replay = replay_of({c.h, c.partner}, pr);
        rec.replay["homspace_value"] = sph;
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c5() const {
    ClaimReport rep{"C5",
                    "a decomposing spherical pair has spherical intersection quotients",
                    "reported", {}, cfg_.seed, cfg_.samples};
    struct Case {
        std::string g1, g2;
    };
    for (const Case& c : {Case{"sl4.full", "T4.Z.sl4-sp4"}, Case{"T4.Z.sl4-sp4", "HORO.sl4.p23.full"}}) {
        const Embedding& a = cat_.embedding(c.g1);
        const Embedding& b = cat_.embedding(c.g2);
        const Realization& r = real_of(a);
        ComplexityResult pr = complexity_pair(r, a, b, cfg_);
        DecompositionResult dec = is_decomposition(r, a, b, cfg_);
        InstanceRecord rec;
        rec.instance = "(" + c.g1 + ", " + c.g2 + ")";
        rec.replay = replay_of({c.g1, c.g2}, pr);
        if (pr.value != 0 || !dec.open_orbit) {
            rec.computed = "pair " + std::to_string(pr.value) + "; " + dec.label();
            rec.expected = "hypotheses not met; implication vacuous";
            rec.status = "REPORTED";
        } else {
            // intersection subalgebra and the quotient complexities inside each factor
            Subspace meet = intersection(a.sub_basis, b.sub_basis);
            auto inside = [&](const Embedding& amb) {
                size_t dim_amb = amb.sub_basis.dim();
                size_t cap = std::min(dim_amb, amb.sub_borel.dim() + meet.dim());
                size_t best = 0;
                for (size_t i = 0; i < cfg_.samples; ++i) {
                    Matrix g = sample_from_frame(amb.frame(), cfg_, 7000 + i);
                    Matrix gi = inverse(g);
                    Subspace xg = detail::conjugate_space(gi, g, amb.sub_borel, r.ambient_size);
                    best = std::max(best, sum_dim(xg, meet));
                    if (best == cap) break;
                }
                return dim_amb - best;
            };
            size_t c1v = inside(a), c2v = inside(b);
            rec.computed = "pair 0; decomposition; c(G1/(G1 cap G2)) = " + std::to_string(c1v) +
                           ", c(G2/(G1 cap G2)) = " + std::to_string(c2v);
            rec.expected = "both quotient complexities 0";
            rec.status = "REPORTED";
            rec.replay["intersection_dim"] = meet.dim();
            rec.replay["quotient_values"] = {c1v, c2v};
        }
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c6() const {
    ClaimReport rep{"C6", "no nontrivial reductive pair has complexity zero or one",
                    "reported", {}, cfg_.seed, cfg_.samples};
    struct Case {
        std::string g1, g2;
    };
    for (const Case& c : {Case{"sl2.torus", "sl2.torus"}, Case{"T4.Z.sl4-sp4", "T3.1.K2@n2"},
                          Case{"T4.Z.so4-gl2", "T4.Z.so4-so3"}}) {
        const Embedding& a = cat_.embedding(c.g1);
        const Embedding& b = cat_.embedding(c.g2);
        const Realization& r = real_of(a);
        ComplexityResult pr = complexity_pair(r, a, b, cfg_);
        InstanceRecord rec;
        rec.instance = "(" + c.g1 + ", " + c.g2 + ")";
        rec.computed = "pair complexity " + std::to_string(pr.value);
        rec.expected = "reductive pairs should have complexity >= 2";
        rec.status = "REPORTED";
        rec.replay = replay_of({c.g1, c.g2}, pr);
        if (pr.value <= 1) rec.computed += "; contradicts the expected bound";
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c7() const {
    ClaimReport rep{"C7",
                    "in a spherical pair, horosphericality on one side forces it on the other",
                    "reported", {}, cfg_.seed, cfg_.samples};
    struct Case {
        std::string g1, g2;
    };
    for (const Case& c : {Case{"sl2.u", "sl2.borelneg"}, Case{"sl2.torus", "HORO.sl2.borel"},
                          Case{"sl2.borel", "sl2.borel"}}) {
        const Embedding& a = cat_.embedding(c.g1);
        const Embedding& b = cat_.embedding(c.g2);
        const Realization& r = real_of(a);
        ComplexityResult pr = complexity_pair(r, a, b, cfg_);
        InstanceRecord rec;
        rec.instance = "(" + c.g1 + ", " + c.g2 + ")";
        rec.replay = replay_of({c.g1, c.g2}, pr);
        if (pr.value != 0) {
            rec.computed = "pair " + std::to_string(pr.value) + "; hypothesis not met";
            rec.expected = "vacuous";
            rec.status = "REPORTED";
        } else {
            HorosphericalResult h1 = is_horospherical(r, a, cfg_);
            HorosphericalResult h2 = is_horospherical(r, b, cfg_);
            bool iff = h1.contains_max_unipotent == h2.contains_max_unipotent;
            rec.computed = "pair 0; G1 " + h1.label() + "; G2 " + h2.label() +
                           (iff ? "; equivalence holds" : "; equivalence FAILS on this instance");
            rec.expected = "one side horospherical iff the other is";
            rec.status = "REPORTED";
        }
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c8() const {
    ClaimReport rep{"C8", "no half-reductive pair has complexity zero", "reported", {},
                    cfg_.seed, cfg_.samples};
    struct Case {
        std::string g1, g2;
        bool half;
    };
    for (const Case& c : {Case{"sl2.torus", "HORO.sl2.borel", true},
                          Case{"T4.Z.so4-gl2", "HORO.so4.borel", true},
                          Case{"T4.Z.so3-so2", "HORO.so3.u", true}}) {
        const Embedding& a = cat_.embedding(c.g1);
        const Embedding& b = cat_.embedding(c.g2);
        const Realization& r = real_of(a);
        ComplexityResult pr = complexity_pair(r, a, b, cfg_);
        InstanceRecord rec;
        rec.instance = "(" + c.g1 + ", " + c.g2 + ")";
        rec.computed = "pair complexity " + std::to_string(pr.value) +
                       (pr.value == 0 ? "; a half-reductive pair of complexity zero" : "");
        rec.expected = "half-reductive pairs should not reach complexity zero";
        rec.status = "REPORTED";
        rec.replay = replay_of({c.g1, c.g2}, pr);
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c9() const {
    ClaimReport rep{"C9",
                    "flag-side subgroup complexity bounds the homogeneous-space complexity",
                    "asserted", {}, cfg_.seed, cfg_.samples};
    for (const std::string& hid :
         {std::string("T4.Z.sl4-sp4"), std::string("T4.Z.so7-g2"), std::string("T4.O.so5-so3"),
          std::string("sl2.torus"), std::string("T4.Z.so4-gl2"), std::string("T4.O.sp4-sp2")}) {
        const Embedding& h = cat_.embedding(hid);
        const Realization& r = real_of(h);
        ComplexityResult flag = generic_sum_codim(r, h.sub_borel, r.borel, cfg_);
        size_t i = flag.value;
        size_t hom = complexity_homspace(r, h, cfg_).value;
        InstanceRecord rec;
        rec.instance = hid;
        rec.computed = "c_H(G/B) = " + std::to_string(i) + ", c_G(G/H) = " + std::to_string(hom);
        if (i <= 1) {
            rec.expected = "c_G(G/H) <= " + std::to_string(i);
            rec.status = hom <= i ? "PASS" : "FAIL";
        } else {
            rec.expected = "bound applies only for values 0 and 1; instance recorded";
            rec.status = "PASS";
        }
        rec.replay = replay_of({hid}, flag);
        rec.replay["homspace_value"] = hom;
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c10() const {
    ClaimReport rep{"C10",
                    "for pairs of complexity at most one the homogeneous-space complexities sum "
                    "to at most one",
                    "asserted", {}, cfg_.seed, cfg_.samples};
    struct Case {
        std::string g1, g2;
    };
    for (const Case& c :
         {Case{"T4.Z.so4-gl2", "HORO.so4.borel"}, Case{"T4.Z.so4-so3", "HORO.so4.p1.min"},
          Case{"T4.Z.so3-so2", "HORO.so3.u"}, Case{"sl2.trivial", "HORO.sl2.borel"},
          Case{"sl2.torus", "sl2.torus"}, Case{"sl2.torus", "HORO.sl2.borel"},
          Case{"sl2.u", "sl2.borelneg"}}) {
        const Embedding& a = cat_.embedding(c.g1);
        const Embedding& b = cat_.embedding(c.g2);
        const Realization& r = real_of(a);
        ComplexityResult pr = complexity_pair(r, a, b, cfg_);
        InstanceRecord rec;
        rec.instance = "(" + c.g1 + ", " + c.g2 + ")";
        rec.replay = replay_of({c.g1, c.g2}, pr);
        if (pr.value > 1) {
            rec.computed = "pair " + std::to_string(pr.value);
            rec.expected = "bound applies to complexity <= 1 pairs; instance recorded";
            rec.status = "PASS";
        } else {
            size_t h1 = complexity_homspace(r, a, cfg_).value;
            size_t h2 = complexity_homspace(r, b, cfg_).value;
            rec.computed = "pair " + std::to_string(pr.value) + "; sum " +
                           std::to_string(h1 + h2);
            rec.expected = "c(G/G1) + c(G/G2) <= 1";
            rec.status = (h1 + h2 <= 1) ? "PASS" : "FAIL";
            rec.replay["homspace_values"] = {h1, h2};
        }
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c11() const {
    ClaimReport rep{"C11", "rank-bounded classification of half-reductive complexity-one pairs",
                    "reported", {}, cfg_.seed, cfg_.samples};
    TheoremAReport ta = reproduce_theorem_a(8);
    {
        InstanceRecord rec;
        rec.instance = "classification pipeline at ambient rank <= 8";
        std::string names;
        for (const auto& s : ta.survivors) names += (names.empty() ? "" : ", ") + s;
        rec.computed = "survivors: " + names;
        rec.expected = "(SO(4),GL(2)), (SO(4),SO(3)), (SO(3),SO(2)), (SL(2),{e})";
        rec.status = "REPORTED";
        rec.replay["survivors"] = ta.survivors;
        rec.replay["list_matches"] = ta.list_matches_expected;
        rep.instances.push_back(std::move(rec));
    }
    for (const auto& h : ta.horo_sweep) {
        InstanceRecord rec;
        rec.instance = h.pair_display + " with " + h.horo_id;
        rec.computed = "pair complexity " + std::to_string(h.complexity);
        rec.expected = "any horospherical partner keeps complexity one (recorded, not asserted)";
        rec.status = "REPORTED";
        rec.replay["ids"] = {h.g1_id, h.horo_id};
        rec.replay["seed"] = cfg_.seed;
        rec.replay["value"] = h.complexity;
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c12() const {
    ClaimReport rep{"C12", "spherical diagonal actions on flag-times-affine products",
                    "reported", {}, cfg_.seed, cfg_.samples};
    Table1Report tb = reproduce_table1(4);
    InstanceRecord rec;
    rec.instance = "candidate-row recovery and Levi selection";
    std::string sel;
    for (size_t s : tb.selected_rows) sel += (sel.empty() ? "" : ",") + std::to_string(s);
    rec.computed = "recovered " + std::to_string(tb.recovered_rows.size()) +
                   " candidate rows; selected {" + sel + "}";
    rec.expected = "8 candidate rows; selection {2,4,5,7}";
    rec.status = "REPORTED";
    rec.replay["recovered_rows"] = tb.recovered_rows;
    rec.replay["selected_rows"] = tb.selected_rows;
    rep.instances.push_back(std::move(rec));
    for (const auto& v : tb.verifications) {
        InstanceRecord r2;
        r2.instance = "row " + std::to_string(v.t1_no) + " in " + v.parent;
        r2.computed = "diagonal " + std::to_string(v.diag_value) + ", Levi-side " +
                      std::to_string(v.cross_value);
        r2.expected = "both zero and equivalent";
        r2.status = "REPORTED";
        r2.replay = v.replay;
        rep.instances.push_back(std::move(r2));
    }
    for (const auto& s : tb.sources)
        for (const auto& c : s.confirms)
            if (!c.note.empty()) {
                InstanceRecord r3;
                r3.instance = "source row " + std::to_string(s.t3_row) + " in " + c.parent;
                r3.computed = std::string("decomposition ") + (c.decomposition ? "true" : "false") +
                              "; factor sphericality " + std::to_string(c.k1_spherical) + "/" +
                              std::to_string(c.k2_spherical);
                r3.expected = c.note;
                r3.status = "REPORTED";
                rep.instances.push_back(std::move(r3));
            }
    return rep;
}

inline ClaimReport ClaimsHarness::c13() const {
    ClaimReport rep{"C13", "decomposition certificates for the product table", "asserted", {},
                    cfg_.seed, cfg_.samples};
    for (const auto& inst : cat_.t3_instances()) {
        if (inst.metadata_only) {
            // dimension bookkeeping is the only machine check for these rows
            bool dims_ok = inst.dim_k1 + inst.dim_k2 - inst.expected_intersection_dim ==
                           inst.dim_g;
            InstanceRecord rec;
            rec.instance = "row " + std::to_string(inst.row) + ": " + inst.display;
            rec.computed = "catalog data; dim bookkeeping " +
                           std::string(dims_ok ? "consistent" : "INCONSISTENT");
            rec.expected = inst.note;
            rec.status = dims_ok ? "PASS" : "FAIL";
            rep.instances.push_back(std::move(rec));
            continue;
        }
        if (inst.needs_spin && !cat_.options().enable_spin) {
            InstanceRecord rec;
            rec.instance = "row " + std::to_string(inst.row) + ": " + inst.display;
            rec.computed = "skipped (spin rows disabled)";
            rec.expected = "enable the spin rows to evaluate";
            rec.status = "PASS";
            rep.instances.push_back(std::move(rec));
            continue;
        }
        const Embedding& k1 = cat_.embedding(inst.id_k1);
        const Embedding& k2 = cat_.embedding(inst.id_k2);
        const Realization& r = cat_.realization(inst.parent);
        DecompositionResult dec = is_decomposition(r, k1, k2, cfg_);
        size_t meet = intersection_dim(k1.sub_basis, k2.sub_basis);
        InstanceRecord rec;
        rec.instance = "row " + std::to_string(inst.row) + ": " + inst.display;
        rec.computed = dec.label() + "; intersection dim " + std::to_string(meet);
        rec.expected = "decomposition; intersection " + inst.intersection_display + " (dim " +
                       std::to_string(inst.expected_intersection_dim) + ")";
        bool ok = dec.open_orbit && dec.conclusive &&
                  meet == inst.expected_intersection_dim;
        rec.status = ok ? "PASS" : "FAIL";
        rec.replay = replay_of({inst.id_k1, inst.id_k2}, dec.details);
        rec.replay["intersection_dim"] = meet;
        rep.instances.push_back(std::move(rec));
    }
    // negative control: two copies of the maximal torus never decompose SL(2)
    {
        const Embedding& t = cat_.embedding("sl2.torus");
        const Realization& r = real_of(t);
        DecompositionResult dec = is_decomposition(r, t, t, cfg_);
        InstanceRecord rec;
        rec.instance = "negative control: (torus, torus) in sl2";
        rec.computed = dec.label();
        rec.expected = "no decomposition";
        rec.status = (!dec.open_orbit && dec.conclusive) ? "PASS" : "FAIL";
        rec.replay = replay_of({"sl2.torus", "sl2.torus"}, dec.details);
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c14() const {
    ClaimReport rep{"C14", "complexity values for the subgroup table", "asserted", {},
                    cfg_.seed, cfg_.samples};
    for (const auto& [id, expected] : cat_.t4_verification_suite()) {
        const Embedding& h = cat_.embedding(id);
        const Realization& r = real_of(h);
        ComplexityResult res = complexity_homspace(r, h, cfg_);
        InstanceRecord rec;
        rec.instance = id;
        rec.computed = std::to_string(res.value);
        rec.expected = std::to_string(expected);
        rec.status = res.value == expected ? "PASS" : "FAIL";
        rec.replay = replay_of({id}, res);
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

inline ClaimReport ClaimsHarness::c15() const {
    ClaimReport rep{"C15",
                    "diagonal sphericality equals Levi-side sphericality of the affine factor",
                    "asserted", {}, cfg_.seed, cfg_.samples};
    struct Case {
        std::string parent;
        std::vector<size_t> subset;
        std::string h;
    };
    std::vector<Case> cases = {
        {"sl2", {}, "sl2.torus"},
        {"sl4", {1, 2}, "T4.Z.sl4-sp4"},
        {"so7", {1, 2}, "T4.Z.so7-g2"},
        {"so5", {1}, "T4.O.so5-so3"},
    };
    for (const auto& c : cases) {
        const Realization& r = cat_.realization(c.parent);
        ParabolicSpec p = cat_.parabolic(c.parent, c.subset);
        const Embedding& h = cat_.embedding(c.h);
        ComplexityResult diag = diagonal_complexity(r, p, h, cfg_);
        ComplexityResult cross = generic_sum_codim(r, p.levi.sub_borel, h.sub_basis, cfg_);
        bool equiv = (diag.value == 0) == (cross.value == 0);
        InstanceRecord rec;
        rec.instance = c.parent + " with Levi " + p.levi.meta.abstract_type.str() + " and " + c.h;
        rec.computed = "diagonal " + std::to_string(diag.value) + ", Levi-side " +
                       std::to_string(cross.value);
        rec.expected = "zero on one side iff zero on the other";
        rec.status = equiv ? "PASS" : "FAIL";
        rec.replay = replay_of({c.h}, diag);
        rec.replay["levi_side_value"] = cross.value;
        rep.instances.push_back(std::move(rec));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// classification pipelines
// ---------------------------------------------------------------------------

inline TheoremAReport ClaimsHarness::reproduce_theorem_a(size_t max_rank) const {
    TheoremAReport rep;
    rep.max_rank = max_rank;
    auto pairs = cat_.t4_type_pairs(max_rank);
    std::set<std::string> survivor_names;
    bool rank_bound = true;
    for (const auto& p : pairs) {
        bool pass = theorem_a_filter(p.g_type, p.h_type);
        rep.candidates.push_back({p.display, p.column, p.g_type.total_rank(), pass});
        if (pass) {
            survivor_names.insert(canonical_pair_name(p.g_type, p.h_type));
            if (p.g_type.total_rank() > 2) rank_bound = false;
        }
    }
    rep.prefilter_rank_bound_holds = rank_bound;
    rep.survivors.assign(survivor_names.begin(), survivor_names.end());
    std::set<std::string> expected = {"(SO(4),GL(2))", "(SO(4),SO(3))", "(SO(3),SO(2))",
                                      "(SL(2),{e})"};
    rep.list_matches_expected = survivor_names == expected;

    // numeric complexity of each surviving pair with its designated partner;
    // the asserted choices take the maximal unipotent subgroup where the
    // theorem allows any horospherical partner, the Borel for the trivial
    // subgroup, and the nilradical-plus-commutator group for the third case.
    // The second listed option there is evaluated and recorded unasserted.
    struct V {
        std::string display, g1, g2;
        bool asserted;
    };
    std::vector<V> checks = {
        {"(SO(4),GL(2))", "T4.Z.so4-gl2", "HORO.so4.u", true},
        {"(SO(4),SO(3))", "T4.Z.so4-so3", "HORO.so4.p1.min", true},
        {"(SO(4),SO(3))", "T4.Z.so4-so3", "HORO.so4.p1.full", false},
        {"(SO(3),SO(2))", "T4.Z.so3-so2", "HORO.so3.u", true},
        {"(SL(2),{e})", "sl2.trivial", "HORO.sl2.borel", true},
    };
    for (const auto& v : checks) {
        const Embedding& a = cat_.embedding(v.g1);
        const Embedding& b = cat_.embedding(v.g2);
        const Realization& r = real_of(a);
        ComplexityResult pr = complexity_pair(r, a, b, cfg_);
        rep.verifications.push_back({v.display, v.g1, v.g2, pr.value, v.asserted, pr.value == 1,
                                     replay_of({v.g1, v.g2}, pr)});
    }
    // reported sweep over every horospherical partner for the full-torus cases
    struct Sweep {
        std::string display, g1, real;
    };
    for (const Sweep& s : {Sweep{"(SO(4),GL(2))", "T4.Z.so4-gl2", "so4"},
                           Sweep{"(SO(3),SO(2))", "T4.Z.so3-so2", "so3"}}) {
        const Embedding& a = cat_.embedding(s.g1);
        const Realization& r = real_of(a);
        for (const auto& hid : cat_.horo_ids(s.real)) {
            const Embedding& b = cat_.embedding(hid);
            ComplexityResult pr = complexity_pair(r, a, b, cfg_);
            rep.horo_sweep.push_back({s.display, s.g1, hid, pr.value});
        }
    }
    return rep;
}

inline Table1Report ClaimsHarness::reproduce_table1(size_t max_param) const {
    Table1Report rep;
    rep.max_param = max_param;

    // step (i): metadata recovery of the candidate rows + numeric confirmation
    std::map<size_t, Table1Report::SourceRow> sources;
    for (const auto& inst : cat_.t3_instances()) {
        auto& src = sources[inst.row];
        if (src.display.empty()) {
            src.t3_row = inst.row;
            src.display = inst.display;
            src.k1_tag = inst.k1_t4_spherical;
            src.k2_tag = inst.k2_t4_spherical;
            src.note = inst.note;
        }
        src.k1_tag |= inst.k1_t4_spherical;
        src.k2_tag |= inst.k2_t4_spherical;
        if (inst.metadata_only) continue;
        if (inst.needs_spin && !cat_.options().enable_spin) continue;
        // smallest instances only, to keep the confirmation pass quick
        if (src.confirms.size() >= 2) continue;
        const Embedding& k1 = cat_.embedding(inst.id_k1);
        const Embedding& k2 = cat_.embedding(inst.id_k2);
        const Realization& r = cat_.realization(inst.parent);
        Table1Report::SourceRow::Confirm c;
        c.parent = inst.parent;
        c.decomposition = is_decomposition(r, k1, k2, cfg_).open_orbit;
        c.k1_spherical = is_spherical_subgroup(r, k1, cfg_) ? 1 : 0;
        c.k2_spherical = is_spherical_subgroup(r, k2, cfg_) ? 1 : 0;
        c.note = inst.note;
        src.confirms.push_back(std::move(c));
    }
    for (auto& [row, src] : sources) rep.sources.push_back(src);
    for (auto& src : rep.sources) src.enters_t1 = src.k1_tag && src.k2_tag;

    std::set<size_t> entering;
    for (const auto& src : rep.sources)
        if (src.enters_t1) entering.insert(src.t3_row);
    for (const auto& t1 : cat_.t1_rows())
        if (entering.count(t1.from_t3_row)) rep.recovered_rows.push_back(t1.no);
    rep.rows_match_expected =
        rep.recovered_rows.size() == 8 &&
        entering == std::set<size_t>{1, 2, 3, 4, 13, 14, 16, 17};

    // step (ii): Levi metadata + numeric sphericality of K
    for (const auto& t1 : cat_.t1_rows()) {
        Table1Report::Selection sel;
        sel.t1_no = t1.no;
        sel.k_desc = t1.k_desc;
        sel.k_is_levi = t1.k_is_levi;
        sel.h_symmetric = t1.h_symmetric;
        sel.k_spherical = false;
        if (t1.k_is_levi) {
            ParabolicSpec p = cat_.parabolic(t1.parent, t1.k_subset);
            sel.k_spherical = is_spherical_subgroup(cat_.realization(t1.parent), p.levi, cfg_);
        }
        sel.selected = sel.k_is_levi && sel.k_spherical;
        if (sel.selected) rep.selected_rows.push_back(t1.no);
        rep.selection.push_back(std::move(sel));
    }
    rep.selection_matches_expected = rep.selected_rows == std::vector<size_t>{2, 4, 5, 7};

    // steps (iii)-(iv): smallest admissible instance per selected row
    for (const auto& t1 : cat_.t1_rows()) {
        if (!t1.selected) continue;
        if (t1.no == 4 && (max_param < 4 || cat_.options().max_ambient < 10)) continue;
        const Realization& r = cat_.realization(t1.parent);
        ParabolicSpec p = cat_.parabolic(t1.parent, t1.k_subset);
        const Embedding& h = cat_.embedding(t1.h_id);
        ComplexityResult diag = diagonal_complexity(r, p, h, cfg_);
        ComplexityResult cross = generic_sum_codim(r, p.levi.sub_borel, h.sub_basis, cfg_);
        Table1Report::Verify v;
        v.t1_no = t1.no;
        v.parent = t1.parent;
        v.h_id = t1.h_id;
        v.diag_value = diag.value;
        v.cross_value = cross.value;
        v.equivalence_holds = (diag.value == 0) == (cross.value == 0);
        v.pass = diag.value == 0 && cross.value == 0;
        v.replay = replay_of({t1.h_id}, diag);
        v.replay["levi_side_value"] = cross.value;
        rep.verifications.push_back(std::move(v));
    }
    return rep;
}

}  // namespace cxpair
