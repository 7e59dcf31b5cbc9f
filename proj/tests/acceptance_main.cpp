// Acceptance suite: runs every contract criterion at its stated tolerance
// (every tolerance here is zero: the arithmetic is exact) and prints one
// PASS/FAIL line per criterion.

#include <Eigen/Dense>

#include <chrono>
#include <complex>
#include <iostream>

#include "cxpair/claims.hpp"
#include "cxpair/report.hpp"

using namespace cxpair;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int criterion, bool pass, const std::string& detail) {
    std::cout << "CRITERION " << criterion << ": " << (pass ? "PASS" : "FAIL") << " — " << detail
              << "\n";
    if (!pass) ++failures;
}

double secs(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

size_t svd_rank(const Matrix& m, double tol = 1e-8) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::MatrixXcd a(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            a(i, j) = std::complex<double>(m(i, j).re.get_d(), m(i, j).im.get_d());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    auto sv = svd.singularValues();
    double cutoff = tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
    size_t r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > cutoff) ++r;
    return r;
}

// --- criterion 1: the four half-reductive complexity-one pairs -------------

void criterion1(const Catalog& cat) {
    auto t0 = Clock::now();
    ClaimsHarness h(cat, SamplerConfig{});
    TheoremAReport rep = h.reproduce_theorem_a(8);
    bool ok = rep.list_matches_expected && rep.prefilter_rank_bound_holds;
    std::string detail = "pairs {";
    for (size_t i = 0; i < rep.survivors.size(); ++i)
        detail += (i ? ", " : "") + rep.survivors[i];
    detail += "}";
    size_t asserted = 0;
    for (const auto& v : rep.verifications)
        if (v.asserted) {
            ++asserted;
            ok &= (v.complexity == 1);
        }
    detail += "; " + std::to_string(asserted) + " partner complexities = 1 exactly";
    detail += " [" + std::to_string(secs(t0)) + "s]";
    line(1, ok && asserted == 4, detail);
}

// --- criterion 2: candidate-row recovery, selection 2/4/5/7, zeros ---------

void criterion2(const Catalog& cat) {
    auto t0 = Clock::now();
    ClaimsHarness h(cat, SamplerConfig{});
    Table1Report rep = h.reproduce_table1(4);
    bool ok = rep.rows_match_expected && rep.selection_matches_expected;
    std::set<size_t> verified;
    for (const auto& v : rep.verifications) {
        ok &= v.pass && v.equivalence_holds;
        verified.insert(v.t1_no);
    }
    ok &= verified == std::set<size_t>{2, 4, 5, 7};
    std::string detail = "8 candidate rows; selected {2,4,5,7}; diagonal complexity 0 with "
                         "agreeing Levi-side check on rows 2, 4 (at the 10-dimensional "
                         "orthogonal group), 5, 7";
    detail += " [" + std::to_string(secs(t0)) + "s]";
    line(2, ok, detail);
}

// --- criterion 3: decomposition certificates --------------------------------

void criterion3(const Catalog& cat) {
    auto t0 = Clock::now();
    SamplerConfig cfg;
    bool ok = true;
    size_t verified = 0;
    for (const auto& inst : cat.t3_instances()) {
        if (inst.metadata_only) continue;
        const Embedding& k1 = cat.embedding(inst.id_k1);
        const Embedding& k2 = cat.embedding(inst.id_k2);
        const Realization& r = cat.realization(inst.parent);
        DecompositionResult dec = is_decomposition(r, k1, k2, cfg);
        size_t meet = intersection_dim(k1.sub_basis, k2.sub_basis);
        bool row_ok = dec.open_orbit && dec.conclusive &&
                      meet == inst.expected_intersection_dim;
        if (!row_ok) std::cout << "  row " << inst.row << " (" << inst.display << ") failed\n";
        ok &= row_ok;
        ++verified;
    }
    const Embedding& t = cat.embedding("sl2.torus");
    DecompositionResult neg = is_decomposition(cat.realization("sl2"), t, t, cfg);
    ok &= !neg.open_orbit;
    line(3, ok,
         std::to_string(verified) +
             " certificates true with exact intersection dimensions (spin rows included); "
             "negative control false [" +
             std::to_string(secs(t0)) + "s]");
}

// --- criterion 4: subgroup-table spot checks --------------------------------

void criterion4(const Catalog& cat) {
    auto t0 = Clock::now();
    SamplerConfig cfg;
    size_t zeros = 0, ones = 0;
    bool ok = true;
    bool named_ok = true;
    std::map<std::string, size_t> named = {{"T4.Z.sl4-sp4", 0},
                                           {"T4.Z.so7-g2", 0},
                                           {"T4.O.so5-so3", 1},
                                           {"T4.O.sp4-sp2", 1}};
    for (const auto& [id, expected] : cat.t4_verification_suite()) {
        const Embedding& h = cat.embedding(id);
        ComplexityResult res = complexity_homspace(cat.realization(h.parent_name), h, cfg);
        bool good = res.value == expected;
        if (!good) std::cout << "  " << id << " computed " << res.value << "\n";
        ok &= good;
        if (good) (expected == 0 ? zeros : ones)++;
        auto it = named.find(id);
        if (it != named.end()) named_ok &= good;
    }
    ok &= zeros >= 10 && ones >= 6 && named_ok;
    line(4, ok,
         std::to_string(zeros) + " complexity-zero and " + std::to_string(ones) +
             " complexity-one entries verified exactly, including the four pinned ones [" +
             std::to_string(secs(t0)) + "s]");
}

// --- criterion 5: property suites on three distinct seeds ------------------

void criterion5(const Catalog& cat) {
    auto t0 = Clock::now();
    bool ok = true;
    std::vector<uint64_t> seeds = {1729, 20240801, 4242424242ULL};

    for (uint64_t seed : seeds) {
        SamplerConfig cfg;
        cfg.seed = seed;

        // conjugation invariance and pair symmetry
        {
            struct P {
                std::string a, b;
            };
            for (const P& p : {P{"T4.Z.so4-gl2", "HORO.so4.u"}, P{"sl2.torus", "sl2.borel"},
                               P{"T4.Z.sl4-sp4", "T3.1.K2@n2"}}) {
                const Embedding& a = cat.embedding(p.a);
                const Embedding& b = cat.embedding(p.b);
                const Realization& r = cat.realization(a.parent_name);
                size_t base = complexity_pair(r, a, b, cfg).value;
                ok &= complexity_pair(r, b, a, cfg).value == base;  // symmetry
                SamplerConfig conj;
                conj.seed = seed ^ 0xabcdef;
                for (size_t i = 0; i < 2; ++i) {
                    Matrix g = sample_element(r, conj, i);
                    ok &= complexity_pair(r, a, b.conjugated(g), cfg).value == base;
                }
            }
        }
        // monotonicity of the generic codimension
        {
            const Realization& so5 = cat.realization("so5");
            size_t vull = generic_sum_codim(so5, so5.nil_pos, so5.nil_pos, cfg).value;
            size_t vb = generic_sum_codim(so5, so5.borel, so5.nil_pos, cfg).value;
            size_t vbb = generic_sum_codim(so5, so5.borel, so5.borel, cfg).value;
            ok &= vull >= vb && vb >= vbb;
        }
        // sampler exactness: zero residue in the group equations
        for (const char* name : {"sl3", "so5", "so6", "sp4", "gl3"}) {
            const Realization& r = cat.realization(name);
            for (size_t i = 0; i < cfg.samples; ++i)
                ok &= r.group_equations_hold(sample_element(r, cfg, i));
        }
        // genericity stability: the 5-sample max equals the 25-sample max
        {
            SamplerConfig big = cfg;
            big.samples = 25;
            struct Q {
                std::string x, y;
            };
            for (const Q& q : {Q{"sl2.u", "sl2.u"}, Q{"sl3.borel", "sl3.borelneg"},
                               Q{"T4.Z.so4-gl2", "HORO.so4.borel"}, Q{"T4.O.sp4-sp2", "sp4.borel"},
                               Q{"T4.Z.so7-g2", "so7.borel"}}) {
                const Embedding& x = cat.embedding(q.x);
                const Embedding& y = cat.embedding(q.y);
                const Realization& r = cat.realization(x.parent_name);
                ok &= generic_sum_codim(r, x.sub_borel, y.sub_borel, cfg).max_orbit_dim ==
                      generic_sum_codim(r, x.sub_borel, y.sub_borel, big).max_orbit_dim;
            }
        }
        // exact rank equals the floating singular-value rank
        {
            size_t agree = 0;
            for (uint64_t s = 0; s < 100; ++s) {
                DrawStream d(seed, s);
                size_t rows = 1 + rng::at(seed, s, 900) % 30;
                size_t cols = 1 + rng::at(seed, s, 901) % 30;
                Matrix m(rows, cols);
                for (size_t i = 0; i < rows; ++i)
                    for (size_t j = 0; j < cols; ++j) m(i, j) = Gaussian(d.nonzero_int(9));
                if (rank(m) == svd_rank(m)) ++agree;
            }
            ok &= agree == 100;
        }
        // sum bound on every pair the engine certifies at complexity <= 1
        {
            struct P {
                std::string a, b;
            };
            for (const P& p :
                 {P{"T4.Z.so4-gl2", "HORO.so4.u"}, P{"T4.Z.so4-so3", "HORO.so4.p1.min"},
                  P{"T4.Z.so3-so2", "HORO.so3.u"}, P{"sl2.trivial", "HORO.sl2.borel"},
                  P{"sl2.torus", "sl2.torus"}, P{"sl2.torus", "HORO.sl2.borel"}}) {
                const Embedding& a = cat.embedding(p.a);
                const Embedding& b = cat.embedding(p.b);
                const Realization& r = cat.realization(a.parent_name);
                if (complexity_pair(r, a, b, cfg).value <= 1) {
                    size_t sum = complexity_homspace(r, a, cfg).value +
                                 complexity_homspace(r, b, cfg).value;
                    ok &= sum <= 1;
                }
            }
        }
        // interchange bound across the whole verified suite
        for (const auto& [id, expected] : cat.t4_verification_suite()) {
            const Embedding& h = cat.embedding(id);
            const Realization& r = cat.realization(h.parent_name);
            size_t i = generic_sum_codim(r, h.sub_borel, r.borel, cfg).value;
            if (i <= 1) ok &= complexity_homspace(r, h, cfg).value <= i;
        }
    }
    line(5, ok,
         "conjugation invariance, pair symmetry, monotonicity, sampler exactness, 5-vs-25 "
         "sample stability, exact-vs-floating rank on 100 matrices, sum and interchange "
         "bounds, on 3 distinct seeds [" +
             std::to_string(secs(t0)) + "s]");
}

// --- criterion 6: claims harness completeness -------------------------------

void criterion6(const Catalog& cat) {
    auto t0 = Clock::now();
    ClaimsHarness h(cat, SamplerConfig{});
    auto reports = h.run_claims(ClaimsHarness::all_ids());
    bool ok = reports.size() == 15;
    bool torus_borel_found = false;
    for (const auto& rep : reports) {
        if (rep.mode == "asserted") {
            ok &= rep.passed();
        } else {
            ok &= !rep.instances.empty();
            for (const auto& inst : rep.instances) {
                ok &= inst.status == "REPORTED";
                if (inst.instance.find("sl2.torus") != std::string::npos &&
                    inst.instance.find("HORO.sl2.borel") != std::string::npos)
                    torus_borel_found |= inst.replay.contains("seed");
            }
        }
    }
    ok &= torus_borel_found;
    // asserted claims replay cleanly on alternative seeds
    for (uint64_t seed : {31337u, 271828u, 314159u}) {
        SamplerConfig cfg;
        cfg.seed = seed;
        ClaimsHarness hs(cat, cfg);
        for (const char* id : {"C2", "C3", "C9", "C10", "C13", "C14", "C15"})
            ok &= hs.run_claim(id).passed();
    }
    line(6, ok,
         "reports for C1-C15; asserted claims pass (and replay on 3 alternative seeds); "
         "reported claims carry witnesses including the torus-against-Borel instance [" +
             std::to_string(secs(t0)) + "s]");
}

}  // namespace

int main() {
    auto t0 = Clock::now();
    Catalog cat({10, true});  // spin rows enabled for the certificate criterion
    criterion1(cat);
    criterion2(cat);
    criterion3(cat);
    criterion4(cat);
    criterion5(cat);
    criterion6(cat);
    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
              << " [total " << secs(t0) << "s]\n";
    return failures == 0 ? 0 : 1;
}
