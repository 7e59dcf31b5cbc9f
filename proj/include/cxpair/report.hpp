#pragma once

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <string>

#include "cxpair/claims.hpp"

namespace cxpair {

/// Run-wide configuration; every report embeds the full config it ran with.
struct RunConfig {
    uint64_t seed = 1729;
    size_t samples = 5;
    long coeff_bound = 1000;
    size_t max_rank = 8;
    size_t max_param = 4;
    bool enable_spin = false;
    std::string output_format = "json";  // "json" | "md"
    bool expect_paper = false;

    SamplerConfig sampler() const { return SamplerConfig{seed, coeff_bound, samples}; }
    CatalogOptions catalog() const { return CatalogOptions{size_t(10), enable_spin}; }
};

namespace report {

inline ordered_json config_json(const RunConfig& c) {
    ordered_json j;
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    j["coeff_bound"] = c.coeff_bound;
    j["max_rank"] = c.max_rank;
    j["max_param"] = c.max_param;
    j["enable_spin"] = c.enable_spin;
    j["output_format"] = c.output_format;
    j["expect_paper"] = c.expect_paper;
    return j;
}

inline ordered_json result_json(const std::vector<std::string>& ids, const ComplexityResult& r) {
    ordered_json j;
    j["ids"] = ids;
    j["value"] = r.value;
    j["max_orbit_dim"] = r.max_orbit_dim;
    j["ambient_dim"] = r.ambient_dim;
    j["samples_used"] = r.samples_used;
    j["witnesses"] = r.witnesses;
    return j;
}

inline ordered_json claim_json(const ClaimReport& c) {
    ordered_json j;
    j["id"] = c.id;
    j["title"] = c.title;
    j["mode"] = c.mode;
    j["passed"] = c.passed();
    j["seed"] = c.seed;
    j["samples"] = c.samples;
    ordered_json inst = ordered_json::array();
    for (const auto& r : c.instances) {
        ordered_json ij;
        ij["instance"] = r.instance;
        ij["computed"] = r.computed;
        ij["expected"] = r.expected;
        ij["status"] = r.status;
        ij["replay"] = r.replay;
        inst.push_back(std::move(ij));
    }
    j["instances"] = std::move(inst);
    return j;
}

inline ordered_json theorem_a_json(const TheoremAReport& r) {
    ordered_json j;
    j["max_rank"] = r.max_rank;
    ordered_json cands = ordered_json::array();
    for (const auto& c : r.candidates)
        if (c.filter_pass) {
            ordered_json cj;
            cj["pair"] = c.display;
            cj["column"] = c.column == 0 ? "complexity-zero" : "complexity-one";
            cj["ambient_rank"] = c.ambient_rank;
            cands.push_back(std::move(cj));
        }
    j["filter_survivors_prenormalization"] = std::move(cands);
    j["prefilter_rank_bound_holds"] = r.prefilter_rank_bound_holds;
    j["classified_pairs"] = r.survivors;
    j["matches_expected_list"] = r.list_matches_expected;
    ordered_json vers = ordered_json::array();
    for (const auto& v : r.verifications) {
        ordered_json vj;
        vj["pair"] = v.pair_display;
        vj["g1"] = v.g1_id;
        vj["g2"] = v.g2_id;
        vj["complexity"] = v.complexity;
        vj["asserted"] = v.asserted;
        vj["replay"] = v.replay;
        vers.push_back(std::move(vj));
    }
    j["verifications"] = std::move(vers);
    ordered_json sweep = ordered_json::array();
    for (const auto& h : r.horo_sweep) {
        ordered_json hj;
        hj["pair"] = h.pair_display;
        hj["partner"] = h.horo_id;
        hj["complexity"] = h.complexity;
        sweep.push_back(std::move(hj));
    }
    j["horospherical_sweep"] = std::move(sweep);
    return j;
}

inline ordered_json table1_json(const Table1Report& r) {
    ordered_json j;
    j["max_param"] = r.max_param;
    ordered_json srcs = ordered_json::array();
    for (const auto& s : r.sources) {
        ordered_json sj;
        sj["source_row"] = s.t3_row;
        sj["display"] = s.display;
        sj["factor_tags"] = {s.k1_tag, s.k2_tag};
        sj["enters_candidate_table"] = s.enters_t1;
        if (!s.note.empty()) sj["note"] = s.note;
        ordered_json conf = ordered_json::array();
        for (const auto& c : s.confirms) {
            ordered_json cj;
            cj["parent"] = c.parent;
            cj["decomposition"] = c.decomposition;
            cj["factor_spherical"] = {c.k1_spherical, c.k2_spherical};
            conf.push_back(std::move(cj));
        }
        sj["confirmations"] = std::move(conf);
        srcs.push_back(std::move(sj));
    }
    j["sources"] = std::move(srcs);
    j["recovered_rows"] = r.recovered_rows;
    j["rows_match_expected"] = r.rows_match_expected;
    ordered_json sel = ordered_json::array();
    for (const auto& s : r.selection) {
        ordered_json sj;
        sj["row"] = s.t1_no;
        sj["k"] = s.k_desc;
        sj["k_is_levi"] = s.k_is_levi;
        sj["k_spherical"] = s.k_spherical;
        sj["selected"] = s.selected;
        sj["h_symmetric"] = s.h_symmetric;
        sel.push_back(std::move(sj));
    }
    j["selection"] = std::move(sel);
    j["selected_rows"] = r.selected_rows;
    j["selection_matches_expected"] = r.selection_matches_expected;
    ordered_json vers = ordered_json::array();
    for (const auto& v : r.verifications) {
        ordered_json vj;
        vj["row"] = v.t1_no;
        vj["parent"] = v.parent;
        vj["h"] = v.h_id;
        vj["diagonal_complexity"] = v.diag_value;
        vj["levi_side_complexity"] = v.cross_value;
        vj["equivalence_holds"] = v.equivalence_holds;
        vj["pass"] = v.pass;
        vj["replay"] = v.replay;
        vers.push_back(std::move(vj));
    }
    j["verifications"] = std::move(vers);
    return j;
}

/// Markdown table mirroring the eight candidate rows with selection marks.
inline std::string table1_markdown(const Table1Report& r, const Catalog& cat) {
    std::string md;
    md += "| no. | G | H | K | selected |\n";
    md += "|-----|---|---|---|----------|\n";
    for (const auto& row : cat.t1_rows()) {
        bool sel = false;
        for (size_t s : r.selected_rows) sel |= (s == row.no);
        md += "| " + std::to_string(row.no) + ". | " + row.g_desc +
              (row.constraint.empty() ? "" : " (" + row.constraint + ")") + " | " + row.h_desc +
              " | " + row.k_desc + " | " + (sel ? "yes" : "") + " |\n";
    }
    md += "\nselected rows: {";
    for (size_t i = 0; i < r.selected_rows.size(); ++i)
        md += (i ? "," : "") + std::to_string(r.selected_rows[i]);
    md += "}\n\nverifications:\n";
    for (const auto& v : r.verifications)
        md += "- row " + std::to_string(v.t1_no) + " in " + v.parent + ": diagonal complexity " +
              std::to_string(v.diag_value) + ", Levi-side " + std::to_string(v.cross_value) +
              (v.pass ? " (pass)" : " (FAIL)") + "\n";
    return md;
}

inline std::string render(const ordered_json& j, const std::string& format) {
    if (format == "md") {
        // generic markdown rendering: fenced JSON payload under a heading
        std::string md = "# " + j.value("command", std::string("report")) + "\n\n```json\n";
        md += j.dump(2);
        md += "\n```\n";
        return md;
    }
    return j.dump(2) + "\n";
}

inline void persist(const ordered_json& j, const std::string& rendered, const RunConfig& cfg,
                    const std::string& command_slug, const std::string& out_path) {
    std::string path = out_path;
    if (path.empty()) {
        std::error_code ec;
        std::filesystem::create_directories("reports", ec);
        path = "reports/" + command_slug + "_" + std::to_string(cfg.seed) +
               (cfg.output_format == "md" ? ".md" : ".json");
    }
    std::ofstream f(path);
    f << rendered;
}

}  // namespace report
}  // namespace cxpair
