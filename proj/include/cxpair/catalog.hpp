#pragma once

#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "cxpair/builders.hpp"
#include "cxpair/exceptional.hpp"

namespace cxpair {

struct CatalogOptions {
    size_t max_ambient = 10;  // instantiate parametric rows while ambient <= bound
    bool enable_spin = false; // include the spin-dependent orthogonal rows
};

/// Every subgroup the command line can name lives here, addressable by a
/// stable identifier:
///   T4.Z.* / T4.O.*   Table 4 instances (complexity zero / one columns)
///   T3.<row>.K1|K2    factors of the Table 3 decomposition rows
///   HORO.<real>.<slug> horospherical subgroups from parabolic data
///   <real>.borel|borelneg|u|torus|trivial|full  designated subalgebras
///   so8.spin7          the spin embedding of so(7)
class Catalog {
  public:
    struct T4Instance {
        std::string id;
        int column = 0;  // 0 = complexity zero column, 1 = complexity one
        size_t family = 0;
        std::string parent;   // realization name; empty for metadata-only rows
        std::string display;  // e.g. "(SL(4), Sp(4))"
        ReductiveType g_type, h_type;
        bool metadata_only = false;
        bool in_verification_suite = false;
        std::string note;
    };
    struct T3Instance {
        size_t row = 0;
        std::string id_k1, id_k2;  // empty when metadata-only
        std::string parent;
        std::string display;
        size_t expected_intersection_dim = 0;
        std::string intersection_display;
        bool needs_spin = false;
        bool metadata_only = false;
        // curated sphericality lookup against the subgroup table
        bool k1_t4_spherical = false;
        bool k2_t4_spherical = false;
        // dimension bookkeeping for rows kept as catalog data only
        size_t dim_g = 0, dim_k1 = 0, dim_k2 = 0;
        std::string note;
    };
    struct T1Row {
        size_t no = 0;
        std::string g_desc, h_desc, k_desc, constraint;
        bool k_is_levi = false;
        bool h_symmetric = false;
        bool selected = false;  // rows 2, 4, 5, 7
        // smallest admissible verification instance
        std::string parent;
        std::string h_id;
        std::vector<size_t> k_subset;  // simple-root subset of the parabolic
        size_t from_t3_row = 0;
    };
    struct TypePair {
        size_t family = 0;
        int column = 0;
        ReductiveType g_type, h_type;
        std::string display;
    };

    explicit Catalog(CatalogOptions opt = {}) : opt_(opt) { register_all(); }

    const CatalogOptions& options() const { return opt_; }

    const Realization& realization(const std::string& name) const {
        auto it = reals_.find(name);
        if (it != reals_.end()) return it->second;
        size_t pos = 0;
        while (pos < name.size() && !isdigit(name[pos])) ++pos;
        if (pos == 0 || pos == name.size())
            throw std::invalid_argument("unknown realization: " + name);
        std::string fam = name.substr(0, pos);
        size_t n = std::stoul(name.substr(pos));
        Realization r = build(fam, n);
        return reals_.emplace(name, std::move(r)).first->second;
    }

    bool has_embedding(const std::string& id) const {
        if (builders_.count(id)) return true;
        try {
            resolve_dynamic(id);
            return true;
        } catch (...) {
            return false;
        }
    }

    const Embedding& embedding(const std::string& id) const {
        auto hit = built_.find(id);
        if (hit != built_.end()) return hit->second;
        auto it = builders_.find(id);
        Embedding e = (it != builders_.end()) ? it->second() : resolve_dynamic(id);
        return built_.emplace(id, std::move(e)).first->second;
    }

    /// Stable list of registered catalog ids (excludes the dynamic families).
    std::vector<std::string> embedding_ids() const {
        std::vector<std::string> ids;
        for (const auto& [id, fn] : builders_) ids.push_back(id);
        return ids;
    }

    /// Parabolic from "<real>:<nodes>" where nodes is "none", "all" or a
    /// comma list of 1-based diagram nodes kept in the Levi.
    ParabolicSpec parabolic_by_spec(const std::string& spec) const {
        auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("parabolic spec must be <realization>:<nodes>");
        std::string real = spec.substr(0, colon), nodes = spec.substr(colon + 1);
        const Realization& r = realization(real);
        std::vector<size_t> subset;
        if (nodes == "all") {
            for (size_t i = 0; i < r.simple_pos.size(); ++i) subset.push_back(i);
        } else if (nodes != "none" && !nodes.empty()) {
            std::stringstream ss(nodes);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                size_t v = std::stoul(tok);
                if (v == 0) throw std::invalid_argument("nodes are 1-based");
                subset.push_back(v - 1);
            }
        }
        return parabolic(real, subset);
    }

    ParabolicSpec parabolic(const std::string& real, std::vector<size_t> subset) const {
        std::string key = real + ":";
        for (size_t s : subset) key += std::to_string(s) + ",";
        auto it = parabolics_.find(key);
        if (it != parabolics_.end()) return it->second;
        ParabolicSpec p = levi_of_parabolic(realization(real), subset);
        parabolics_.emplace(key, p);
        return p;
    }

    const std::vector<T4Instance>& t4_instances() const { return t4_; }
    const std::vector<T3Instance>& t3_instances() const { return t3_; }
    const std::vector<T1Row>& t1_rows() const { return t1_; }

    /// Type-level Table 4 pairs for the combinatorial half of the
    /// classification, up to the given ambient rank (no matrices involved).
    std::vector<TypePair> t4_type_pairs(size_t max_rank) const;

    /// Horospherical ids available for a realization (rank-capped listing).
    std::vector<std::string> horo_ids(const std::string& real_name) const {
        const Realization& r = realization(real_name);
        size_t rank = r.simple_pos.size();
        std::vector<std::string> out;
        if (rank > 4) return out;
        for (size_t mask = 0; mask + 1 < (size_t(1) << rank); ++mask) {
            std::vector<size_t> subset;
            for (size_t i = 0; i < rank; ++i)
                if (mask & (size_t(1) << i)) subset.push_back(i);
            size_t zdim = levi_center_cochars(real_name, subset).size();
            std::string prefix = "HORO." + real_name + ".";
            if (subset.empty()) {
                out.push_back(prefix + "u");
                if (zdim > 0) out.push_back(prefix + "borel");
                if (zdim >= 2)
                    for (size_t k = 1; k <= zdim; ++k)
                        out.push_back(prefix + "borel.z" + std::to_string(k));
            } else {
                std::string base = prefix + horo_pslug(subset);
                out.push_back(base + ".min");
                if (zdim > 0) out.push_back(base + ".full");
                if (zdim >= 2)
                    for (size_t k = 1; k <= zdim; ++k)
                        out.push_back(base + ".z" + std::to_string(k));
            }
        }
        return out;
    }

    /// Canonical basis of the center of the standard Levi for the subset.
    std::vector<Matrix> levi_center_cochars(const std::string& real_name,
                                            const std::vector<size_t>& subset) const {
        const Realization& r = realization(real_name);
        size_t n = r.ambient_size;
        size_t k = r.cartan_basis.size();
        std::vector<Matrix> gens;
        for (size_t s : subset) gens.push_back(r.simple_pos[s]);
        if (gens.empty()) return r.cartan_basis;
        // rows: coordinates of [cartan_i, gen] stacked; unknowns: cartan coeffs
        std::vector<std::vector<Gaussian>> rows;
        for (const auto& g : gens) {
            std::vector<std::vector<Gaussian>> cols;
            for (size_t i = 0; i < k; ++i) cols.push_back(matrix_to_vec(bracket(r.cartan_basis[i], g)));
            for (size_t c = 0; c < n * n; ++c) {
                std::vector<Gaussian> row(k);
                bool nz = false;
                for (size_t i = 0; i < k; ++i) {
                    row[i] = cols[i][c];
                    nz |= !row[i].is_zero();
                }
                if (nz) rows.push_back(std::move(row));
            }
        }
        Matrix sys(rows.size(), k);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < k; ++j) sys(i, j) = rows[i][j];
        std::vector<Matrix> out;
        for (const auto& coeff : nullspace(std::move(sys))) {
            Matrix c(n, n);
            for (size_t i = 0; i < k; ++i)
                if (!coeff[i].is_zero()) c += r.cartan_basis[i] * coeff[i];
            out.push_back(detail::integral_cochar(c));
        }
        return out;
    }

    /// Curated verification suite: ids with the column value they must take.
    std::vector<std::pair<std::string, size_t>> t4_verification_suite() const {
        std::vector<std::pair<std::string, size_t>> out;
        for (const auto& inst : t4_)
            if (inst.in_verification_suite) out.emplace_back(inst.id, size_t(inst.column));
        return out;
    }

  private:
    CatalogOptions opt_;
    mutable std::map<std::string, Realization> reals_;
    mutable std::map<std::string, Embedding> built_;
    mutable std::map<std::string, ParabolicSpec> parabolics_;
    std::map<std::string, std::function<Embedding()>> builders_;
    std::vector<T4Instance> t4_;
    std::vector<T3Instance> t3_;
    std::vector<T1Row> t1_;

    static std::string horo_pslug(const std::vector<size_t>& subset) {
        if (subset.empty()) return "borel";
        std::string s = "p";
        for (size_t v : subset) s += std::to_string(v + 1);
        return s;
    }

    static EmbeddingMeta meta_of(ReductiveType t, bool reductive = true) {
        EmbeddingMeta m;
        m.abstract_type = std::move(t);
        m.is_reductive = reductive;
        return m;
    }

    /// Builtin and horospherical families are resolved from the id grammar.
    Embedding resolve_dynamic(const std::string& id) const;

    void add_builder(const std::string& id, std::function<Embedding()> fn) {
        builders_.emplace(id, std::move(fn));
    }

    Embedding lift(const Realization& parent, const AlgMap& map, const Embedding& inner,
                   std::string id, EmbeddingMeta meta) const {
        std::vector<Matrix> basis, coch, np, nn;
        for (const auto& m : inner.basis_mats) basis.push_back(map(m));
        for (const auto& m : inner.cochars) coch.push_back(map(m));
        for (const auto& m : inner.nil_pos_mats) np.push_back(map(m));
        for (const auto& m : inner.nil_neg_mats) nn.push_back(map(m));
        return make_embedding(parent, std::move(id), basis, coch, np, nn, std::move(meta));
    }

    void register_all();
    void register_t4();
    void register_t3();
    void register_t1();
};

// ---------------------------------------------------------------------------
// dynamic id families
// ---------------------------------------------------------------------------

inline Embedding Catalog::resolve_dynamic(const std::string& id) const {
    if (id.rfind("HORO.", 0) == 0) {
        std::string rest = id.substr(5);
        auto dot = rest.find('.');
        if (dot == std::string::npos) throw std::invalid_argument("bad horospherical id: " + id);
        std::string real = rest.substr(0, dot);
        std::string slug = rest.substr(dot + 1);
        const Realization& r = realization(real);
        std::vector<size_t> subset;
        std::string choice;
        if (slug == "u") {
            choice = "min";
        } else if (slug == "borel") {
            choice = "full";
        } else if (slug.rfind("borel.", 0) == 0) {
            choice = slug.substr(6);
        } else if (slug[0] == 'p') {
            auto d2 = slug.find('.');
            std::string nodes = slug.substr(1, d2 == std::string::npos ? std::string::npos : d2 - 1);
            for (char c : nodes) {
                if (!isdigit(c)) throw std::invalid_argument("bad horospherical id: " + id);
                if (c == '0') throw std::invalid_argument("nodes are 1-based: " + id);
                subset.push_back(size_t(c - '1'));
            }
            choice = d2 == std::string::npos ? "min" : slug.substr(d2 + 1);
        } else {
            throw std::invalid_argument("bad horospherical id: " + id);
        }
        ParabolicSpec p = parabolic(real, subset);
        std::vector<Matrix> center = levi_center_cochars(real, subset);
        std::vector<Matrix> chosen;
        if (choice == "min") {
        } else if (choice == "full") {
            chosen = center;
        } else if (choice[0] == 'z') {
            size_t k = std::stoul(choice.substr(1));
            if (k == 0 || k > center.size())
                throw std::invalid_argument("no such central cocharacter: " + id);
            chosen = {center[k - 1]};
        } else {
            throw std::invalid_argument("bad horospherical id: " + id);
        }
        return horospherical_from_parabolic(r, p, chosen, id);
    }
    auto dot = id.find('.');
    if (dot != std::string::npos) {
        std::string real = id.substr(0, dot), kind = id.substr(dot + 1);
        const Realization* rp = nullptr;
        try {
            rp = &realization(real);
        } catch (const std::exception&) {
            throw std::invalid_argument("unknown catalog id: " + id);
        }
        const Realization& r = *rp;
        if (kind == "borel") return borel_embedding(r, id);
        if (kind == "borelneg") return borel_neg_embedding(r, id);
        if (kind == "u") return nilpos_embedding(r, id);
        if (kind == "torus") return cartan_embedding(r, id);
        if (kind == "trivial") return trivial_embedding(r, id);
        if (kind == "full") return full_embedding(r, id);
        if (kind == "spin7" && real == "so8") {
            EmbeddingMeta m = meta_of(type_so(7));
            m.is_symmetric = true;
            m.table_refs = {{"T3", "9-14"}, {"T1", "5-6"}};
            return spin7_in_so8(realization("so8"), realization("so7"), id, m);
        }
    }
    throw std::invalid_argument("unknown catalog id: " + id);
}

// ---------------------------------------------------------------------------
// Table 4
// ---------------------------------------------------------------------------

inline void Catalog::register_t4() {
    auto self = this;
    size_t cap = opt_.max_ambient;
    auto add = [&](T4Instance inst, std::function<Embedding()> builder) {
        if (builder) add_builder(inst.id, std::move(builder));
        t4_.push_back(std::move(inst));
    };
    auto inst = [&](int col, size_t family, std::string id, std::string parent,
                    std::string display, ReductiveType g, ReductiveType h,
                    bool suite = false) {
        T4Instance i;
        i.column = col;
        i.family = family;
        i.id = std::move(id);
        i.parent = std::move(parent);
        i.display = std::move(display);
        i.g_type = std::move(g);
        i.h_type = std::move(h);
        i.in_verification_suite = suite;
        return i;
    };
    auto meta_with = [&](ReductiveType t, bool levi, bool sym, std::string table,
                         std::string row) {
        EmbeddingMeta m = meta_of(std::move(t));
        m.is_levi = levi;
        m.is_symmetric = sym;
        m.table_refs = {{std::move(table), std::move(row)}};
        return m;
    };
    auto S = [](size_t v) { return std::to_string(v); };

    // --- complexity zero column ---
    // (SL(n), SO(n)), n >= 2
    for (size_t n = 2; n <= cap; ++n) {
        std::string id = n == 2 ? "T4.Z.sl2-torus" : "T4.Z.sl" + S(n) + "-so" + S(n);
        add(inst(0, 1, id, "sl" + S(n), "(SL(" + S(n) + "), SO(" + S(n) + "))", type_sl(n),
                 type_so(n), n <= 4),
            [self, n, id] {
                const Realization& par = self->realization("sl" + std::to_string(n));
                const Realization& src = self->realization("so" + std::to_string(n));
                EmbeddingMeta m = self->meta_of(type_so(n));
                m.is_symmetric = true;
                m.table_refs = {{"T4.Z", "1"}};
                return map_realization(par, src, [](const Matrix& x) { return x; }, id, m);
            });
    }
    // (SL(m+n), S(GL(m) x GL(n))), m >= n >= 1
    for (size_t m = 1; m <= cap; ++m)
        for (size_t n = 1; n <= m && m + n <= cap; ++n) {
            std::string id = "T4.Z.sl" + S(m + n) + "-sgl" + S(m) + "gl" + S(n);
            add(inst(0, 2, id, "sl" + S(m + n),
                     "(SL(" + S(m + n) + "), S(GL(" + S(m) + ")xGL(" + S(n) + ")))",
                     type_sl(m + n), type_sl(m).times(type_sl(n)).times(ReductiveType::torus(1)),
                     m + n <= 4),
                [self, m, n, id] {
                    const Realization& par = self->realization("sl" + std::to_string(m + n));
                    std::vector<size_t> subset;
                    for (size_t i = 0; i + 1 < m + n; ++i)
                        if (i != m - 1) subset.push_back(i);
                    ParabolicSpec p = self->parabolic(par.name, subset);
                    Embedding e = p.levi;
                    e.id = id;
                    e.meta.is_symmetric = true;
                    e.meta.table_refs = {{"T4.Z", "2"}};
                    return e;
                });
        }
    // (SL(m+n), SL(m) x SL(n)), m > n >= 1
    for (size_t m = 2; m <= cap; ++m)
        for (size_t n = 1; n < m && m + n <= cap; ++n) {
            std::string id = n == 1 ? "T4.Z.sl" + S(m + 1) + "-sl" + S(m)
                                    : "T4.Z.sl" + S(m + n) + "-sl" + S(m) + "xsl" + S(n);
            add(inst(0, 3, id, "sl" + S(m + n),
                     "(SL(" + S(m + n) + "), SL(" + S(m) + ")xSL(" + S(n) + "))", type_sl(m + n),
                     type_sl(m).times(type_sl(n)), m + n <= 5),
                [self, m, n, id] {
                    const Realization& par = self->realization("sl" + std::to_string(m + n));
                    const Realization& a = self->realization("sl" + std::to_string(m));
                    Embedding ea = map_realization(par, a, corner_map(m + n, m, 0), id + "#a",
                                                   self->meta_of(type_sl(m)));
                    if (n == 1) {
                        ea.id = id;
                        ea.meta.table_refs = {{"T4.Z", "3"}};
                        return ea;
                    }
                    const Realization& b = self->realization("sl" + std::to_string(n));
                    Embedding eb = map_realization(par, b, corner_map(m + n, n, m), id + "#b",
                                                   self->meta_of(type_sl(n)));
                    Embedding e = product_embedding(par, ea, eb, id);
                    e.meta.table_refs = {{"T4.Z", "3"}};
                    return e;
                });
        }
    // (SL(2n+1), Gm.Sp(2n)) and (SL(2n+1), Sp(2n)), n >= 1
    for (size_t n = 1; 2 * n + 1 <= cap; ++n) {
        std::string idg = "T4.Z.sl" + S(2 * n + 1) + "-gmsp" + S(2 * n);
        add(inst(0, 4, idg, "sl" + S(2 * n + 1),
                 "(SL(" + S(2 * n + 1) + "), Gm.Sp(" + S(2 * n) + "))", type_sl(2 * n + 1),
                 type_sp(2 * n).times(ReductiveType::torus(1)), n <= 2),
            [self, n, idg] {
                size_t N = 2 * n + 1;
                const Realization& par = self->realization("sl" + std::to_string(N));
                const Realization& sp = self->realization("sp" + std::to_string(2 * n));
                Embedding esp = map_realization(par, sp, corner_map(N, 2 * n, 0), idg + "#sp",
                                                self->meta_of(type_sp(2 * n)));
                Matrix c(N, N);
                for (size_t i = 0; i < 2 * n; ++i) c(i, i) = Gaussian(1);
                c(N - 1, N - 1) = Gaussian(-long(2 * n));
                Embedding gm = torus_embedding(par, c, idg + "#gm");
                Embedding e = product_embedding(par, gm, esp, idg);
                e.meta.table_refs = {{"T4.Z", "4"}};
                return e;
            });
        std::string ids = "T4.Z.sl" + S(2 * n + 1) + "-sp" + S(2 * n);
        add(inst(0, 5, ids, "sl" + S(2 * n + 1),
                 "(SL(" + S(2 * n + 1) + "), Sp(" + S(2 * n) + "))", type_sl(2 * n + 1),
                 type_sp(2 * n), n <= 2),
            [self, n, ids] {
                size_t N = 2 * n + 1;
                const Realization& par = self->realization("sl" + std::to_string(N));
                const Realization& sp = self->realization("sp" + std::to_string(2 * n));
                Embedding e = map_realization(par, sp, corner_map(N, 2 * n, 0), ids,
                                              self->meta_of(type_sp(2 * n)));
                e.meta.table_refs = {{"T4.Z", "5"}};
                return e;
            });
    }
    // (SL(2n), Sp(2n)), n >= 2
    for (size_t n = 2; 2 * n <= cap; ++n) {
        std::string id = "T4.Z.sl" + S(2 * n) + "-sp" + S(2 * n);
        add(inst(0, 6, id, "sl" + S(2 * n), "(SL(" + S(2 * n) + "), Sp(" + S(2 * n) + "))",
                 type_sl(2 * n), type_sp(2 * n), n <= 3),
            [self, n, id] {
                const Realization& par = self->realization("sl" + std::to_string(2 * n));
                const Realization& sp = self->realization("sp" + std::to_string(2 * n));
                EmbeddingMeta m = self->meta_of(type_sp(2 * n));
                m.is_symmetric = true;
                m.table_refs = {{"T4.Z", "6"}};
                return map_realization(par, sp, [](const Matrix& x) { return x; }, id, m);
            });
    }
    // (Sp(2n), GL(n)), n >= 1
    for (size_t n = 1; 2 * n <= cap; ++n) {
        std::string id = "T4.Z.sp" + S(2 * n) + "-gl" + S(n);
        add(inst(0, 7, id, "sp" + S(2 * n), "(Sp(" + S(2 * n) + "), GL(" + S(n) + "))",
                 type_sp(2 * n), type_gl(n), n <= 2),
            [self, n, id] {
                const Realization& par = self->realization("sp" + std::to_string(2 * n));
                const Realization& gl = self->realization("gl" + std::to_string(n));
                EmbeddingMeta m = self->meta_of(type_gl(n));
                m.is_levi = true;
                m.is_symmetric = true;
                m.table_refs = {{"T4.Z", "7"}};
                return map_realization(par, gl, gl_block_map(2 * n), id, m);
            });
    }
    // (Sp(2n), Gm x Sp(2n-2)), n >= 2
    for (size_t n = 2; 2 * n <= cap; ++n) {
        std::string id = "T4.Z.sp" + S(2 * n) + "-gmsp" + S(2 * n - 2);
        add(inst(0, 8, id, "sp" + S(2 * n),
                 "(Sp(" + S(2 * n) + "), Gm x Sp(" + S(2 * n - 2) + "))", type_sp(2 * n),
                 type_sp(2 * n - 2).times(ReductiveType::torus(1)), n <= 3),
            [self, n, id] {
                size_t N = 2 * n;
                const Realization& par = self->realization("sp" + std::to_string(N));
                const Realization& sp = self->realization("sp" + std::to_string(N - 2));
                Embedding mid = map_realization(par, sp, sp_sub_map(N, N - 2), id + "#sp",
                                                self->meta_of(type_sp(N - 2)));
                Matrix D0 = Matrix::unit(N, 0, 0) - Matrix::unit(N, N - 1, N - 1);
                Embedding gm = torus_embedding(par, D0, id + "#gm");
                Embedding e = product_embedding(par, gm, mid, id);
                e.meta.is_levi = true;
                e.meta.table_refs = {{"T4.Z", "8"}};
                return e;
            });
    }
    // (Sp(m+n), Sp(m) x Sp(n)), m >= n >= 2 even
    for (size_t m = 2; m <= cap; m += 2)
        for (size_t n = 2; n <= m && m + n <= cap; n += 2) {
            std::string id = "T4.Z.sp" + S(m + n) + "-sp" + S(m) + "xsp" + S(n);
            add(inst(0, 9, id, "sp" + S(m + n),
                     "(Sp(" + S(m + n) + "), Sp(" + S(m) + ")xSp(" + S(n) + "))", type_sp(m + n),
                     type_sp(m).times(type_sp(n)), m + n <= 6),
                [self, m, n, id] {
                    size_t N = m + n;
                    const Realization& par = self->realization("sp" + std::to_string(N));
                    const Realization& a = self->realization("sp" + std::to_string(m));
                    const Realization& b = self->realization("sp" + std::to_string(n));
                    Embedding ea = map_realization(par, a, sp_sub_map(N, m), id + "#a",
                                                   self->meta_of(type_sp(m)));
                    Embedding eb = map_realization(par, b, sp_outer_map(N, n), id + "#b",
                                                   self->meta_of(type_sp(n)));
                    Embedding e = product_embedding(par, ea, eb, id);
                    e.meta.is_symmetric = true;
                    e.meta.table_refs = {{"T4.Z", "9"}};
                    return e;
                });
        }
    // (SO(2n), SL(n)), n >= 3 odd
    for (size_t n = 3; 2 * n <= cap; n += 2) {
        std::string id = "T4.Z.so" + S(2 * n) + "-sl" + S(n);
        add(inst(0, 10, id, "so" + S(2 * n), "(SO(" + S(2 * n) + "), SL(" + S(n) + "))",
                 type_so(2 * n), type_sl(n), true),
            [self, n, id] {
                const Realization& par = self->realization("so" + std::to_string(2 * n));
                const Realization& sl = self->realization("sl" + std::to_string(n));
                EmbeddingMeta m = self->meta_of(type_sl(n));
                m.table_refs = {{"T4.Z", "10"}};
                return map_realization(par, sl, gl_block_map(2 * n), id, m);
            });
    }
    // (SO(2n), GL(n)), n >= 2
    for (size_t n = 2; 2 * n <= cap; ++n) {
        std::string id = "T4.Z.so" + S(2 * n) + "-gl" + S(n);
        add(inst(0, 11, id, "so" + S(2 * n), "(SO(" + S(2 * n) + "), GL(" + S(n) + "))",
                 type_so(2 * n), type_gl(n), n <= 3),
            [self, n, id] {
                const Realization& par = self->realization("so" + std::to_string(2 * n));
                const Realization& gl = self->realization("gl" + std::to_string(n));
                EmbeddingMeta m = self->meta_of(type_gl(n));
                m.is_levi = true;
                m.is_symmetric = true;
                m.table_refs = {{"T4.Z", "11"}};
                return map_realization(par, gl, gl_block_map(2 * n), id, m);
            });
    }
    // (SO(2n+1), GL(n)), n >= 2
    for (size_t n = 2; 2 * n + 1 <= cap; ++n) {
        std::string id = "T4.Z.so" + S(2 * n + 1) + "-gl" + S(n);
        add(inst(0, 12, id, "so" + S(2 * n + 1),
                 "(SO(" + S(2 * n + 1) + "), GL(" + S(n) + "))", type_so(2 * n + 1), type_gl(n),
                 n <= 3),
            [self, n, id] {
                size_t N = 2 * n + 1;
                const Realization& par = self->realization("so" + std::to_string(N));
                const Realization& gl = self->realization("gl" + std::to_string(n));
                AlgMap map = maps::compose(so_sub_map(N, 2 * n, Placement::Outer),
                                           gl_block_map(2 * n));
                EmbeddingMeta m = self->meta_of(type_gl(n));
                m.is_levi = true;
                m.table_refs = {{"T4.Z", "12"}};
                return map_realization(par, gl, map, id, m);
            });
    }
    // (SO(m+n), SO(m) x SO(n)), m >= n >= 1
    for (size_t m = 2; m <= cap; ++m)
        for (size_t n = 1; n <= m && m + n <= cap; ++n) {
            if (m + n < 3) continue;
            std::string id = n == 1 ? "T4.Z.so" + S(m + 1) + "-so" + S(m)
                                    : "T4.Z.so" + S(m + n) + "-so" + S(m) + "xso" + S(n);
            bool suite = (m <= 4 && n <= 3) || (m == 7 && n == 1) || (m == 9 && n == 1) ||
                         (m == 6 && n == 2);
            add(inst(0, 13, id, "so" + S(m + n),
                     "(SO(" + S(m + n) + "), SO(" + S(m) + ")xSO(" + S(n) + "))", type_so(m + n),
                     type_so(m).times(type_so(n)), suite),
                [self, m, n, id] {
                    size_t N = m + n;
                    const Realization& par = self->realization("so" + std::to_string(N));
                    auto [ma, mb] = so_product_maps(m, n);
                    const Realization& a = self->realization("so" + std::to_string(m));
                    Embedding ea = map_realization(par, a, ma, id + "#a", self->meta_of(type_so(m)));
                    Embedding e = ea;
                    if (n >= 2) {
                        const Realization& b = self->realization("so" + std::to_string(n));
                        Embedding eb =
                            map_realization(par, b, mb, id + "#b", self->meta_of(type_so(n)));
                        e = product_embedding(par, ea, eb, id);
                    }
                    e.id = id;
                    e.meta.is_symmetric = true;
                    e.meta.is_levi = (n == 2);
                    e.meta.table_refs = {{"T4.Z", "13"}};
                    return e;
                });
        }
    // (SO(7), G2) and (SO(8), G2)
    add(inst(0, 14, "T4.Z.so7-g2", "so7", "(SO(7), G2)", type_so(7),
             ReductiveType::simple(Family::G, 2), true),
        [self] {
            EmbeddingMeta m = self->meta_of(ReductiveType::simple(Family::G, 2));
            m.table_refs = {{"T4.Z", "14"}};
            return g2_in_so7(self->realization("so7"), "T4.Z.so7-g2", m);
        });
    add(inst(0, 15, "T4.Z.so8-g2", "so8", "(SO(8), G2)", type_so(8),
             ReductiveType::simple(Family::G, 2), true),
        [self] {
            EmbeddingMeta m = self->meta_of(ReductiveType::simple(Family::G, 2));
            m.table_refs = {{"T4.Z", "15"}};
            Embedding g2 = self->embedding("T4.Z.so7-g2");
            return self->lift(self->realization("so8"), so_sub_map(8, 7), g2, "T4.Z.so8-g2", m);
        });
    // metadata-only spin rows
    {
        T4Instance i = inst(0, 16, "T4.Z.so9-spin7", "", "(SO(9), Spin(7))", type_so(9),
                            type_so(7));
        i.metadata_only = true;
        i.note = "spin embedding into so(9); catalog data only";
        add(std::move(i), nullptr);
        T4Instance j = inst(0, 17, "T4.Z.so10-so2xspin7", "", "(SO(10), SO(2)xSpin(7))",
                            type_so(10), type_so(7).times(ReductiveType::torus(1)));
        j.metadata_only = true;
        j.note = "spin embedding into so(10); catalog data only";
        add(std::move(j), nullptr);
    }
    // metadata-only exceptional rows, complexity zero column
    {
        auto G2 = ReductiveType::simple(Family::G, 2);
        auto F4 = ReductiveType::simple(Family::F, 4);
        auto E6 = ReductiveType::simple(Family::E, 6);
        auto E7 = ReductiveType::simple(Family::E, 7);
        auto E8 = ReductiveType::simple(Family::E, 8);
        auto A = [](size_t r) { return ReductiveType::simple(Family::A, r); };
        auto D = [](size_t r) { return ReductiveType::simple(Family::D, r); };
        auto C = [](size_t r) { return ReductiveType::simple(Family::C, r); };
        auto B = [](size_t r) { return ReductiveType::simple(Family::B, r); };
        auto Gm = ReductiveType::torus(1);
        std::vector<std::tuple<std::string, std::string, ReductiveType, ReductiveType>> rows = {
            {"T4.Z.g2-a2", "(G2, A2)", G2, A(2)},
            {"T4.Z.g2-a1xa1", "(G2, A1xA1~)", G2, A(1).times(A(1))},
            {"T4.Z.f4-b4", "(F4, B4)", F4, B(4)},
            {"T4.Z.f4-c3xa1", "(F4, C3xA1)", F4, C(3).times(A(1))},
            {"T4.Z.e6-c4", "(E6, C4)", E6, C(4)},
            {"T4.Z.e6-f4", "(E6, F4)", E6, F4},
            {"T4.Z.e6-d5", "(E6, D5)", E6, D(5)},
            {"T4.Z.e6-gmd5", "(E6, Gm.D5)", E6, D(5).times(Gm)},
            {"T4.Z.e6-a5xa1", "(E6, A5xA1)", E6, A(5).times(A(1))},
            {"T4.Z.e7-gme6", "(E7, Gm.E6)", E7, E6.times(Gm)},
            {"T4.Z.e7-a7", "(E7, A7)", E7, A(7)},
            {"T4.Z.e7-d6xa1", "(E7, D6xA1)", E7, D(6).times(A(1))},
            {"T4.Z.e8-d8", "(E8, D8)", E8, D(8)},
            {"T4.Z.e8-e7xa1", "(E8, E7xA1)", E8, E7.times(A(1))},
        };
        size_t fam = 18;
        for (auto& [id, disp, g, h] : rows) {
            T4Instance i = inst(0, fam++, id, "", disp, g, h);
            i.metadata_only = true;
            i.note = "exceptional; catalog data only";
            add(std::move(i), nullptr);
        }
    }

    // --- complexity one column ---
    // (SL(2n), SL(n) x SL(n)), n >= 1
    for (size_t n = 1; 2 * n <= cap; ++n) {
        std::string id = n == 1 ? "T4.O.sl2-trivial"
                                : "T4.O.sl" + S(2 * n) + "-sl" + S(n) + "xsl" + S(n);
        add(inst(1, 101, id, "sl" + S(2 * n),
                 n == 1 ? "(SL(2), {e})"
                        : "(SL(" + S(2 * n) + "), SL(" + S(n) + ")xSL(" + S(n) + "))",
                 type_sl(2 * n), type_sl(n).times(type_sl(n)), n <= 2),
            [self, n, id] {
                const Realization& par = self->realization("sl" + std::to_string(2 * n));
                if (n == 1) {
                    Embedding e = trivial_embedding(par, id);
                    e.meta.table_refs = {{"T4.O", "1"}};
                    return e;
                }
                const Realization& a = self->realization("sl" + std::to_string(n));
                Embedding ea = map_realization(par, a, corner_map(2 * n, n, 0), id + "#a",
                                               self->meta_of(type_sl(n)));
                Embedding eb = map_realization(par, a, corner_map(2 * n, n, n), id + "#b",
                                               self->meta_of(type_sl(n)));
                Embedding e = product_embedding(par, ea, eb, id);
                e.meta.table_refs = {{"T4.O", "1"}};
                return e;
            });
    }
    // (SL(n), Gm x SL(n-2)), n >= 5 and (SL(n), Gm^2 x SL(n-2)), n >= 3
    for (size_t n = 3; n <= cap; ++n) {
        auto mid_builder = [self, n](const std::string& id, size_t torus_count) {
            const Realization& par = self->realization("sl" + std::to_string(n));
            Matrix c1(n, n);
            c1(0, 0) = Gaussian(1);
            c1(n - 1, n - 1) = Gaussian(-1);
            Matrix c2(n, n);
            c2(0, 0) = Gaussian(long(n) - 2);
            c2(n - 1, n - 1) = Gaussian(long(n) - 2);
            for (size_t i = 1; i + 1 < n; ++i) c2(i, i) = Gaussian(-2);
            std::vector<Matrix> cochars = {c1};
            if (torus_count == 2) cochars.push_back(c2);
            Embedding gm = torus_embedding(par, cochars, id + "#gm");
            if (n == 3) {
                gm.id = id;
                gm.meta.table_refs = {{"T4.O", torus_count == 1 ? "2" : "3"}};
                return gm;
            }
            const Realization& in = self->realization("sl" + std::to_string(n - 2));
            Embedding mid = map_realization(par, in, corner_map(n, n - 2, 1), id + "#sl",
                                            self->meta_of(type_sl(n - 2)));
            Embedding e = product_embedding(par, gm, mid, id);
            e.meta.table_refs = {{"T4.O", torus_count == 1 ? "2" : "3"}};
            return e;
        };
        if (n >= 5) {
            std::string id1 = "T4.O.sl" + S(n) + "-gmsl" + S(n - 2);
            add(inst(1, 102, id1, "sl" + S(n),
                     "(SL(" + S(n) + "), Gm x SL(" + S(n - 2) + "))", type_sl(n),
                     type_sl(n - 2).times(ReductiveType::torus(1)), n == 5),
                [mid_builder, id1] { return mid_builder(id1, 1); });
        }
        std::string id2 = n == 3 ? "T4.O.sl3-gm2" : "T4.O.sl" + S(n) + "-gm2sl" + S(n - 2);
        add(inst(1, 103, id2, "sl" + S(n),
                 n == 3 ? "(SL(3), Gm^2)"
                        : "(SL(" + S(n) + "), Gm^2 x SL(" + S(n - 2) + "))",
                 type_sl(n), type_sl(n - 2).times(ReductiveType::torus(2)), n <= 4),
            [mid_builder, id2] { return mid_builder(id2, 2); });
    }
    // (SL(6), Gm x SL(2) x Sp(4))
    if (cap >= 6)
        add(inst(1, 104, "T4.O.sl6-gmsl2sp4", "sl6", "(SL(6), Gm x SL(2) x Sp(4))", type_sl(6),
                 type_sl(2).times(type_sp(4)).times(ReductiveType::torus(1)), true),
            [self] {
                const Realization& par = self->realization("sl6");
                Embedding a = map_realization(par, self->realization("sl2"), corner_map(6, 2, 0),
                                              "T4.O.sl6-gmsl2sp4#a", self->meta_of(type_sl(2)));
                Embedding b = map_realization(par, self->realization("sp4"), corner_map(6, 4, 2),
                                              "T4.O.sl6-gmsl2sp4#b", self->meta_of(type_sp(4)));
                Matrix c(6, 6);
                c(0, 0) = c(1, 1) = Gaussian(2);
                for (size_t i = 2; i < 6; ++i) c(i, i) = Gaussian(-1);
                Embedding gm = torus_embedding(par, c, "T4.O.sl6-gmsl2sp4#gm");
                Embedding e = product_embedding(
                    par, product_embedding(par, gm, a, "T4.O.sl6-gmsl2sp4#x"), b,
                    "T4.O.sl6-gmsl2sp4");
                e.meta.table_refs = {{"T4.O", "4"}};
                return e;
            });
    // (Sp(2n), Sp(2n-2)), n >= 1
    for (size_t n = 1; 2 * n <= cap; ++n) {
        std::string id = n == 1 ? "T4.O.sp2-trivial" : "T4.O.sp" + S(2 * n) + "-sp" + S(2 * n - 2);
        add(inst(1, 105, id, "sp" + S(2 * n),
                 n == 1 ? "(Sp(2), {e})"
                        : "(Sp(" + S(2 * n) + "), Sp(" + S(2 * n - 2) + "))",
                 type_sp(2 * n), n == 1 ? ReductiveType::trivial() : type_sp(2 * n - 2), n <= 2),
            [self, n, id] {
                const Realization& par = self->realization("sp" + std::to_string(2 * n));
                if (n == 1) {
                    Embedding e = trivial_embedding(par, id);
                    e.meta.table_refs = {{"T4.O", "5"}};
                    return e;
                }
                const Realization& sp = self->realization("sp" + std::to_string(2 * n - 2));
                Embedding e = map_realization(par, sp, sp_sub_map(2 * n, 2 * n - 2), id,
                                              self->meta_of(type_sp(2 * n - 2)));
                e.meta.table_refs = {{"T4.O", "5"}};
                return e;
            });
    }
    // (Sp(2n), Sp(2n-4) x SL(2) x SL(2)), n >= 3
    for (size_t n = 3; 2 * n <= cap; ++n) {
        std::string id = "T4.O.sp" + S(2 * n) + "-sp" + S(2 * n - 4) + "xsl2xsl2";
        add(inst(1, 106, id, "sp" + S(2 * n),
                 "(Sp(" + S(2 * n) + "), Sp(" + S(2 * n - 4) + ")xSL(2)xSL(2))", type_sp(2 * n),
                 type_sp(2 * n - 4).times(type_sp(2)).times(type_sp(2)), n == 3),
            [self, n, id] {
                size_t N = 2 * n;
                const Realization& par = self->realization("sp" + std::to_string(N));
                const Realization& sp2 = self->realization("sp2");
                Embedding o1 = map_realization(par, sp2, sp_outer_map(N, 2), id + "#o1",
                                               self->meta_of(type_sp(2)));
                Embedding o2 = map_realization(par, sp2, maps::pad(N, {1, N - 2}), id + "#o2",
                                               self->meta_of(type_sp(2)));
                const Realization& mid_r = self->realization("sp" + std::to_string(N - 4));
                Embedding mid = map_realization(par, mid_r, sp_sub_map(N, N - 4), id + "#m",
                                                self->meta_of(type_sp(N - 4)));
                Embedding e = product_embedding(
                    par, product_embedding(par, mid, o1, id + "#x"), o2, id);
                e.meta.table_refs = {{"T4.O", "6"}};
                return e;
            });
    }
    // (Sp(2n), SL(n)), n >= 2 (starred in the source table)
    for (size_t n = 2; 2 * n <= cap; ++n) {
        std::string id = "T4.O.sp" + S(2 * n) + "-sl" + S(n);
        add(inst(1, 107, id, "sp" + S(2 * n), "(Sp(" + S(2 * n) + "), SL(" + S(n) + "))",
                 type_sp(2 * n), type_sl(n), n <= 3),
            [self, n, id] {
                const Realization& par = self->realization("sp" + std::to_string(2 * n));
                const Realization& sl = self->realization("sl" + std::to_string(n));
                EmbeddingMeta m = self->meta_of(type_sl(n));
                m.table_refs = {{"T4.O", "7"}};
                return map_realization(par, sl, gl_block_map(2 * n), id, m);
            });
    }
    // (SO(n), SO(n-2)), n >= 4
    for (size_t n = 4; n <= cap; ++n) {
        std::string id = "T4.O.so" + S(n) + "-so" + S(n - 2);
        add(inst(1, 108, id, "so" + S(n), "(SO(" + S(n) + "), SO(" + S(n - 2) + "))", type_so(n),
                 type_so(n - 2), n <= 6),
            [self, n, id] {
                const Realization& par = self->realization("so" + std::to_string(n));
                const Realization& sub = self->realization("so" + std::to_string(n - 2));
                EmbeddingMeta m = self->meta_of(type_so(n - 2));
                m.table_refs = {{"T4.O", "8"}};
                return map_realization(par, sub, so_sub_map(n, n - 2, Placement::Centered), id, m);
            });
    }
    // (SO(2n+1), SL(n)), n >= 2
    for (size_t n = 2; 2 * n + 1 <= cap; ++n) {
        std::string id = "T4.O.so" + S(2 * n + 1) + "-sl" + S(n);
        add(inst(1, 109, id, "so" + S(2 * n + 1),
                 "(SO(" + S(2 * n + 1) + "), SL(" + S(n) + "))", type_so(2 * n + 1), type_sl(n),
                 n <= 3),
            [self, n, id] {
                size_t N = 2 * n + 1;
                const Realization& par = self->realization("so" + std::to_string(N));
                const Realization& sl = self->realization("sl" + std::to_string(n));
                AlgMap map = maps::compose(so_sub_map(N, 2 * n, Placement::Outer),
                                           gl_block_map(2 * n));
                EmbeddingMeta m = self->meta_of(type_sl(n));
                m.table_refs = {{"T4.O", "9"}};
                return map_realization(par, sl, map, id, m);
            });
    }
    // (SO(4n), SL(2n)), n >= 2
    for (size_t n = 2; 4 * n <= cap; ++n) {
        std::string id = "T4.O.so" + S(4 * n) + "-sl" + S(2 * n);
        add(inst(1, 110, id, "so" + S(4 * n), "(SO(" + S(4 * n) + "), SL(" + S(2 * n) + "))",
                 type_so(4 * n), type_sl(2 * n), true),
            [self, n, id] {
                const Realization& par = self->realization("so" + std::to_string(4 * n));
                const Realization& sl = self->realization("sl" + std::to_string(2 * n));
                EmbeddingMeta m = self->meta_of(type_sl(2 * n));
                m.table_refs = {{"T4.O", "10"}};
                return map_realization(par, sl, gl_block_map(4 * n), id, m);
            });
    }
    // (SO(9), G2 x SO(2))
    if (cap >= 9)
        add(inst(1, 113, "T4.O.so9-g2xso2", "so9", "(SO(9), G2 x SO(2))", type_so(9),
                 ReductiveType::simple(Family::G, 2).times(ReductiveType::torus(1)), true),
            [self] {
                const Realization& par = self->realization("so9");
                Embedding g2 = self->embedding("T4.Z.so7-g2");
                Embedding in9 = self->lift(par, so_sub_map(9, 7), g2, "T4.O.so9-g2xso2#g2",
                                           self->meta_of(ReductiveType::simple(Family::G, 2)));
                Matrix D0 = Matrix::unit(9, 0, 0) - Matrix::unit(9, 8, 8);
                Embedding gm = torus_embedding(par, D0, "T4.O.so9-g2xso2#gm");
                Embedding e = product_embedding(par, in9, gm, "T4.O.so9-g2xso2");
                e.meta.table_refs = {{"T4.O", "13"}};
                return e;
            });
    // metadata-only complexity one rows
    {
        std::vector<std::tuple<std::string, std::string, ReductiveType, ReductiveType, size_t>>
            rows = {
                {"T4.O.so11-so3xspin7", "(SO(11), SO(3)xSpin(7))", type_so(11),
                 type_so(3).times(type_so(7)), 111},
                {"T4.O.so10-spin7", "(SO(10), Spin(7))", type_so(10), type_so(7), 112},
                {"T4.O.f4-d4", "(F4, D4)", ReductiveType::simple(Family::F, 4),
                 ReductiveType::simple(Family::D, 4), 114},
                {"T4.O.e6-gmb4", "(E6, Gm x B4)", ReductiveType::simple(Family::E, 6),
                 ReductiveType::simple(Family::B, 4).times(ReductiveType::torus(1)), 115},
                {"T4.O.e7-e6", "(E7, E6)", ReductiveType::simple(Family::E, 7),
                 ReductiveType::simple(Family::E, 6), 116},
            };
        for (auto& [id, disp, g, h, fam] : rows) {
            T4Instance i = inst(1, fam, id, "", disp, g, h);
            i.metadata_only = true;
            i.note = fam <= 112 ? "spin embedding beyond the ambient bound; catalog data only"
                                : "exceptional; catalog data only";
            add(std::move(i), nullptr);
        }
    }
}

// ---------------------------------------------------------------------------
// Table 3 and Table 1
// ---------------------------------------------------------------------------

inline void Catalog::register_t3() {
    auto self = this;
    size_t cap = opt_.max_ambient;
    auto S = [](size_t v) { return std::to_string(v); };
    auto add_row = [&](T3Instance i) { t3_.push_back(std::move(i)); };

    // rows 1-2: SL(2n) = Sp(2n) . SL(2n-1) / S(GL(1)xGL(2n-1))
    for (size_t n = 2; 2 * n <= cap; ++n) {
        for (size_t row : {size_t(1), size_t(2)}) {
            T3Instance i;
            i.row = row;
            i.parent = "sl" + S(2 * n);
            i.id_k1 = "T3." + S(row) + ".K1@n" + S(n);
            i.id_k2 = "T3." + S(row) + ".K2@n" + S(n);
            i.display = row == 1 ? "SL(" + S(2 * n) + ") = Sp(" + S(2 * n) + ") . SL(" +
                                       S(2 * n - 1) + ")"
                                 : "SL(" + S(2 * n) + ") = Sp(" + S(2 * n) + ") . S(GL(1)xGL(" +
                                       S(2 * n - 1) + "))";
            i.expected_intersection_dim =
                (row == 1 ? type_sp(2 * n - 2) : type_sp(2 * n - 2).times(ReductiveType::torus(1)))
                    .dimension();
            i.intersection_display = row == 1 ? "Sp(" + S(2 * n - 2) + ")"
                                              : "Gm.Sp(" + S(2 * n - 2) + ")";
            i.k1_t4_spherical = true;
            i.k2_t4_spherical = true;
            add_row(i);
            add_builder(i.id_k1, [self, n, id = i.id_k1] {
                Embedding e = self->embedding("T4.Z.sl" + std::to_string(2 * n) + "-sp" +
                                              std::to_string(2 * n));
                e.id = id;
                return e;
            });
            if (row == 1)
                add_builder(i.id_k2, [self, n, id = i.id_k2] {
                    Embedding e = self->embedding("T4.Z.sl" + std::to_string(2 * n) + "-sl" +
                                                  std::to_string(2 * n - 1));
                    e.id = id;
                    return e;
                });
            else
                add_builder(i.id_k2, [self, n, id = i.id_k2] {
                    Embedding e = self->embedding("T4.Z.sl" + std::to_string(2 * n) + "-sgl" +
                                                  std::to_string(2 * n - 1) + "gl1");
                    e.id = id;
                    return e;
                });
        }
    }
    // rows 3-4: SO(2n+2) = SO(2n+1) . SL(n+1) / Gm.SL(n+1), n > 2
    for (size_t n = 3; 2 * n + 2 <= cap; ++n) {
        for (size_t row : {size_t(3), size_t(4)}) {
            T3Instance i;
            i.row = row;
            i.parent = "so" + S(2 * n + 2);
            i.id_k1 = "T3." + S(row) + ".K1@n" + S(n);
            i.id_k2 = "T3." + S(row) + ".K2@n" + S(n);
            i.display = "SO(" + S(2 * n + 2) + ") = SO(" + S(2 * n + 1) + ") . " +
                        (row == 3 ? "SL(" + S(n + 1) + ")" : "Gm.SL(" + S(n + 1) + ")");
            i.expected_intersection_dim =
                (row == 3 ? type_sl(n) : type_gl(n)).dimension();
            i.intersection_display = row == 3 ? "SL(" + S(n) + ")" : "Gm.SL(" + S(n) + ")";
            i.k1_t4_spherical = true;
            i.k2_t4_spherical = (row == 4) || (n % 2 == 0);  // SL(n+1) needs n+1 odd
            i.note = row == 3 ? "table constraint: n > 2; Table 1 additionally requires n even"
                              : "Table 1 carries 'n even'; the certificate is evaluated for all n";
            add_row(i);
            add_builder(i.id_k1, [self, n, id = i.id_k1] {
                Embedding e = self->embedding("T4.Z.so" + std::to_string(2 * n + 2) + "-so" +
                                              std::to_string(2 * n + 1));
                e.id = id;
                return e;
            });
            add_builder(i.id_k2, [self, n, row, id = i.id_k2] {
                if (row == 4) {
                    Embedding e = self->embedding("T4.Z.so" + std::to_string(2 * n + 2) + "-gl" +
                                                  std::to_string(n + 1));
                    e.id = id;
                    return e;
                }
                size_t N = 2 * n + 2;
                const Realization& par = self->realization("so" + std::to_string(N));
                const Realization& sl = self->realization("sl" + std::to_string(n + 1));
                EmbeddingMeta m = self->meta_of(type_sl(n + 1));
                m.table_refs = {{"T3", std::to_string(row)}};
                return map_realization(par, sl, gl_block_map(N), id, m);
            });
        }
    }
    // rows 5-7: SO(4n) = SO(4n-1) . {Sp(2n), Gm.Sp(2n), SL(2)xSp(2n)}, n > 1
    for (size_t n = 2; 4 * n <= cap; ++n) {
        for (size_t row : {size_t(5), size_t(6), size_t(7)}) {
            T3Instance i;
            i.row = row;
            i.parent = "so" + S(4 * n);
            i.id_k1 = "T3." + S(row) + ".K1@n" + S(n);
            i.id_k2 = "T3." + S(row) + ".K2@n" + S(n);
            std::string k2name = row == 5 ? "Sp(" + S(2 * n) + ")"
                                : row == 6 ? "Gm.Sp(" + S(2 * n) + ")"
                                           : "SL(2)xSp(" + S(2 * n) + ")";
            i.display = "SO(" + S(4 * n) + ") = SO(" + S(4 * n - 1) + ") . " + k2name;
            ReductiveType inter = row == 5 ? type_sp(2 * n - 2)
                                  : row == 6
                                      ? type_sp(2 * n - 2).times(ReductiveType::torus(1))
                                      : type_sp(2).times(type_sp(2 * n - 2));
            i.expected_intersection_dim = inter.dimension();
            i.intersection_display = row == 5 ? "Sp(" + S(2 * n - 2) + ")"
                                   : row == 6 ? "Gm.Sp(" + S(2 * n - 2) + ")"
                                              : "SL(2)xSp(" + S(2 * n - 2) + ")";
            i.k1_t4_spherical = true;
            i.k2_t4_spherical = false;  // curated: not among the listed table classes
            if (row == 7)
                i.note = "the tensor factor computes as spherical (it matches an orthogonal "
                         "product class up to outer twist); the curated assembly follows the "
                         "source tables";
            add_row(i);
            add_builder(i.id_k1, [self, n, id = i.id_k1] {
                Embedding e = self->embedding("T4.Z.so" + std::to_string(4 * n) + "-so" +
                                              std::to_string(4 * n - 1));
                e.id = id;
                return e;
            });
            add_builder(i.id_k2, [self, n, row, id = i.id_k2] {
                const Realization& par = self->realization("so" + std::to_string(4 * n));
                auto tm = tensor_sp_sp_maps(2, 2 * n);
                const Realization& sp = self->realization("sp" + std::to_string(2 * n));
                Embedding right = map_realization(par, sp, tm.right, id + "#sp",
                                                  self->meta_of(type_sp(2 * n)));
                if (row == 5) {
                    right.id = id;
                    return right;
                }
                const Realization& sp2 = self->realization("sp2");
                Embedding left = map_realization(par, sp2, tm.left, id + "#sl2",
                                                 self->meta_of(type_sp(2)));
                if (row == 7) return product_embedding(par, left, right, id);
                Embedding gm = torus_embedding(par, left.cochars[0], id + "#gm");
                return product_embedding(par, gm, right, id);
            });
        }
    }
    // row 8: SO(16) = SO(15) . SO(9), metadata only
    {
        T3Instance i;
        i.row = 8;
        i.parent = "";
        i.display = "SO(16) = SO(15) . SO(9)";
        i.expected_intersection_dim = type_so(7).dimension();
        i.intersection_display = "SO(7)";
        i.metadata_only = true;
        i.k1_t4_spherical = true;
        i.k2_t4_spherical = false;
        i.dim_g = type_so(16).dimension();
        i.dim_k1 = type_so(15).dimension();
        i.dim_k2 = type_so(9).dimension();
        i.note = "needs the spin embedding into so(16); catalog data only";
        add_row(i);
    }
    // rows 9-14: SO(8) = SO(7)+ . {SO(5), Gm.SO(5), SL(2)xSO(5), SO(6), Gm.SO(6), SO(7)-}
    if (cap >= 8) {
        struct So8Row {
            size_t row;
            const char* k2name;
            ReductiveType inter;
            const char* inter_name;
            bool k2_spherical_tag;
        };
        std::vector<So8Row> rows = {
            {9, "SO(5)", type_sp(2), "SL(2)", false},
            {10, "Gm.SO(5)", type_sp(2).times(ReductiveType::torus(1)), "Gm.SL(2)", false},
            {11, "SL(2)xSO(5)", type_sp(2).times(type_sp(2)), "SL(2)xSL(2)", false},
            {12, "SO(6)", type_sl(3), "SL(3)", false},
            {13, "Gm.SO(6)", type_sl(3).times(ReductiveType::torus(1)), "Gm.SL(3)", true},
            {14, "SO(7)", ReductiveType::simple(Family::G, 2), "G2", true},
        };
        for (const auto& r : rows) {
            T3Instance i;
            i.row = r.row;
            i.parent = "so8";
            i.id_k1 = "T3." + S(r.row) + ".K1";
            i.id_k2 = "T3." + S(r.row) + ".K2";
            i.display = std::string("SO(8) = SO(7)+ . ") + r.k2name;
            i.expected_intersection_dim = r.inter.dimension();
            i.intersection_display = r.inter_name;
            i.needs_spin = true;
            i.k1_t4_spherical = true;
            i.k2_t4_spherical = r.k2_spherical_tag;
            if (r.row == 11)
                i.note = "the corner SO(3)xSO(5) model realizes the certificate and computes "
                         "as spherical; the curated assembly follows the source tables";
            add_row(i);
            add_builder(i.id_k1, [self, id = i.id_k1] {
                Embedding e = self->embedding("so8.spin7");
                e.id = id;
                return e;
            });
            size_t row = r.row;
            add_builder(i.id_k2, [self, row, id = i.id_k2] {
                const Realization& par = self->realization("so8");
                switch (row) {
                    case 9: {
                        Embedding e = self->lift(par, so_sub_map(8, 5),
                                                 self->embedding("so5.full"), id,
                                                 self->meta_of(type_so(5)));
                        return e;
                    }
                    case 10: {
                        Embedding so5 = self->lift(par, so_sub_map(8, 5),
                                                   self->embedding("so5.full"), id + "#so5",
                                                   self->meta_of(type_so(5)));
                        Matrix D0 = Matrix::unit(8, 0, 0) - Matrix::unit(8, 7, 7);
                        Embedding gm = torus_embedding(par, D0, id + "#gm");
                        return product_embedding(par, gm, so5, id);
                    }
                    case 11: {
                        Embedding e = self->embedding("T4.Z.so8-so5xso3");
                        e.id = id;
                        return e;
                    }
                    case 12: {
                        Embedding e = self->lift(par, so_sub_map(8, 6, Placement::Outer),
                                                 self->embedding("so6.full"), id,
                                                 self->meta_of(type_so(6)));
                        return e;
                    }
                    case 13: {
                        Embedding e = self->embedding("T4.Z.so8-so6xso2");
                        e.id = id;
                        return e;
                    }
                    default: {
                        Embedding e = self->lift(par, so_sub_map(8, 7),
                                                 self->embedding("so7.full"), id,
                                                 self->meta_of(type_so(7)));
                        return e;
                    }
                }
            });
        }
    }
    // rows 15-17: SO(7) = G2 . {SO(5), Gm.SO(5), SO(6)}
    if (cap >= 7) {
        struct So7Row {
            size_t row;
            const char* k2name;
            ReductiveType inter;
            const char* inter_name;
            bool k2_tag;
        };
        std::vector<So7Row> rows = {
            {15, "SO(5)", type_sp(2), "SL(2)", false},
            {16, "Gm.SO(5)", type_sp(2).times(ReductiveType::torus(1)), "Gm.SL(2)", true},
            {17, "SO(6)", type_sl(3), "SL(3)", true},
        };
        for (const auto& r : rows) {
            T3Instance i;
            i.row = r.row;
            i.parent = "so7";
            i.id_k1 = "T3." + S(r.row) + ".K1";
            i.id_k2 = "T3." + S(r.row) + ".K2";
            i.display = std::string("SO(7) = G2 . ") + r.k2name;
            i.expected_intersection_dim = r.inter.dimension();
            i.intersection_display = r.inter_name;
            i.k1_t4_spherical = true;
            i.k2_t4_spherical = r.k2_tag;
            add_row(i);
            add_builder(i.id_k1, [self, id = i.id_k1] {
                Embedding e = self->embedding("T4.Z.so7-g2");
                e.id = id;
                return e;
            });
            size_t row = r.row;
            add_builder(i.id_k2, [self, row, id = i.id_k2] {
                const Realization& par = self->realization("so7");
                if (row == 15)
                    return self->lift(par, so_sub_map(7, 5), self->embedding("so5.full"), id,
                                      self->meta_of(type_so(5)));
                if (row == 16) {
                    Embedding e = self->embedding("T4.Z.so7-so5xso2");
                    e.id = id;
                    return e;
                }
                Embedding e = self->embedding("T4.Z.so7-so6");
                e.id = id;
                return e;
            });
        }
    }
}

inline void Catalog::register_t1() {
    auto row = [&](size_t no, std::string g, std::string h, std::string k, std::string constraint,
                   bool levi, bool sym, bool sel, std::string parent, std::string h_id,
                   std::vector<size_t> subset, size_t from) {
        T1Row r;
        r.no = no;
        r.g_desc = std::move(g);
        r.h_desc = std::move(h);
        r.k_desc = std::move(k);
        r.constraint = std::move(constraint);
        r.k_is_levi = levi;
        r.h_symmetric = sym;
        r.selected = sel;
        r.parent = std::move(parent);
        r.h_id = std::move(h_id);
        r.k_subset = std::move(subset);
        r.from_t3_row = from;
        t1_.push_back(std::move(r));
    };
    row(1, "SL(2n)", "Sp(2n)", "SL(2n-1)", "n > 1", false, true, false, "sl4", "T4.Z.sl4-sp4", {},
        1);
    row(2, "SL(2n)", "Sp(2n)", "S(GL(1)xGL(2n-1))", "n > 1", true, true, true, "sl4",
        "T4.Z.sl4-sp4", {1, 2}, 2);
    row(3, "SO(2n+2)", "SO(2n+1)", "SL(n+1)", "n > 2, n even", false, true, false, "so10",
        "T4.Z.so10-so9", {}, 3);
    row(4, "SO(2n+2)", "SO(2n+1)", "Gm.SL(n+1)", "n > 2, n even", true, true, true, "so10",
        "T4.Z.so10-so9", {0, 1, 2, 3}, 4);
    row(5, "SO(8)", "SO(7)+", "Gm.SO(6)", "", true, true, true, "so8", "so8.spin7", {1, 2, 3},
        13);
    row(6, "SO(8)", "SO(7)+", "SO(7)-", "", false, true, false, "so8", "so8.spin7", {}, 14);
    row(7, "SO(7)", "G2", "Gm.SO(5)", "", true, false, true, "so7", "T4.Z.so7-g2", {1, 2}, 16);
    row(8, "SO(7)", "G2", "SO(6)", "", false, false, false, "so7", "T4.Z.so7-g2", {}, 17);
}

inline void Catalog::register_all() {
    register_t4();
    register_t3();
    register_t1();
}

// ---------------------------------------------------------------------------
// type-level Table 4 enumeration for the rank-bounded classification
// ---------------------------------------------------------------------------

inline std::vector<Catalog::TypePair> Catalog::t4_type_pairs(size_t max_rank) const {
    std::vector<TypePair> out;
    auto S = [](size_t v) { return std::to_string(v); };
    auto push = [&](size_t fam, int col, ReductiveType g, ReductiveType h, std::string disp) {
        if (g.total_rank() > max_rank) return;
        out.push_back({fam, col, std::move(g), std::move(h), std::move(disp)});
    };
    // classical families, enumerated straight from the table definitions
    for (size_t n = 2; n - 1 <= max_rank + 1 && n <= 2 * max_rank + 2; ++n) {
        push(1, 0, type_sl(n), type_so(n), "(SL(" + S(n) + "), SO(" + S(n) + "))");
    }
    for (size_t m = 1; m <= 2 * max_rank; ++m)
        for (size_t n = 1; n <= m && m + n <= 2 * max_rank + 2; ++n) {
            push(2, 0, type_sl(m + n), type_sl(m).times(type_sl(n)).times(ReductiveType::torus(1)),
                 "(SL(" + S(m + n) + "), S(GL(" + S(m) + ")xGL(" + S(n) + ")))");
            if (m > n)
                push(3, 0, type_sl(m + n), type_sl(m).times(type_sl(n)),
                     "(SL(" + S(m + n) + "), SL(" + S(m) + ")xSL(" + S(n) + "))");
        }
    for (size_t n = 1; 2 * n + 1 <= 2 * max_rank + 2; ++n) {
        push(4, 0, type_sl(2 * n + 1), type_sp(2 * n).times(ReductiveType::torus(1)),
             "(SL(" + S(2 * n + 1) + "), Gm.Sp(" + S(2 * n) + "))");
        push(5, 0, type_sl(2 * n + 1), type_sp(2 * n),
             "(SL(" + S(2 * n + 1) + "), Sp(" + S(2 * n) + "))");
    }
    for (size_t n = 2; 2 * n <= 2 * max_rank + 2; ++n)
        push(6, 0, type_sl(2 * n), type_sp(2 * n),
             "(SL(" + S(2 * n) + "), Sp(" + S(2 * n) + "))");
    for (size_t n = 1; n <= max_rank; ++n) {
        push(7, 0, type_sp(2 * n), type_gl(n), "(Sp(" + S(2 * n) + "), GL(" + S(n) + "))");
        if (n >= 2)
            push(8, 0, type_sp(2 * n), type_sp(2 * n - 2).times(ReductiveType::torus(1)),
                 "(Sp(" + S(2 * n) + "), Gm x Sp(" + S(2 * n - 2) + "))");
    }
    for (size_t m = 2; m <= 2 * max_rank; m += 2)
        for (size_t n = 2; n <= m && m + n <= 2 * max_rank; n += 2)
            push(9, 0, type_sp(m + n), type_sp(m).times(type_sp(n)),
                 "(Sp(" + S(m + n) + "), Sp(" + S(m) + ")xSp(" + S(n) + "))");
    for (size_t n = 3; 2 * n <= 2 * max_rank + 2; n += 2)
        push(10, 0, type_so(2 * n), type_sl(n), "(SO(" + S(2 * n) + "), SL(" + S(n) + "))");
    for (size_t n = 2; n <= max_rank; ++n) {
        push(11, 0, type_so(2 * n), type_gl(n), "(SO(" + S(2 * n) + "), GL(" + S(n) + "))");
        push(12, 0, type_so(2 * n + 1), type_gl(n),
             "(SO(" + S(2 * n + 1) + "), GL(" + S(n) + "))");
    }
    for (size_t m = 2; m <= 2 * max_rank + 2; ++m)
        for (size_t n = 1; n <= m && m + n <= 2 * max_rank + 2; ++n) {
            if (m + n < 3) continue;
            push(13, 0, type_so(m + n), type_so(m).times(type_so(n)),
                 "(SO(" + S(m + n) + "), SO(" + S(m) + ")xSO(" + S(n) + "))");
        }
    push(14, 0, type_so(7), ReductiveType::simple(Family::G, 2), "(SO(7), G2)");
    push(15, 0, type_so(8), ReductiveType::simple(Family::G, 2), "(SO(8), G2)");
    push(16, 0, type_so(9), type_so(7), "(SO(9), Spin(7))");
    push(17, 0, type_so(10), type_so(7).times(ReductiveType::torus(1)),
         "(SO(10), SO(2)xSpin(7))");
    // exceptional metadata rows participate in the type filter as data
    // (complexity one exceptionals are pushed below with the O column)
    for (const auto& i : t4_)
        if (i.column == 0 && i.metadata_only && i.parent.empty() &&
            i.g_type.simple_factors.size() == 1 &&
            (i.g_type.simple_factors[0].family == Family::G ||
             i.g_type.simple_factors[0].family == Family::F ||
             i.g_type.simple_factors[0].family == Family::E))
            push(i.family, i.column, i.g_type, i.h_type, i.display);

    // complexity one column
    for (size_t n = 1; 2 * n <= 2 * max_rank + 2; ++n)
        push(101, 1, type_sl(2 * n), type_sl(n).times(type_sl(n)),
             n == 1 ? "(SL(2), {e})"
                    : "(SL(" + S(2 * n) + "), SL(" + S(n) + ")xSL(" + S(n) + "))");
    for (size_t n = 3; n <= 2 * max_rank + 2; ++n) {
        if (n >= 5)
            push(102, 1, type_sl(n), type_sl(n - 2).times(ReductiveType::torus(1)),
                 "(SL(" + S(n) + "), Gm x SL(" + S(n - 2) + "))");
        push(103, 1, type_sl(n), type_sl(n - 2).times(ReductiveType::torus(2)),
             "(SL(" + S(n) + "), Gm^2 x SL(" + S(n - 2) + "))");
    }
    push(104, 1, type_sl(6), type_sl(2).times(type_sp(4)).times(ReductiveType::torus(1)),
         "(SL(6), Gm x SL(2) x Sp(4))");
    for (size_t n = 1; n <= max_rank; ++n) {
        push(105, 1, type_sp(2 * n),
             n == 1 ? ReductiveType::trivial() : type_sp(2 * n - 2),
             n == 1 ? "(Sp(2), {e})"
                    : "(Sp(" + S(2 * n) + "), Sp(" + S(2 * n - 2) + "))");
        if (n >= 3)
            push(106, 1, type_sp(2 * n), type_sp(2 * n - 4).times(type_sp(2)).times(type_sp(2)),
                 "(Sp(" + S(2 * n) + "), Sp(" + S(2 * n - 4) + ")xSL(2)xSL(2))");
        if (n >= 2)
            push(107, 1, type_sp(2 * n), type_sl(n), "(Sp(" + S(2 * n) + "), SL(" + S(n) + "))");
    }
    for (size_t n = 4; n <= 2 * max_rank + 2; ++n)
        push(108, 1, type_so(n), type_so(n - 2), "(SO(" + S(n) + "), SO(" + S(n - 2) + "))");
    for (size_t n = 2; 2 * n + 1 <= 2 * max_rank + 1; ++n)
        push(109, 1, type_so(2 * n + 1), type_sl(n),
             "(SO(" + S(2 * n + 1) + "), SL(" + S(n) + "))");
    for (size_t n = 2; 4 * n <= 2 * max_rank + 2; ++n)
        push(110, 1, type_so(4 * n), type_sl(2 * n),
             "(SO(" + S(4 * n) + "), SL(" + S(2 * n) + "))");
    push(111, 1, type_so(11), type_so(3).times(type_so(7)), "(SO(11), SO(3)xSpin(7))");
    push(112, 1, type_so(10), type_so(7), "(SO(10), Spin(7))");
    push(113, 1, type_so(9),
         ReductiveType::simple(Family::G, 2).times(ReductiveType::torus(1)),
         "(SO(9), G2 x SO(2))");
    push(114, 1, ReductiveType::simple(Family::F, 4), ReductiveType::simple(Family::D, 4),
         "(F4, D4)");
    push(115, 1, ReductiveType::simple(Family::E, 6),
         ReductiveType::simple(Family::B, 4).times(ReductiveType::torus(1)), "(E6, Gm x B4)");
    push(116, 1, ReductiveType::simple(Family::E, 7), ReductiveType::simple(Family::E, 6),
         "(E7, E6)");
    return out;
}

}  // namespace cxpair
