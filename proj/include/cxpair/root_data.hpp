#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cxpair {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// One simple factor: a family letter and a rank.
struct SimpleType {
    Family family;
    size_t rank;

    SimpleType(Family f, size_t r) : family(f), rank(r) { check(); }

    void check() const {
        switch (family) {
            case Family::A:
            case Family::B:
            case Family::C:
                if (rank < 1) throw std::invalid_argument("rank must be positive");
                break;
            case Family::D:
                if (rank < 2) throw std::invalid_argument("D requires rank >= 2");
                break;
            case Family::E:
                if (rank < 6 || rank > 8) throw std::invalid_argument("E rank in {6,7,8}");
                break;
            case Family::F:
                if (rank != 4) throw std::invalid_argument("F rank is 4");
                break;
            case Family::G:
                if (rank != 2) throw std::invalid_argument("G rank is 2");
                break;
        }
    }

    size_t num_roots() const {
        size_t r = rank;
        switch (family) {
            case Family::A: return r * (r + 1);
            case Family::B:
            case Family::C: return 2 * r * r;
            case Family::D: return 2 * r * (r - 1);
            case Family::E: return r == 6 ? 72 : (r == 7 ? 126 : 240);
            case Family::F: return 48;
            case Family::G: return 12;
        }
        return 0;
    }

    size_t dimension() const { return rank + num_roots(); }
    size_t positive_roots() const { return num_roots() / 2; }

    friend bool operator==(const SimpleType& a, const SimpleType& b) {
        return a.family == b.family && a.rank == b.rank;
    }
    friend bool operator<(const SimpleType& a, const SimpleType& b) {
        if (a.family != b.family) return a.family < b.family;
        return a.rank < b.rank;
    }

    std::string str() const { return std::string(1, char(family)) + std::to_string(rank); }
};

/// Product of simple factors with a central torus.
struct ReductiveType {
    std::vector<SimpleType> simple_factors;
    size_t central_torus_rank = 0;

    ReductiveType() = default;
    ReductiveType(std::vector<SimpleType> factors, size_t torus)
        : simple_factors(std::move(factors)), central_torus_rank(torus) {}

    static ReductiveType torus(size_t rank) { return ReductiveType({}, rank); }
    static ReductiveType simple(Family f, size_t r) { return ReductiveType({SimpleType(f, r)}, 0); }
    static ReductiveType trivial() { return ReductiveType({}, 0); }

    bool is_trivial() const { return simple_factors.empty() && central_torus_rank == 0; }

    size_t dimension() const {
        size_t d = central_torus_rank;
        for (const auto& f : simple_factors) d += f.dimension();
        return d;
    }
    size_t semisimple_rank() const {
        size_t r = 0;
        for (const auto& f : simple_factors) r += f.rank;
        return r;
    }
    size_t total_rank() const { return semisimple_rank() + central_torus_rank; }
    size_t unipotent_dim() const {
        size_t u = 0;
        for (const auto& f : simple_factors) u += f.positive_roots();
        return u;
    }

    ReductiveType times(const ReductiveType& other) const {
        ReductiveType r = *this;
        r.simple_factors.insert(r.simple_factors.end(), other.simple_factors.begin(),
                                other.simple_factors.end());
        r.central_torus_rank += other.central_torus_rank;
        return r;
    }

    friend bool operator==(const ReductiveType& a, const ReductiveType& b) {
        return a.simple_factors == b.simple_factors &&
               a.central_torus_rank == b.central_torus_rank;
    }

    std::string str() const {
        std::string s;
        for (const auto& f : simple_factors) {
            if (!s.empty()) s += "x";
            s += f.str();
        }
        if (central_torus_rank) {
            if (!s.empty()) s += "x";
            s += "T" + std::to_string(central_torus_rank);
        }
        if (s.empty()) s = "e";
        return s;
    }
};

inline size_t dimension(const ReductiveType& t) { return t.dimension(); }
inline size_t unipotent_dim(const ReductiveType& t) { return t.unipotent_dim(); }

/// Canonical form under the low-rank coincidences
/// A1 = B1 = C1, B2 = C2, A3 = D3, D2 = A1 x A1, D1 = one-dimensional torus.
/// Dimension, rank and unipotent dimension are all preserved.
inline ReductiveType coincidence_normalize(const ReductiveType& t) {
    ReductiveType out({}, t.central_torus_rank);
    for (const auto& f : t.simple_factors) {
        if ((f.family == Family::B || f.family == Family::C) && f.rank == 1)
            out.simple_factors.emplace_back(Family::A, 1);
        else if (f.family == Family::C && f.rank == 2)
            out.simple_factors.emplace_back(Family::B, 2);
        else if (f.family == Family::D && f.rank == 3)
            out.simple_factors.emplace_back(Family::A, 3);
        else if (f.family == Family::D && f.rank == 2) {
            out.simple_factors.emplace_back(Family::A, 1);
            out.simple_factors.emplace_back(Family::A, 1);
        } else
            out.simple_factors.push_back(f);
    }
    std::sort(out.simple_factors.begin(), out.simple_factors.end());
    return out;
}

/// The combinatorial filter of the half-reductive classification:
/// the candidate subgroup type must drop the unipotent dimension by exactly
/// one and the semisimple rank by exactly one.
inline bool theorem_a_filter(const ReductiveType& g, const ReductiveType& g1) {
    return g1.unipotent_dim() + 1 == g.unipotent_dim() &&
           g.semisimple_rank() == g1.semisimple_rank() + 1;
}

/// Names for the abstract types of the classical realizations.
inline ReductiveType type_sl(size_t n) {
    if (n < 1) throw std::invalid_argument("sl needs n >= 1");
    if (n == 1) return ReductiveType::trivial();
    return ReductiveType::simple(Family::A, n - 1);
}
inline ReductiveType type_gl(size_t n) {
    if (n < 1) throw std::invalid_argument("gl needs n >= 1");
    if (n == 1) return ReductiveType::torus(1);
    return ReductiveType({SimpleType(Family::A, n - 1)}, 1);
}
inline ReductiveType type_sp(size_t n) {
    if (n < 2 || n % 2) throw std::invalid_argument("sp needs even n >= 2");
    size_t m = n / 2;
    if (m == 1) return ReductiveType::simple(Family::A, 1);  // C1 = A1
    return ReductiveType::simple(Family::C, m);
}
inline ReductiveType type_so(size_t n) {
    if (n < 1) throw std::invalid_argument("so needs n >= 1");
    if (n == 1) return ReductiveType::trivial();
    if (n == 2) return ReductiveType::torus(1);  // D1
    if (n == 3) return ReductiveType::simple(Family::B, 1);
    if (n % 2) return ReductiveType::simple(Family::B, n / 2);
    return ReductiveType::simple(Family::D, n / 2);
}

}  // namespace cxpair
