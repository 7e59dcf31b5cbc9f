#pragma once

#include <vector>

#include "cxpair/linalg.hpp"

namespace cxpair {

/// Incrementally maintained reduced echelon basis over the Gaussian
/// rationals. Used for span-closure computations (generated subalgebras,
/// derived series) where repeated full-rank recomputation would be wasteful.
class EchelonBasis {
  public:
    explicit EchelonBasis(size_t ambient) : ambient_(ambient) {}

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return rows_.size(); }

    /// Reduce v against the basis in place; returns the column of the first
    /// surviving nonzero entry, or ambient_ if v reduces to zero.
    size_t reduce(std::vector<Gaussian>& v) const {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Gaussian& c = v[leads_[r]];
            if (c.is_zero()) continue;
            Gaussian f = c;
            for (size_t j = leads_[r]; j < ambient_; ++j) v[j] -= f * rows_[r][j];
        }
        for (size_t j = 0; j < ambient_; ++j)
            if (!v[j].is_zero()) return j;
        return ambient_;
    }

    bool contains(std::vector<Gaussian> v) const { return reduce(v) == ambient_; }

    /// Add v to the span; returns true if the dimension grew.
    bool add(std::vector<Gaussian> v) {
        size_t lead = reduce(v);
        if (lead == ambient_) return false;
        Gaussian inv = Gaussian(1) / v[lead];
        for (size_t j = lead; j < ambient_; ++j) v[j] *= inv;
        // back-substitute into existing rows to stay fully reduced
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Gaussian& c = rows_[r][lead];
            if (c.is_zero()) continue;
            Gaussian f = c;
            for (size_t j = lead; j < ambient_; ++j) rows_[r][j] -= f * v[j];
        }
        size_t pos = 0;
        while (pos < leads_.size() && leads_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        leads_.insert(leads_.begin() + pos, lead);
        return true;
    }

    Subspace to_subspace() const { return Subspace(ambient_, rows_); }

    const std::vector<std::vector<Gaussian>>& rows() const { return rows_; }

  private:
    size_t ambient_;
    std::vector<std::vector<Gaussian>> rows_;
    std::vector<size_t> leads_;
};

}  // namespace cxpair
