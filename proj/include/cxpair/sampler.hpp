#pragma once

#include <cstdint>

#include "cxpair/realization.hpp"

namespace cxpair {

/// Deterministic sampling configuration. Identical config implies an
/// identical sample sequence on every platform: draws come from a
/// counter-based hash stream, never from stateful library generators.
struct SamplerConfig {
    uint64_t seed = 1729;
    long coefficient_bound = 1000;  // numerators/denominators from [-N, N] \ {0}
    size_t samples = 5;
};

namespace rng {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Pure function of (seed, stream, counter).
inline uint64_t at(uint64_t seed, uint64_t stream, uint64_t counter) {
    uint64_t h = splitmix64(seed ^ 0x243f6a8885a308d3ULL);
    h = splitmix64(h ^ splitmix64(stream));
    return splitmix64(h ^ splitmix64(counter));
}

}  // namespace rng

/// Stateless draw cursor over one stream.
class DrawStream {
  public:
    DrawStream(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

    /// Integer from [-N, N] \ {0}.
    long nonzero_int(long bound) {
        uint64_t v = rng::at(seed_, stream_, counter_++);
        long span = 2 * bound;
        long r = long(v % uint64_t(span));  // 0 .. 2N-1
        return r < bound ? r - bound : r - bound + 1;
    }

    /// Nonzero rational p/q with p, q from [-N, N] \ {0}.
    mpq_class nonzero_rational(long bound) {
        long p = nonzero_int(bound);
        long q = nonzero_int(bound);
        mpq_class r(p, q);
        r.canonicalize();
        return r;
    }

  private:
    uint64_t seed_, stream_;
    uint64_t counter_ = 0;
};

namespace detail {

/// Exact torus point of one cocharacter: diag entries c^{a_i}.
inline Matrix cochar_point(const Matrix& cochar, const mpq_class& c) {
    size_t n = cochar.rows();
    Matrix t = Matrix::identity(n);
    for (size_t i = 0; i < n; ++i) {
        mpz_class a = cochar(i, i).re.get_num();  // integral by construction
        if (a == 0) continue;
        bool neg = a < 0;
        unsigned long e = mpz_class(abs(a)).get_ui();
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), c.get_num().get_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), c.get_den().get_mpz_t(), e);
        mpq_class p(num, den);
        p.canonicalize();
        if (neg) p = 1 / p;
        t(i, i) *= Gaussian(p);
    }
    return t;
}

}  // namespace detail

/// Generic group element through the big cell:
///   g = (prod exp(s_i f_i)) * t * (prod exp(r_i e_i)),
/// exponentials exact by nilpotency, t an exact rational torus point.
inline Matrix sample_from_frame(const Frame& f, const SamplerConfig& cfg, uint64_t stream) {
    DrawStream draws(cfg.seed, stream);
    Matrix g = Matrix::identity(f.n);
    for (const auto& neg : f.nil_neg)
        g = g * exp_nilpotent(neg * Gaussian(draws.nonzero_rational(cfg.coefficient_bound)));
    for (const auto& chi : f.cochars)
        g = g * detail::cochar_point(chi, draws.nonzero_rational(cfg.coefficient_bound));
    for (const auto& pos : f.nil_pos)
        g = g * exp_nilpotent(pos * Gaussian(draws.nonzero_rational(cfg.coefficient_bound)));
    return g;
}

/// Sample index -> group element of the realization.
inline Matrix sample_element(const Realization& r, const SamplerConfig& cfg, size_t index) {
    if (index >= cfg.samples) throw std::out_of_range("sample index beyond configured budget");
    return sample_from_frame(r.frame(), cfg, index);
}

/// Two independent samples from disjoint stream positions.
inline std::pair<Matrix, Matrix> sample_pair(const Realization& r, const SamplerConfig& cfg,
                                             size_t index) {
    if (index >= cfg.samples) throw std::out_of_range("sample index beyond configured budget");
    uint64_t base = 0x100000000ULL;
    return {sample_from_frame(r.frame(), cfg, base + 2 * index),
            sample_from_frame(r.frame(), cfg, base + 2 * index + 1)};
}

}  // namespace cxpair
