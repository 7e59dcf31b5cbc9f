#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <complex>

#include "cxpair/echelon.hpp"
#include "cxpair/linalg.hpp"
#include "cxpair/sampler.hpp"

using namespace cxpair;

namespace {

Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    size_t i = 0;
    for (const auto& r : rows) {
        size_t j = 0;
        for (long v : r) m(i, j++) = Gaussian(v);
        ++i;
    }
    return m;
}

Matrix random_int_matrix(uint64_t seed, uint64_t stream, size_t rows, size_t cols, long bound) {
    DrawStream d(seed, stream);
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m(i, j) = Gaussian(d.nonzero_int(bound));
    return m;
}

/// Independent floating oracle: singular-value rank at tolerance 1e-8.
size_t svd_rank(const Matrix& m, double tol = 1e-8) {
    Eigen::MatrixXcd a(m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            a(i, j) = std::complex<double>(m(i, j).re.get_d(), m(i, j).im.get_d());
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    auto sv = svd.singularValues();
    double cutoff = tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
    size_t r = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > cutoff) ++r;
    return r;
}

}  // namespace

TEST_CASE("gaussian rational arithmetic is exact") {
    Gaussian a(mpq_class(3, 7), mpq_class(-2, 5));
    Gaussian b(mpq_class(-11, 13), mpq_class(1, 3));
    REQUIRE((a + b) - b == a);
    REQUIRE((a * b) / b == a);
    REQUIRE((Gaussian::i() * Gaussian::i()) == Gaussian(-1));
    REQUIRE(Gaussian(0).is_zero());
    REQUIRE_FALSE(Gaussian(mpq_class(1, 1000000)).is_zero());
    REQUIRE_THROWS_AS(a / Gaussian(0), std::domain_error);
}

TEST_CASE("matrix shape violations are errors") {
    Matrix a(2, 3), b(2, 3);
    REQUIRE_THROWS_AS(a * b, std::invalid_argument);
    REQUIRE_NOTHROW(a + b);
    Matrix c(3, 2);
    REQUIRE_NOTHROW(a * c);
}

TEST_CASE("rank: spec cases") {
    REQUIRE(rank(Matrix::identity(3)) == 3);
    REQUIRE(rank(Matrix::zero(2, 4)) == 0);
    // [[1, i], [i, -1]]: second row is i times the first
    Matrix m(2, 2);
    m(0, 0) = Gaussian(1);
    m(0, 1) = Gaussian::i();
    m(1, 0) = Gaussian::i();
    m(1, 1) = Gaussian(-1);
    REQUIRE(rank(m) == 1);
}

TEST_CASE("rank agrees across pivot orders") {
    for (uint64_t s = 0; s < 40; ++s) {
        size_t rows = 1 + s % 9, cols = 1 + (s * 7) % 9;
        Matrix m = random_int_matrix(99, s, rows, cols, 5);
        if (s % 3 == 0) {  // plant rank deficiency: duplicate a row
            for (size_t j = 0; j < cols && rows >= 2; ++j) m(rows - 1, j) = m(0, j);
        }
        size_t a = rank(m, PivotOrder::RowMajor);
        size_t b = rank(m, PivotOrder::ColMajor);
        size_t c = rank(m, PivotOrder::SmallestFirst);
        REQUIRE(a == b);
        REQUIRE(a == c);
    }
}

TEST_CASE("rank equals floating SVD rank on 100 seeded integer matrices") {
    size_t checked = 0;
    for (uint64_t s = 0; s < 100; ++s) {
        size_t rows = 1 + rng::at(5, s, 0) % 30;
        size_t cols = 1 + rng::at(5, s, 1) % 30;
        Matrix m = random_int_matrix(1234, s, rows, cols, 9);
        REQUIRE(rank(m) == svd_rank(m));
        ++checked;
    }
    REQUIRE(checked == 100);
}

TEST_CASE("rank invariant under column permutation") {
    Matrix m = random_int_matrix(77, 0, 6, 8, 9);
    Matrix p(8, 8);
    // a fixed permutation
    size_t perm[8] = {3, 1, 7, 0, 6, 2, 5, 4};
    for (size_t j = 0; j < 8; ++j) p(perm[j], j) = Gaussian(1);
    REQUIRE(rank(m * p) == rank(m));
}

TEST_CASE("subspace sum and intersection dimensions") {
    auto e = [](size_t i, size_t dim) {
        std::vector<Gaussian> v(dim);
        v[i] = Gaussian(1);
        return v;
    };
    Subspace a(3), b(3);
    a.add_vector(e(0, 3));
    b.add_vector(e(1, 3));
    REQUIRE(sum_dim(a, b) == 2);
    REQUIRE(sum_dim(a, a) == a.dim());

    Subspace c(3);  // span{e1 + e2}
    std::vector<Gaussian> v(3);
    v[0] = Gaussian(1);
    v[1] = Gaussian(1);
    c.add_vector(v);
    Subspace d(3);
    d.add_vector(e(0, 3));
    d.add_vector(e(1, 3));
    REQUIRE(sum_dim(c, d) == 2);

    Subspace p(3), q(3);
    p.add_vector(e(0, 3));
    p.add_vector(e(1, 3));
    q.add_vector(e(1, 3));
    q.add_vector(e(2, 3));
    REQUIRE(intersection_dim(p, q) == 1);

    Subspace l1(2), l2(2);
    l1.add_vector({Gaussian(1), Gaussian(0)});
    l2.add_vector({Gaussian(1), Gaussian(1)});
    REQUIRE(intersection_dim(l1, l2) == 0);
    REQUIRE(intersection_dim(c, d) == c.dim());  // containment

    Subspace w(4);
    REQUIRE_THROWS_AS(sum_dim(a, w), std::invalid_argument);
}

TEST_CASE("modular law dim(A cap B) + dim(A+B) = dim A + dim B on random spans") {
    for (uint64_t s = 0; s < 25; ++s) {
        size_t dim = 4 + s % 4;
        DrawStream d(31, s);
        auto rand_space = [&](size_t count) {
            Subspace sp(dim);
            for (size_t k = 0; k < count; ++k) {
                std::vector<Gaussian> v(dim);
                for (size_t i = 0; i < dim; ++i) v[i] = Gaussian(d.nonzero_int(4));
                sp.add_vector(v);
            }
            return sp;
        };
        Subspace a = rand_space(1 + s % 3), b = rand_space(1 + (s / 3) % 4);
        REQUIRE(intersection_dim(a, b) + sum_dim(a, b) == a.dim() + b.dim());
        Subspace meet = intersection(a, b);
        REQUIRE(meet.dim() == intersection_dim(a, b));
        for (const auto& v : meet.vectors()) {
            REQUIRE(a.contains(v));
            REQUIRE(b.contains(v));
        }
    }
}

TEST_CASE("nullspace and solve") {
    Matrix m = from_ints({{1, 2, 3}, {2, 4, 6}});
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns)
        for (size_t i = 0; i < 2; ++i) {
            Gaussian s;
            for (size_t j = 0; j < 3; ++j) s += m(i, j) * v[j];
            REQUIRE(s.is_zero());
        }
    auto sol = solve_linear(from_ints({{2, 0}, {0, 4}}), {Gaussian(6), Gaussian(8)});
    REQUIRE(sol);
    REQUIRE((*sol)[0] == Gaussian(3));
    REQUIRE((*sol)[1] == Gaussian(2));
    auto bad = solve_linear(from_ints({{1, 1}, {1, 1}}), {Gaussian(0), Gaussian(1)});
    REQUIRE_FALSE(bad);
}

TEST_CASE("inverse throws on singular") {
    REQUIRE_THROWS_AS(inverse(from_ints({{1, 2}, {2, 4}})), std::domain_error);
    Matrix a = from_ints({{1, 2}, {3, 4}});
    REQUIRE(inverse(a) * a == Matrix::identity(2));
}

TEST_CASE("echelon basis incremental span") {
    EchelonBasis eb(3);
    REQUIRE(eb.add({Gaussian(1), Gaussian(2), Gaussian(3)}));
    REQUIRE_FALSE(eb.add({Gaussian(2), Gaussian(4), Gaussian(6)}));
    REQUIRE(eb.add({Gaussian(0), Gaussian(1), Gaussian(0)}));
    REQUIRE(eb.dim() == 2);
    REQUIRE(eb.contains({Gaussian(1), Gaussian(7), Gaussian(3)}));
    REQUIRE_FALSE(eb.contains({Gaussian(0), Gaussian(0), Gaussian(1)}));
}
