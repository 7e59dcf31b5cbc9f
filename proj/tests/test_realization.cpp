#include <catch2/catch_amalgamated.hpp>

#include "cxpair/realization.hpp"

using namespace cxpair;

TEST_CASE("build dimensions: sl(2), so(7), sp(4)") {
    Realization sl2 = build("sl", 2);
    REQUIRE(sl2.dim() == 3);
    REQUIRE(sl2.borel.dim() == 2);
    REQUIRE(sl2.nil_pos.dim() == 1);

    Realization so7 = build("so", 7);
    REQUIRE(so7.dim() == 21);
    REQUIRE(so7.nil_pos.dim() == 9);

    Realization sp4 = build("sp", 4);
    REQUIRE(sp4.dim() == 10);
    REQUIRE(sp4.nil_pos.dim() == 4);

    REQUIRE_THROWS_AS(build("sp", 5), std::invalid_argument);
    REQUIRE_THROWS_AS(build("xx", 3), std::invalid_argument);
}

TEST_CASE("bracket identities") {
    Realization sl2 = build("sl", 2);
    Matrix e = Matrix::unit(2, 0, 1), f = Matrix::unit(2, 1, 0);
    Matrix h = Matrix::unit(2, 0, 0) - Matrix::unit(2, 1, 1);
    REQUIRE(bracket(e, f) == h);
    REQUIRE(bracket(e, e).is_zero());
    Matrix d1 = Matrix::unit(3, 0, 0), d2 = Matrix::unit(3, 1, 1);
    REQUIRE(bracket(d1, d2).is_zero());
}

TEST_CASE("every built realization validates") {
    std::vector<Realization> rs;
    for (size_t n : {2, 3, 4, 5, 6, 7, 8}) rs.push_back(build("sl", n));
    for (size_t n : {2, 3, 4, 5, 6, 7, 8, 9, 10}) rs.push_back(build("so", n));
    for (size_t n : {2, 4, 6, 8, 10}) rs.push_back(build("sp", n));
    for (size_t n : {1, 2, 3, 4, 5}) rs.push_back(build("gl", n));
    for (const auto& r : rs) {
        ValidationReport rep = validate(r);
        INFO(r.name);
        for (const auto& e : rep.entries) {
            INFO(e.check << " " << e.detail);
            CHECK(e.pass);
        }
        REQUIRE(rep.all_pass());
    }
}

TEST_CASE("validate flags tampered realizations") {
    Realization so3 = build("so", 3);
    SECTION("deleted basis vector breaks closure or dimension") {
        Realization broken = so3;
        broken.basis.pop_back();
        detail::finish_realization(broken);
        ValidationReport rep = validate(broken);
        REQUIRE_FALSE(rep.all_pass());
    }
    SECTION("wrong form breaks the form check") {
        Realization broken = so3;
        broken.form = Matrix::identity(3);
        ValidationReport rep = validate(broken);
        bool form_failed = false;
        for (const auto& e : rep.entries)
            if (e.check == "form-compatibility" && !e.pass) form_failed = true;
        REQUIRE(form_failed);
    }
}

TEST_CASE("adjoint by identity and by unipotent") {
    Realization sl2 = build("sl", 2);
    Subspace cartan = sl2.cartan;
    REQUIRE(adjoint(Matrix::identity(2), cartan).same_span(cartan));

    Matrix u = Matrix::identity(2);
    u(0, 1) = Gaussian(1);
    Subspace moved = adjoint(u, cartan);
    REQUIRE(moved.dim() == 1);
    // direct 2x2 computation: u h u^-1 = [[1, -2], [0, -1]], a different line
    REQUIRE(intersection_dim(moved, cartan) == 0);
    REQUIRE(sum_dim(moved, cartan) == 2);

    Matrix singular(2, 2);
    REQUIRE_THROWS_AS(adjoint(singular, cartan), std::domain_error);
}

TEST_CASE("weyl flip conjugates nil_pos onto nil_neg") {
    for (const auto& spec :
         std::vector<std::pair<std::string, size_t>>{{"sl", 3}, {"so", 5}, {"so", 6}, {"sp", 4}}) {
        Realization r = build(spec.first, spec.second);
        REQUIRE(r.weyl_flip.has_value());
        Matrix w = *r.weyl_flip;
        if (r.form) REQUIRE((w.transpose() * (*r.form) * w) == *r.form);
        Subspace flipped = adjoint(w, r.nil_pos);
        REQUIRE(flipped.same_span(r.nil_neg));
    }
}

TEST_CASE("simple root vectors are designated and lie in the right parts") {
    for (const auto& spec : std::vector<std::pair<std::string, size_t>>{
             {"sl", 4}, {"so", 7}, {"so", 8}, {"sp", 6}, {"gl", 3}}) {
        Realization r = build(spec.first, spec.second);
        REQUIRE(r.simple_pos.size() == r.abstract_type.semisimple_rank());
        for (const auto& e : r.simple_pos) REQUIRE(r.nil_pos.contains(matrix_to_vec(e)));
        for (const auto& f : r.simple_neg) REQUIRE(r.nil_neg.contains(matrix_to_vec(f)));
    }
}
