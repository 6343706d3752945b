#include <catch2/catch_amalgamated.hpp>

#include "ehrhart/lattice.hpp"
#include "ehrhart/polytopes.hpp"

using namespace ehrhart;

TEST_CASE("family constructors") {
    CHECK(standard_simplex(1).vertices.size() == 2);
    CHECK(standard_simplex(3).vertices.size() == 4);
    CHECK(cross_polytope(1).vertices.size() == 2);
    CHECK(cross_polytope(3).vertices.size() == 6);
    CHECK(reeve(2).vertices.size() == 4);
    CHECK(hypersimplex(4, 2).vertices.size() == 6);
    CHECK(hypersimplex(3, 1).vertices.size() == 3);
    CHECK(permutahedron(1).generators.size() == 1);
    CHECK(permutahedron(3).generators.size() == 6);
    CHECK(unit_cube(2).vertices.size() == 4);
    CHECK(lecture_hall(IntVector{7, 1, 7}).vertices.size() == 4);

    CHECK_THROWS_AS(standard_simplex(0), std::domain_error);
    CHECK_THROWS_AS(cross_polytope(0), std::domain_error);
    CHECK_THROWS_AS(reeve(0), std::domain_error);
    CHECK_THROWS_AS(chiseled_pm_cube(1), std::domain_error);
    CHECK_THROWS_AS(hypersimplex(4, 4), std::domain_error);
    CHECK_THROWS_AS(delta_1q(IntVector{2, 1}), std::domain_error);   // not increasing
    CHECK_THROWS_AS(delta_1q(IntVector{0, 1}), std::domain_error);   // not positive
    CHECK_THROWS_AS(lecture_hall(IntVector{1, 0}), std::domain_error);
    CHECK_THROWS_AS(payne(0, 2, 2), std::domain_error);
    CHECK_THROWS_AS(payne(1, 3, 2), std::domain_error);  // k < r+2
    CHECK_THROWS_AS(base_r_simplex(1, 3), std::domain_error);
}

TEST_CASE("claimed dimensions hold (rank of vertex differences)") {
    for (const Polytope& p :
         {standard_simplex(4), cross_polytope(3), reeve(6), delta_1q(IntVector{1, 2, 3}),
          payne(0, 3, 2), base_r_simplex(2, 4), lecture_hall(IntVector{7, 1, 7}),
          hypersimplex(4, 2), hypersimplex(5, 2), unit_cube(3), pm_cube(4),
          pyramid(reeve(6), 2)}) {
        INFO(p.label);
        CHECK(affine_rank(p.vertices) == p.dim);
    }
}

TEST_CASE("payne parameters") {
    Polytope p = payne(0, 3, 2);
    CHECK(p.dim == 6);
    // q = (1,1,1,1,1,3)
    CHECK(p.vertices.back() == IntVector{-1, -1, -1, -1, -1, -3});
    CHECK(payne(0, 3, 3).dim == 9);
    CHECK(payne(1, 3, 3).dim == 10);
    CHECK(payne(1, 3, 3).vertices.back().back() == -3);
}

TEST_CASE("base-r simplices") {
    CHECK(base_r_simplex(2, 2).vertices.back() == IntVector{-1, -2});
    CHECK(base_r_simplex(2, 3).vertices.back() == IntVector{-1, -2, -4});
    CHECK(base_r_simplex(3, 2).vertices.back() == IntVector{-2, -6});
}

TEST_CASE("lecture hall vertices satisfy the facets with the right slack") {
    for (const IntVector& s : {IntVector{7, 1, 7}, IntVector{1, 2, 3}, IntVector{2, 3, 1, 4}}) {
        Polytope p = lecture_hall(s);
        REQUIRE(p.hrep.has_value());
        // Fig-2 style check: each vertex lies in P and is tight on dim
        // of the d+1 facets
        for (const IntVector& v : p.vertices) {
            int tight = 0;
            for (std::size_t r = 0; r < p.hrep->a.rows(); ++r) {
                Int acc = 0;
                for (std::size_t j = 0; j < v.size(); ++j)
                    acc += p.hrep->a(r, j) * v[j];
                REQUIRE(acc <= p.hrep->b[r]);
                if (acc == p.hrep->b[r])
                    ++tight;
            }
            CHECK(tight >= p.dim);
        }
    }
    SECTION("explicit vertex set for s = (7,1,7)") {
        auto v = lecture_hall(IntVector{7, 1, 7}).vertices;
        REQUIRE(v.size() == 4);
        CHECK(v[0] == IntVector{0, 0, 0});
        CHECK(v[1] == IntVector{0, 0, 7});
        CHECK(v[2] == IntVector{0, 1, 7});
        CHECK(v[3] == IntVector{7, 1, 7});
    }
    SECTION("vrep and hrep agree by dilate counting, d <= 4, t <= 3") {
        for (const IntVector& s : {IntVector{2, 3}, IntVector{7, 1, 7}, IntVector{1, 2, 3, 2}}) {
            Polytope p = lecture_hall(s);
            for (long t = 0; t <= 3; ++t) {
                IntVector rhs(p.hrep->b.size());
                for (std::size_t r = 0; r < rhs.size(); ++r)
                    rhs[r] = Int(t) * p.hrep->b[r];
                Int via_hrep = count_hrep_points(p.hrep->a, rhs, p.hrep->unit_box.scaled(t));
                auto member = [&](const IntVector& x) {
                    return simplex_contains(p.vertices, x, t);
                };
                Int via_vrep =
                    count_lattice_points(member, bounding_box(p.vertices).scaled(t));
                CHECK(via_hrep == via_vrep);
            }
        }
    }
}

TEST_CASE("reeve tetrahedra are empty") {
    for (long h = 1; h <= 20; ++h) {
        Polytope p = reeve(h);
        auto member = [&](const IntVector& x) { return simplex_contains(p.vertices, x, 1); };
        CHECK(count_lattice_points(member, bounding_box(p.vertices)) == 4);
    }
}

TEST_CASE("pyramids") {
    Polytope pyr = pyramid(standard_simplex(2), 1);
    CHECK(pyr.dim == 3);
    CHECK(pyr.vertices.size() == 4);
    CHECK(pyr.ambient_dim() == 3);

    Polytope p2 = pyramid(reeve(6), 2);
    CHECK(p2.dim == 5);
    CHECK(p2.vertices.size() == 6);
    CHECK(p2.label == "pyr^2:reeve:h=6");

    CHECK(pyramid(reeve(6), 0).label == "reeve:h=6");
    CHECK_THROWS_AS(pyramid(chiseled_pm_cube(3), 1), std::invalid_argument);  // no vertices

    SECTION("lattice point count grows by exactly one at t=1") {
        for (const Polytope& base : {standard_simplex(2), reeve(6), lecture_hall(IntVector{2, 3})}) {
            Polytope lifted = pyramid(base, 1);
            auto member_base = [&](const IntVector& x) {
                return simplex_contains(base.vertices, x, 1);
            };
            auto member_lift = [&](const IntVector& x) {
                return simplex_contains(lifted.vertices, x, 1);
            };
            Int before = count_lattice_points(member_base, bounding_box(base.vertices));
            Int after = count_lattice_points(member_lift, bounding_box(lifted.vertices));
            CHECK(after == before + 1);
        }
    }
}

TEST_CASE("family spec parsing") {
    CHECK(parse_family_spec("reeve:h=6").label == "reeve:h=6");
    CHECK(parse_family_spec("payne:r=0,s=3,k=2").dim == 6);
    CHECK(parse_family_spec("lecture-hall:7,1,7").vertices.size() == 4);
    CHECK(parse_family_spec("pyr^2:reeve:h=6").dim == 5);
    CHECK(parse_family_spec("simplex:d=3").vertices.size() == 4);
    CHECK(parse_family_spec("cross:d=4").dim == 4);
    CHECK(parse_family_spec("cube:d=2").dim == 2);
    CHECK(parse_family_spec("pm-cube:d=3").generators.size() == 3);
    CHECK(parse_family_spec("delta1q:1,1,3").dim == 3);
    CHECK(parse_family_spec("base-r:r=2,d=3").dim == 3);
    CHECK(parse_family_spec("chiseled-pm-cube:d=3").hrep.has_value());
    CHECK(parse_family_spec("hypersimplex:d=4,k=2").dim == 3);
    CHECK(parse_family_spec("permutahedron:d=2").generators.size() == 3);

    CHECK_THROWS_AS(parse_family_spec("noridea:d=3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("reeve:h=x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("reeve"), std::invalid_argument);      // missing h
    CHECK_THROWS_AS(parse_family_spec("reeve:h=0"), std::invalid_argument);  // domain
    CHECK_THROWS_AS(parse_family_spec("pyr^0:reeve:h=6"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("pyr^2"), std::invalid_argument);
}
