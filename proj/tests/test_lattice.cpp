#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ehrhart/lattice.hpp"
#include "ehrhart/polytopes.hpp"
#include "oracle.hpp"

using namespace ehrhart;

TEST_CASE("hrep membership") {
    Polytope cube = pm_cube(3);
    const HRep& h = *cube.hrep;
    CHECK(hrep_contains(h.a, h.b, IntVector{1, 1, 1}, 1));
    CHECK_FALSE(hrep_contains(h.a, h.b, IntVector{2, 0, 0}, 1));
    CHECK(hrep_contains(h.a, h.b, IntVector{2, 0, 0}, 2));

    Polytope cross = cross_polytope(3);
    const HRep& hc = *cross.hrep;
    CHECK_FALSE(hrep_contains(hc.a, hc.b, IntVector{1, 1, 0}, 1));
    CHECK(hrep_contains(hc.a, hc.b, IntVector{1, 1, 0}, 2));

    // chiseled cube cuts the corner (1,1,1)
    Polytope ch = chiseled_pm_cube(3);
    CHECK_FALSE(hrep_contains(ch.hrep->a, ch.hrep->b, IntVector{1, 1, 1}, 1));
    CHECK(hrep_contains(ch.hrep->a, ch.hrep->b, IntVector{1, 1, 0}, 1));

    CHECK_THROWS_AS(hrep_contains(h.a, h.b, IntVector{0, 0}, 1), std::invalid_argument);
}

TEST_CASE("simplex membership") {
    std::vector<IntVector> tri{{0, 0}, {1, 0}, {0, 1}};
    CHECK(simplex_contains(tri, IntVector{0, 0}, 1));
    CHECK_FALSE(simplex_contains(tri, IntVector{1, 1}, 1));
    CHECK(simplex_contains(tri, IntVector{1, 1}, 2));
    CHECK(simplex_contains(tri, IntVector{0, 0}, 0));  // 0*P = {0}

    // Reeve R_2 is empty: (1,1,1) is not in it
    CHECK_FALSE(simplex_contains(reeve(2).vertices, IntVector{1, 1, 1}, 1));

    std::vector<IntVector> degenerate{{0, 0}, {1, 1}, {2, 2}};
    CHECK_THROWS_AS(simplex_contains(degenerate, IntVector{0, 0}, 1), std::invalid_argument);
}

TEST_CASE("count_lattice_points") {
    // standard 2-simplex at t=2: 6 points
    std::vector<IntVector> tri{{0, 0}, {1, 0}, {0, 1}};
    Box box{{Int(0), Int(0)}, {Int(2), Int(2)}};
    auto member = [&](const IntVector& p) { return simplex_contains(tri, p, 2); };
    CHECK(count_lattice_points(member, box) == 6);

    // octahedron at t=1: 7 points
    Polytope cr = cross_polytope(3);
    auto cross_member = [&](const IntVector& p) {
        return hrep_contains(cr.hrep->a, cr.hrep->b, p, 1);
    };
    CHECK(count_lattice_points(cross_member, cr.hrep->unit_box) == 7);

    // [0,1]^3 at t=2: 27
    Polytope uc = unit_cube(3);
    auto cube_member = [&](const IntVector& p) {
        return hrep_contains(uc.hrep->a, uc.hrep->b, p, 2);
    };
    CHECK(count_lattice_points(cube_member, uc.hrep->unit_box.scaled(2)) == 27);

    // empty box
    CHECK(count_lattice_points([](const IntVector&) { return true; },
                               Box{{Int(1)}, {Int(0)}}) == 0);

    SECTION("invariant under box partition") {
        auto all = count_lattice_points(cross_member, Box{{Int(-1), Int(-1), Int(-1)},
                                                          {Int(1), Int(1), Int(1)}});
        Int split = count_lattice_points(cross_member, Box{{Int(-1), Int(-1), Int(-1)},
                                                           {Int(0), Int(1), Int(1)}}) +
                    count_lattice_points(cross_member,
                                         Box{{Int(1), Int(-1), Int(-1)}, {Int(1), Int(1), Int(1)}});
        CHECK(all == split);
    }

    SECTION("invariant under random recursive partitions") {
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<long> coord(-5, 5), weight(1, 7);
        for (int trial = 0; trial < 20; ++trial) {
            Box whole{IntVector(3), IntVector(3)};
            for (int i = 0; i < 3; ++i) {
                long a = coord(rng), b = coord(rng);
                whole.lo[i] = std::min(a, b);
                whole.hi[i] = std::max(a, b);
            }
            long w0 = weight(rng), w1 = weight(rng), w2 = weight(rng), m = weight(rng) + 1;
            auto member = [&](const IntVector& p) {
                Int dot = w0 * p[0] + w1 * p[1] + w2 * p[2];
                Int r;
                mpz_fdiv_r(r.get_mpz_t(), dot.get_mpz_t(), Int(m).get_mpz_t());
                return r == 0;
            };
            // split recursively at random axes into disjoint sub-boxes
            std::vector<Box> parts{whole};
            for (int cut = 0; cut < 3; ++cut) {
                std::vector<Box> next;
                for (const Box& b : parts) {
                    int axis = static_cast<int>(rng() % 3);
                    if (b.lo[axis] >= b.hi[axis]) {
                        next.push_back(b);
                        continue;
                    }
                    long span = b.hi[axis].get_si() - b.lo[axis].get_si();
                    Int mid = b.lo[axis] + static_cast<long>(rng() % span);
                    Box left = b, right = b;
                    left.hi[axis] = mid;
                    right.lo[axis] = mid + 1;
                    next.push_back(left);
                    next.push_back(right);
                }
                parts = std::move(next);
            }
            Int direct = count_lattice_points(member, whole);
            Int pieced = 0;
            for (const Box& b : parts)
                pieced += count_lattice_points(member, b);
            CHECK(direct == pieced);
        }
    }

    SECTION("budget exhaustion raises") {
        CHECK_THROWS_AS(count_lattice_points(cross_member, cr.hrep->unit_box, 5), budget_error);
    }
}

TEST_CASE("pruned hrep counting agrees with the plain scan") {
    for (int t = 0; t <= 3; ++t) {
        Polytope cr = cross_polytope(4);
        IntVector rhs(cr.hrep->b.size());
        for (std::size_t r = 0; r < rhs.size(); ++r)
            rhs[r] = Int(t) * cr.hrep->b[r];
        Int pruned = count_hrep_points(cr.hrep->a, rhs, cr.hrep->unit_box.scaled(t));
        auto member = [&](const IntVector& p) { return hrep_contains(cr.hrep->a, cr.hrep->b, p, t); };
        Int plain = count_lattice_points(member, cr.hrep->unit_box.scaled(t));
        CHECK(pruned == plain);
        CHECK(pruned == oracle::cross_polytope_count(4, t));
    }
}

TEST_CASE("simplex facet systems") {
    auto [a, b] = simplex_hrep(reeve(6).vertices);
    for (int t = 0; t <= 2; ++t) {
        Box box = bounding_box(reeve(6).vertices).scaled(t);
        IntVector rhs(b.size());
        for (std::size_t r = 0; r < rhs.size(); ++r)
            rhs[r] = Int(t) * b[r];
        auto member = [&](const IntVector& p) { return simplex_contains(reeve(6).vertices, p, t); };
        CHECK(count_hrep_points(a, rhs, box) == count_lattice_points(member, box));
    }
}

TEST_CASE("parallelepiped h*") {
    // standard simplices are unimodular: h* = (1,0,...,0)
    for (int d = 1; d <= 4; ++d) {
        HStarVector h = parallelepiped_hstar(standard_simplex(d).vertices);
        CHECK(h.sum() == 1);
        CHECK(h[0] == 1);
    }
    // Reeve: 1 + (h-1)z^2
    CHECK(parallelepiped_hstar(reeve(6).vertices) == HStarVector({1, 0, 5, 0}, 3));
    CHECK(parallelepiped_hstar(reeve(1).vertices) == HStarVector({1, 0, 0, 0}, 3));
    // delta_1q with q = (1,1,1): normalized volume 4
    CHECK(parallelepiped_hstar(delta_1q(IntVector{1, 1, 1}).vertices).sum() == 4);

    std::vector<IntVector> degenerate{{0, 0}, {1, 0}, {2, 0}};
    CHECK_THROWS_AS(parallelepiped_hstar(degenerate), std::invalid_argument);

    SECTION("entry sum equals |det| of the homogenized vertex matrix") {
        for (const Polytope& p :
             {reeve(7), delta_1q(IntVector{2, 3, 5}), lecture_hall(IntVector{1, 2, 3}),
              base_r_simplex(2, 3)}) {
            IntMatrix g(p.vertices[0].size() + 1, p.vertices.size());
            for (std::size_t j = 0; j < p.vertices.size(); ++j) {
                for (std::size_t i = 0; i < p.vertices[0].size(); ++i)
                    g(i, j) = p.vertices[j][i];
                g(p.vertices[0].size(), j) = 1;
            }
            CHECK(parallelepiped_hstar(p.vertices).sum() == abs(determinant(g)));
        }
    }

    SECTION("two-pipeline oracle: SNF h* vs direct counting through simplex_contains") {
        for (const Polytope& p : {reeve(3), delta_1q(IntVector{1, 2, 2}),
                                  lecture_hall(IntVector{3, 1, 4}), standard_simplex(3)}) {
            RationalPolynomial i = hstar_to_ehrhart(parallelepiped_hstar(p.vertices));
            for (long t = 0; t <= p.dim; ++t) {
                auto member = [&](const IntVector& x) { return simplex_contains(p.vertices, x, t); };
                Int direct = count_lattice_points(member, bounding_box(p.vertices).scaled(t));
                CHECK(Rational(i(Rational(t))) == Rational(direct));
            }
        }
    }
}
