#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "coxfold/lattice.hpp"

using namespace coxfold;

TEST_CASE("lattice names") {
    CHECK(parse_lattice("A3").kind == LatticeKind::A_root);
    CHECK(parse_lattice("A3*").kind == LatticeKind::A_weight);
    CHECK(parse_lattice("d4").kind == LatticeKind::D);
    CHECK(parse_lattice("Z2").kind == LatticeKind::Z);
    CHECK(parse_lattice("A3*").rank == 3);
    CHECK_THROWS(parse_lattice("Q3"));
    CHECK_THROWS(parse_lattice("D4*"));
}

TEST_CASE("Z2 ball") {
    auto ps = lattice_ball(parse_lattice("Z2"), make_rational(2));
    CHECK(ps.points.size() == 9);  // all of {-1,0,1}^2
    auto unit = lattice_ball(parse_lattice("Z2"), make_rational(1));
    CHECK(unit.points.size() == 5);
}

TEST_CASE("A2 ball of squared radius 2 is the origin plus the six roots") {
    auto ps = lattice_ball(parse_lattice("A2"), make_rational(2));
    CHECK(ps.points.size() == 7);
    int roots = 0;
    for (const auto& p : ps.points)
        if (dot(p, p) == Golden(2)) ++roots;
    CHECK(roots == 6);
}

TEST_CASE("D4 ball of squared radius 2 gives the 24 roots") {
    auto ps = lattice_ball(parse_lattice("D4"), make_rational(2));
    CHECK(ps.points.size() == 25);
}

TEST_CASE("ball respects the cap") {
    CHECK_THROWS_AS((void)lattice_ball(parse_lattice("Z3"), make_rational(100), 10),
                    std::length_error);
}

TEST_CASE("root polytope vertex count n(n+1)") {
    for (int n : {2, 3, 4, 5}) {
        auto ps = root_polytope_an(n);
        CHECK(static_cast<int>(ps.points.size()) == n * (n + 1));
        for (const auto& p : ps.points) CHECK(dot(p, p) == Golden(2));
    }
}

TEST_CASE("Voronoi vertex union 2^{n+1} - 2") {
    for (int n : {2, 3, 4}) {
        auto ps = voronoi_vertices_an(n);
        CHECK(static_cast<int>(ps.points.size()) == (1 << (n + 1)) - 2);
    }
}

TEST_CASE("Delone paired simplices") {
    auto pairs = delone_paired_simplices(4);
    REQUIRE(pairs.size() == 2);
    // orbit of omega_i has C(n+1, i) points
    CHECK(pairs[0].first.points.size() == 5);
    CHECK(pairs[0].second.points.size() == 5);
    CHECK(pairs[1].first.points.size() == 10);
    CHECK(pairs[1].second.points.size() == 10);
    // the paired simplex is the negation of the first
    for (const auto& p : pairs[0].first.points) {
        const auto& q = pairs[0].second.points;
        CHECK(std::count(q.begin(), q.end(), negate(p)) == 1);
    }
}

TEST_CASE("permutohedron vertex count (n+1)!") {
    int fact = 1;
    for (int n : {1, 2, 3, 4, 5}) {
        fact *= n + 1;
        CHECK(static_cast<int>(permutohedron(n).points.size()) == fact);
    }
    CHECK_THROWS(permutohedron(8));
}

TEST_CASE("diplo-simplex") {
    auto ps = diplo_simplex(3);
    CHECK(ps.points.size() == 8);
    for (const auto& p : ps.points) {
        CHECK(std::count(ps.points.begin(), ps.points.end(), negate(p)) == 1);
        CHECK(dot(p, p) == Golden(make_rational(3, 4)));
    }
}

TEST_CASE("point sets are sorted and duplicate-free") {
    for (const PointSet& ps :
         {root_polytope_an(3), voronoi_vertices_an(3), permutohedron(3),
          lattice_ball(parse_lattice("A3"), make_rational(4))}) {
        for (std::size_t i = 1; i < ps.points.size(); ++i)
            CHECK(key_of(ps.points[i - 1]) < key_of(ps.points[i]));
    }
}
