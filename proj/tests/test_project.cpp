#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "coxfold/project.hpp"

using namespace coxfold;

TEST_CASE("floating k coordinates reproduce the exact Gram") {
    for (int n = 2; n <= 10; ++n) {
        auto ks = an_k_coordinates(n);
        REQUIRE(ks.size() == static_cast<std::size_t>(n + 1));
        for (const auto& k : ks) REQUIRE(k.size() == static_cast<std::size_t>(n));
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j) {
                double ip = 0;
                for (int c = 0; c < n; ++c) ip += ks[i][c] * ks[j][c];
                double expect = (i == j ? n : -1.0) / (n + 1);
                CHECK(std::abs(ip - expect) < 1e-12);
            }
    }
}

TEST_CASE("Coxeter plane basis is orthonormal and C-invariant") {
    for (std::string name : {"A4", "D6", "E8"}) {
        auto sys = build_root_system(parse_diagram(name));
        auto basis = coxeter_plane_basis(sys);
        REQUIRE(basis.rows.size() == 2);
        double n00 = 0, n11 = 0, n01 = 0;
        for (std::size_t j = 0; j < basis.rows[0].size(); ++j) {
            n00 += basis.rows[0][j] * basis.rows[0][j];
            n11 += basis.rows[1][j] * basis.rows[1][j];
            n01 += basis.rows[0][j] * basis.rows[1][j];
        }
        CHECK(std::abs(n00 - 1) < 1e-12);
        CHECK(std::abs(n11 - 1) < 1e-12);
        CHECK(std::abs(n01) < 1e-12);

        // R1 R2 acts on the projected picture as rotation by 2 pi / h
        auto gens = dihedral_generators(sys);
        std::vector<GVec> pts = all_roots(sys);
        FloatPointSet img = project(pts, basis, 1e-9, name);
        CHECK(rotation_invariance_check(img, gens.h));
    }
}

TEST_CASE("A3 ball projects onto a square lattice") {
    auto ball = lattice_ball(parse_lattice("A3"), make_rational(6));
    auto basis = coxeter_plane_basis(build_root_system(parse_diagram("A3")));
    FloatPointSet img = project(ball, basis);
    CHECK(img.points.size() > 10);
    CHECK(square_lattice_fit_residual(img) < 1e-9);
    CHECK(rotation_invariance_check(img, 4));
}

TEST_CASE("A4 ball image has 5-fold and 10-fold symmetry") {
    auto ball = lattice_ball(parse_lattice("A4"), make_rational(4));
    auto basis = coxeter_plane_basis(build_root_system(parse_diagram("A4")));
    FloatPointSet img = project(ball, basis);
    CHECK(rotation_invariance_check(img, 5));
    CHECK(rotation_invariance_check(img, 10));
    // and it is not a periodic square arrangement
    CHECK(square_lattice_fit_residual(img) > 1e-3);
}

TEST_CASE("D6 roots project to two icosahedral shells with ratio tau^2") {
    auto roots = all_roots(build_root_system(parse_diagram("D6")));
    auto basis = h_parallel_basis(fold_d6_to_h3());
    REQUIRE(basis.rows.size() == 3);
    FloatPointSet img = project(roots, basis, 1e-6, "D6 roots");
    auto shells = shell_classify(img);
    REQUIRE(shells.size() == 2);
    CHECK(shells[0].second == 30);
    CHECK(shells[1].second == 30);
    double tau = (1 + std::sqrt(5.0)) / 2;
    CHECK(std::abs(shells[1].first / shells[0].first - tau * tau) < 1e-9);
}

TEST_CASE("E8 roots project to two H4 shells with ratio tau^2") {
    auto roots = all_roots(build_root_system(parse_diagram("E8")));
    auto basis = h_parallel_basis(fold_e8_to_h4());
    REQUIRE(basis.rows.size() == 4);
    FloatPointSet img = project(roots, basis, 1e-6, "E8 roots");
    auto shells = shell_classify(img);
    REQUIRE(shells.size() == 2);
    CHECK(shells[0].second == 120);
    CHECK(shells[1].second == 120);
    double tau = (1 + std::sqrt(5.0)) / 2;
    CHECK(std::abs(shells[1].first / shells[0].first - tau * tau) < 1e-9);
}

TEST_CASE("projection deduplicates coincident images") {
    // k_i and k_i + (full-sum) collapse: project the diplo-simplex twice
    auto ps = diplo_simplex(2);
    auto basis = coxeter_plane_basis(build_root_system(parse_diagram("A2")));
    std::vector<GVec> doubled = ps.points;
    doubled.insert(doubled.end(), ps.points.begin(), ps.points.end());
    FloatPointSet img = project(doubled, basis, 1e-9, "doubled");
    CHECK(img.points.size() == ps.points.size());
}

TEST_CASE("csv and svg emission") {
    FloatPointSet ps;
    ps.dim = 2;
    ps.points = {{0.0, 0.0}, {1.0, 0.5}, {-0.25, 1e-17}};
    emit_csv(ps, "/tmp/coxfold_test.csv");
    std::ifstream f("/tmp/coxfold_test.csv");
    std::string line;
    std::getline(f, line);
    CHECK(line == "x,y");
    int rows = 0;
    while (std::getline(f, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 3);

    emit_svg(ps, "/tmp/coxfold_test.svg");
    std::ifstream g("/tmp/coxfold_test.svg");
    std::string all((std::istreambuf_iterator<char>(g)),
                    std::istreambuf_iterator<char>());
    CHECK(all.find("<svg") != std::string::npos);
    CHECK(all.find("circle") != std::string::npos);
    std::remove("/tmp/coxfold_test.csv");
    std::remove("/tmp/coxfold_test.svg");

    FloatPointSet bad;
    bad.dim = 5;
    CHECK_THROWS(emit_csv(bad, "/tmp/coxfold_bad.csv"));
    CHECK_THROWS(emit_svg(bad, "/tmp/coxfold_bad.svg"));
}
