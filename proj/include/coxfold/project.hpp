#pragma once

// Floating-point boundary: Coxeter-plane and H3/H4 parallel-space
// projections, symmetry certification, and csv/svg emission. Everything
// upstream of this module is exact.

#include <map>
#include <string>
#include <vector>

#include "coxfold/affine.hpp"
#include "coxfold/lattice.hpp"

namespace coxfold {

struct FloatPointSet {
    int dim = 0;
    std::vector<std::vector<double>> points;
    std::string source;
    double tolerance = 1e-8;
};

enum class BasisKind { coxeter_plane, h3_parallel, h4_parallel };

struct ProjectionBasis {
    BasisKind kind;
    // target dim x ambient dim, orthonormal rows
    std::vector<std::vector<double>> rows;
};

// Explicit floating coordinates for k_1..k_{n+1} (n-dim), built from the
// h-th roots of unity; reproduces the exact k-Gram to 1e-12.
std::vector<std::vector<double>> an_k_coordinates(int n);

// The invariant eigenplane on which R1 R2 rotates by 2 pi / h.
ProjectionBasis coxeter_plane_basis(const RootSystem& sys);

// Orthonormalized span of the folded beta-roots (3-dim for H3, 4 for H4).
ProjectionBasis h_parallel_basis(const FoldingMap& h_fold);

FloatPointSet project(const PointSet& points, const ProjectionBasis& basis,
                      double tol = 1e-8);
FloatPointSet project(const std::vector<GVec>& points, const ProjectionBasis& basis,
                      double tol = 1e-8, const std::string& source = "");

// True iff rotating by 2 pi / m about the origin maps the 2-dim set onto
// itself within tolerance.
bool rotation_invariance_check(const FloatPointSet& ps, int m);

// Squared norms clustered at tolerance -> counts, sorted by value.
std::vector<std::pair<double, std::size_t>> shell_classify(const FloatPointSet& ps);

// Max distance of any point from the integer span of the best-fit square
// lattice basis (derived from the two shortest nonzero images).
double square_lattice_fit_residual(const FloatPointSet& ps);

void emit_csv(const FloatPointSet& ps, const std::string& path);
void emit_svg(const FloatPointSet& ps, const std::string& path);

}  // namespace coxfold
