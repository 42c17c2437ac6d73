#pragma once

// Root/weight lattice point sets and the distinguished A_n polytopes:
// root polytope, Voronoi vertex set, Delone paired simplices, permutohedron,
// diplo-simplex. All vertex sets are exact and canonically sorted.

#include <string>
#include <vector>

#include "coxfold/group.hpp"

namespace coxfold {

struct PointSet {
    std::string label;
    int ambient_dim = 0;
    std::vector<GVec> points;  // duplicate-free, canonically sorted
};

enum class LatticeKind { A_root, A_weight, D, Z };

struct LatticeSpec {
    LatticeKind kind;
    int rank;
};

LatticeSpec parse_lattice(const std::string& s);  // "A3", "A3*", "D4", "Z3"

// All lattice points with squared norm <= radius2 (exact filter over a
// coefficient box bounded through the dual basis).
PointSet lattice_ball(const LatticeSpec& spec, const Rational& radius2,
                      std::size_t cap = 1000000);

// n(n+1) vertices k_i - k_j, i != j.
PointSet root_polytope_an(int n);

// Union of the W(a_n) orbits of all fundamental weights; 2^(n+1) - 2 points.
PointSet voronoi_vertices_an(int n);

// Pairs (orbit(omega_i), orbit(omega_{n+1-i})), i = 1..ceil(n/2).
std::vector<std::pair<PointSet, PointSet>> delone_paired_simplices(int n);

// Orbit of (n+1)P = (n+1)k_1 + n k_2 + ... + k_{n+1}; (n+1)! vertices.
PointSet permutohedron(int n);

// The 2(n+1) vertices +-k_i.
PointSet diplo_simplex(int n);

}  // namespace coxfold
