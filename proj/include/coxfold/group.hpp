#pragma once

// Finite matrix-group engine over Q(tau): reflections, element orders,
// two-colorings, orbit and full-group BFS, Coxeter relation checks.
// Everything here is exact.

#include <cstdint>
#include <string>
#include <vector>

#include "coxfold/rootsys.hpp"

namespace coxfold {

// Reflection in the hyperplane orthogonal to alpha (standard inner product):
// r(v) = v - 2 (v,alpha)/(alpha,alpha) alpha.
GMat reflection_matrix(const GVec& alpha);

// Smallest m <= cap with M^m = I; 0 means the cap was exceeded.
int element_order(const GMat& m, int cap = 256);

// Proper 2-coloring of the (tree) diagram read off the Cartan matrix;
// 1-based generator indices, the class containing node 1 first. Throws if
// the diagram is not bipartite or a class is not mutually orthogonal.
std::pair<std::vector<int>, std::vector<int>> two_coloring(const GMat& cartan);

struct DihedralGenerators {
    GMat r1;
    GMat r2;
    int h = 0;                          // catalog Coxeter number of the system
    std::vector<int> class1, class2;    // generator indices behind r1/r2
};

// R1, R2 = products of the reflections in each color class. R1^2 = R2^2 =
// (R1 R2)^h = 1 with h minimal, h the Coxeter number of sys.
DihedralGenerators dihedral_generators(const RootSystem& sys);

struct Orbit {
    GVec seed;
    std::vector<GVec> points;  // canonically sorted, duplicate-free
};

Orbit orbit(const std::vector<GMat>& generators, const GVec& seed,
            std::size_t cap = 2000000);

// Exact group order by BFS over matrices with canonical hashing.
mpz_class enumerate_group(const std::vector<GMat>& generators,
                          std::size_t cap = 20000000);

struct RelationCheck {
    std::string word;    // e.g. "(R1 R2)^5"
    int exponent = 0;
    bool holds = false;  // word^exponent = I
    bool minimal = false;
    int actual_order = 0;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass = true;
};

// relations: (sequence of generator indices into `generators`, exponent).
RelationReport verify_relations(
    const std::vector<GMat>& generators,
    const std::vector<std::pair<std::vector<int>, int>>& relations);

// M^T M = I, exactly.
bool is_orthogonal(const GMat& m);

GMat word_matrix(const std::vector<GMat>& generators, const std::vector<int>& word);

}  // namespace coxfold
