#pragma once

// Simple roots, Cartan matrices, extended roots, weights and the k-vector
// basis for the A/B/C/D/E/F/G families and the folded targets H2/H3/H4,
// I2(m). All coordinates live in Q(tau); ambient inner product is the
// standard one in every case.

#include <optional>
#include <string>
#include <vector>

#include "coxfold/linalg.hpp"

namespace coxfold {

enum class Family { A, B, C, D, E, F, G, H, I2 };

struct DiagramType {
    Family family;
    int rank;
    int dihedral_m = 0;  // I2 only
};

std::string diagram_name(const DiagramType& t);
// Accepts "A4", "e6", "H3", "I2(12)".
DiagramType parse_diagram(const std::string& s);

struct RootSystem {
    DiagramType diagram;
    int ambient_dim = 0;
    std::vector<GVec> simple_roots;     // alpha_1 .. alpha_rank
    std::optional<GVec> extended_root;  // alpha_0 when set
    GMat cartan;
    int coxeter_number = 0;
    mpz_class group_order;
};

struct CatalogEntry {
    int coxeter_number;
    mpz_class group_order;
};

// Coxeter number and group order straight from the classification tables.
// These are stored data; the test suite re-derives them independently.
CatalogEntry catalog(const DiagramType& t);

// k_i = l_i - l_0/(n+1), the n+1 simplex vectors in the (n+1)-dim ambient.
// Sum k_i = 0, (k_i,k_i) = n/(n+1), (k_i,k_j) = -1/(n+1).
std::vector<GVec> k_basis(int n);

// Fundamental weights of a_n: omega_i = k_1 + ... + k_i.
std::vector<GVec> weights_an(int n);

// M_ij = 2(r_i, r_j)/(r_j, r_j).
GMat cartan_matrix(const std::vector<GVec>& roots);

RootSystem build_root_system(const DiagramType& t);

// Returns a copy with the extended (affine) root alpha_0 set. For the
// crystallographic families alpha_0 = -theta with theta the highest root,
// found as the dominant long root of the full root set; for H3/H4 the
// beta_0 combinations are used.
RootSystem extend(const RootSystem& sys);

// (rank+1)^2 Cartan matrix with alpha_0 in the first slot.
GMat extended_cartan(const RootSystem& extended_sys);

// Full root set (orbit closure of the simple roots under simple reflections).
std::vector<GVec> all_roots(const RootSystem& sys);

}  // namespace coxfold
