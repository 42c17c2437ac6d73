#pragma once

// Graph foldings onto subgroups with the parent's Coxeter number:
// A_{2n-1} -> C_n, D_n -> B_{n-1}, D_4 -> G_2, D_6 -> H_3, E_6 -> F_4,
// E_7 -> I2(18), E_8 -> I2(30), E_8 -> H_4, plus the generic dihedral folds.

#include <optional>

#include "coxfold/group.hpp"
#include "coxfold/rootsys.hpp"

namespace coxfold {

struct FoldingMap {
    RootSystem source;              // with extended root set
    RootSystem target;              // simple_roots empty for abstract I2 targets
    // Row i = expansion of folded root i in the source simple roots.
    GMat coefficients;
    std::vector<std::vector<int>> generator_words;  // 1-based source indices
    std::optional<GVec> extended_coefficients;      // row for alpha'_0 / beta_0
};

// Folded roots as ambient vectors (coefficients * source simple roots).
std::vector<GVec> folded_roots(const FoldingMap& map);
GVec folded_extended_root(const FoldingMap& map);

// Matrix of each generator word.
std::vector<GMat> folded_generators(const FoldingMap& map);

FoldingMap fold_a2n1_to_cn(int n);   // n >= 2
FoldingMap fold_dn_to_bn1(int n);    // n >= 4
FoldingMap fold_d4_to_g2();
FoldingMap fold_d6_to_h3();
FoldingMap fold_e6_to_f4();
FoldingMap fold_e7_to_i218();
FoldingMap fold_e8_to_i230();
FoldingMap fold_e8_to_h4();
FoldingMap fold_an_to_dihedral(int n);  // n >= 2
FoldingMap fold_dn_to_dihedral(int n);  // n >= 4

// Dispatch by (source, target) names; throws on unsupported pairs.
FoldingMap fold(const DiagramType& source, const DiagramType& target);

// The F4 root system as the first two shells (norms 2 and 4) of the D4 root
// lattice, 24 + 24 vectors.
std::vector<GVec> f4_roots_from_d4();

struct FoldingVerification {
    bool cartan_matches = false;
    bool coxeter_preserved = false;   // order(folded Coxeter element) = source h
    int folded_coxeter_order = 0;
    bool generators_are_reflections = false;  // word matrices act as the folded
                                              // reflections on the folded span
    bool extended_cartan_singular = false;    // crystallographic targets only
    bool ok() const {
        return cartan_matches && coxeter_preserved && generators_are_reflections;
    }
};

FoldingVerification verify_folding(const FoldingMap& map);

}  // namespace coxfold
