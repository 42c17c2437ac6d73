#pragma once

// JSON report builders shared by the CLI and the python bindings.
// Exact values are serialized as strings, floats as numbers; every report
// carries "schema": "coxfold/1".

#include <json.hpp>

#include "coxfold/affine.hpp"
#include "coxfold/folding.hpp"
#include "coxfold/lattice.hpp"
#include "coxfold/project.hpp"

namespace coxfold {

using nlohmann::json;

json golden_json(const Golden& x);
json vec_json(const GVec& v);
json mat_json(const GMat& m);
json point_set_json(const PointSet& ps);

json info_report(const DiagramType& t);

// Relation report: r_i^2, braid relations (r_i r_j)^{m_ij}, and the
// dihedral relations R1^2 = R2^2 = (R1 R2)^h = 1, all exact and minimal.
// With `affine`, adds the fractional-label report where one exists and the
// r_{alpha_0} word search for even-h crystallographic types.
json verify_report(const DiagramType& t, bool affine, bool& ok);

// FoldingMap + verification; `with_order` additionally enumerates the
// folded group.
json fold_report(const DiagramType& source, const DiagramType& target,
                 bool with_order, bool& ok);

json orbit_report(const DiagramType& t, const GVec& seed, std::size_t cap);

// what: root-polytope | voronoi | delone | permutohedron | diplo | ball
json cells_report(const std::string& lattice, const std::string& what,
                  const Rational& radius2, std::size_t cap);

// Fractional-label data for the affine dihedral diagram of sys (must have
// the extended root set). Supported: E6, E7, E8, H3, H4.
struct AffineLabelCase {
    int expected_p, expected_q;
    int partner;        // index: bipartite class R1/R2 (E) or simple root (H)
    int candidate_h;    // h used for the 2h/(h-+2), 2h/(h-1) candidate set
};
AffineLabelCase affine_label_case(const DiagramType& t);
FractionalLabelReport affine_fractional_report(const RootSystem& extended_sys);

// The bond label of the affine node against R1 or R2, read off the Coxeter
// plane: the alpha_0 mirror trace and the R_partner mirror meet at angle
// pi q / p, so their product rotates the plane by 2 pi q / p. The rotation
// order p is inferred from the measured angle snapped at 1e-9.
FractionalLabelReport planar_fractional_label(const RootSystem& extended_sys,
                                              int partner, int expected_p,
                                              int expected_q, int candidate_h);

}  // namespace coxfold
