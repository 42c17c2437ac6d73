#pragma once

// Affine reflections and the fractional-label bookkeeping of the affine
// dihedral diagrams. Order checks are exact; only the rotation-angle half of
// a fractional label is floating (1e-9).

#include <array>
#include <optional>
#include <string>

#include "coxfold/folding.hpp"

namespace coxfold {

struct AffineIsometry {
    GMat linear;
    GVec translation;

    GVec apply(const GVec& v) const { return linear * v + translation; }
};

AffineIsometry compose(const AffineIsometry& f, const AffineIsometry& g);
AffineIsometry affine_identity(std::size_t dim);

// Reflection in the hyperplane (lambda, alpha) = n:
// lambda -> lambda - 2((lambda,alpha) - n) alpha / (alpha,alpha).
// (The hyperplane-fixing form; see README on the sign convention.)
AffineIsometry affine_reflection(const GVec& alpha, const Golden& n);

// BFS over words in {R1, R2} for one whose matrix equals target exactly.
// Letters are 1 and 2. Empty optional: no word of length <= max_len.
std::optional<std::vector<int>> verify_word_identity(const GMat& target,
                                                     const GMat& r1, const GMat& r2,
                                                     int max_len = 64);

std::string word_to_string(const std::vector<int>& word);

// Eq-9 candidate labels 2h/(h-2), 2h/(h+2), 2h/(h-1), in lowest terms.
std::array<Rational, 3> dihedral_affine_labels(int h);

struct FractionalLabelReport {
    int order = 0;           // exact matrix order of the product
    double angle = 0.0;      // rotation angle magnitude on the plane, in (0,pi]
    int q_measured = 0;      // angle/(2pi/order), rounded
    int q_mirror = 0;        // order - q_measured (opposite plane orientation)
    double angle_residual = 0.0;
    bool order_matches = false;
    bool angle_matches = false;
    bool label_in_candidates = false;
    bool pass() const { return order_matches && angle_matches && label_in_candidates; }
};

// Verifies the diagram label p/q of a fractional bond: `product` must have
// exact matrix order p and rotate the given 2-plane by 2 pi q / p. The
// eigenplane carries no preferred orientation, so q and p-q describe the
// same geometry; the check accepts expected_q against either. When `plane`
// is empty the unique non-unit eigenvalue pair of the product is used.
FractionalLabelReport fractional_relation_check(
    const GMat& product, int expected_p, int expected_q,
    const std::vector<std::vector<double>>& plane, int coxeter_h);

// Exact action of m on span(basis), as a matrix in the basis coordinates.
// Throws if the span is not invariant.
GMat restrict_to_span(const GMat& m, const std::vector<GVec>& basis);

struct HAffineReport {
    bool beta0_norm_matches = false;  // (beta_0,beta_0) = (beta_1,beta_1)
    FractionalLabelReport label;      // the fractional 5/2 bond
};

// H3: r_{beta_0} * R2 has order 5 on the folded span and rotates its
// eigenplane by 4pi/5; H4: same with R1.
HAffineReport affine_h_relations(const FoldingMap& h_fold);

}  // namespace coxfold
