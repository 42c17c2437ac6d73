#include "coxfold/affine.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <deque>
#include <numbers>
#include <unordered_map>

namespace coxfold {

AffineIsometry affine_identity(std::size_t dim) {
    return {GMat::identity(dim), GVec(dim)};
}

AffineIsometry compose(const AffineIsometry& f, const AffineIsometry& g) {
    return {f.linear * g.linear, f.linear * g.translation + f.translation};
}

AffineIsometry affine_reflection(const GVec& alpha, const Golden& n) {
    Golden norm = dot(alpha, alpha);
    if (norm.is_zero()) throw std::domain_error("affine reflection in zero-norm root");
    AffineIsometry iso;
    iso.linear = reflection_matrix(alpha);
    // translation = 2 n alpha / (alpha, alpha)
    iso.translation = (Golden(2) * n * golden_inverse(norm)) * alpha;
    return iso;
}

std::optional<std::vector<int>> verify_word_identity(const GMat& target,
                                                     const GMat& r1, const GMat& r2,
                                                     int max_len) {
    const GMat* gens[2] = {&r1, &r2};
    GMat id = GMat::identity(r1.rows());
    if (target == id) return std::vector<int>{};
    std::unordered_map<std::string, bool> seen;
    std::deque<std::pair<GMat, std::vector<int>>> frontier;
    seen[key_of(id)] = true;
    frontier.emplace_back(id, std::vector<int>{});
    while (!frontier.empty()) {
        auto [m, word] = std::move(frontier.front());
        frontier.pop_front();
        if (static_cast<int>(word.size()) >= max_len) continue;
        for (int letter = 1; letter <= 2; ++letter) {
            GMat next = m * (*gens[letter - 1]);
            auto w = word;
            w.push_back(letter);
            if (next == target) return w;
            if (!seen.emplace(key_of(next), true).second) continue;
            frontier.emplace_back(std::move(next), std::move(w));
        }
    }
    return std::nullopt;
}

std::string word_to_string(const std::vector<int>& word) {
    if (word.empty()) return "1";
    std::string s;
    for (int letter : word) {
        if (!s.empty()) s += " ";
        s += "R" + std::to_string(letter);
    }
    return s;
}

std::array<Rational, 3> dihedral_affine_labels(int h) {
    if (h < 3) throw std::invalid_argument("dihedral_affine_labels needs h >= 3");
    return {make_rational(2 * h, h - 2), make_rational(2 * h, h + 2),
            make_rational(2 * h, h - 1)};
}

static Eigen::MatrixXd to_double(const GMat& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = embed_real(m(i, j));
    return out;
}

FractionalLabelReport fractional_relation_check(
    const GMat& product, int expected_p, int expected_q,
    const std::vector<std::vector<double>>& plane, int coxeter_h) {
    FractionalLabelReport rep;
    rep.order = element_order(product, 4 * expected_p + 4);
    rep.order_matches = rep.order == expected_p;

    Eigen::MatrixXd m = to_double(product);
    double angle = 0.0;
    if (!plane.empty()) {
        Eigen::MatrixXd p(2, m.cols());
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < m.cols(); ++c) p(r, c) = plane[r][c];
        Eigen::Matrix2d a2 = p * m * p.transpose();
        angle = std::atan2(a2(1, 0) - a2(0, 1), a2(0, 0) + a2(1, 1));
    } else {
        // Unique rotating eigenplane: the non-unit eigenvalue pair.
        Eigen::EigenSolver<Eigen::MatrixXd> es(m);
        for (int i = 0; i < es.eigenvalues().size(); ++i) {
            double a = std::abs(std::arg(es.eigenvalues()[i]));
            if (a > std::abs(angle)) angle = a;
        }
    }
    rep.angle = std::abs(angle);

    const double step = 2.0 * std::numbers::pi / expected_p;
    rep.q_measured = static_cast<int>(std::lround(rep.angle / step));
    rep.q_mirror = expected_p - rep.q_measured;
    int q_min = std::min(expected_q, expected_p - expected_q);
    rep.angle_residual = std::abs(rep.angle - step * q_min);
    rep.angle_matches =
        (rep.q_measured == expected_q || rep.q_mirror == expected_q) &&
        rep.angle_residual < 1e-9;

    Rational expected = make_rational(expected_p, expected_q);
    for (const auto& cand : dihedral_affine_labels(coxeter_h))
        if (cand == expected) rep.label_in_candidates = true;
    return rep;
}

GMat restrict_to_span(const GMat& m, const std::vector<GVec>& basis) {
    const std::size_t k = basis.size();
    GMat gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
    GMat ginv = inverse(gram);
    GMat out(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        GVec image = m * basis[j];
        GVec rhs(k);
        for (std::size_t i = 0; i < k; ++i) rhs[i] = dot(basis[i], image);
        GVec coords = ginv * rhs;
        // Invariance: the coordinates must reproduce the image exactly.
        GVec back(image.size());
        for (std::size_t i = 0; i < k; ++i) back = back + coords[i] * basis[i];
        if (!(back == image)) throw std::domain_error("span not invariant under m");
        for (std::size_t i = 0; i < k; ++i) out(i, j) = coords[i];
    }
    return out;
}

HAffineReport affine_h_relations(const FoldingMap& h_fold) {
    HAffineReport rep;
    auto betas = folded_roots(h_fold);
    GVec beta0 = folded_extended_root(h_fold);
    rep.beta0_norm_matches = dot(beta0, beta0) == dot(betas[0], betas[0]);

    auto gens = folded_generators(h_fold);
    // H3 pairs R0 with R2; H4 pairs R0 with R1.
    const GMat& partner = betas.size() == 3 ? gens[1] : gens[0];
    GMat product = reflection_matrix(beta0) * partner;
    std::vector<GVec> span = betas;
    GMat restricted = restrict_to_span(product, span);
    rep.label = fractional_relation_check(restricted, 5, 2, {}, 5);
    return rep;
}

}  // namespace coxfold
