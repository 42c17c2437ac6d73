#include "coxfold/folding.hpp"

#include <stdexcept>

namespace coxfold {

// Coordinates of v in the simple-root basis (via the exact Gram system;
// v must lie in the span).
static GVec coords_in_simple_roots(const RootSystem& sys, const GVec& v) {
    const std::size_t r = sys.simple_roots.size();
    GMat gram(r, r);
    GVec rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
        rhs[i] = dot(sys.simple_roots[i], v);
        for (std::size_t j = 0; j < r; ++j)
            gram(i, j) = dot(sys.simple_roots[i], sys.simple_roots[j]);
    }
    return solve(gram, rhs);
}

std::vector<GVec> folded_roots(const FoldingMap& map) {
    std::vector<GVec> out;
    for (std::size_t i = 0; i < map.coefficients.rows(); ++i) {
        GVec v(map.source.ambient_dim);
        for (std::size_t j = 0; j < map.coefficients.cols(); ++j)
            v = v + map.coefficients(i, j) * map.source.simple_roots[j];
        out.push_back(v);
    }
    return out;
}

GVec folded_extended_root(const FoldingMap& map) {
    if (!map.extended_coefficients)
        throw std::invalid_argument("folding has no extended row");
    GVec v(map.source.ambient_dim);
    for (std::size_t j = 0; j < map.extended_coefficients->size(); ++j)
        v = v + (*map.extended_coefficients)[j] * map.source.simple_roots[j];
    return v;
}

std::vector<GMat> folded_generators(const FoldingMap& map) {
    std::vector<GMat> gens;
    for (const auto& a : map.source.simple_roots) gens.push_back(reflection_matrix(a));
    std::vector<GMat> out;
    for (const auto& w : map.generator_words) out.push_back(word_matrix(gens, w));
    return out;
}

static RootSystem abstract_i2(int m, int ambient_dim) {
    RootSystem sys;
    sys.diagram = {Family::I2, 2, m};
    sys.ambient_dim = ambient_dim;
    auto cat = catalog(sys.diagram);
    sys.coxeter_number = cat.coxeter_number;
    sys.group_order = cat.group_order;
    return sys;
}

FoldingMap fold_a2n1_to_cn(int n) {
    if (n < 2) throw std::invalid_argument("fold_a2n1_to_cn needs n >= 2");
    const int rank = 2 * n - 1;
    FoldingMap map;
    map.source = extend(build_root_system({Family::A, rank}));
    map.target = build_root_system({Family::C, n});
    map.coefficients = GMat(n, rank);
    Golden half(make_rational(1, 2));
    for (int i = 0; i < n - 1; ++i) {
        map.coefficients(i, i) = half;
        map.coefficients(i, rank - 1 - i) = half;
        map.generator_words.push_back({i + 1, rank - i});
    }
    map.coefficients(n - 1, n - 1) = Golden(1);
    map.generator_words.push_back({n});
    map.extended_coefficients =
        coords_in_simple_roots(map.source, *map.source.extended_root);
    return map;
}

FoldingMap fold_dn_to_bn1(int n) {
    if (n < 4) throw std::invalid_argument("fold_dn_to_bn1 needs n >= 4");
    FoldingMap map;
    map.source = extend(build_root_system({Family::D, n}));
    map.target = build_root_system({Family::B, n - 1});
    map.coefficients = GMat(n - 1, n);
    Golden half(make_rational(1, 2));
    for (int i = 0; i < n - 2; ++i) {
        map.coefficients(i, i) = Golden(1);
        map.generator_words.push_back({i + 1});
    }
    map.coefficients(n - 2, n - 2) = half;
    map.coefficients(n - 2, n - 1) = half;
    map.generator_words.push_back({n - 1, n});
    map.extended_coefficients =
        coords_in_simple_roots(map.source, *map.source.extended_root);
    return map;
}

FoldingMap fold_d4_to_g2() {
    FoldingMap map;
    map.source = extend(build_root_system({Family::D, 4}));
    map.target = build_root_system({Family::G, 2});
    // Short root first to line up with the canonical G2 Cartan.
    map.coefficients = GMat(2, 4);
    Golden third(make_rational(1, 3));
    map.coefficients(0, 0) = third;
    map.coefficients(0, 2) = third;
    map.coefficients(0, 3) = third;
    map.coefficients(1, 1) = Golden(1);
    map.generator_words = {{1, 3, 4}, {2}};
    map.extended_coefficients =
        coords_in_simple_roots(map.source, *map.source.extended_root);
    return map;
}

FoldingMap fold_d6_to_h3() {
    FoldingMap map;
    map.source = build_root_system({Family::D, 6});
    map.target = extend(build_root_system({Family::H, 3}));
    Golden tau = Golden::tau();
    map.coefficients = GMat(3, 6);
    map.coefficients(0, 0) = Golden(1);
    map.coefficients(0, 4) = tau;
    map.coefficients(1, 1) = Golden(1);
    map.coefficients(1, 3) = tau;
    map.coefficients(2, 2) = tau;
    map.coefficients(2, 5) = Golden(1);
    map.generator_words = {{1, 5}, {2, 4}, {3, 6}};
    // beta_0 = -tau(beta_1 + 2 beta_2 + tau beta_3), pushed down to source
    // simple-root coordinates.
    GVec ext(6);
    for (int j = 0; j < 6; ++j)
        ext[j] = -tau * (map.coefficients(0, j) + Golden(2) * map.coefficients(1, j) +
                         tau * map.coefficients(2, j));
    map.extended_coefficients = ext;
    return map;
}

FoldingMap fold_e6_to_f4() {
    FoldingMap map;
    map.source = extend(build_root_system({Family::E, 6}));
    map.target = build_root_system({Family::F, 4});
    Golden half(make_rational(1, 2));
    map.coefficients = GMat(4, 6);
    map.coefficients(0, 5) = Golden(1);
    map.coefficients(1, 2) = Golden(1);
    map.coefficients(2, 1) = half;
    map.coefficients(2, 3) = half;
    map.coefficients(3, 0) = half;
    map.coefficients(3, 4) = half;
    map.generator_words = {{6}, {3}, {2, 4}, {1, 5}};
    map.extended_coefficients =
        coords_in_simple_roots(map.source, *map.source.extended_root);
    return map;
}

static FoldingMap dihedral_fold(RootSystem source) {
    FoldingMap map;
    auto [c1, c2] = two_coloring(source.cartan);
    map.target = abstract_i2(source.coxeter_number, source.ambient_dim);
    map.coefficients = GMat(0, source.simple_roots.size());
    map.generator_words = {c1, c2};
    map.source = std::move(source);
    return map;
}

FoldingMap fold_e7_to_i218() { return dihedral_fold(build_root_system({Family::E, 7})); }
FoldingMap fold_e8_to_i230() { return dihedral_fold(build_root_system({Family::E, 8})); }

FoldingMap fold_an_to_dihedral(int n) {
    if (n < 2) throw std::invalid_argument("fold_an_to_dihedral needs n >= 2");
    return dihedral_fold(build_root_system({Family::A, n}));
}

FoldingMap fold_dn_to_dihedral(int n) {
    if (n < 4) throw std::invalid_argument("fold_dn_to_dihedral needs n >= 4");
    return dihedral_fold(build_root_system({Family::D, n}));
}

FoldingMap fold_e8_to_h4() {
    FoldingMap map;
    map.source = build_root_system({Family::E, 8});
    map.target = extend(build_root_system({Family::H, 4}));
    Golden tau = Golden::tau();
    map.coefficients = GMat(4, 8);
    map.coefficients(0, 0) = Golden(1);
    map.coefficients(0, 6) = tau;
    map.coefficients(1, 1) = Golden(1);
    map.coefficients(1, 5) = tau;
    map.coefficients(2, 2) = Golden(1);
    map.coefficients(2, 4) = tau;
    map.coefficients(3, 3) = tau;
    map.coefficients(3, 7) = Golden(1);
    map.generator_words = {{1, 7}, {2, 6}, {3, 5}, {4, 8}};
    // beta_0 = -2 tau b1 - (3 tau + 1) b2 - 2 tau^3 b3 - tau^4 b4
    Golden c1 = Golden(-2) * tau;
    Golden c2 = -(Golden(3) * tau + Golden(1));
    Golden c3 = Golden(-2) * golden_pow(tau, 3);
    Golden c4 = -golden_pow(tau, 4);
    GVec ext(8);
    for (int j = 0; j < 8; ++j)
        ext[j] = c1 * map.coefficients(0, j) + c2 * map.coefficients(1, j) +
                 c3 * map.coefficients(2, j) + c4 * map.coefficients(3, j);
    map.extended_coefficients = ext;
    return map;
}

FoldingMap fold(const DiagramType& source, const DiagramType& target) {
    auto is = [](const DiagramType& t, Family f, int rank) {
        return t.family == f && t.rank == rank;
    };
    if (source.family == Family::A && target.family == Family::C &&
        source.rank == 2 * target.rank - 1)
        return fold_a2n1_to_cn(target.rank);
    if (source.family == Family::D && target.family == Family::B &&
        target.rank == source.rank - 1)
        return fold_dn_to_bn1(source.rank);
    if (is(source, Family::D, 4) && target.family == Family::G) return fold_d4_to_g2();
    if (is(source, Family::D, 6) && is(target, Family::H, 3)) return fold_d6_to_h3();
    if (is(source, Family::E, 6) && target.family == Family::F) return fold_e6_to_f4();
    if (is(source, Family::E, 8) && is(target, Family::H, 4)) return fold_e8_to_h4();
    if (target.family == Family::I2) {
        int m = target.dihedral_m;
        if (source.family == Family::A && m == source.rank + 1)
            return fold_an_to_dihedral(source.rank);
        if (source.family == Family::D && m == 2 * source.rank - 2)
            return fold_dn_to_dihedral(source.rank);
        if (source.family == Family::E) {
            if (source.rank == 7 && m == 18) return fold_e7_to_i218();
            if (source.rank == 8 && m == 30) return fold_e8_to_i230();
            if (source.rank == 6 && m == 12)
                return dihedral_fold(build_root_system(source));
        }
    }
    throw std::invalid_argument("unsupported folding " + diagram_name(source) +
                                " -> " + diagram_name(target));
}

std::vector<GVec> f4_roots_from_d4() {
    // D4 lattice = integer vectors with even coordinate sum; shells of
    // squared norm 2 and 4 within the coefficient box [-2,2]^4.
    std::vector<GVec> out;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) {
                    if ((a + b + c + d) % 2 != 0) continue;
                    int norm = a * a + b * b + c * c + d * d;
                    if (norm != 2 && norm != 4) continue;
                    out.push_back({Golden(a), Golden(b), Golden(c), Golden(d)});
                }
    return out;
}

FoldingVerification verify_folding(const FoldingMap& map) {
    FoldingVerification v;
    auto roots = folded_roots(map);
    auto gens = folded_generators(map);

    if (roots.empty()) {
        v.cartan_matches = true;  // abstract dihedral target
    } else {
        v.cartan_matches = cartan_matrix(roots) == map.target.cartan;
    }

    // The folded Coxeter element carries the parent's Coxeter number.
    GMat cox = GMat::identity(map.source.ambient_dim);
    for (const auto& g : gens) cox = cox * g;
    v.folded_coxeter_order = element_order(cox, 2 * map.source.coxeter_number + 1);
    v.coxeter_preserved = v.folded_coxeter_order == map.source.coxeter_number;

    // Each generator word acts on the folded span exactly as the reflection
    // in its folded root (full-matrix equality fails off the span).
    v.generators_are_reflections = true;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        GMat refl = reflection_matrix(roots[i]);
        for (const auto& beta : roots) {
            if (!(gens[i] * beta == refl * beta)) {
                v.generators_are_reflections = false;
                break;
            }
        }
    }

    if (map.extended_coefficients && !roots.empty() &&
        map.target.diagram.family != Family::H) {
        std::vector<GVec> ext_roots;
        ext_roots.push_back(folded_extended_root(map));
        for (const auto& r : roots) ext_roots.push_back(r);
        v.extended_cartan_singular = determinant(cartan_matrix(ext_roots)).is_zero();
    }
    return v;
}

}  // namespace coxfold
