#include "coxfold/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <stdexcept>

namespace coxfold {

LatticeSpec parse_lattice(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad lattice name: " + s);
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    bool starred = s.back() == '*';
    int rank;
    try {
        std::size_t used = 0;
        std::string digits = s.substr(1, s.size() - 1 - (starred ? 1 : 0));
        rank = std::stoi(digits, &used);
        if (used != digits.size() || rank < 1) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad lattice name: " + s);
    }
    if (fam == 'A') return {starred ? LatticeKind::A_weight : LatticeKind::A_root, rank};
    if (starred) throw std::invalid_argument("starred lattice only supported for A");
    if (fam == 'D') return {LatticeKind::D, rank};
    if (fam == 'Z') return {LatticeKind::Z, rank};
    throw std::invalid_argument("unknown lattice: " + s);
}

static std::vector<GVec> lattice_basis(const LatticeSpec& spec) {
    switch (spec.kind) {
        case LatticeKind::A_root:
            return build_root_system({Family::A, spec.rank}).simple_roots;
        case LatticeKind::A_weight: return weights_an(spec.rank);
        case LatticeKind::D:
            return build_root_system({Family::D, spec.rank}).simple_roots;
        case LatticeKind::Z: {
            std::vector<GVec> b;
            for (int i = 0; i < spec.rank; ++i) {
                GVec v(spec.rank);
                v[i] = Golden(1);
                b.push_back(v);
            }
            return b;
        }
    }
    throw std::logic_error("unreachable");
}

static std::string lattice_label(const LatticeSpec& spec) {
    switch (spec.kind) {
        case LatticeKind::A_root: return "A" + std::to_string(spec.rank);
        case LatticeKind::A_weight: return "A" + std::to_string(spec.rank) + "*";
        case LatticeKind::D: return "D" + std::to_string(spec.rank);
        case LatticeKind::Z: return "Z" + std::to_string(spec.rank);
    }
    return "?";
}

static void sort_points(std::vector<GVec>& pts) {
    std::sort(pts.begin(), pts.end(),
              [](const GVec& a, const GVec& b) { return key_of(a) < key_of(b); });
}

PointSet lattice_ball(const LatticeSpec& spec, const Rational& radius2,
                      std::size_t cap) {
    if (radius2 < 0) throw std::invalid_argument("radius2 must be >= 0");
    auto basis = lattice_basis(spec);
    const int n = static_cast<int>(basis.size());
    const int dim = static_cast<int>(basis.front().size());

    // Coefficient bounds: |c_i| <= sqrt(radius2 * (Gram^-1)_ii).
    GMat gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram(i, j) = dot(basis[i], basis[j]);
    GMat ginv = inverse(gram);
    std::vector<long> bound(n);
    for (int i = 0; i < n; ++i) {
        double b2 = mpq_class(radius2 * ginv(i, i).a).get_d();
        bound[i] = static_cast<long>(std::floor(std::sqrt(std::max(b2, 0.0)) + 1e-9));
    }

    PointSet out;
    out.label = lattice_label(spec) + " ball r2<=" + radius2.get_str();
    out.ambient_dim = dim;
    std::vector<long> coeff(n, 0);
    Golden r2(radius2);

    // Depth-first over the coefficient box with exact norm filter at leaves.
    auto rec = [&](auto&& self, int depth, const GVec& partial) -> void {
        if (depth == n) {
            Golden norm = dot(partial, partial);
            if (norm.a <= r2.a) {
                if (out.points.size() >= cap) throw std::length_error("lattice cap");
                out.points.push_back(partial);
            }
            return;
        }
        for (long c = -bound[depth]; c <= bound[depth]; ++c) {
            self(self, depth + 1,
                 c == 0 ? partial : partial + Golden(c) * basis[depth]);
        }
    };
    rec(rec, 0, GVec(dim));
    sort_points(out.points);
    return out;
}

PointSet root_polytope_an(int n) {
    auto ks = k_basis(n);
    PointSet out;
    out.label = "A" + std::to_string(n) + " root polytope";
    out.ambient_dim = n + 1;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (i != j) out.points.push_back(ks[i] - ks[j]);
    sort_points(out.points);
    return out;
}

static std::vector<GMat> an_generators(int n) {
    auto sys = build_root_system({Family::A, n});
    std::vector<GMat> gens;
    for (const auto& a : sys.simple_roots) gens.push_back(reflection_matrix(a));
    return gens;
}

PointSet voronoi_vertices_an(int n) {
    auto gens = an_generators(n);
    PointSet out;
    out.label = "A" + std::to_string(n) + " Voronoi V(0) vertices";
    out.ambient_dim = n + 1;
    std::map<std::string, GVec> seen;
    for (const auto& w : weights_an(n))
        for (const auto& p : orbit(gens, w).points) seen.emplace(key_of(p), p);
    for (auto& [k, v] : seen) out.points.push_back(v);
    return out;
}

std::vector<std::pair<PointSet, PointSet>> delone_paired_simplices(int n) {
    auto gens = an_generators(n);
    auto ws = weights_an(n);
    auto simplex = [&](int i) {
        PointSet ps;
        ps.label = "W(a" + std::to_string(n) + ") omega_" + std::to_string(i + 1);
        ps.ambient_dim = n + 1;
        ps.points = orbit(gens, ws[i]).points;
        return ps;
    };
    std::vector<std::pair<PointSet, PointSet>> out;
    for (int i = 0; 2 * i < n; ++i) out.emplace_back(simplex(i), simplex(n - 1 - i));
    return out;
}

PointSet permutohedron(int n) {
    if (n < 1 || n > 7) throw std::invalid_argument("permutohedron supports 1 <= n <= 7");
    auto ks = k_basis(n);
    GVec seed(n + 1);
    for (int i = 0; i <= n; ++i) seed = seed + Golden(n + 1 - i) * ks[i];
    PointSet out;
    out.label = "A" + std::to_string(n) + "* permutohedron";
    out.ambient_dim = n + 1;
    out.points = orbit(an_generators(n), seed).points;
    return out;
}

PointSet diplo_simplex(int n) {
    auto ks = k_basis(n);
    PointSet out;
    out.label = "A" + std::to_string(n) + " diplo-simplex";
    out.ambient_dim = n + 1;
    for (const auto& k : ks) {
        out.points.push_back(k);
        out.points.push_back(negate(k));
    }
    sort_points(out.points);
    return out;
}

}  // namespace coxfold
