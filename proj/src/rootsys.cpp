#include "coxfold/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace coxfold {

std::string diagram_name(const DiagramType& t) {
    switch (t.family) {
        case Family::A: return "A" + std::to_string(t.rank);
        case Family::B: return "B" + std::to_string(t.rank);
        case Family::C: return "C" + std::to_string(t.rank);
        case Family::D: return "D" + std::to_string(t.rank);
        case Family::E: return "E" + std::to_string(t.rank);
        case Family::F: return "F4";
        case Family::G: return "G2";
        case Family::H: return "H" + std::to_string(t.rank);
        case Family::I2: return "I2(" + std::to_string(t.dihedral_m) + ")";
    }
    return "?";
}

static int parse_int(const std::string& s, const std::string& context) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("bad " + context + ": " + s);
    }
}

DiagramType parse_diagram(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty diagram name");
    std::string u = s;
    u[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(u[0])));
    if (u.rfind("I2(", 0) == 0 && u.back() == ')') {
        int m = parse_int(u.substr(3, u.size() - 4), "I2 label");
        if (m < 3) throw std::invalid_argument("I2 label must be >= 3");
        return {Family::I2, 2, m};
    }
    char fam = u[0];
    int rank = parse_int(u.substr(1), "diagram name");
    switch (fam) {
        case 'A': return {Family::A, rank};
        case 'B': return {Family::B, rank};
        case 'C': return {Family::C, rank};
        case 'D': return {Family::D, rank};
        case 'E':
            if (rank < 6 || rank > 8) throw std::invalid_argument("E rank must be 6..8");
            return {Family::E, rank};
        case 'F':
            if (rank != 4) throw std::invalid_argument("F rank must be 4");
            return {Family::F, 4};
        case 'G':
            if (rank != 2) throw std::invalid_argument("G rank must be 2");
            return {Family::G, 2};
        case 'H':
            if (rank < 2 || rank > 4) throw std::invalid_argument("H rank must be 2..4");
            return {Family::H, rank};
        default: throw std::invalid_argument("unknown diagram family: " + s);
    }
}

static mpz_class factorial(int n) {
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

static mpz_class pow2(int n) {
    mpz_class r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), n);
    return r;
}

CatalogEntry catalog(const DiagramType& t) {
    switch (t.family) {
        case Family::A: return {t.rank + 1, factorial(t.rank + 1)};
        case Family::B:
        case Family::C: return {2 * t.rank, pow2(t.rank) * factorial(t.rank)};
        case Family::D: return {2 * t.rank - 2, pow2(t.rank - 1) * factorial(t.rank)};
        case Family::E:
            if (t.rank == 6) return {12, mpz_class(51840)};
            if (t.rank == 7) return {18, mpz_class(2903040)};
            return {30, mpz_class(696729600)};
        case Family::F: return {12, mpz_class(1152)};
        case Family::G: return {6, mpz_class(12)};
        case Family::H:
            if (t.rank == 2) return {5, mpz_class(10)};
            if (t.rank == 3) return {10, mpz_class(120)};
            return {30, mpz_class(14400)};
        case Family::I2: return {t.dihedral_m, mpz_class(2 * t.dihedral_m)};
    }
    throw std::logic_error("unreachable");
}

std::vector<GVec> k_basis(int n) {
    if (n < 1) throw std::invalid_argument("k_basis needs n >= 1");
    const int d = n + 1;
    Rational share = make_rational(1, d);
    std::vector<GVec> ks(d, GVec(d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Rational v = -share;
            if (i == j) v += 1;
            ks[i][j] = Golden(v);
        }
    }
    return ks;
}

std::vector<GVec> weights_an(int n) {
    auto ks = k_basis(n);
    std::vector<GVec> w;
    GVec acc(n + 1);
    for (int i = 0; i < n; ++i) {
        acc = acc + ks[i];
        w.push_back(acc);
    }
    return w;
}

GMat cartan_matrix(const std::vector<GVec>& roots) {
    const std::size_t r = roots.size();
    std::vector<Golden> inv_norm(r);
    for (std::size_t j = 0; j < r; ++j) {
        Golden n = dot(roots[j], roots[j]);
        if (n.is_zero()) throw std::domain_error("cartan_matrix: zero root");
        inv_norm[j] = golden_inverse(n);
    }
    GMat m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            m(i, j) = Golden(2) * dot(roots[i], roots[j]) * inv_norm[j];
    return m;
}

static GVec basis_vec(int dim, int i, long c = 1) {
    GVec v(dim);
    v[i] = Golden(c);
    return v;
}

// Bourbaki simple roots of E8 in the 8-dim ambient.
static std::vector<GVec> bourbaki_e8() {
    std::vector<GVec> b(8, GVec(8));
    Rational h = make_rational(1, 2);
    b[0][0] = Golden(h);
    b[0][7] = Golden(h);
    for (int j = 1; j <= 6; ++j) b[0][j] = Golden(-h);
    b[1][0] = Golden(1);
    b[1][1] = Golden(1);
    for (int i = 2; i < 8; ++i) {  // b[i] = e_{i-1} - e_{i-2}
        b[i][i - 1] = Golden(1);
        b[i][i - 2] = Golden(-1);
    }
    return b;
}

static std::vector<GVec> simple_roots_of(const DiagramType& t);

// Folded H-type roots, unnormalized (the 1/sqrt(2(tau+2)) prefactor of the
// source combinations is dropped to stay inside Q(tau); Cartan matrices and
// reflections are scale-invariant).
static std::vector<GVec> h_roots(int rank) {
    Golden tau = Golden::tau();
    if (rank == 3) {
        auto a = simple_roots_of({Family::D, 6});
        return {a[0] + tau * a[4], a[1] + tau * a[3], tau * a[2] + a[5]};
    }
    if (rank == 4) {
        auto a = simple_roots_of({Family::E, 8});
        return {a[0] + tau * a[6], a[1] + tau * a[5], a[2] + tau * a[4],
                tau * a[3] + a[7]};
    }
    // H2 = I2(5): the (beta_2, beta_3) pair of H3 carries the 5-bond.
    auto b3 = h_roots(3);
    return {b3[1], b3[2]};
}

static std::vector<GVec> simple_roots_of(const DiagramType& t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A: {
            std::vector<GVec> r;
            for (int i = 0; i < n; ++i) {
                GVec v(n + 1);
                v[i] = Golden(1);
                v[i + 1] = Golden(-1);
                r.push_back(v);
            }
            return r;
        }
        case Family::B: {
            std::vector<GVec> r;
            for (int i = 0; i + 1 < n; ++i) r.push_back(basis_vec(n, i) - basis_vec(n, i + 1));
            r.push_back(basis_vec(n, n - 1));
            return r;
        }
        case Family::C: {
            std::vector<GVec> r;
            for (int i = 0; i + 1 < n; ++i) r.push_back(basis_vec(n, i) - basis_vec(n, i + 1));
            r.push_back(basis_vec(n, n - 1, 2));
            return r;
        }
        case Family::D: {
            if (n < 4) throw std::invalid_argument("D rank must be >= 4");
            // Chain alpha_1..alpha_{n-1}, alpha_n attached to alpha_{n-2}.
            std::vector<GVec> r;
            for (int i = 0; i + 1 < n; ++i) r.push_back(basis_vec(n, i) - basis_vec(n, i + 1));
            r.push_back(basis_vec(n, n - 2) + basis_vec(n, n - 1));
            return r;
        }
        case Family::E: {
            auto b = bourbaki_e8();
            // Chain alpha_1..alpha_{rank-1} with alpha_rank on the branch node,
            // placed so the folding index pairs of the H4/F4/I2 subgroups are
            // orthogonal sets.
            if (n == 6) return {b[0], b[2], b[3], b[4], b[5], b[1]};
            if (n == 7) return {b[6], b[5], b[4], b[3], b[2], b[0], b[1]};
            return {b[7], b[6], b[5], b[4], b[3], b[2], b[0], b[1]};
        }
        case Family::F: {
            Rational h = make_rational(1, 2);
            GVec a4(4);
            a4[0] = Golden(h);
            a4[1] = Golden(-h);
            a4[2] = Golden(-h);
            a4[3] = Golden(-h);
            return {basis_vec(4, 1) - basis_vec(4, 2), basis_vec(4, 2) - basis_vec(4, 3),
                    basis_vec(4, 3), a4};
        }
        case Family::G: {
            GVec a2(3);
            a2[0] = Golden(-2);
            a2[1] = Golden(1);
            a2[2] = Golden(1);
            return {basis_vec(3, 0) - basis_vec(3, 1), a2};
        }
        case Family::H: return h_roots(n);
        case Family::I2: {
            switch (t.dihedral_m) {
                case 3: return simple_roots_of({Family::A, 2});
                case 4: return {basis_vec(2, 0) - basis_vec(2, 1), basis_vec(2, 1)};
                case 5: return h_roots(2);
                case 6: return simple_roots_of({Family::G, 2});
                default:
                    throw std::invalid_argument(
                        "no exact Q(tau) root coordinates for I2(" +
                        std::to_string(t.dihedral_m) + ")");
            }
        }
    }
    throw std::logic_error("unreachable");
}

RootSystem build_root_system(const DiagramType& t) {
    RootSystem sys;
    sys.diagram = t;
    sys.simple_roots = simple_roots_of(t);
    sys.ambient_dim = static_cast<int>(sys.simple_roots.front().size());
    sys.cartan = cartan_matrix(sys.simple_roots);
    auto cat = catalog(t);
    sys.coxeter_number = cat.coxeter_number;
    sys.group_order = cat.group_order;
    return sys;
}

static GVec reflect(const GVec& v, const GVec& alpha, const Golden& inv_norm) {
    Golden c = Golden(2) * dot(v, alpha) * inv_norm;
    return v - c * alpha;
}

std::vector<GVec> all_roots(const RootSystem& sys) {
    std::vector<Golden> inv_norm;
    for (const auto& a : sys.simple_roots) inv_norm.push_back(golden_inverse(dot(a, a)));
    std::map<std::string, GVec> seen;
    std::vector<GVec> frontier = sys.simple_roots;
    for (const auto& a : sys.simple_roots) seen.emplace(key_of(a), a);
    while (!frontier.empty()) {
        std::vector<GVec> next;
        for (const auto& v : frontier) {
            for (std::size_t i = 0; i < sys.simple_roots.size(); ++i) {
                GVec w = reflect(v, sys.simple_roots[i], inv_norm[i]);
                auto [it, fresh] = seen.emplace(key_of(w), w);
                if (fresh) next.push_back(w);
            }
        }
        frontier = std::move(next);
    }
    std::vector<GVec> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(v);
    return out;
}

static bool crystallographic(Family f) {
    switch (f) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::E:
        case Family::F:
        case Family::G: return true;
        default: return false;
    }
}

RootSystem extend(const RootSystem& sys) {
    RootSystem out = sys;
    if (sys.diagram.family == Family::H) {
        Golden tau = Golden::tau();
        const auto& b = sys.simple_roots;
        if (sys.diagram.rank == 3) {
            // beta_0 = -tau(beta_1 + 2 beta_2 + tau beta_3)
            out.extended_root = -tau * (b[0] + Golden(2) * b[1] + tau * b[2]);
            return out;
        }
        if (sys.diagram.rank == 4) {
            // beta_0 = -2 tau b1 - (3 tau + 1) b2 - 2 tau^3 b3 - tau^4 b4
            Golden t3 = golden_pow(tau, 3), t4 = golden_pow(tau, 4);
            out.extended_root =
                negate(Golden(2) * tau * b[0] + (Golden(3) * tau + Golden(1)) * b[1] +
                       Golden(2) * t3 * b[2] + t4 * b[3]);
            return out;
        }
        throw std::invalid_argument("no extended root for H2");
    }
    if (!crystallographic(sys.diagram.family))
        throw std::invalid_argument("no extended root for " + diagram_name(sys.diagram));

    // alpha_0 = -theta; theta is the dominant root of maximal norm.
    auto roots = all_roots(sys);
    std::optional<GVec> best;
    Golden best_norm;
    for (const auto& r : roots) {
        bool dominant = true;
        for (const auto& a : sys.simple_roots) {
            Golden ip = dot(r, a);
            if (sgn(ip.a) < 0) {  // crystallographic: ip is rational
                dominant = false;
                break;
            }
        }
        if (!dominant) continue;
        Golden nrm = dot(r, r);
        if (!best || nrm.a > best_norm.a) {
            best = r;
            best_norm = nrm;
        }
    }
    if (!best) throw std::logic_error("no dominant root found");
    out.extended_root = negate(*best);
    return out;
}

GMat extended_cartan(const RootSystem& sys) {
    if (!sys.extended_root) throw std::invalid_argument("system has no extended root");
    std::vector<GVec> roots;
    roots.push_back(*sys.extended_root);
    for (const auto& a : sys.simple_roots) roots.push_back(a);
    return cartan_matrix(roots);
}

}  // namespace coxfold
