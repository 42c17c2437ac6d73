#include "coxfold/project.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace coxfold {

namespace {

Eigen::MatrixXd to_double(const GMat& m) {
    Eigen::MatrixXd out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = embed_real(m(i, j));
    return out;
}

Eigen::VectorXd to_double(const GVec& v) {
    Eigen::VectorXd out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out(i) = embed_real(v[i]);
    return out;
}

std::vector<std::vector<double>> orthonormal_rows(std::vector<Eigen::VectorXd> span) {
    std::vector<Eigen::VectorXd> basis;
    for (auto& v : span) {
        for (const auto& b : basis) v -= b.dot(v) * b;
        double n = v.norm();
        if (n < 1e-10) throw std::domain_error("rank-deficient projection span");
        basis.push_back(v / n);
    }
    std::vector<std::vector<double>> rows;
    for (const auto& b : basis)
        rows.emplace_back(b.data(), b.data() + b.size());
    return rows;
}

}  // namespace

std::vector<std::vector<double>> an_k_coordinates(int n) {
    if (n < 2) throw std::invalid_argument("an_k_coordinates needs n >= 2");
    const int h = n + 1;
    const double scale = std::sqrt(2.0 / h);
    std::vector<std::vector<double>> ks;
    for (int j = 1; j <= n + 1; ++j) {
        std::vector<double> v;
        for (int m = 1; 2 * m < h; ++m) {
            double phi = 2.0 * std::numbers::pi * j * m / h;
            v.push_back(scale * std::cos(phi));
            v.push_back(scale * std::sin(phi));
        }
        if (h % 2 == 0) {
            // half-angle component e^{i pi j} / sqrt 2
            v.push_back(scale * (j % 2 == 0 ? 1.0 : -1.0) / std::sqrt(2.0));
        }
        ks.push_back(std::move(v));
    }
    return ks;
}

ProjectionBasis coxeter_plane_basis(const RootSystem& sys) {
    auto gens = dihedral_generators(sys);
    Eigen::MatrixXd c = to_double(gens.r1 * gens.r2);
    Eigen::EigenSolver<Eigen::MatrixXd> es(c);
    const auto& vals = es.eigenvalues();
    std::complex<double> want = std::polar(1.0, 2.0 * std::numbers::pi / gens.h);
    int best = 0;
    double best_d = 1e9;
    for (int i = 0; i < vals.size(); ++i) {
        double d = std::min(std::abs(vals[i] - want), std::abs(std::conj(vals[i]) - want));
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    double sep = 1e9;
    for (int i = 0; i < vals.size(); ++i) {
        if (i == best) continue;
        double d = std::abs(vals[i] - vals[best]);
        if (d > 1e-12) sep = std::min(sep, d);
    }
    if (best_d > 1e-8 || sep < 1e-8)
        throw std::domain_error("Coxeter eigenplane numerically degenerate");
    Eigen::VectorXcd v = es.eigenvectors().col(best);
    ProjectionBasis basis;
    basis.kind = BasisKind::coxeter_plane;
    basis.rows = orthonormal_rows({v.real(), v.imag()});
    return basis;
}

ProjectionBasis h_parallel_basis(const FoldingMap& h_fold) {
    auto betas = folded_roots(h_fold);
    std::vector<Eigen::VectorXd> span;
    for (const auto& b : betas) span.push_back(to_double(b));
    ProjectionBasis basis;
    basis.kind = betas.size() == 3 ? BasisKind::h3_parallel : BasisKind::h4_parallel;
    basis.rows = orthonormal_rows(std::move(span));
    return basis;
}

FloatPointSet project(const std::vector<GVec>& points, const ProjectionBasis& basis,
                      double tol, const std::string& source) {
    const int out_dim = static_cast<int>(basis.rows.size());
    FloatPointSet out;
    out.dim = out_dim;
    out.tolerance = tol;
    out.source = source;
    for (const auto& p : points) {
        if (p.size() != basis.rows.front().size())
            throw std::invalid_argument("projection dimension mismatch");
        std::vector<double> img(out_dim, 0.0);
        for (int r = 0; r < out_dim; ++r)
            for (std::size_t c = 0; c < p.size(); ++c)
                img[r] += basis.rows[r][c] * embed_real(p[c]);
        out.points.push_back(std::move(img));
    }
    // Deduplicate at tolerance, then sort canonically.
    std::sort(out.points.begin(), out.points.end());
    std::vector<std::vector<double>> dedup;
    for (const auto& p : out.points) {
        bool close = false;
        for (auto it = dedup.rbegin(); it != dedup.rend(); ++it) {
            double d2 = 0;
            for (int i = 0; i < out_dim; ++i) d2 += ((*it)[i] - p[i]) * ((*it)[i] - p[i]);
            if (d2 < tol * tol) {
                close = true;
                break;
            }
            if (p[0] - (*it)[0] > tol) break;
        }
        if (!close) dedup.push_back(p);
    }
    out.points = std::move(dedup);
    return out;
}

FloatPointSet project(const PointSet& points, const ProjectionBasis& basis, double tol) {
    return project(points.points, basis, tol, points.label);
}

static bool has_near(const FloatPointSet& ps, const std::vector<double>& q) {
    for (const auto& p : ps.points) {
        double d2 = 0;
        for (std::size_t i = 0; i < q.size(); ++i) d2 += (p[i] - q[i]) * (p[i] - q[i]);
        if (d2 < ps.tolerance * ps.tolerance) return true;
    }
    return false;
}

bool rotation_invariance_check(const FloatPointSet& ps, int m) {
    if (ps.dim != 2) throw std::invalid_argument("rotation check needs 2-dim set");
    double phi = 2.0 * std::numbers::pi / m;
    double c = std::cos(phi), s = std::sin(phi);
    for (const auto& p : ps.points) {
        std::vector<double> q = {c * p[0] - s * p[1], s * p[0] + c * p[1]};
        if (!has_near(ps, q)) return false;
    }
    return true;
}

std::vector<std::pair<double, std::size_t>> shell_classify(const FloatPointSet& ps) {
    std::vector<double> norms;
    for (const auto& p : ps.points) {
        double n = 0;
        for (double x : p) n += x * x;
        norms.push_back(n);
    }
    std::sort(norms.begin(), norms.end());
    std::vector<std::pair<double, std::size_t>> shells;
    for (double n : norms) {
        if (!shells.empty() && n - shells.back().first < ps.tolerance) {
            ++shells.back().second;
        } else {
            shells.emplace_back(n, 1);
        }
    }
    return shells;
}

double square_lattice_fit_residual(const FloatPointSet& ps) {
    if (ps.dim != 2) throw std::invalid_argument("square fit needs 2-dim set");
    // Basis from the two shortest nonzero images that are not collinear.
    std::vector<std::vector<double>> sorted = ps.points;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return a[0] * a[0] + a[1] * a[1] < b[0] * b[0] + b[1] * b[1];
    });
    std::vector<double> b1, b2;
    for (const auto& p : sorted) {
        double n = p[0] * p[0] + p[1] * p[1];
        if (n < 1e-16) continue;
        if (b1.empty()) {
            b1 = p;
            continue;
        }
        double cross = b1[0] * p[1] - b1[1] * p[0];
        if (std::abs(cross) > 1e-9) {
            b2 = p;
            break;
        }
    }
    if (b1.empty() || b2.empty()) return 0.0;
    double det = b1[0] * b2[1] - b1[1] * b2[0];
    double worst = 0.0;
    for (const auto& p : sorted) {
        double u = (p[0] * b2[1] - p[1] * b2[0]) / det;
        double v = (b1[0] * p[1] - b1[1] * p[0]) / det;
        double ru = u - std::round(u), rv = v - std::round(v);
        double ex = ru * b1[0] + rv * b2[0];
        double ey = ru * b1[1] + rv * b2[1];
        worst = std::max(worst, std::hypot(ex, ey));
    }
    return worst;
}

void emit_csv(const FloatPointSet& ps, const std::string& path) {
    if (ps.dim != 2 && ps.dim != 3 && ps.dim != 4)
        throw std::invalid_argument("csv emit supports dim 2..4");
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << (ps.dim == 2 ? "x,y" : ps.dim == 3 ? "x,y,z" : "x,y,z,w") << "\n";
    char buf[128];
    for (const auto& p : ps.points) {
        std::string line;
        for (int i = 0; i < ps.dim; ++i) {
            std::snprintf(buf, sizeof buf, "%.15g", p[i] == 0.0 ? 0.0 : p[i]);
            if (i) line += ",";
            line += buf;
        }
        f << line << "\n";
    }
    if (!f) throw std::runtime_error("write failed: " + path);
}

void emit_svg(const FloatPointSet& ps, const std::string& path) {
    if (ps.dim != 2)
        throw std::invalid_argument("svg emit supports 2-dim sets only");
    double extent = 1.0;
    for (const auto& p : ps.points)
        extent = std::max({extent, std::abs(p[0]), std::abs(p[1])});
    double pad = extent * 0.05;
    double lo = -(extent + pad), size = 2 * (extent + pad);
    double r = extent / 100.0;
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.6g %.6g %.6g %.6g\">\n",
                  lo, lo, size, size);
    f << buf;
    for (const auto& p : ps.points) {
        std::snprintf(buf, sizeof buf,
                      "<circle cx=\"%.9g\" cy=\"%.9g\" r=\"%.6g\" fill=\"black\"/>\n",
                      p[0], -p[1], r);
        f << buf;
    }
    f << "</svg>\n";
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace coxfold
