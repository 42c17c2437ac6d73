// Python module: thin wrappers over the JSON report builders plus the
// projection pipeline. Reports come back as JSON strings; the package
// __init__ parses them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxfold/api.hpp"

namespace py = pybind11;
using namespace coxfold;

namespace {

std::vector<std::vector<double>> as_rows(const FloatPointSet& ps) {
    return ps.points;
}

FloatPointSet from_rows(const std::vector<std::vector<double>>& rows) {
    FloatPointSet ps;
    if (!rows.empty()) ps.dim = static_cast<int>(rows.front().size());
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != ps.dim)
            throw std::invalid_argument("ragged point list");
        ps.points.push_back(r);
    }
    return ps;
}

GVec seed_from_strings(const std::vector<std::string>& coords) {
    GVec v;
    for (const auto& c : coords) v.push_back(golden_from_string(c));
    return v;
}

ProjectionBasis basis_for(const std::string& plane, const LatticeSpec& spec) {
    if (plane == "coxeter") {
        if (spec.kind == LatticeKind::Z)
            throw std::invalid_argument("Z lattices have no Coxeter plane");
        Family fam = spec.kind == LatticeKind::D ? Family::D : Family::A;
        return coxeter_plane_basis(build_root_system({fam, spec.rank}));
    }
    if (plane == "h3") return h_parallel_basis(fold_d6_to_h3());
    if (plane == "h4") return h_parallel_basis(fold_e8_to_h4());
    throw std::invalid_argument("plane must be coxeter|h3|h4");
}

}  // namespace

PYBIND11_MODULE(_coxfold, m) {
    m.doc() = "Exact Coxeter root systems, graph foldings and projections";

    m.def(
        "info",
        [](const std::string& type) {
            return info_report(parse_diagram(type)).dump();
        },
        py::arg("type"));

    m.def(
        "verify",
        [](const std::string& type, bool affine) {
            bool ok = true;
            std::string j = verify_report(parse_diagram(type), affine, ok).dump();
            return py::make_tuple(j, ok);
        },
        py::arg("type"), py::arg("affine") = false);

    m.def(
        "fold",
        [](const std::string& source, const std::string& target, bool order) {
            bool ok = true;
            std::string j = fold_report(parse_diagram(source),
                                        parse_diagram(target), order, ok)
                                .dump();
            return py::make_tuple(j, ok);
        },
        py::arg("source"), py::arg("target"), py::arg("order") = false);

    m.def(
        "orbit",
        [](const std::string& type, const std::vector<std::string>& seed,
           std::size_t cap) {
            return orbit_report(parse_diagram(type), seed_from_strings(seed), cap)
                .dump();
        },
        py::arg("type"), py::arg("seed"), py::arg("cap") = 2000000);

    m.def(
        "weight_orbit",
        [](const std::string& type, int index, std::size_t cap) {
            DiagramType t = parse_diagram(type);
            if (t.family != Family::A)
                throw std::invalid_argument("weight seeds need an A-type diagram");
            if (index < 1 || index > t.rank)
                throw std::invalid_argument("weight index out of range");
            return orbit_report(t, weights_an(t.rank)[index - 1], cap).dump();
        },
        py::arg("type"), py::arg("index"), py::arg("cap") = 2000000);

    m.def(
        "cells",
        [](const std::string& lattice, const std::string& what,
           const std::string& radius2, std::size_t cap) {
            return cells_report(lattice, what, Rational(radius2), cap).dump();
        },
        py::arg("lattice"), py::arg("what"), py::arg("radius2") = "2",
        py::arg("cap") = 2000000);

    m.def(
        "project_ball",
        [](const std::string& lattice, const std::string& radius2,
           const std::string& plane, double tol, std::size_t cap) {
            LatticeSpec spec = parse_lattice(lattice);
            PointSet ball = lattice_ball(spec, Rational(radius2), cap);
            return as_rows(project(ball, basis_for(plane, spec), tol));
        },
        py::arg("lattice"), py::arg("radius2"), py::arg("plane") = "coxeter",
        py::arg("tol") = 1e-8, py::arg("cap") = 2000000);

    m.def(
        "project_roots",
        [](const std::string& type, const std::string& plane, double tol) {
            auto sys = build_root_system(parse_diagram(type));
            LatticeSpec dummy{sys.diagram.family == Family::D ? LatticeKind::D
                                                              : LatticeKind::A_root,
                              sys.diagram.rank};
            ProjectionBasis basis = plane == "coxeter"
                                        ? coxeter_plane_basis(sys)
                                        : basis_for(plane, dummy);
            return as_rows(project(all_roots(sys), basis, tol));
        },
        py::arg("type"), py::arg("plane") = "coxeter", py::arg("tol") = 1e-8);

    m.def(
        "rotation_check",
        [](const std::vector<std::vector<double>>& pts, int m) {
            return rotation_invariance_check(from_rows(pts), m);
        },
        py::arg("points"), py::arg("m"));

    m.def(
        "square_lattice_residual",
        [](const std::vector<std::vector<double>>& pts) {
            return square_lattice_fit_residual(from_rows(pts));
        },
        py::arg("points"));

    m.def(
        "shells",
        [](const std::vector<std::vector<double>>& pts) {
            return shell_classify(from_rows(pts));
        },
        py::arg("points"));

    m.def(
        "write_svg",
        [](const std::vector<std::vector<double>>& pts, const std::string& path) {
            emit_svg(from_rows(pts), path);
        },
        py::arg("points"), py::arg("path"));
}
