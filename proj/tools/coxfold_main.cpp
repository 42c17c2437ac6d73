#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coxfold/api.hpp"

using namespace coxfold;

namespace {

std::size_t default_cap() {
    if (const char* env = std::getenv("COXFOLD_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        std::cerr << "coxfold: ignoring malformed COXFOLD_CAP\n";
    }
    return 2000000;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

GVec parse_seed(const std::string& spec, const DiagramType& t) {
    if (spec.find(',') == std::string::npos && spec.find('t') == std::string::npos) {
        // bare integer: fundamental weight index (A family only)
        int idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stoi(spec, &used);
            if (used != spec.size()) throw std::invalid_argument(spec);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--seed", "bad seed: " + spec);
        }
        if (t.family != Family::A)
            throw CLI::ValidationError("--seed", "weight index seeds need an A-type diagram");
        auto ws = weights_an(t.rank);
        if (idx < 1 || idx > t.rank)
            throw CLI::ValidationError("--seed", "weight index out of range");
        return ws[idx - 1];
    }
    GVec v;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(golden_from_string(tok));
    return v;
}

FloatPointSet csv_read(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    FloatPointSet ps;
    std::string line;
    if (!std::getline(f, line)) throw std::runtime_error("empty csv: " + path);
    ps.dim = 1 + static_cast<int>(std::count(line.begin(), line.end(), ','));
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        std::vector<double> p;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) p.push_back(std::stod(tok));
        if (static_cast<int>(p.size()) != ps.dim)
            throw std::runtime_error("ragged csv row in " + path);
        ps.points.push_back(std::move(p));
    }
    return ps;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact Coxeter root systems, graph foldings and projections"};
    app.require_subcommand(1);
    std::size_t cap = default_cap();

    std::string type_arg, target_arg, seed_arg, lattice_arg, what_arg;
    std::string plane_arg = "coxeter", out_arg, format_arg = "csv";
    std::string radius2_arg = "2", in_arg;
    double tol = 1e-8;
    bool affine = false, with_order = false;
    bool check_square = false, check_shells = false;
    int check_rotation = 0;

    auto* info = app.add_subcommand("info", "Root system data as JSON");
    info->add_option("type", type_arg, "diagram, e.g. A4, E6, H3, I2(12)")->required();

    auto* fold_cmd = app.add_subcommand("fold", "Folding map source -> target");
    fold_cmd->add_option("source", type_arg)->required();
    fold_cmd->add_option("target", target_arg)->required();
    fold_cmd->add_flag("--order", with_order, "also enumerate the folded group");

    auto* verify = app.add_subcommand("verify", "Check Coxeter relations exactly");
    verify->add_option("type", type_arg)->required();
    verify->add_option("--fold", target_arg, "verify the folding onto this target");
    verify->add_flag("--affine", affine, "include the affine fractional-label report");

    auto* orbit_cmd = app.add_subcommand("orbit", "Orbit of a seed vector");
    orbit_cmd->add_option("type", type_arg)->required();
    orbit_cmd->add_option("--seed", seed_arg,
                          "weight index (A family) or comma-separated exact vector")
        ->required();
    orbit_cmd->add_option("--cap", cap, "orbit size cap");

    auto* cells = app.add_subcommand("cells", "Lattice polytopes and balls");
    cells->add_option("lattice", lattice_arg, "A3, A3*, D4, Z3")->required();
    cells->add_option("--what", what_arg,
                      "root-polytope|voronoi|delone|permutohedron|diplo|ball")
        ->required();
    cells->add_option("--radius2", radius2_arg, "squared radius for --what ball");
    cells->add_option("--cap", cap, "point count cap");

    auto* project_cmd = app.add_subcommand("project", "Project a lattice ball");
    project_cmd->add_option("lattice", lattice_arg)->required();
    project_cmd->add_option("--radius2", radius2_arg)->required();
    project_cmd->add_option("--plane", plane_arg, "coxeter|h3|h4");
    project_cmd->add_option("--out", out_arg)->required();
    project_cmd->add_option("--format", format_arg, "csv|svg");
    project_cmd->add_option("--tol", tol);
    project_cmd->add_option("--check-rotation", check_rotation,
                            "require 2 pi / m rotation invariance");
    project_cmd->add_flag("--check-square-lattice", check_square);
    project_cmd->add_flag("--check-shells", check_shells,
                          "report the shell structure");

    auto* render = app.add_subcommand("render", "Convert a csv point file to svg");
    render->add_option("input", in_arg)->required();
    render->add_option("output", out_arg)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    bool ok = true;
    if (*info) {
        print(info_report(parse_diagram(type_arg)));
    } else if (*fold_cmd) {
        print(fold_report(parse_diagram(type_arg), parse_diagram(target_arg),
                          with_order, ok));
    } else if (*verify) {
        if (!target_arg.empty()) {
            print(fold_report(parse_diagram(type_arg), parse_diagram(target_arg),
                              true, ok));
        } else {
            print(verify_report(parse_diagram(type_arg), affine, ok));
        }
    } else if (*orbit_cmd) {
        DiagramType t = parse_diagram(type_arg);
        print(orbit_report(t, parse_seed(seed_arg, t), cap));
    } else if (*cells) {
        print(cells_report(lattice_arg, what_arg, Rational(radius2_arg), cap));
    } else if (*project_cmd) {
        LatticeSpec spec = parse_lattice(lattice_arg);
        PointSet ball = lattice_ball(spec, Rational(radius2_arg), cap);
        ProjectionBasis basis;
        if (plane_arg == "coxeter") {
            if (spec.kind == LatticeKind::Z)
                throw CLI::ValidationError("--plane", "Z lattices have no Coxeter plane");
            Family fam = spec.kind == LatticeKind::D ? Family::D : Family::A;
            basis = coxeter_plane_basis(build_root_system({fam, spec.rank}));
        } else if (plane_arg == "h3") {
            basis = h_parallel_basis(fold_d6_to_h3());
        } else if (plane_arg == "h4") {
            basis = h_parallel_basis(fold_e8_to_h4());
        } else {
            throw CLI::ValidationError("--plane", "expected coxeter|h3|h4");
        }
        FloatPointSet img = project(ball, basis, tol);
        if (format_arg == "csv") {
            emit_csv(img, out_arg);
        } else if (format_arg == "svg") {
            emit_svg(img, out_arg);
        } else {
            throw CLI::ValidationError("--format", "expected csv|svg");
        }
        json j;
        j["schema"] = "coxfold/1";
        j["source"] = ball.label;
        j["count"] = img.points.size();
        j["out"] = out_arg;
        json checks;
        if (check_rotation > 0) {
            bool inv = rotation_invariance_check(img, check_rotation);
            checks["rotation"] = inv;
            ok = ok && inv;
        }
        if (check_square) {
            double res = square_lattice_fit_residual(img);
            checks["square_lattice_residual"] = res;
            ok = ok && res < tol;
        }
        if (check_shells) {
            json arr = json::array();
            for (const auto& [norm, n] : shell_classify(img)) {
                json s;
                s["norm2"] = norm;
                s["count"] = n;
                arr.push_back(s);
            }
            checks["shells"] = arr;
        }
        if (!checks.empty()) j["checks"] = checks;
        j["ok"] = ok;
        print(j);
    } else if (*render) {
        emit_svg(csv_read(in_arg), out_arg);
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "coxfold: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "coxfold: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "coxfold: " << e.what() << "\n";
        return 2;
    }
}
