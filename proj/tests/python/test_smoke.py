import math

import pytest

coxfold = pytest.importorskip("coxfold")


def test_info_h3():
    rep = coxfold.info("H3")
    assert rep["schema"] == "coxfold/1"
    assert rep["rank"] == 3
    assert rep["coxeter_number"] == 10
    assert rep["group_order"] == "120"


def test_info_cartan_entries_are_strings():
    rep = coxfold.info("A2")
    two, minus_one = "2/1+0/1*t", "-1/1+0/1*t"
    assert rep["cartan"] == [[two, minus_one], [minus_one, two]]


def test_verify_exact_relations():
    rep, ok = coxfold.verify("F4")
    assert ok
    assert rep["ok"]
    assert all(r["holds"] for r in rep["relations"])


def test_verify_affine_h4_label():
    rep, ok = coxfold.verify("H4", affine=True)
    assert ok
    frac = rep["affine"]["fractional_label"]
    assert frac["expected"] == "5/2"
    assert frac["pass"]


def test_fold_e6_f4():
    rep, ok = coxfold.fold("E6", "F4", order=True)
    assert ok
    assert rep["verification"]["cartan_matches"]
    assert rep["verification"]["folded_coxeter_order"] == 12
    assert rep["folded_group_order"] == "1152"


def test_fold_d6_h3():
    rep, ok = coxfold.fold("D6", "H3")
    assert ok
    assert rep["verification"]["coxeter_preserved"]


def test_weight_orbit_a4():
    rep = coxfold.weight_orbit("A4", 1)
    assert rep["count"] == 5


def test_orbit_exact_seed():
    rep = coxfold.orbit("A2", ["1", "0", "-1"])
    assert rep["count"] == 6


def test_cells_voronoi_a3():
    rep = coxfold.cells("A3", "voronoi")
    assert rep["cell"]["count"] == 14


def test_cells_ball_z2():
    rep = coxfold.cells("Z2", "ball", radius2="2")
    assert rep["cell"]["count"] == 9


def test_project_a4_tenfold():
    pts = coxfold.project_ball("A4", "4")
    assert len(pts) > 20
    assert coxfold.rotation_check(pts, 10)
    assert coxfold.square_lattice_residual(pts) > 1e-3


def test_project_a3_square():
    pts = coxfold.project_ball("A3", "6")
    assert coxfold.square_lattice_residual(pts) < 1e-9


def test_e8_shells():
    pts = coxfold.project_roots("E8", plane="h4")
    sh = coxfold.shells(pts)
    assert [n for _, n in sh] == [120, 120]
    tau = (1 + math.sqrt(5)) / 2
    assert abs(sh[1][0] / sh[0][0] - tau**2) < 1e-9


def test_write_svg(tmp_path):
    pts = coxfold.project_ball("A4", "2")
    out = tmp_path / "a4.svg"
    coxfold.write_svg(pts, str(out))
    assert out.read_text().startswith("<svg")


def test_bad_diagram_raises():
    with pytest.raises(ValueError):
        coxfold.info("Q9")
