"""Exact Coxeter root systems, graph foldings and quasicrystal projections.

The heavy lifting happens in the _coxfold extension; this wrapper parses
the JSON reports into plain dicts.
"""

import json as _json

from . import _coxfold as _core

__all__ = [
    "info",
    "verify",
    "fold",
    "orbit",
    "weight_orbit",
    "cells",
    "project_ball",
    "project_roots",
    "rotation_check",
    "square_lattice_residual",
    "shells",
    "write_svg",
]


def info(type):
    """Root system report for a diagram name such as "A4", "E6", "H3"."""
    return _json.loads(_core.info(type))


def verify(type, affine=False):
    """Exact relation checks; returns (report, ok)."""
    j, ok = _core.verify(type, affine)
    return _json.loads(j), ok


def fold(source, target, order=False):
    """Folding map report for source -> target; returns (report, ok)."""
    j, ok = _core.fold(source, target, order)
    return _json.loads(j), ok


def orbit(type, seed, cap=2000000):
    """Orbit of an exact seed vector given as a list of coordinate strings."""
    return _json.loads(_core.orbit(type, [str(c) for c in seed], cap))


def weight_orbit(type, index, cap=2000000):
    """Orbit of the index-th fundamental weight (A family, 1-based)."""
    return _json.loads(_core.weight_orbit(type, index, cap))


def cells(lattice, what, radius2="2", cap=2000000):
    """Lattice polytope / ball report: root-polytope, voronoi, delone,
    permutohedron, diplo or ball."""
    return _json.loads(_core.cells(lattice, what, str(radius2), cap))


def project_ball(lattice, radius2, plane="coxeter", tol=1e-8, cap=2000000):
    """Project a lattice ball; returns the deduplicated image points."""
    return _core.project_ball(lattice, str(radius2), plane, tol, cap)


def project_roots(type, plane="coxeter", tol=1e-8):
    """Project the full root system of a diagram."""
    return _core.project_roots(type, plane, tol)


rotation_check = _core.rotation_check
square_lattice_residual = _core.square_lattice_residual
shells = _core.shells
write_svg = _core.write_svg
