"""
Triangulation, numeric realization and mesh export.
"""
import json
import random
from fractions import Fraction
from itertools import product
from math import factorial

import numpy as np
import pytest

from cubical_lab.config import Config
from cubical_lab.constants import FORMAT_JSON, FORMAT_OBJ, FORMAT_OFF, THEORY_DM
from cubical_lab.cset import from_presentation, load_corpus, product_of, representable
from cubical_lab.cube import apply, compose, random_morphism
from cubical_lab.realization import GluingEngine, Mesh, export_mesh, realize_numeric, triangulate
from cubical_lab.storage import load_presentation
from cubical_lab.utils.errors import CapacityError, InputError, UnsupportedTheoryError

EULER = {
    "point": 1,
    "interval": 1,
    "circle": 0,
    "torus": 0,
    "square": 1,
    "square-boundary": 0,
    "cube-boundary": 2,
    "chain3": 1,
}


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_representable_has_factorial_top_simplices(n):
    complex_ = triangulate(representable(n, n))
    assert complex_.dimension == n
    assert len(complex_.top_simplices()) == factorial(n)


def test_square_counts():
    assert triangulate(representable(2, 2)).counts() == [4, 5, 2]
    assert triangulate(representable(1, 1)).counts() == [2, 1]
    assert triangulate(representable(3, 3)).counts() == [8, 19, 18, 6]


@pytest.mark.parametrize("name,euler", sorted(EULER.items()))
def test_euler_characteristic(name, euler):
    cset = load_corpus(name)
    assert triangulate(cset).euler_characteristic() == euler
    assert realize_numeric(cset, samples=3).euler_characteristic() == euler


def test_torus_counts():
    complex_ = triangulate(load_corpus("torus"))
    assert complex_.counts() == [1, 3, 2]
    assert len(complex_.vertices) == 1


def test_product_of_circles_matches_torus():
    circle = load_corpus("circle")
    squared = product_of(circle, circle)
    assert triangulate(squared).counts() == triangulate(load_corpus("torus")).counts()


def test_degenerate_face_collapses_to_a_point():
    cset = from_presentation(load_presentation("triangle.json"))
    assert triangulate(cset).euler_characteristic() == 1
    assert realize_numeric(cset, samples=4).euler_characteristic() == 1


def test_point_and_interval_meshes():
    point = realize_numeric(load_corpus("point"), samples=5)
    assert point.point_count == 1
    assert point.simplices == ()
    for samples in (2, 3, 6):
        mesh = realize_numeric(load_corpus("interval"), samples=samples)
        assert mesh.point_count == samples
        assert len(mesh.simplices_of_dim(1)) == samples - 1


def test_interval_coordinates_are_exact_grid_points():
    mesh = realize_numeric(representable(1, 1), samples=5)
    xs = sorted(mesh.points[:, 0])
    assert np.allclose(xs, [0.0, 0.25, 0.5, 0.75, 1.0])
    assert np.allclose(mesh.points[:, 1:], 0.0)


def test_glued_points_are_shared():
    mesh = realize_numeric(load_corpus("circle"), samples=3)
    assert mesh.point_count == 2
    assert mesh.counts() == [2, 2]


def test_export_is_deterministic():
    first = export_mesh(realize_numeric(load_corpus("torus"), samples=3), FORMAT_OFF)
    second = export_mesh(realize_numeric(load_corpus("torus"), samples=3), FORMAT_OFF)
    assert first == second
    header = first.decode("ascii").splitlines()
    assert header[0] == "OFF"
    assert header[1].split()[2] == "0"


def test_empty_mesh_exports():
    mesh = Mesh(points=np.zeros((0, 3)), provenance=(), simplices=())
    assert export_mesh(mesh) == b"OFF\n0 0 0\n"


def test_obj_lists_points_and_lines():
    text = export_mesh(realize_numeric(load_corpus("circle"), samples=3), FORMAT_OBJ).decode("ascii")
    lines = text.splitlines()
    assert lines[0].startswith("#")
    assert sum(1 for line in lines if line.startswith("v ")) == 2
    assert sum(1 for line in lines if line.startswith("l ")) == 2
    assert not any(line.startswith("f ") for line in lines)


def test_json_export_carries_provenance():
    data = json.loads(export_mesh(realize_numeric(load_corpus("interval"), samples=3), FORMAT_JSON))
    assert data["samples"] == 3
    assert data["euler_characteristic"] == 1
    assert len(data["points"]) == len(data["provenance"]) == 3
    assert {p["cell"] for p in data["provenance"]} <= {"0:a", "0:b", "1:e"}


def test_export_rejects_unknown_format():
    with pytest.raises(InputError):
        export_mesh(realize_numeric(load_corpus("point")), "stl")


def test_de_morgan_is_rejected():
    with pytest.raises(UnsupportedTheoryError):
        triangulate(load_corpus("circle", theory=THEORY_DM))


def test_realization_limits(monkeypatch):
    with pytest.raises(InputError):
        realize_numeric(load_corpus("circle"), samples=1)
    monkeypatch.setattr(Config, "MAX_MESH_POINTS", 5)
    with pytest.raises(CapacityError):
        realize_numeric(load_corpus("torus"), samples=3)


def grid_image(f, point, samples):
    scale = samples - 1
    return tuple(int(v * scale) for v in apply(f, [Fraction(i, scale) for i in point]))


@pytest.fixture(scope="module")
def torus_engine():
    return GluingEngine(load_corpus("torus"), samples=3)


@pytest.mark.parametrize("seed", range(15))
def test_gluing_along_composites(torus_engine, seed):
    rng = random.Random(seed)
    cset = torus_engine.cset
    x = rng.choice(cset.cells(2))
    n, m = rng.randint(0, 2), rng.randint(0, 2)
    g = random_morphism(rng, n, 2)
    f = random_morphism(rng, m, n)
    y = cset.act(g, x)
    restricted = cset.act(f, y)
    assert restricted == cset.act(compose(g, f), x)
    for p in product(range(3), repeat=m):
        one_shot = torus_engine.point_class(x, grid_image(compose(g, f), p, 3))
        assert torus_engine.point_class(y, grid_image(f, p, 3)) == one_shot
        assert torus_engine.point_class(restricted, p) == one_shot


def test_explicit_degenerate_cells_leave_the_mesh_unchanged():
    cells = {"0": ["a", "b"], "1": ["e"], "2": ["s"]}
    plain = {"dims": 2, "cells": cells,
             "faces": {"e": {"d00": "a", "d01": "b"},
                       "s": {"d00": {"cell": "a", "map": "cube 1 -> 0 : []"}, "d10": "e"}}}
    aliased = {"dims": 2, "cells": cells,
               "degenerate": {"c": {"cell": "a", "map": "cube 1 -> 0 : []"},
                              "k": {"cell": "e", "map": "cube 2 -> 1 : [x0]"}},
               "faces": {"e": {"d00": "a", "d01": "b"}, "s": {"d00": "c", "d10": "e"}}}
    expected = export_mesh(realize_numeric(from_presentation(plain), samples=3))
    assert export_mesh(realize_numeric(from_presentation(aliased), samples=3)) == expected
