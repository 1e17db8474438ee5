"""
Truncated cubical sets: presentations, representables, products and the corpus.
"""
import pytest

from cubical_lab.config import Config
from cubical_lab.constants import CONNECTION_JOIN, THEORY_DM
from cubical_lab.cset import (
    CORPUS_NAMES,
    corpus_presentation,
    from_presentation,
    interval,
    is_degenerate,
    level_of,
    load_corpus,
    parse_presentation,
    product_of,
    representable,
    terminal,
    verify_functoriality,
    yoneda_is_S_I,
)
from cubical_lab.cube import connection, degeneracy, face, identity, parse_morphism, reversal
from cubical_lab.utils.errors import CapacityError, InputError, PresentationError, UnsupportedTheoryError


def all_cells(cset):
    return [cell for level in range(cset.max_dim + 1) for cell in cset.cells(level)]


@pytest.fixture
def circle():
    return load_corpus("circle")


def test_circle_levels(circle):
    assert circle.cells(0) == ("0:v",)
    assert circle.cells(1) == ("1:v[]", "1:e")
    assert circle.sizes() == [1, 2, 5]


def test_circle_action(circle):
    assert circle.act(face(1, 0, 0), "1:e") == "0:v"
    assert circle.act(face(1, 0, 1), "1:e") == "0:v"
    assert circle.act(degeneracy(1, 0), "0:v") == "1:v[]"
    assert circle.act(connection(2, 0, 1, CONNECTION_JOIN), "1:e") == "2:e[x0 v x1]"
    assert circle.act(face(2, 0, 1), "2:e[x0 v x1]") == "1:v[]"


def test_action_checks(circle):
    with pytest.raises(InputError):
        circle.act(face(1, 0, 0), "0:v")
    with pytest.raises(InputError):
        circle.act(identity(1), "1:nowhere")
    with pytest.raises(UnsupportedTheoryError):
        circle.act(reversal(1, 0), "1:e")
    with pytest.raises(CapacityError):
        circle.act(degeneracy(3, 0), "2:e[x0 v x1]")
    with pytest.raises(InputError):
        level_of("e")
    assert not circle.contains("7:e")
    assert not circle.contains("garbage")


def test_torus_faces_and_sizes():
    torus = load_corpus("torus")
    assert torus.act(face(2, 0, 0), "2:t") == "1:b"
    assert torus.act(face(2, 1, 1), "2:t") == "1:a"
    assert torus.size(0) == 1
    assert torus.size(1) == 4
    assert "1:t[x0, x0]" in torus.cells(1)


@pytest.mark.parametrize("name", ["circle", "torus", "square", "square-boundary", "interval", "chain3"])
def test_corpus_is_functorial(name):
    assert verify_functoriality(load_corpus(name)).ok


def test_functoriality_with_sampled_top_level():
    report = verify_functoriality(load_corpus("cube-boundary", max_dim=3), seed=7, samples=40)
    assert report.ok
    assert report.pairs_checked > 40


@pytest.mark.parametrize("name", ["torus", "cube-boundary", "y2"])
def test_every_cell_decomposes_over_the_basis(name):
    cset = load_corpus(name)
    basis = set(cset.basis())
    for cell in all_cells(cset):
        b, phi = cset.decompose(cell)
        assert b in basis
        assert cset.act(phi, b) == cell


def test_inconsistent_corner_is_rejected():
    data = {"dims": 2, "cells": {"0": ["a", "b"], "1": ["e"], "2": ["s"]},
            "faces": {"e": {"d00": "a", "d01": "b"},
                      "s": {"d00": "e", "d01": "e", "d10": "e"}}}
    with pytest.raises(PresentationError) as caught:
        from_presentation(data)
    assert "s" in caught.value.identity


@pytest.mark.parametrize("data", [
    {"dims": 1, "cells": {"1": ["e"]}, "faces": {"e": {"d00": "v"}}},
    {"dims": 1, "cells": {"0": ["v"], "1": ["e"]}, "faces": {"e": {"d20": "v"}}},
    {"dims": 1, "cells": {"0": ["v"], "1": ["e"]}, "faces": {"e": {"dx": "v"}}},
    {"dims": 1, "cells": {"0": ["v", "v"]}},
    {"dims": 1, "cells": {"0": ["a:b"]}},
    {"dims": 1, "theory": "bipointed", "cells": {"0": ["v"]}},
    {"dims": 0, "cells": {"1": ["e"]}},
    {"dims": 2, "cells": {"0": ["v"], "2": ["s", "t"]},
     "faces": {"s": {"d00": {"cell": "t", "map": "cube 1 -> 2 : [x0, 0]"}}}},
])
def test_malformed_presentations(data):
    with pytest.raises(InputError):
        parse_presentation(data)


def test_truncation_is_bounded():
    with pytest.raises(CapacityError):
        parse_presentation({"dims": 4, "cells": {"0": ["v"]}})
    with pytest.raises(CapacityError):
        representable(1, 4)


def test_cell_budget(monkeypatch):
    monkeypatch.setattr(Config, "CELL_BUDGET", 5)
    with pytest.raises(CapacityError):
        representable(1, 2)


def test_degenerate_alias_matches_explicit_map():
    explicit = from_presentation({
        "dims": 2, "cells": {"0": ["a", "b"], "1": ["e"], "2": ["s"]},
        "faces": {"e": {"d00": "a", "d01": "b"},
                  "s": {"d00": {"cell": "a", "map": "cube 1 -> 0 : []"}, "d10": "e"}}})
    aliased = from_presentation({
        "dims": 2, "cells": {"0": ["a", "b"], "1": ["e"], "2": ["s"]},
        "degenerate": {"c": {"cell": "a", "map": "cube 1 -> 0 : []"}},
        "faces": {"e": {"d00": "a", "d01": "b"}, "s": {"d00": "c", "d10": "e"}}})
    assert explicit.sizes() == aliased.sizes()
    for level in range(3):
        assert explicit.cells(level) == aliased.cells(level)
    assert aliased.act(face(2, 0, 0), "2:s") == "1:a[]"


def test_presentation_round_trip():
    torus = load_corpus("torus")
    again = from_presentation(torus.to_presentation())
    for level in range(3):
        assert again.cells(level) == torus.cells(level)


def test_representable_levels_are_hom_sets():
    y1 = representable(1, 2)
    assert y1.sizes() == [2, 3, 6]
    assert representable(2, 2).size(1) == 9
    assert y1.act(connection(2, 0, 1, CONNECTION_JOIN), "1:y") == "2:y[x0 v x1]"
    assert y1.act(face(1, 0, 1), "1:y") == "0:y[1]"
    with pytest.raises(InputError):
        representable(3, 2)


@pytest.mark.parametrize("n", range(3))
@pytest.mark.parametrize("m", range(3))
def test_representable_is_power_of_interval(n, m):
    report = yoneda_is_S_I(n, m)
    assert report.bijective
    assert report.ok, report.failures


def test_terminal():
    one = terminal(2)
    assert one.sizes() == [1, 1, 1]
    assert one.act(degeneracy(2, 1), "1:*") == "2:*"
    assert one.basis() == ["0:*"]
    assert verify_functoriality(one).ok


def test_products():
    square = product_of(interval(2), interval(2))
    assert square.sizes() == [4, 9, 36]
    assert len(square.basis()) == 1
    assert verify_functoriality(square).ok
    with pytest.raises(InputError):
        product_of(interval(2), interval(1))
    with pytest.raises(InputError):
        product_of()


def test_degenerate_cells(circle):
    assert is_degenerate(circle, "1:v[]")
    assert not is_degenerate(circle, "1:e")
    assert not is_degenerate(circle, "0:v")
    assert is_degenerate(circle, circle.act(degeneracy(2, 0), "1:e"))
    assert is_degenerate(circle, circle.act(degeneracy(2, 1), "1:e"))
    assert not is_degenerate(circle, "2:e[x0 v x1]")
    assert circle.act(connection(2, 0, 1, CONNECTION_JOIN), "1:e") == "2:e[x0 v x1]"
    assert not is_degenerate(load_corpus("torus"), "2:t")


def test_corpus_names():
    assert {"circle", "torus", "cube-boundary", "terminal", "y2"} <= set(CORPUS_NAMES)
    with pytest.raises(InputError):
        corpus_presentation("klein-bottle")
    assert load_corpus("y3").max_dim == 3


def test_de_morgan_presentation():
    circle = load_corpus("circle", theory=THEORY_DM)
    assert circle.size(1) == 5
    flipped = circle.act(reversal(1, 0), "1:e")
    assert flipped == "1:e[~x0]"
    assert circle.act(reversal(1, 0), flipped) == "1:e"
    assert verify_functoriality(circle).ok


def test_parsed_maps_resolve_against_the_theory():
    data = {"dims": 1, "theory": THEORY_DM, "cells": {"0": ["v"], "1": ["e"]},
            "faces": {"e": {"d00": "v", "d01": {"cell": "v", "map": "dm-cube 0 -> 0 : []"}}}}
    presentation = parse_presentation(data)
    assert presentation.faces["e"][(0, 1)] == ("v", parse_morphism("dm-cube 0 -> 0 : []"))
