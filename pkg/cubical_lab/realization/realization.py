"""
Triangulation and numeric geometric realization of truncated cubical sets.
"""
import logging
from fractions import Fraction

import numpy as np

from cubical_lab.cset.cset import level_of
from cubical_lab.realization.engine import GluingEngine
from cubical_lab.realization.mesh import Mesh, SimplicialComplex
from cubical_lab.utils.validation import validate_non_negative_int

logger = logging.getLogger(__name__)

# Basis cell k is drawn at x-offset k * LAYOUT_SPACING.
LAYOUT_SPACING = 1.5


def _vertex_label(engine, key):
    rank, (point,) = key
    return f"{engine.basis[rank]}@{''.join(str(i) for i in point)}"


def triangulate(cset):
    """
    Permutation triangulation: n! top simplices per non-degenerate basis n-cell,
    glued along the action of the generator morphisms.
    """
    engine = GluingEngine(cset, samples=2)
    points, simplices, _ = engine.classes()
    complex_ = SimplicialComplex(vertices=tuple(_vertex_label(engine, key) for key in points),
                                 simplices=tuple(simplices))
    logger.info(f"Triangulated {cset.name or 'cubical set'}: counts {complex_.counts()}, "
                f"euler characteristic {complex_.euler_characteristic()}")
    return complex_


def _embed(engine, key):
    rank, (point,) = key
    scale = engine.samples - 1
    coords = [float(Fraction(i, scale)) for i in point] + [0.0] * (3 - len(point))
    coords[0] += rank * LAYOUT_SPACING
    return coords


def realize_numeric(cset, samples=3):
    """
    Glue one samples^n grid per basis n-cell with exact rational coordinates and
    return the mesh; glued points sit at the average of their copies.
    """
    samples = validate_non_negative_int(samples, "Samples")
    engine = GluingEngine(cset, samples=samples)
    points, simplices, members = engine.classes()
    coordinates = []
    provenance = []
    for key in points:
        copies = [_embed(engine, member) for member in members[engine.uf.find(key)]]
        coordinates.append(np.mean(np.array(copies, dtype=float), axis=0))
        rank, (point,) = key
        provenance.append((engine.basis[rank], tuple(Fraction(i, samples - 1) for i in point)))
    array = np.array(coordinates, dtype=float).reshape(len(coordinates), 3)
    dimension = max((level_of(cell) for cell in engine.basis), default=0)
    mesh = Mesh(points=array, provenance=tuple(provenance), simplices=tuple(simplices),
                samples=samples, dimension=dimension)
    logger.info(f"Realized {cset.name or 'cubical set'} at {samples} samples: "
                f"{mesh.point_count} points, euler characteristic {mesh.euler_characteristic()}")
    return mesh
