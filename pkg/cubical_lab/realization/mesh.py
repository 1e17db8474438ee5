"""
Output records of the realization: a combinatorial complex and an embedded mesh.

Simplices are tuples of vertex indices in chain order.  Repeated vertices are
allowed (a one-vertex circle has the edge (0, 0)), so these are Delta-complexes
rather than simplicial complexes in the strict sense.
"""
from dataclasses import dataclass, field

import numpy as np


def _euler(simplices, vertex_count):
    total = vertex_count
    for simplex in simplices:
        total += (-1) ** (len(simplex) - 1)
    return total


def _by_dimension(simplices, dim):
    return [s for s in simplices if len(s) == dim + 1]


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple
    simplices: tuple

    @property
    def dimension(self):
        return max((len(s) - 1 for s in self.simplices), default=0 if self.vertices else -1)

    def simplices_of_dim(self, dim):
        if dim == 0:
            return [(i,) for i in range(len(self.vertices))]
        return _by_dimension(self.simplices, dim)

    def counts(self):
        return [len(self.simplices_of_dim(d)) for d in range(self.dimension + 1)]

    def top_simplices(self):
        return self.simplices_of_dim(self.dimension)

    def euler_characteristic(self):
        return _euler(self.simplices, len(self.vertices))

    def to_dict(self):
        return {"vertices": list(self.vertices), "simplices": [list(s) for s in self.simplices],
                "counts": self.counts(), "euler_characteristic": self.euler_characteristic()}


@dataclass(frozen=True, eq=False)
class Mesh:
    """Glued points in R^3 with provenance (basis cell, local grid coordinate) and simplices."""

    points: np.ndarray
    provenance: tuple
    simplices: tuple
    samples: int = 2
    dimension: int = field(default=0)

    @property
    def point_count(self):
        return len(self.provenance)

    def simplices_of_dim(self, dim):
        if dim == 0:
            return [(i,) for i in range(self.point_count)]
        return _by_dimension(self.simplices, dim)

    def triangles(self):
        return self.simplices_of_dim(2)

    def free_edges(self):
        """Edges that are not a side of any triangle."""
        sides = set()
        for a, b, c in self.triangles():
            sides.update({(a, b), (b, c), (a, c)})
        return [e for e in self.simplices_of_dim(1) if e not in sides]

    def euler_characteristic(self):
        return _euler(self.simplices, self.point_count)

    def counts(self):
        return [len(self.simplices_of_dim(d)) for d in range(self.dimension + 1)] if self.point_count else []
