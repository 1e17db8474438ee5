"""
Gluing engine shared by `triangulate` and `realize_numeric`.

Each basis cell b of dimension n contributes the grid {0, 1/(s-1), ..., 1}^n
triangulated by chains (the permutation triangulation of every small cube).
Whenever a generator morphism f sends b' to a cell x = act(f, b') and x
decomposes as act(g, b), every chain C of the source grid gives the
identification f(C) in b' ~ g(C) in b.  Chains whose image collapses mark
the longer side degenerate; degenerate simplices drop out of the result.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product

from cubical_lab.config import Config
from cubical_lab.constants import THEORY_DL
from cubical_lab.cset.cset import level_of
from cubical_lab.cube.cube import apply, generator_morphisms
from cubical_lab.utils.errors import CapacityError, InputError, UnsupportedTheoryError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def grid_chains(dim, samples):
    """
    Every simplex of the permutation triangulation of the samples^dim grid,
    faces included, as chains of integer grid points.
    """
    chains = set()
    for corner in product(range(samples - 1), repeat=dim):
        for order in permutations(range(dim)):
            point = list(corner)
            chain = [tuple(point)]
            for axis in order:
                point[axis] += 1
                chain.append(tuple(point))
            for size in range(1, dim + 2):
                chains.update(combinations(chain, size))
    return tuple(sorted(chains, key=lambda c: (len(c), c)))


def _dedupe(chain):
    result = [chain[0]]
    for point in chain[1:]:
        if point != result[-1]:
            result.append(point)
    return tuple(result)


class UnionFind:
    def __init__(self):
        self.parent = {}
        self.degenerate = {}

    def add(self, key):
        if key not in self.parent:
            self.parent[key] = key
            self.degenerate[key] = False

    def find(self, key):
        self.add(key)
        root = key
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[key] != root:
            self.parent[key], key = root, self.parent[key]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.degenerate[ra] = self.degenerate[ra] or self.degenerate[rb]
        return True

    def mark(self, key):
        root = self.find(key)
        if self.degenerate[root]:
            return False
        self.degenerate[root] = True
        return True

    def is_degenerate(self, key):
        return self.degenerate[self.find(key)]


class GluingEngine:
    """Quotient of the gridded basis cells of a cubical set."""

    def __init__(self, cset, samples):
        if cset.theory != THEORY_DL:
            raise UnsupportedTheoryError("Realization is implemented for the dl cube category; "
                                         "reversals do not preserve the triangulation")
        if samples < 2:
            raise InputError("At least 2 samples per axis are needed")
        self.cset = cset
        self.samples = samples
        self.basis = list(cset.basis())
        self.rank = {cell: i for i, cell in enumerate(self.basis)}
        for cell in self.basis:
            if level_of(cell) > 3:
                raise InputError(f"Basis cell {cell} has dimension above 3")
        total = sum(samples ** level_of(cell) for cell in self.basis)
        if total > Config.MAX_MESH_POINTS:
            raise CapacityError(f"Realization needs {total} grid points", bound="MAX_MESH_POINTS")
        self.uf = UnionFind()
        self._image_cache = {}
        self._run()

    def key(self, cell, chain):
        return self.rank[cell], chain

    def _image(self, f, point):
        cache_key = (f, point)
        if cache_key not in self._image_cache:
            scale = self.samples - 1
            values = apply(f, [Fraction(i, scale) for i in point])
            self._image_cache[cache_key] = tuple(int(v * scale) for v in values)
        return self._image_cache[cache_key]

    def _run(self):
        uf = self.uf
        for cell in self.basis:
            for chain in grid_chains(level_of(cell), self.samples):
                uf.add(self.key(cell, chain))
        glued = 0
        for source in self.basis:
            n = level_of(source)
            for m in (n - 1, n, n + 1):
                if not 0 <= m <= self.cset.max_dim:
                    continue
                for f in generator_morphisms(m, n, self.cset.theory):
                    target, g = self.cset.decompose(self.cset.act(f, source))
                    if target == source and g == f:
                        continue
                    glued += self._glue(source, f, target, g)
        self._propagate()
        logger.info(f"Glued {len(self.basis)} basis cells of {self.cset.name or 'cubical set'} "
                    f"at {self.samples} samples: {glued} identifications")

    def _glue(self, source, f, target, g):
        count = 0
        for chain in grid_chains(f.src, self.samples):
            left = _dedupe(tuple(self._image(f, p) for p in chain))
            right = _dedupe(tuple(self._image(g, p) for p in chain))
            a, b = self.key(source, left), self.key(target, right)
            if len(left) == len(right):
                count += self.uf.union(a, b)
            elif len(left) > len(right):
                self.uf.mark(a)
            else:
                self.uf.mark(b)
        return count

    def _propagate(self):
        """
        A simplex with a degenerate edge between consecutive vertices is
        degenerate, and its two faces opposite that edge's ends coincide.
        """
        changed = True
        while changed:
            changed = False
            for rank, chain in sorted(self.uf.parent):
                if len(chain) < 3:
                    continue
                key = (rank, chain)
                for i in range(len(chain) - 1):
                    if not self.uf.is_degenerate((rank, chain[i:i + 2])):
                        continue
                    changed |= self.uf.mark(key)
                    changed |= self.uf.union((rank, chain[:i] + chain[i + 1:]),
                                             (rank, chain[:i + 1] + chain[i + 2:]))

    def classes(self):
        """
        Non-degenerate classes in canonical order.

        Returns:
            tuple: (points, simplices, members) where points are representative keys
            of the vertex classes, simplices are tuples of point indices and
            members maps each class root to its keys
        """
        members = {}
        for key in self.uf.parent:
            members.setdefault(self.uf.find(key), []).append(key)
        points = sorted(min(keys) for root, keys in members.items()
                        if len(root[1]) == 1 and not self.uf.degenerate[root])
        point_index = {self.uf.find(key): i for i, key in enumerate(points)}
        simplices = []
        for root, keys in members.items():
            if len(root[1]) < 2 or self.uf.degenerate[root]:
                continue
            rank, chain = min(keys)
            simplices.append(tuple(point_index[self.uf.find((rank, (p,)))] for p in chain))
        simplices.sort(key=lambda s: (len(s), s))
        return points, simplices, members

    def point_class(self, cell, grid_point):
        """Class of an integer grid point of any cell, read through its basis decomposition."""
        basis_cell, g = self.cset.decompose(cell)
        return self.uf.find(self.key(basis_cell, (self._image(g, tuple(grid_point)),)))
