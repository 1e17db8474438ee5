"""
Moore paths on a truncated cubical set.

A path is a list of composable non-degenerate edges (level-1 cells); the
zero-length path at a vertex is the identity.  Degenerate edges are removed
eagerly, which is the normal form of the quotient by constant paths.
Composition is list concatenation, hence strictly associative.

Squares use x0 along the path and x1 as the homotopy coordinate.
"""
import logging
from dataclasses import dataclass, field

from cubical_lab.config import Config
from cubical_lab.constants import CONNECTION_JOIN, THEORY_DM
from cubical_lab.cset.cset import level_of
from cubical_lab.cset.presentation import face_name
from cubical_lab.cube.cube import connection, degeneracy, face, reversal
from cubical_lab.models.models import StaircaseReport
from cubical_lab.utils.errors import CapacityError, InputError, UnsupportedTheoryError
from cubical_lab.utils.validation import validate_non_negative_int

logger = logging.getLogger(__name__)


def _check_level(ambient, cell, level, what):
    ambient.check_cell(cell)
    if level_of(cell) != level:
        raise InputError(f"{what} {cell!r} is not a level-{level} cell")
    return cell


def edge_source(ambient, edge):
    return ambient.act(face(1, 0, 0, ambient.theory), _check_level(ambient, edge, 1, "Edge"))


def edge_target(ambient, edge):
    return ambient.act(face(1, 0, 1, ambient.theory), _check_level(ambient, edge, 1, "Edge"))


def constant_edge(ambient, vertex):
    """The degenerate edge at a vertex."""
    return ambient.act(degeneracy(1, 0, ambient.theory), _check_level(ambient, vertex, 0, "Vertex"))


def is_degenerate_edge(ambient, edge):
    return edge == constant_edge(ambient, edge_source(ambient, edge))


@dataclass(frozen=True)
class MoorePath:
    ambient: object = field(compare=False, repr=False)
    edges: tuple
    source: str
    target: str

    def __post_init__(self):
        edges = tuple(self.edges)
        object.__setattr__(self, "edges", edges)
        _check_level(self.ambient, self.source, 0, "Source")
        _check_level(self.ambient, self.target, 0, "Target")
        at = self.source
        for edge in edges:
            if is_degenerate_edge(self.ambient, edge):
                raise InputError(f"Edge {edge!r} is degenerate; use MoorePath.from_edges to normalize")
            if edge_source(self.ambient, edge) != at:
                raise InputError(f"Edge {edge!r} does not start at {at!r}")
            at = edge_target(self.ambient, edge)
        if at != self.target:
            raise InputError(f"Path ends at {at!r}, not at the declared target {self.target!r}")

    @classmethod
    def identity(cls, ambient, vertex):
        """The zero-length path e_vertex."""
        return cls(ambient, (), vertex, vertex)

    @classmethod
    def from_edges(cls, ambient, edges, source=None):
        """
        Normalize a composable edge list by dropping its degenerate edges.

        Args:
            ambient: the cubical set
            edges: level-1 cell ids, possibly degenerate
            source: start vertex; required only when `edges` is empty

        Raises:
            InputError: unknown or non-composable edges, or no source for an empty list
        """
        edges = list(edges)
        if not edges:
            if source is None:
                raise InputError("An empty path needs a source vertex")
            return cls.identity(ambient, source)
        at = edge_source(ambient, edges[0])
        if source is not None and source != at:
            raise InputError(f"First edge {edges[0]!r} does not start at {source!r}")
        start = at
        kept = []
        for edge in edges:
            if edge_source(ambient, edge) != at:
                raise InputError(f"Edge {edge!r} does not start at {at!r}")
            at = edge_target(ambient, edge)
            if not is_degenerate_edge(ambient, edge):
                kept.append(edge)
        return cls(ambient, tuple(kept), start, at)

    def __len__(self):
        return len(self.edges)

    @property
    def vertices(self):
        result = [self.source]
        for edge in self.edges:
            result.append(edge_target(self.ambient, edge))
        return result

    def to_dict(self):
        return {"ambient": self.ambient.name, "source": self.source, "target": self.target,
                "edges": list(self.edges), "length": len(self.edges)}


def path_from_dict(ambient, data):
    """Inverse of `MoorePath.to_dict` against a given ambient cubical set."""
    if not isinstance(data, dict) or "source" not in data:
        raise InputError("A path needs at least a 'source' entry")
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise InputError("Path 'edges' must be a list of cell ids")
    path = MoorePath.from_edges(ambient, edges, source=data["source"])
    if "target" in data and data["target"] != path.target:
        raise InputError(f"Path ends at {path.target!r}, not at {data['target']!r}")
    return path


def concat(p, q):
    """p followed by q."""
    if p.ambient is not q.ambient:
        raise InputError("Cannot concatenate paths in different cubical sets")
    if p.target != q.source:
        raise InputError(f"Cannot concatenate: {p.target!r} is not {q.source!r}")
    return MoorePath(p.ambient, p.edges + q.edges, p.source, q.target)


def reverse(p):
    """Reversed list with every edge acted on by the reversal of I; De Morgan only."""
    if p.ambient.theory != THEORY_DM:
        raise UnsupportedTheoryError("Reversing paths needs the De Morgan cube category")
    flip = reversal(1, 0, THEORY_DM)
    edges = tuple(p.ambient.act(flip, edge) for edge in reversed(p.edges))
    return MoorePath(p.ambient, edges, p.target, p.source)


@dataclass(frozen=True)
class PathSquare:
    """A level-2 cell with its faces d<axis><end> read off the ambient action."""

    ambient: object = field(compare=False, repr=False)
    cell: str
    faces: dict = field(compare=False, default=None)

    def __post_init__(self):
        _check_level(self.ambient, self.cell, 2, "Square")
        theory = self.ambient.theory
        faces = {face_name(axis, end): self.ambient.act(face(2, axis, end, theory), self.cell)
                 for axis in (0, 1) for end in (0, 1)}
        object.__setattr__(self, "faces", faces)

    def side(self, axis, end):
        return self.faces[face_name(axis, end)]

    def to_dict(self):
        return {"cell": self.cell, "faces": dict(sorted(self.faces.items()))}


def _require_squares(ambient):
    if ambient.max_dim < 2:
        raise CapacityError(f"Contractions need squares; {ambient.name or 'the cubical set'} "
                            f"is truncated at {ambient.max_dim}", bound="max_dim")


def contract_edge(ambient, edge):
    """
    The square p(x0 v x1): at x0 = 0 and at x1 = 0 it is p, at x0 = 1 and at
    x1 = 1 it is constant at the target of p.
    """
    _require_squares(ambient)
    _check_level(ambient, edge, 1, "Edge")
    join = connection(2, 0, 1, CONNECTION_JOIN, ambient.theory)
    return PathSquare(ambient, ambient.act(join, edge))


def contract_path(p):
    """
    Rows of squares contracting p to the zero-length path at its target.

    Row i moves the start of the path across edge i: squares left of i are
    e_i(x1), square i is e_i(x0 v x1), squares right of i are e_j(x0).  Its
    bottom is p with the first i edges constant, its top has i + 1 constant
    edges, so the last row ends in the constant path at target(p).
    """
    ambient = p.ambient
    _require_squares(ambient)
    theory = ambient.theory
    along_homotopy = degeneracy(2, 0, theory)
    along_path = degeneracy(2, 1, theory)
    rows = []
    for i, edge in enumerate(p.edges):
        row = []
        for j, other in enumerate(p.edges):
            if j < i:
                row.append(PathSquare(ambient, ambient.act(along_homotopy, edge)))
            elif j == i:
                row.append(contract_edge(ambient, edge))
            else:
                row.append(PathSquare(ambient, ambient.act(along_path, other)))
        rows.append(row)
    logger.debug(f"Contraction of a length-{len(p)} path: {len(rows)} rows")
    return rows


def staircase_boundary(row, end):
    """Edges of a row at x1 = end, left to right (degenerate edges kept)."""
    return [square.side(1, end) for square in row]


def verify_staircase(p, rows):
    """
    Check the face adjacencies of `contract_path(p)`: neighbouring squares
    share their x0-sides, consecutive rows share their x1-boundaries, the first
    row starts on p, the last row ends on constant edges, and the right end of
    every row stays at target(p).
    """
    ambient = p.ambient
    report = StaircaseReport(rows=len(rows), squares=sum(len(row) for row in rows))
    if len(rows) != len(p):
        report.mismatches.append(f"{len(rows)} rows for a path of length {len(p)}")
    for i, row in enumerate(rows):
        for j in range(len(row) - 1):
            if row[j].side(0, 1) != row[j + 1].side(0, 0):
                report.mismatches.append(f"row {i}: squares {j} and {j + 1} do not share a side")
        if row and row[-1].side(0, 1) != constant_edge(ambient, p.target):
            report.mismatches.append(f"row {i}: right end leaves {p.target!r}")
    for i in range(len(rows) - 1):
        if staircase_boundary(rows[i], 1) != staircase_boundary(rows[i + 1], 0):
            report.mismatches.append(f"rows {i} and {i + 1} do not share a boundary")
    if rows:
        if staircase_boundary(rows[0], 0) != list(p.edges):
            report.mismatches.append("first row does not start on the path")
        if not all(is_degenerate_edge(ambient, e) for e in staircase_boundary(rows[-1], 1)):
            report.mismatches.append("last row does not end on a constant path")
    logger.info(f"Staircase of a length-{len(p)} path: {len(report.mismatches)} mismatches")
    return report


def enumerate_paths(ambient, max_length):
    """
    Every Moore path of length <= max_length, by length and then edge order.

    Raises:
        CapacityError: more than CELL_BUDGET paths
    """
    max_length = validate_non_negative_int(max_length, "Path length")
    edges = ambient.cells(1) if ambient.max_dim >= 1 else ()
    outgoing = {}
    for edge in edges:
        if not is_degenerate_edge(ambient, edge):
            outgoing.setdefault(edge_source(ambient, edge), []).append(edge)
    layer = [MoorePath.identity(ambient, v) for v in ambient.cells(0)]
    paths = list(layer)
    for _ in range(max_length):
        layer = [MoorePath(ambient, p.edges + (e,), p.source, edge_target(ambient, e))
                 for p in layer for e in outgoing.get(p.target, ())]
        if not layer:
            break
        paths.extend(layer)
        if len(paths) > Config.CELL_BUDGET:
            raise CapacityError(f"More than {Config.CELL_BUDGET} paths of length <= {max_length}",
                                bound="CELL_BUDGET")
    logger.info(f"{len(paths)} Moore paths of length <= {max_length} in {ambient.name or 'cubical set'}")
    return paths
