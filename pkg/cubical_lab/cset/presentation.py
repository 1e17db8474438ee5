"""
Cellular presentations of cubical sets, read from and written to plain dicts.

    {"dims": 2,
     "theory": "dl",
     "cells": {"0": ["v"], "1": ["a", "b"], "2": ["t"]},
     "faces": {"a": {"d00": "v", "d01": "v"},
               "t": {"d00": "b", "d01": {"cell": "b", "map": "cube 1 -> 1 : [x0]"}}},
     "degenerate": {"c": {"cell": "v", "map": "cube 1 -> 0 : []"}}}

Face names are d<axis><end>.  A face value is a cell id (same dimension as
the face, or a vertex) or a {"cell", "map"} pair meaning map^*(cell).  Cells
named under "degenerate" are aliases for such a pair and never become cells
of their own.
"""
import logging
import re
from dataclasses import dataclass, field

from cubical_lab.config import Config
from cubical_lab.constants import THEORY_DL, THEORY_DM
from cubical_lab.cube.cube import CubeMorphism, compose, identity, parse_morphism
from cubical_lab.utils.errors import InputError
from cubical_lab.utils.validation import validate_at_most, validate_choice, validate_non_negative_int

logger = logging.getLogger(__name__)

FACE_NAME = re.compile(r"^d(\d+)([01])$")
CELL_NAME = re.compile(r"^[^:\[\]<>|,\s]+$")


def face_name(axis, end):
    return f"d{axis}{end}"


@dataclass
class Presentation:
    """Generating cells in declaration order with their resolved face assignments."""

    max_dim: int
    theory: str
    cells: list
    faces: dict = field(default_factory=dict)
    name: str = ""

    def dim(self, cell):
        for name, dim in self.cells:
            if name == cell:
                return dim
        raise InputError(f"Undeclared cell {cell!r}")

    def to_dict(self):
        cells = {}
        for name, dim in self.cells:
            cells.setdefault(str(dim), []).append(name)
        faces = {}
        for name, _ in self.cells:
            assigned = self.faces.get(name, {})
            if assigned:
                faces[name] = {face_name(axis, end): {"cell": target, "map": str(g)}
                               for (axis, end), (target, g) in sorted(assigned.items())}
        return {"dims": self.max_dim, "theory": self.theory, "cells": cells, "faces": faces}


def _declared_cells(data):
    raw = data.get("cells")
    if not isinstance(raw, dict):
        raise InputError("Presentation needs a 'cells' object keyed by dimension")
    cells = []
    seen = set()
    for key in sorted(raw, key=lambda k: validate_non_negative_int(k, "Cell dimension")):
        dim = int(key)
        names = raw[key]
        if not isinstance(names, list):
            raise InputError(f"Cells of dimension {dim} must be a list")
        for name in names:
            if not isinstance(name, str) or not CELL_NAME.match(name):
                raise InputError(f"Invalid cell name {name!r}")
            if name in seen:
                raise InputError(f"Cell {name!r} declared twice")
            seen.add(name)
            cells.append((name, dim))
    return cells


def _parse_map(text, theory, where):
    if not isinstance(text, str):
        raise InputError(f"{where}: 'map' must be a morphism string")
    return parse_morphism(text, theory)


def parse_presentation(data, name=""):
    """
    Validate and resolve a presentation dict.

    Raises:
        InputError: unknown keys, undeclared or later-declared cells, ill-typed maps
        CapacityError: truncation above Config.MAX_TRUNCATION
    """
    if not isinstance(data, dict):
        raise InputError("Presentation must be a JSON object")
    theory = data.get("theory", THEORY_DL)
    validate_choice(theory, [THEORY_DL, THEORY_DM], "Theory")
    cells = _declared_cells(data)
    top = max((dim for _, dim in cells), default=0)
    max_dim = validate_non_negative_int(data.get("dims", top), "Truncation")
    validate_at_most(max_dim, Config.MAX_TRUNCATION, "Truncation")
    if top > max_dim:
        raise InputError(f"Cell of dimension {top} above the truncation {max_dim}")
    order = {cell: i for i, (cell, _) in enumerate(cells)}
    dims = dict(cells)
    for key in ("faces", "degenerate"):
        if not isinstance(data.get(key) or {}, dict):
            raise InputError(f"Presentation '{key}' must be an object keyed by cell name")

    # alias -> (generating cell, morphism alias_dim -> dim(cell))
    aliases = {}
    for alias, value in (data.get("degenerate") or {}).items():
        if alias in dims:
            raise InputError(f"Cell {alias!r} is declared both as a cell and as degenerate")
        if not isinstance(value, dict) or "cell" not in value or "map" not in value:
            raise InputError(f"Degenerate cell {alias!r} needs 'cell' and 'map'")
        if not isinstance(value["cell"], str):
            raise InputError(f"Degenerate cell {alias!r}: 'cell' must be a cell name")
        g = _parse_map(value["map"], theory, f"Degenerate cell {alias!r}")
        aliases[alias] = (value["cell"], g)

    def resolve(cell, g, where, seen=()):
        if cell in dims:
            if g.dst != dims[cell]:
                raise InputError(f"{where}: map {g} does not land in dimension {dims[cell]} of {cell!r}")
            return cell, g
        if cell in aliases and cell not in seen:
            target, h = aliases[cell]
            if g.dst != h.src:
                raise InputError(f"{where}: map {g} does not land in dimension {h.src} of {cell!r}")
            return resolve(target, compose(h, g), where, seen + (cell,))
        raise InputError(f"{where}: undeclared cell {cell!r}")

    faces = {}
    for cell, assigned in (data.get("faces") or {}).items():
        if cell not in dims:
            raise InputError(f"Faces given for undeclared cell {cell!r}")
        if not isinstance(assigned, dict):
            raise InputError(f"Faces of {cell!r} must be an object")
        dim = dims[cell]
        resolved = {}
        for key, value in assigned.items():
            match = FACE_NAME.match(key)
            if match is None:
                raise InputError(f"Invalid face name {key!r} on {cell!r}; expected d<axis><end>")
            axis, end = int(match.group(1)), int(match.group(2))
            if axis >= dim:
                raise InputError(f"Face {key} of {cell!r} needs an axis below {dim}")
            where = f"Face {key} of {cell!r}"
            if isinstance(value, str):
                target_dim = dims.get(value)
                if target_dim is None and value in aliases:
                    target_dim = aliases[value][1].src
                if target_dim is None:
                    raise InputError(f"{where}: undeclared cell {value!r}")
                if target_dim == dim - 1:
                    g = identity(dim - 1, theory)
                elif target_dim == 0:
                    g = CubeMorphism(dim - 1, 0, (), theory)
                else:
                    raise InputError(f"{where}: {value!r} has dimension {target_dim}, "
                                     f"expected {dim - 1}; give an explicit map")
                target, g = resolve(value, g, where)
            elif isinstance(value, dict) and "cell" in value and "map" in value:
                if not isinstance(value["cell"], str):
                    raise InputError(f"{where}: 'cell' must be a cell name")
                g = _parse_map(value["map"], theory, where)
                if g.src != dim - 1:
                    raise InputError(f"{where}: map {g} must start at dimension {dim - 1}")
                target, g = resolve(value["cell"], g, where)
            else:
                raise InputError(f"{where}: expected a cell id or {{'cell', 'map'}}")
            if order[target] >= order[cell]:
                raise InputError(f"{where}: {target!r} must be declared before {cell!r}")
            resolved[(axis, end)] = (target, g)
        faces[cell] = resolved
    presentation = Presentation(max_dim=max_dim, theory=theory, cells=cells, faces=faces,
                                name=name or data.get("name", ""))
    logger.debug(f"Parsed presentation {presentation.name!r}: {len(cells)} generating cells")
    return presentation
