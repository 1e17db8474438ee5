"""
Mesh export as OFF, OBJ or JSON text.

Points come in provenance order, so the bytes are identical across runs.
OFF lists triangles as 3-gons and free edges as 2-gons; OBJ uses v, f and l
records with 1-based indices.
"""
import json
import logging

from cubical_lab.constants import EXPORT_FORMATS, FORMAT_JSON, FORMAT_OBJ, FORMAT_OFF
from cubical_lab.utils.errors import InputError
from cubical_lab.utils.validation import validate_choice

logger = logging.getLogger(__name__)


def _coordinate_line(point):
    return " ".join(f"{value:.6f}" for value in point)


def _check_dimension(mesh):
    if mesh.dimension > 3 or any(len(s) > 4 for s in mesh.simplices):
        raise InputError(f"Cannot export a mesh of dimension {mesh.dimension}; at most 3 is supported")


def to_off(mesh):
    faces = [f"3 {a} {b} {c}" for a, b, c in mesh.triangles()]
    faces += [f"2 {a} {b}" for a, b in mesh.free_edges()]
    lines = ["OFF", f"{mesh.point_count} {len(faces)} 0"]
    lines += [_coordinate_line(p) for p in mesh.points]
    lines += faces
    return "\n".join(lines) + "\n"


def to_obj(mesh):
    lines = [f"# {mesh.point_count} points, euler characteristic {mesh.euler_characteristic()}"]
    lines += [f"v {_coordinate_line(p)}" for p in mesh.points]
    lines += [f"f {a + 1} {b + 1} {c + 1}" for a, b, c in mesh.triangles()]
    lines += [f"l {a + 1} {b + 1}" for a, b in mesh.free_edges()]
    return "\n".join(lines) + "\n"


def to_json(mesh):
    data = {
        "samples": mesh.samples,
        "points": [[round(float(v), 6) for v in p] for p in mesh.points],
        "provenance": [{"cell": cell, "coordinates": [str(c) for c in coords]}
                       for cell, coords in mesh.provenance],
        "simplices": [list(s) for s in mesh.simplices],
        "euler_characteristic": mesh.euler_characteristic(),
    }
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


WRITERS = {
    FORMAT_OFF: to_off,
    FORMAT_OBJ: to_obj,
    FORMAT_JSON: to_json,
}


def export_mesh(mesh, fmt=FORMAT_OFF):
    """
    Serialize a mesh.

    Returns:
        bytes: ASCII text in the requested format

    Raises:
        InputError: unknown format or dimension above 3
    """
    validate_choice(fmt, EXPORT_FORMATS, "Format")
    _check_dimension(mesh)
    text = WRITERS[fmt](mesh)
    logger.debug(f"Exported {mesh.point_count} points as {fmt}")
    return text.encode("ascii")
