"""
Built-in presentations used by the CLI (`--corpus NAME`) and the tests.
"""
from itertools import product

from cubical_lab.constants import THEORY_DL
from cubical_lab.cset.cset import from_presentation, representable, terminal
from cubical_lab.cset.presentation import face_name
from cubical_lab.utils.errors import InputError
from cubical_lab.utils.validation import validate_non_negative_int


def point(max_dim=2, theory=THEORY_DL):
    return {"name": "point", "dims": max_dim, "theory": theory, "cells": {"0": ["v"]}}


def interval_presentation(max_dim=2, theory=THEORY_DL):
    return {"name": "interval", "dims": max_dim, "theory": theory,
            "cells": {"0": ["a", "b"], "1": ["e"]},
            "faces": {"e": {"d00": "a", "d01": "b"}}}


def circle(max_dim=2, theory=THEORY_DL):
    return {"name": "circle", "dims": max_dim, "theory": theory,
            "cells": {"0": ["v"], "1": ["e"]},
            "faces": {"e": {"d00": "v", "d01": "v"}}}


def torus(max_dim=2, theory=THEORY_DL):
    """One square t with opposite edges identified: x0-faces are b, x1-faces are a."""
    return {"name": "torus", "dims": max_dim, "theory": theory,
            "cells": {"0": ["v"], "1": ["a", "b"], "2": ["t"]},
            "faces": {"a": {"d00": "v", "d01": "v"},
                      "b": {"d00": "v", "d01": "v"},
                      "t": {"d00": "b", "d01": "b", "d10": "a", "d11": "a"}}}


def chain(length, max_dim=2, theory=THEORY_DL):
    """v0 -e1-> v1 -e2-> ... -> v<length>."""
    length = validate_non_negative_int(length, "Chain length")
    vertices = [f"v{i}" for i in range(length + 1)]
    edges = [f"e{i}" for i in range(1, length + 1)]
    faces = {e: {"d00": vertices[i], "d01": vertices[i + 1]} for i, e in enumerate(edges)}
    cells = {"0": vertices}
    if edges:
        cells["1"] = edges
    return {"name": f"chain{length}", "dims": max_dim, "theory": theory, "cells": cells, "faces": faces}


def cube_complex(n, boundary=False, max_dim=None, theory=THEORY_DL):
    """
    The n-cube (or its boundary) with one cell per face, named by {0,1,*}
    strings: "0*" is the edge x0 = 0 of the square.
    """
    n = validate_non_negative_int(n, "Cube dimension")
    words = ["".join(w) for w in product("01*", repeat=n)]
    if boundary:
        words = [w for w in words if w.count("*") < n]
    cells = {}
    faces = {}
    for word in sorted(words, key=lambda w: (w.count("*"), w)):
        dim = word.count("*")
        cells.setdefault(str(dim), []).append(word)
        stars = [i for i, ch in enumerate(word) if ch == "*"]
        if stars:
            faces[word] = {face_name(axis, end): word[:pos] + str(end) + word[pos + 1:]
                           for axis, pos in enumerate(stars) for end in (0, 1)}
    name = f"{'boundary-' if boundary else ''}cube{n}"
    top = n - 1 if boundary else n
    return {"name": name, "dims": max(top, 0) if max_dim is None else max_dim,
            "theory": theory, "cells": cells, "faces": faces}


PRESENTATIONS = {
    "point": point,
    "interval": interval_presentation,
    "circle": circle,
    "torus": torus,
    "chain3": lambda max_dim=2, theory=THEORY_DL: chain(3, max_dim, theory),
    "square": lambda max_dim=2, theory=THEORY_DL: cube_complex(2, False, max_dim, theory),
    "square-boundary": lambda max_dim=2, theory=THEORY_DL: cube_complex(2, True, max_dim, theory),
    "cube-boundary": lambda max_dim=2, theory=THEORY_DL: cube_complex(3, True, max_dim, theory),
}

CORPUS_NAMES = sorted(PRESENTATIONS) + ["terminal", "y1", "y2", "y3"]


def corpus_presentation(name, max_dim=2, theory=THEORY_DL):
    try:
        builder = PRESENTATIONS[name]
    except KeyError:
        raise InputError(f"Unknown presentation {name!r}; known: {', '.join(sorted(PRESENTATIONS))}") from None
    return builder(max_dim=max_dim, theory=theory)


def load_corpus(name, max_dim=2, theory=THEORY_DL):
    """A corpus cubical set by name; y<n> are the representables."""
    if name == "terminal":
        return terminal(max_dim, theory)
    if name in ("y1", "y2", "y3"):
        n = int(name[1])
        return representable(n, max(n, max_dim), theory)
    return from_presentation(corpus_presentation(name, max_dim, theory), name=name)
