"""
JSON persistence for lattices, posets, presentations, Moore paths and reports.

Relative file names that do not exist are looked up in Config.DATA_DIR, so
`--lattice bool4.json` finds the bundled data files.
"""
import json
import logging
import os

from cubical_lab.config import Config
from cubical_lab.cset.presentation import parse_presentation
from cubical_lab.duality.duality import FinitePoset
from cubical_lab.lattice.finite import FiniteLattice
from cubical_lab.moore.moore import path_from_dict
from cubical_lab.utils.errors import InputError

logger = logging.getLogger(__name__)


def resolve_path(path):
    """The file itself if it exists, else the same name under DATA_DIR."""
    if os.path.exists(path) or os.path.isabs(path):
        return path
    candidate = os.path.join(Config.DATA_DIR, path)
    if os.path.exists(candidate):
        return candidate
    return path


def read_json(path):
    """Load a JSON document, wrapping I/O and syntax errors into InputError."""
    resolved = resolve_path(path)
    try:
        with open(resolved, encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"Invalid JSON in {path}: line {e.lineno}: {e.msg}") from None
    logger.debug(f"Loaded {resolved}")
    return data


def dumps(data):
    """Canonical text: sorted keys, 2-space indent, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def write_json(path, data):
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(dumps(data))
    except OSError as e:
        raise InputError(f"Cannot write {path}: {e.strerror or e}") from None
    logger.info(f"Wrote {path}")


def write_bytes(path, payload):
    try:
        with open(path, "wb") as handle:
            handle.write(payload)
    except OSError as e:
        raise InputError(f"Cannot write {path}: {e.strerror or e}") from None
    logger.info(f"Wrote {len(payload)} bytes to {path}")


def load_lattice(path):
    data = read_json(path)
    if isinstance(data, dict) and not data.get("name"):
        data = dict(data, name=os.path.splitext(os.path.basename(path))[0])
    return FiniteLattice.from_dict(data)


def load_poset(path):
    return FinitePoset.from_dict(read_json(path))


def load_presentation(path, **overrides):
    """Parse a presentation file; `overrides` replace top-level keys such as theory or dims."""
    data = read_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path} does not hold a presentation object")
    data = dict(data, **{key: value for key, value in overrides.items() if value is not None})
    name = data.get("name") or os.path.splitext(os.path.basename(path))[0]
    return parse_presentation(data, name)


def load_path(path, ambient):
    """
    A Moore path stored by `save_path` or by `moore --output`, re-validated
    against `ambient`.
    """
    data = read_json(path)
    if isinstance(data, dict) and isinstance(data.get("path"), dict):
        data = data["path"]
    return path_from_dict(ambient, data)


def save_path(path, moore_path):
    write_json(path, moore_path.to_dict())
