"""
The cube category as the Kleisli category of the free distributive lattice monad.

A morphism m -> n is an n-tuple of elements of DL(m): semantically a map
I^m -> I^n, algebraically the lattice map DL(n) -> DL(m) sending generator i
to component i.  Composition is substitution.  In the De Morgan theory the
components live in DM(m), stored as DL(2m).
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from cubical_lab.config import Config
from cubical_lab.constants import (
    CONNECTION_JOIN,
    CONNECTION_MEET,
    KIND_CONNECTION,
    KIND_DEGENERACY,
    KIND_DIAGONAL,
    KIND_FACE,
    KIND_REVERSAL,
    KIND_SYMMETRY,
    THEORY_DL,
    THEORY_DM,
)
from cubical_lab.lattice.demorgan import literal_name, negate_clauses, normalize_dm
from cubical_lab.lattice.free import (
    UNIT_INTERVAL,
    LatticeElement,
    enumerate_free,
    evaluate,
    format_clauses,
    generator_name,
    normalize,
    substitute,
)
from cubical_lab.utils.errors import CapacityError, InputError, UnsupportedTheoryError
from cubical_lab.utils.validation import (
    validate_at_most,
    validate_choice,
    validate_index,
    validate_length,
    validate_non_negative_int,
)

logger = logging.getLogger(__name__)

CUBE_THEORIES = [THEORY_DL, THEORY_DM]


def arity(n, theory):
    """Number of underlying DL generators of the component algebra over n."""
    return 2 * n if theory == THEORY_DM else n


@dataclass(frozen=True)
class CubeMorphism:
    src: int
    dst: int
    components: tuple
    theory: str = THEORY_DL

    def __post_init__(self):
        validate_choice(self.theory, CUBE_THEORIES, "Theory")
        validate_non_negative_int(self.src, "Source dimension")
        validate_non_negative_int(self.dst, "Target dimension")
        components = tuple(self.components)
        validate_length(components, self.dst, "Morphism components")
        expected = arity(self.src, self.theory)
        for component in components:
            if not isinstance(component, LatticeElement) or component.n_generators != expected:
                raise InputError(f"Component {component} is not an element over {expected} generators")
        object.__setattr__(self, "components", components)

    def sort_key(self):
        return tuple(c.clauses for c in self.components)

    def component_text(self, index):
        name = literal_name if self.theory == THEORY_DM else generator_name
        return format_clauses(self.components[index].clauses, name)

    @property
    def component_texts(self):
        return [self.component_text(i) for i in range(self.dst)]

    def __str__(self):
        prefix = "cube" if self.theory == THEORY_DL else "dm-cube"
        return f"{prefix} {self.src} -> {self.dst} : [{', '.join(self.component_texts)}]"

    def to_dict(self):
        return {"theory": self.theory, "src": self.src, "dst": self.dst,
                "components": self.component_texts}


def _var(i, n, theory):
    return LatticeElement.generator(2 * i if theory == THEORY_DM else i, arity(n, theory))


def _const(value, n, theory):
    return LatticeElement.constant(value, arity(n, theory))


def _negated(element):
    return LatticeElement._canonical(element.n_generators, negate_clauses(element.clauses))


def identity(n, theory=THEORY_DL):
    return CubeMorphism(n, n, tuple(_var(i, n, theory) for i in range(n)), theory)


@lru_cache(maxsize=1 << 16)
def compose(g, f):
    """
    g . f for f: m -> n and g: n -> k, by substituting f's components into g's.

    Raises:
        InputError: f.dst != g.src or the theories differ
    """
    if f.dst != g.src:
        raise InputError(f"Cannot compose {g} after {f}: dimensions {f.dst} and {g.src} differ")
    if f.theory != g.theory:
        raise InputError(f"Cannot compose morphisms of theories {g.theory} and {f.theory}")
    if f.theory == THEORY_DM:
        images = []
        for component in f.components:
            images.extend((component, _negated(component)))
    else:
        images = list(f.components)
    target = arity(f.src, f.theory)
    return CubeMorphism(f.src, g.dst, tuple(substitute(c, images, n_target=target)
                                            for c in g.components), f.theory)


def face(n, axis, end, theory=THEORY_DL):
    """I^(n-1) -> I^n inserting the constant `end` at coordinate `axis`."""
    n = validate_non_negative_int(n, "Dimension")
    axis = validate_index(axis, n, "Face axis")
    end = validate_index(end, 2, "Face end")
    components = [_var(i, n - 1, theory) for i in range(n - 1)]
    components.insert(axis, _const(bool(end), n - 1, theory))
    return CubeMorphism(n - 1, n, tuple(components), theory)


def degeneracy(n, axis, theory=THEORY_DL):
    """I^n -> I^(n-1) forgetting coordinate `axis`."""
    n = validate_non_negative_int(n, "Dimension")
    axis = validate_index(axis, n, "Degeneracy axis")
    components = [_var(i, n, theory) for i in range(n) if i != axis]
    return CubeMorphism(n, n - 1, tuple(components), theory)


def connection(n, i, j, kind, theory=THEORY_DL):
    """I^n -> I^(n-1) replacing coordinates i < j by x_i ^ x_j or x_i v x_j."""
    n = validate_non_negative_int(n, "Dimension")
    validate_choice(kind, [CONNECTION_MEET, CONNECTION_JOIN], "Connection kind")
    i = validate_index(i, n, "Connection index")
    j = validate_index(j, n, "Connection index")
    if i >= j:
        raise InputError(f"Connection needs i < j, got {i}, {j}")
    merged = _var(i, n, theory).meet(_var(j, n, theory)) if kind == CONNECTION_MEET \
        else _var(i, n, theory).join(_var(j, n, theory))
    components = [merged if p == i else _var(p, n, theory) for p in range(n) if p != j]
    return CubeMorphism(n, n - 1, tuple(components), theory)


def diagonal(n, i, j, theory=THEORY_DL):
    """I^(n-1) -> I^n repeating output coordinate i at position j (i < j)."""
    n = validate_non_negative_int(n, "Dimension")
    i = validate_index(i, n, "Diagonal index")
    j = validate_index(j, n, "Diagonal index")
    if i >= j:
        raise InputError(f"Diagonal needs i < j, got {i}, {j}")
    components = [_var(p, n - 1, theory) for p in range(n - 1)]
    components.insert(j, components[i])
    return CubeMorphism(n - 1, n, tuple(components), theory)


def symmetry(permutation, theory=THEORY_DL):
    """I^n -> I^n with output coordinate k equal to input coordinate permutation[k]."""
    permutation = tuple(permutation)
    n = len(permutation)
    if sorted(permutation) != list(range(n)):
        raise InputError(f"{permutation} is not a permutation of 0..{n - 1}")
    return CubeMorphism(n, n, tuple(_var(p, n, theory) for p in permutation), theory)


def reversal(n, axis, theory=THEORY_DM):
    """I^n -> I^n negating coordinate `axis`; De Morgan theory only."""
    if theory != THEORY_DM:
        raise UnsupportedTheoryError("Reversals exist only in the De Morgan cube category")
    n = validate_non_negative_int(n, "Dimension")
    axis = validate_index(axis, n, "Reversal axis")
    components = [_var(p, n, theory) for p in range(n)]
    components[axis] = _negated(components[axis])
    return CubeMorphism(n, n, tuple(components), theory)


def generator(kind, n=None, theory=THEORY_DL, **params):
    """
    Named generator morphism by kind.

    face: n, axis, end; degeneracy: n, axis; connection: n, i, j, op;
    diagonal: n, i, j; symmetry: permutation; reversal: n, axis.
    """
    if kind == KIND_FACE:
        return face(n, params["axis"], params["end"], theory)
    if kind == KIND_DEGENERACY:
        return degeneracy(n, params["axis"], theory)
    if kind == KIND_CONNECTION:
        return connection(n, params["i"], params["j"], params["op"], theory)
    if kind == KIND_DIAGONAL:
        return diagonal(n, params["i"], params["j"], theory)
    if kind == KIND_SYMMETRY:
        return symmetry(params["permutation"], theory)
    if kind == KIND_REVERSAL:
        return reversal(n, params["axis"], theory)
    raise InputError(f"Unknown generator kind {kind!r}")


def generator_morphisms(src, dst, theory=THEORY_DL):
    """Every named generator src -> dst (faces, diagonals, degeneracies,
    connections, adjacent transpositions, reversals)."""
    result = []
    if dst == src + 1:
        n = dst
        result += [face(n, axis, end, theory) for axis in range(n) for end in (0, 1)]
        result += [diagonal(n, i, j, theory) for i in range(n) for j in range(i + 1, n)]
    elif dst == src - 1 and src >= 1:
        n = src
        result += [degeneracy(n, axis, theory) for axis in range(n)]
        result += [connection(n, i, j, kind, theory) for i in range(n) for j in range(i + 1, n)
                   for kind in (CONNECTION_MEET, CONNECTION_JOIN)]
    elif dst == src:
        for k in range(src - 1):
            permutation = list(range(src))
            permutation[k], permutation[k + 1] = permutation[k + 1], permutation[k]
            result.append(symmetry(permutation, theory))
        if theory == THEORY_DM:
            result += [reversal(src, axis, theory) for axis in range(src)]
    return result


def _component_algebra_size(m, theory):
    limit = Config.MAX_DM_GENERATORS if theory == THEORY_DM else Config.MAX_FREE_GENERATORS
    validate_at_most(m, limit, "Source dimension")
    return len(enumerate_free(arity(m, theory)))


def hom_count(m, n, theory=THEORY_DL):
    """|hom(m, n)| = |DL(m)|^n (|DM(m)|^n in the De Morgan theory)."""
    m = validate_non_negative_int(m, "Source dimension")
    n = validate_non_negative_int(n, "Target dimension")
    count = _component_algebra_size(m, theory) ** n
    if count > Config.MAX_HOM_COUNT:
        raise CapacityError(f"hom({m}, {n}) has {count} elements, above the limit", bound="n")
    return count


@lru_cache(maxsize=None)
def hom_set(m, n, theory=THEORY_DL):
    """All morphisms m -> n in canonical (lexicographic component) order."""
    count = hom_count(m, n, theory)
    if count > Config.MAX_HOM_ENUMERATION:
        raise CapacityError(f"Enumerating hom({m}, {n}) would produce {count} morphisms", bound="n")
    elements = enumerate_free(arity(m, theory))
    return tuple(CubeMorphism(m, n, tuple(choice), theory)
                 for choice in product(elements, repeat=n))


def apply(f, point):
    """Evaluate f: I^m -> I^n at a point of [0,1]^m with exact rationals."""
    validate_length(point, f.src, "Point")
    values = [Fraction(v) for v in point]
    if f.theory == THEORY_DM:
        values = [x for v in values for x in (v, 1 - v)]
    return tuple(evaluate(c, values, UNIT_INTERVAL) for c in f.components)


def evaluate_in(f, values, algebra):
    """S_D(f): D^m -> D^n, componentwise evaluation in a distributive lattice."""
    if f.theory != THEORY_DL:
        raise UnsupportedTheoryError("Evaluation in a plain distributive lattice needs the dl theory")
    validate_length(values, f.src, "Tuple")
    return tuple(evaluate(c, list(values), algebra) for c in f.components)


_MORPHISM = re.compile(r"^\s*(cube|dm-cube)\s+(\d+)\s*->\s*(\d+)\s*:\s*\[(.*)\]\s*$")


def parse_component(text, m, theory=THEORY_DL):
    if theory == THEORY_DM:
        return normalize_dm(text, m).underlying
    return normalize(text, m)


def parse_morphism(text, theory=None):
    """Parse `cube 2 -> 1 : [x0 v x1]` (or `dm-cube ...` for the De Morgan theory)."""
    match = _MORPHISM.match(text or "")
    if match is None:
        raise InputError(f"Malformed morphism {text!r}; expected 'cube m -> n : [t1, ...]'")
    prefix, m, n, body = match.groups()
    found = THEORY_DM if prefix == "dm-cube" else THEORY_DL
    if theory is not None and theory != found:
        raise InputError(f"Morphism {text!r} is not in the {theory} theory")
    terms = [t for t in (part.strip() for part in body.split(",")) if t]
    components = tuple(parse_component(t, int(m), found) for t in terms)
    return CubeMorphism(int(m), int(n), components, found)


def morphism_from_dict(data):
    if not isinstance(data, dict):
        raise InputError("Morphism description must be an object")
    theory = data.get("theory", THEORY_DL)
    validate_choice(theory, CUBE_THEORIES, "Theory")
    try:
        m, n, terms = int(data["src"]), int(data["dst"]), data["components"]
    except (KeyError, TypeError, ValueError):
        raise InputError("Morphism description needs 'src', 'dst' and 'components'") from None
    return CubeMorphism(m, n, tuple(parse_component(t, m, theory) for t in terms), theory)


def projection(n, axes, theory=THEORY_DL):
    """I^n -> I^len(axes), p -> (p[a] for a in axes)."""
    n = validate_non_negative_int(n, "Dimension")
    components = tuple(_var(validate_index(a, n, "Projection axis"), n, theory) for a in axes)
    return CubeMorphism(n, len(components), components, theory)


def random_morphism(rng, m, n, theory=THEORY_DL):
    """A uniformly random morphism m -> n drawn with `rng` (a random.Random)."""
    elements = enumerate_free(arity(m, theory))
    return CubeMorphism(m, n, tuple(rng.choice(elements) for _ in range(n)), theory)
