"""
Explicit finite bounded distributive lattices, the models D checked for flatness.
"""
import logging
import string
from dataclasses import dataclass, field
from itertools import combinations

from cubical_lab.lattice.free import enumerate_free
from cubical_lab.utils.errors import InputError
from cubical_lab.utils.validation import validate_non_negative_int, validate_order_data

logger = logging.getLogger(__name__)


def transitive_closure(elements, pairs):
    """Reflexive-transitive closure of `pairs` over `elements` as a boolean matrix."""
    index = {e: i for i, e in enumerate(elements)}
    size = len(elements)
    leq = [[i == j for j in range(size)] for i in range(size)]
    for a, b in pairs:
        if a not in index or b not in index:
            raise InputError(f"Order pair ({a}, {b}) mentions an undeclared element")
        leq[index[a]][index[b]] = True
    for k in range(size):
        for i in range(size):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(size):
                    if row_k[j]:
                        row_i[j] = True
    return leq


@dataclass(frozen=True)
class FiniteLattice:
    """
    A finite bounded distributive lattice given by its carrier and order.

    `order` is the full order relation as (a, b) pairs meaning a <= b.  Meet
    and join tables, bottom and top are derived and validated on construction.
    """

    elements: tuple
    order: frozenset
    name: str = ""
    _index: dict = field(init=False, repr=False, compare=False)
    _leq: tuple = field(init=False, repr=False, compare=False)
    _meet: tuple = field(init=False, repr=False, compare=False)
    _join: tuple = field(init=False, repr=False, compare=False)
    _bottom: str = field(init=False, repr=False, compare=False)
    _top: str = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        if not elements:
            raise InputError("A lattice needs at least one element")
        if len(set(elements)) != len(elements):
            raise InputError("Duplicate lattice elements")
        object.__setattr__(self, "elements", elements)
        index = {e: i for i, e in enumerate(elements)}
        size = len(elements)
        leq = [[False] * size for _ in range(size)]
        for a, b in self.order:
            if a not in index or b not in index:
                raise InputError(f"Order pair ({a}, {b}) mentions an undeclared element")
            leq[index[a]][index[b]] = True
        _check_partial_order(elements, leq)
        meet = _bound_table(elements, leq, lower=True)
        join = _bound_table(elements, leq, lower=False)
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_leq", tuple(tuple(row) for row in leq))
        object.__setattr__(self, "_meet", meet)
        object.__setattr__(self, "_join", join)
        object.__setattr__(self, "_bottom", next(
            e for i, e in enumerate(elements) if all(leq[i][j] for j in range(size))))
        object.__setattr__(self, "_top", next(
            e for j, e in enumerate(elements) if all(leq[i][j] for i in range(size))))
        self._check_distributive()

    @classmethod
    def from_order(cls, elements, leq_pairs, name=""):
        """Build from any generating set of order pairs (e.g. the covers)."""
        elements = tuple(str(e) for e in elements)
        leq = transitive_closure(elements, [(str(a), str(b)) for a, b in leq_pairs])
        order = frozenset((a, b) for i, a in enumerate(elements)
                          for j, b in enumerate(elements) if leq[i][j])
        return cls(elements, order, name)

    @classmethod
    def chain(cls, length):
        """0 < a < b < ... < 1 with `length` elements."""
        length = validate_non_negative_int(length, "Chain length")
        if not 2 <= length <= 26:
            raise InputError("Chain length must be between 2 and 26")
        middle = list(string.ascii_lowercase[:length - 2])
        elements = ["0"] + middle + ["1"]
        covers = list(zip(elements, elements[1:]))
        return cls.from_order(elements, covers, name=f"chain{length}")

    @classmethod
    def boolean(cls, atoms):
        """The Boolean lattice 2^atoms; atoms are a, b, c, ... and joins concatenate."""
        atoms = validate_non_negative_int(atoms, "Atom count")
        if not 1 <= atoms <= 8:
            raise InputError("Atom count must be between 1 and 8")
        letters = string.ascii_lowercase[:atoms]
        subsets = [c for size in range(atoms + 1) for c in combinations(letters, size)]

        def label(subset):
            if not subset:
                return "0"
            if len(subset) == atoms:
                return "1"
            return "".join(subset)

        pairs = [(label(a), label(b)) for a in subsets for b in subsets if set(a) <= set(b)]
        return cls.from_order([label(s) for s in subsets], pairs, name=f"bool{2 ** atoms}")

    @classmethod
    def free(cls, n_generators):
        """DL(n) as an explicit lattice; element ids are the printed normal forms."""
        elements = enumerate_free(n_generators)
        pairs = [(str(a), str(b)) for a in elements for b in elements if a.leq(b)]
        return cls([str(e) for e in elements], frozenset(pairs), name=f"DL({n_generators})")

    @property
    def size(self):
        return len(self.elements)

    @property
    def bottom(self):
        return self._bottom

    @property
    def top(self):
        return self._top

    def index(self, element):
        try:
            return self._index[element]
        except KeyError:
            raise InputError(f"{element!r} is not an element of lattice {self.name or self.elements}") from None

    def leq(self, a, b):
        return self._leq[self.index(a)][self.index(b)]

    def meet(self, a, b):
        return self.elements[self._meet[self.index(a)][self.index(b)]]

    def join(self, a, b):
        return self.elements[self._join[self.index(a)][self.index(b)]]

    def is_chain(self):
        return all(self.leq(a, b) or self.leq(b, a) for a in self.elements for b in self.elements)

    def covers(self):
        """Pairs (a, b) with a < b and nothing strictly between."""
        result = []
        for a in self.elements:
            for b in self.elements:
                if a == b or not self.leq(a, b):
                    continue
                if not any(c not in (a, b) and self.leq(a, c) and self.leq(c, b) for c in self.elements):
                    result.append((a, b))
        return result

    def to_dict(self):
        return {"name": self.name, "elements": list(self.elements),
                "leq": [list(pair) for pair in self.covers()]}

    @classmethod
    def from_dict(cls, data):
        elements, pairs, name = validate_order_data(data, "Lattice")
        return cls.from_order(elements, pairs, name=name)

    def _check_distributive(self):
        size = len(self.elements)
        meet, join = self._meet, self._join
        for a in range(size):
            for b in range(size):
                for c in range(size):
                    if meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]:
                        x, y, z = (self.elements[i] for i in (a, b, c))
                        raise InputError(f"Lattice is not distributive: {x} ^ ({y} v {z}) differs "
                                         f"from ({x} ^ {y}) v ({x} ^ {z})")


def _check_partial_order(elements, leq):
    size = len(elements)
    for i in range(size):
        if not leq[i][i]:
            raise InputError(f"Order is not reflexive at {elements[i]}")
        for j in range(size):
            if i != j and leq[i][j] and leq[j][i]:
                raise InputError(f"Order is not antisymmetric: {elements[i]} and {elements[j]}")
            if leq[i][j]:
                for k in range(size):
                    if leq[j][k] and not leq[i][k]:
                        raise InputError(f"Order is not transitive at {elements[i]}, {elements[j]}, {elements[k]}")


def _bound_table(elements, leq, lower):
    size = len(elements)
    below = (lambda x, y: leq[x][y]) if lower else (lambda x, y: leq[y][x])
    table = []
    for a in range(size):
        row = []
        for b in range(size):
            bounds = [c for c in range(size) if below(c, a) and below(c, b)]
            best = [c for c in bounds if all(below(d, c) for d in bounds)]
            if not best:
                kind = "meet" if lower else "join"
                raise InputError(f"No {kind} for {elements[a]} and {elements[b]}: not a lattice")
            row.append(best[0])
        table.append(tuple(row))
    return tuple(table)
