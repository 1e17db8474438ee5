"""
Birkhoff duality between finite posets and finite distributive lattices.

A lattice goes to its poset of join-irreducible elements, a poset to its
lattice of lower sets; `duality_roundtrip` exhibits L = Down(J(L)).
"""
import logging
from dataclasses import dataclass, field
from itertools import product

from cubical_lab.config import Config
from cubical_lab.lattice.finite import FiniteLattice, transitive_closure
from cubical_lab.models.models import IsomorphismWitness
from cubical_lab.utils.errors import DualityError, InputError
from cubical_lab.utils.validation import validate_at_most, validate_non_negative_int, validate_order_data

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FinitePoset:
    elements: tuple
    order: frozenset
    name: str = ""
    _index: dict = field(init=False, repr=False, compare=False)
    _leq: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        elements = tuple(str(e) for e in self.elements)
        if len(set(elements)) != len(elements):
            raise InputError("Duplicate poset elements")
        object.__setattr__(self, "elements", elements)
        index = {e: i for i, e in enumerate(elements)}
        size = len(elements)
        leq = [[False] * size for _ in range(size)]
        for a, b in self.order:
            if a not in index or b not in index:
                raise InputError(f"Order pair ({a}, {b}) mentions an undeclared element")
            leq[index[a]][index[b]] = True
        for i in range(size):
            if not leq[i][i]:
                raise InputError(f"Order is not reflexive at {elements[i]}")
            for j in range(size):
                if i != j and leq[i][j] and leq[j][i]:
                    raise InputError(f"Order is not antisymmetric: {elements[i]} and {elements[j]}")
                if leq[i][j] and any(leq[j][k] and not leq[i][k] for k in range(size)):
                    raise InputError(f"Order is not transitive below {elements[i]}")
        object.__setattr__(self, "_index", index)
        object.__setattr__(self, "_leq", tuple(tuple(row) for row in leq))

    @classmethod
    def from_order(cls, elements, leq_pairs, name=""):
        elements = tuple(str(e) for e in elements)
        leq = transitive_closure(elements, [(str(a), str(b)) for a, b in leq_pairs])
        order = frozenset((a, b) for i, a in enumerate(elements)
                          for j, b in enumerate(elements) if leq[i][j])
        return cls(elements, order, name)

    @classmethod
    def chain(cls, length):
        length = validate_non_negative_int(length, "Chain length")
        elements = [f"c{i}" for i in range(length)]
        return cls.from_order(elements, zip(elements, elements[1:]), name=f"chain{length}")

    @classmethod
    def antichain(cls, size):
        size = validate_non_negative_int(size, "Antichain size")
        return cls.from_order([f"p{i}" for i in range(size)], [], name=f"antichain{size}")

    @classmethod
    def power_of_two(cls, n):
        """The poset 2^n of bit strings ordered componentwise."""
        n = validate_non_negative_int(n, "Exponent")
        words = ["".join(bits) for bits in product("01", repeat=n)]
        pairs = [(a, b) for a in words for b in words
                 if all(x <= y for x, y in zip(a, b))]
        return cls.from_order(words, pairs, name=f"2^{n}")

    @property
    def size(self):
        return len(self.elements)

    def leq(self, a, b):
        try:
            return self._leq[self._index[a]][self._index[b]]
        except KeyError:
            raise InputError(f"{a!r} or {b!r} is not an element of the poset") from None

    def below(self, x):
        return [y for y in self.elements if y != x and self.leq(y, x)]

    def covers(self):
        result = []
        for a in self.elements:
            for b in self.elements:
                if a != b and self.leq(a, b) and not any(
                        c not in (a, b) and self.leq(a, c) and self.leq(c, b) for c in self.elements):
                    result.append((a, b))
        return result

    def to_dict(self):
        return {"name": self.name, "elements": list(self.elements),
                "leq": [list(pair) for pair in self.covers()]}

    @classmethod
    def from_dict(cls, data):
        elements, pairs, name = validate_order_data(data, "Poset")
        return cls.from_order(elements, pairs, name=name)


@dataclass(frozen=True)
class InvolutivePoset:
    """A finite poset with an order-reversing involution."""

    base: FinitePoset
    inv: tuple

    def __post_init__(self):
        mapping = dict(self.inv)
        if set(mapping) != set(self.base.elements):
            raise InputError("Involution must be defined on every element")
        for a in self.base.elements:
            if mapping[mapping[a]] != a:
                raise InputError(f"Map is not an involution at {a}")
            for b in self.base.elements:
                if self.base.leq(a, b) and not self.base.leq(mapping[b], mapping[a]):
                    raise InputError(f"Involution does not reverse the order at {a} <= {b}")
        object.__setattr__(self, "inv", tuple(sorted(mapping.items())))

    def image(self, x):
        return dict(self.inv)[x]


def join_irreducibles(lattice):
    """
    Poset of join-irreducible elements: j != bottom that is not the join of
    the elements strictly below it.
    """
    result = []
    for j in lattice.elements:
        if j == lattice.bottom:
            continue
        below = lattice.bottom
        for a in lattice.elements:
            if a != j and lattice.leq(a, j):
                below = lattice.join(below, a)
        if below != j:
            result.append(j)
    pairs = [(a, b) for a in result for b in result if lattice.leq(a, b)]
    logger.debug(f"Join-irreducibles of {lattice.name or 'lattice'}: {result}")
    return FinitePoset(tuple(result), frozenset(pairs), name=f"J({lattice.name})" if lattice.name else "")


def lower_set_label(members, poset):
    ordered = [e for e in poset.elements if e in members]
    return "{" + ",".join(ordered) + "}"


def enumerate_lower_sets(poset):
    """Every down-closed subset of the poset, as frozensets."""
    validate_at_most(poset.size, Config.MAX_POSET_SIZE, "Poset size")
    elements = sorted(poset.elements, key=lambda x: len(poset.below(x)))
    below = {x: set(poset.below(x)) for x in elements}
    found = []

    def extend(i, current):
        if i == len(elements):
            found.append(frozenset(current))
            return
        x = elements[i]
        extend(i + 1, current)
        if below[x] <= current:
            extend(i + 1, current | {x})

    extend(0, frozenset())
    found.sort(key=lambda s: (len(s), lower_set_label(s, poset)))
    return found


def lower_sets(poset):
    """The distributive lattice of lower sets, ordered by inclusion."""
    sets = enumerate_lower_sets(poset)
    labels = [lower_set_label(s, poset) for s in sets]
    pairs = [(labels[i], labels[j]) for i, a in enumerate(sets)
             for j, b in enumerate(sets) if a <= b]
    name = f"Down({poset.name})" if poset.name else ""
    return FiniteLattice(tuple(labels), frozenset(pairs), name=name)


def lower_set_involution(involutive):
    """
    De Morgan negation on Down(P) for an involutive poset P: U -> P minus inv(U).

    Returns:
        dict: lower-set label -> lower-set label
    """
    poset = involutive.base
    result = {}
    for members in enumerate_lower_sets(poset):
        image = {involutive.image(x) for x in members}
        complement = frozenset(x for x in poset.elements if x not in image)
        result[lower_set_label(members, poset)] = lower_set_label(complement, poset)
    return result


def _signature(ordered, x):
    below = sum(1 for y in ordered.elements if ordered.leq(y, x))
    above = sum(1 for y in ordered.elements if ordered.leq(x, y))
    return below, above


def find_isomorphism(source, target):
    """
    Order isomorphism between two finite ordered sets (posets or lattices).

    Elements are labelled by (number below, number above) and matched by
    backtracking within equal labels.

    Returns:
        dict or None: source element -> target element
    """
    if source.size != target.size:
        return None
    source_sig = {x: _signature(source, x) for x in source.elements}
    target_sig = {y: _signature(target, y) for y in target.elements}
    if sorted(source_sig.values()) != sorted(target_sig.values()):
        return None
    order = sorted(source.elements, key=lambda x: source_sig[x])
    mapping = {}
    used = set()

    def consistent(x, y):
        for a, b in mapping.items():
            if source.leq(a, x) != target.leq(b, y) or source.leq(x, a) != target.leq(y, b):
                return False
        return True

    def assign(i):
        if i == len(order):
            return True
        x = order[i]
        for y in target.elements:
            if y in used or target_sig[y] != source_sig[x] or not consistent(x, y):
                continue
            mapping[x] = y
            used.add(y)
            if assign(i + 1):
                return True
            del mapping[x]
            used.discard(y)
        return False

    return dict(mapping) if assign(0) else None


def verify_isomorphism(source, target, mapping):
    """True iff mapping is a bijection preserving and reflecting the order."""
    if sorted(mapping) != sorted(source.elements):
        return False
    if sorted(mapping.values()) != sorted(target.elements):
        return False
    return all(source.leq(a, b) == target.leq(mapping[a], mapping[b])
               for a in source.elements for b in source.elements)


def duality_roundtrip(lattice):
    """
    The Birkhoff isomorphism L -> Down(J(L)), x -> {j in J(L) : j <= x}.

    Raises:
        DualityError: the map fails verification (a distributivity bug)
    """
    irreducibles = join_irreducibles(lattice)
    down = lower_sets(irreducibles)
    mapping = {
        x: lower_set_label({j for j in irreducibles.elements if lattice.leq(j, x)}, irreducibles)
        for x in lattice.elements
    }
    if not verify_isomorphism(lattice, down, mapping):
        raise DualityError(f"Birkhoff map for {lattice.name or 'lattice'} is not an isomorphism")
    logger.info(f"Duality round trip verified for {lattice.name or 'lattice'} "
                f"({lattice.size} elements, {irreducibles.size} join-irreducibles)")
    return IsomorphismWitness(mapping=mapping, source=lattice.name, target=down.name)
