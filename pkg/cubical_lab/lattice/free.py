"""
Free bounded distributive lattices DL(n) in antichain (monotone DNF) normal form.

An element is a join of clauses, each clause a meet of generators.  The
clause set is kept as an antichain under inclusion, sorted lexicographically,
which makes equality of elements equality of clause tuples.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from cubical_lab.config import Config
from cubical_lab.lattice.terms import fold_term, max_generator, parse_term
from cubical_lab.utils.errors import InputError
from cubical_lab.utils.validation import validate_at_most, validate_length

logger = logging.getLogger(__name__)


def minimize_clauses(clauses):
    """Drop duplicate and non-minimal clauses; return the canonical tuple."""
    kept = []
    for clause in sorted({frozenset(c) for c in clauses}, key=len):
        if not any(k <= clause for k in kept):
            kept.append(clause)
    return tuple(sorted(tuple(sorted(c)) for c in kept))


def format_clauses(clauses, name):
    if not clauses:
        return "0"
    if clauses == ((),):
        return "1"
    if len(clauses) == 1:
        return " ^ ".join(name(i) for i in clauses[0])
    parts = []
    for clause in clauses:
        text = " ^ ".join(name(i) for i in clause)
        parts.append(f"({text})" if len(clause) > 1 else text)
    return " v ".join(parts)


def generator_name(index):
    return f"x{index}"


@dataclass(frozen=True)
class LatticeElement:
    """Element of DL(n_generators); `clauses` is the antichain normal form."""

    n_generators: int
    clauses: tuple

    def __post_init__(self):
        if self.n_generators < 0:
            raise InputError("Generator count must be non-negative")
        canonical = minimize_clauses(self.clauses)
        for clause in canonical:
            for index in clause:
                if not 0 <= index < self.n_generators:
                    raise InputError(
                        f"Generator x{index} out of range for {self.n_generators} generators")
        object.__setattr__(self, "clauses", canonical)

    @classmethod
    def _canonical(cls, n_generators, clauses):
        # Skips validation; callers guarantee `clauses` is already canonical.
        element = object.__new__(cls)
        object.__setattr__(element, "n_generators", n_generators)
        object.__setattr__(element, "clauses", clauses)
        return element

    @classmethod
    def bottom(cls, n_generators):
        return cls._canonical(n_generators, ())

    @classmethod
    def top(cls, n_generators):
        return cls._canonical(n_generators, ((),))

    @classmethod
    def generator(cls, index, n_generators):
        if not 0 <= index < n_generators:
            raise InputError(f"Generator x{index} out of range for {n_generators} generators")
        return cls._canonical(n_generators, ((index,),))

    @classmethod
    def constant(cls, value, n_generators):
        return cls.top(n_generators) if value else cls.bottom(n_generators)

    def sort_key(self):
        return self.clauses

    @property
    def is_bottom(self):
        return not self.clauses

    @property
    def is_top(self):
        return self.clauses == ((),)

    @property
    def constant_value(self):
        """True/False for the constants 1/0, None otherwise."""
        if self.is_top:
            return True
        if self.is_bottom:
            return False
        return None

    def _check_compatible(self, other):
        if not isinstance(other, LatticeElement):
            raise InputError(f"Cannot combine a lattice element with {type(other).__name__}")
        if other.n_generators != self.n_generators:
            raise InputError(
                f"Generator count mismatch: {self.n_generators} vs {other.n_generators}")

    def join(self, other):
        self._check_compatible(other)
        return LatticeElement._canonical(
            self.n_generators, minimize_clauses(self.clauses + other.clauses))

    def meet(self, other):
        self._check_compatible(other)
        merged = [set(a) | set(b) for a in self.clauses for b in other.clauses]
        return LatticeElement._canonical(self.n_generators, minimize_clauses(merged))

    __or__ = join
    __and__ = meet

    def leq(self, other):
        self._check_compatible(other)
        return all(any(set(b) <= set(a) for b in other.clauses) for a in self.clauses)

    def truth_table(self):
        """Values on all 2^n Boolean assignments, assignment k sets xi = bit i of k."""
        return tuple(
            any(all(mask >> i & 1 for i in clause) for clause in self.clauses)
            for mask in range(2 ** self.n_generators)
        )

    def __str__(self):
        return format_clauses(self.clauses, generator_name)


class UnitInterval:
    """[0, 1] with min/max; exact when fed Fractions."""

    bottom = Fraction(0)
    top = Fraction(1)

    def meet(self, a, b):
        return min(a, b)

    def join(self, a, b):
        return max(a, b)

    def negate(self, a):
        return 1 - a


UNIT_INTERVAL = UnitInterval()


class FreeAlgebra:
    """DL(n) itself as an algebra for evaluation; evaluation into it is substitution."""

    def __init__(self, n_generators):
        self.n_generators = n_generators
        self.bottom = LatticeElement.bottom(n_generators)
        self.top = LatticeElement.top(n_generators)

    def meet(self, a, b):
        return a.meet(b)

    def join(self, a, b):
        return a.join(b)


def evaluate(e, assignment, algebra=UNIT_INTERVAL):
    """
    Homomorphic evaluation: clauses become meets, the clause set a join.

    Args:
        e: LatticeElement over n generators
        assignment: sequence of n values of the algebra
        algebra: object with `meet`, `join`, `bottom`, `top` (a FiniteLattice,
            the unit interval, or a free algebra)
    """
    validate_length(assignment, e.n_generators, "Assignment")
    value = algebra.bottom
    for clause in e.clauses:
        term = algebra.top
        for index in clause:
            term = algebra.meet(term, assignment[index])
        value = algebra.join(value, term)
    return value


def substitute(e, images, n_target=None):
    """
    Kleisli extension: replace generator i of `e` by images[i] and renormalize.

    Args:
        e: LatticeElement over n generators
        images: n LatticeElements, all over the same m generators
        n_target: m; required only when `images` is empty
    """
    validate_length(images, e.n_generators, "Substitution")
    if n_target is None:
        if not images:
            raise InputError("Target generator count is needed for an empty substitution")
        n_target = images[0].n_generators
    for image in images:
        if image.n_generators != n_target:
            raise InputError(
                f"Substitution image over {image.n_generators} generators, expected {n_target}")
    return evaluate(e, images, FreeAlgebra(n_target))


def normalize(term, n_generators):
    """
    Normal form of a term (AST or grammar string) over n generators.

    Raises:
        InputError: generator index out of range, or a '~' in the term
    """
    if isinstance(term, str):
        term = parse_term(term)
    if max_generator(term) >= n_generators:
        raise InputError(f"Generator x{max_generator(term)} out of range for {n_generators} generators")
    return fold_term(
        term,
        var=lambda i: LatticeElement.generator(i, n_generators),
        const=lambda v: LatticeElement.constant(v, n_generators),
        meet=LatticeElement.meet,
        join=LatticeElement.join,
    )


def parse_element(text, n_generators):
    return normalize(parse_term(text), n_generators)


def _antichains(subsets, start, chosen):
    yield tuple(chosen)
    for i in range(start, len(subsets)):
        candidate = subsets[i]
        if all(not (candidate <= c or c <= candidate) for c in chosen):
            chosen.append(candidate)
            yield from _antichains(subsets, i + 1, chosen)
            chosen.pop()


@lru_cache(maxsize=None)
def enumerate_free(n_generators):
    """
    All elements of DL(n), sorted canonically.

    Elements are the antichains of subsets of the generators, so the count is
    the Dedekind number M(n).

    Raises:
        CapacityError: n above Config.MAX_FREE_GENERATORS
    """
    validate_at_most(n_generators, Config.MAX_FREE_GENERATORS, "Generator count")
    subsets = [frozenset(c) for size in range(n_generators + 1)
               for c in combinations(range(n_generators), size)]
    elements = [
        LatticeElement._canonical(n_generators, minimize_clauses(chain))
        for chain in _antichains(subsets, 0, [])
    ]
    elements.sort(key=LatticeElement.sort_key)
    logger.info(f"Enumerated DL({n_generators}): {len(elements)} elements")
    return tuple(elements)
