"""
Free De Morgan algebras DM(n), stored as DL(2n): generator 2i is xi, 2i+1 is ~xi.
"""
import logging
from dataclasses import dataclass

from cubical_lab.config import Config
from cubical_lab.lattice.free import (
    LatticeElement,
    UNIT_INTERVAL,
    enumerate_free,
    evaluate,
    format_clauses,
    minimize_clauses,
)
from cubical_lab.lattice.terms import fold_term, max_generator, parse_term
from cubical_lab.utils.errors import InputError, UnsupportedTheoryError
from cubical_lab.utils.validation import validate_at_most, validate_length

logger = logging.getLogger(__name__)


def literal_name(index):
    return f"~x{index // 2}" if index % 2 else f"x{index // 2}"


def negate_clauses(clauses):
    """~ of a join of meets of literals, as a canonical clause tuple."""
    # ~(c1 v c2 v ...) = ~c1 ^ ~c2 ^ ..., with ~(l1 ^ l2 ^ ...) = ~l1 v ~l2 v ...
    result = [frozenset()]
    for clause in clauses:
        negated = [frozenset((index ^ 1,)) for index in clause]
        result = [r | n for r in result for n in negated]
        result = [frozenset(c) for c in minimize_clauses(result)]
    return minimize_clauses(result)


@dataclass(frozen=True)
class DeMorganElement:
    underlying: LatticeElement

    def __post_init__(self):
        if self.underlying.n_generators % 2:
            raise InputError("A De Morgan element needs an even number of underlying generators")

    @property
    def n_generators(self):
        return self.underlying.n_generators // 2

    @classmethod
    def generator(cls, index, n_generators):
        return cls(LatticeElement.generator(2 * index, 2 * n_generators))

    @classmethod
    def constant(cls, value, n_generators):
        return cls(LatticeElement.constant(value, 2 * n_generators))

    def negate(self):
        return DeMorganElement(LatticeElement._canonical(
            self.underlying.n_generators, negate_clauses(self.underlying.clauses)))

    def join(self, other):
        return DeMorganElement(self.underlying.join(other.underlying))

    def meet(self, other):
        return DeMorganElement(self.underlying.meet(other.underlying))

    __invert__ = negate
    __or__ = join
    __and__ = meet

    def sort_key(self):
        return self.underlying.clauses

    def __str__(self):
        return format_clauses(self.underlying.clauses, literal_name)


def dm_negate(e):
    return e.negate()


def normalize_dm(term, n_generators):
    """Normal form of a term with '~' in DM(n)."""
    if isinstance(term, str):
        term = parse_term(term)
    if max_generator(term) >= n_generators:
        raise InputError(f"Generator x{max_generator(term)} out of range for {n_generators} generators")
    return fold_term(
        term,
        var=lambda i: DeMorganElement.generator(i, n_generators),
        const=lambda v: DeMorganElement.constant(v, n_generators),
        meet=DeMorganElement.meet,
        join=DeMorganElement.join,
        neg=DeMorganElement.negate,
    )


def enumerate_dm(n_generators):
    """All of DM(n), which as a lattice is DL(2n)."""
    validate_at_most(n_generators, Config.MAX_DM_GENERATORS, "De Morgan generator count")
    return tuple(DeMorganElement(e) for e in enumerate_free(2 * n_generators))


def embed_dl_in_dm(e):
    """The inclusion DL(n) -> DM(n) sending generator i to xi."""
    clauses = tuple(tuple(2 * i for i in clause) for clause in e.clauses)
    return DeMorganElement(LatticeElement._canonical(2 * e.n_generators, clauses))


def evaluate_dm(e, assignment, algebra=UNIT_INTERVAL):
    """Evaluate in an algebra that has `negate` (the unit interval: 1 - x)."""
    validate_length(assignment, e.n_generators, "Assignment")
    negate = getattr(algebra, "negate", None)
    if negate is None:
        raise UnsupportedTheoryError("Evaluation of De Morgan terms needs an involution on the target")
    extended = []
    for value in assignment:
        extended.extend((value, negate(value)))
    return evaluate(e.underlying, extended, algebra)
