from dataclasses import dataclass, field
from typing import Optional


def _terms(morphism):
    return [str(c) for c in morphism.components]


@dataclass
class IsomorphismWitness:
    mapping: dict = field(default_factory=dict)
    source: str = ""
    target: str = ""

    def to_dict(self):
        return {"source": self.source, "target": self.target,
                "mapping": dict(sorted(self.mapping.items()))}


@dataclass(frozen=True)
class FlatnessInstance:
    """alpha, beta: m -> n with alpha(d) = beta(d) for d in D^m."""

    alpha: object
    beta: object
    d: tuple

    @property
    def m(self):
        return self.alpha.src

    @property
    def n(self):
        return self.alpha.dst

    def to_dict(self):
        return {"n": self.n, "m": self.m, "alpha": _terms(self.alpha),
                "beta": _terms(self.beta), "d": list(self.d)}


@dataclass(frozen=True)
class FlatnessWitness:
    """gamma: k -> m with alpha.gamma = beta.gamma and gamma(d_prime) = d."""

    gamma: object
    d_prime: tuple

    @property
    def k(self):
        return self.gamma.src

    def to_dict(self):
        return {"k": self.k, "gamma": _terms(self.gamma), "d_prime": list(self.d_prime)}


@dataclass
class FlatnessReport:
    status: str = ""
    lattice: str = ""
    bounds: tuple = ()
    counterexample: Optional[FlatnessInstance] = None
    witness: Optional[FlatnessWitness] = None
    instances_checked: int = 0
    facts: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "status": self.status,
            "lattice": self.lattice,
            "bounds": list(self.bounds),
            "counterexample": self.counterexample.to_dict() if self.counterexample else None,
            "witness": self.witness.to_dict() if self.witness else None,
            "instances_checked": self.instances_checked,
            "facts": self.facts,
        }


@dataclass
class DisjunctionReport:
    status: str = ""
    lattice: str = ""
    counterexample: Optional[tuple] = None

    def to_dict(self):
        return {"status": self.status, "lattice": self.lattice,
                "counterexample": list(self.counterexample) if self.counterexample else None}


@dataclass
class YonedaReport:
    n: int = 0
    m: int = 0
    representable_cells: int = 0
    power_cells: int = 0
    bijective: bool = False
    morphisms_checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return self.bijective and not self.failures

    def to_dict(self):
        return {"n": self.n, "m": self.m, "representable_cells": self.representable_cells,
                "power_cells": self.power_cells, "bijective": self.bijective,
                "morphisms_checked": self.morphisms_checked, "failures": self.failures,
                "ok": self.ok}


@dataclass
class FunctorialityReport:
    pairs_checked: int = 0
    identities_checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def to_dict(self):
        return {"pairs_checked": self.pairs_checked, "identities_checked": self.identities_checked,
                "violations": self.violations, "ok": self.ok}


@dataclass
class ComparisonReport:
    """Hom-set comparison along a functor between cube categories."""

    functor: str = ""
    rows: list = field(default_factory=list)

    @property
    def faithful(self):
        return all(row["injective"] for row in self.rows)

    @property
    def full(self):
        return all(row["image"] == row["target"] for row in self.rows)

    def to_dict(self):
        return {"functor": self.functor, "faithful": self.faithful,
                "full": self.full, "hom_sets": self.rows}


@dataclass
class StaircaseReport:
    """Face adjacency of a path contraction, one message per mismatch."""

    rows: int = 0
    squares: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.mismatches

    def to_dict(self):
        return {"rows": self.rows, "squares": self.squares,
                "mismatches": self.mismatches, "ok": self.ok}
