"""
Dimension-truncated cubical sets: presheaves on the cube category up to max_dim.

Every cubical set exposes its levels (`cells`), the contravariant action of
cube morphisms (`act`), and a basis: cells from which every other cell is
obtained by the action (`decompose`).  Cell ids are strings prefixed by their
level, e.g. "1:e" or "1:t[x0, 1]".
"""
import logging
import random
from itertools import combinations, product

from cubical_lab.config import Config
from cubical_lab.constants import THEORY_DL
from cubical_lab.cset.presentation import Presentation, face_name, parse_presentation
from cubical_lab.cube.cube import (
    CubeMorphism,
    compose,
    degeneracy,
    evaluate_in,
    face,
    generator_morphisms,
    hom_count,
    hom_set,
    identity,
    projection,
    random_morphism,
)
from cubical_lab.models.models import FunctorialityReport, YonedaReport
from cubical_lab.utils.errors import CapacityError, InputError, PresentationError, UnsupportedTheoryError
from cubical_lab.utils.validation import validate_at_most, validate_index, validate_non_negative_int

logger = logging.getLogger(__name__)


def level_of(cell):
    try:
        return int(cell.split(":", 1)[0])
    except (AttributeError, ValueError):
        raise InputError(f"Malformed cell id {cell!r}") from None


class CubicalSet:
    """Base class; subclasses implement `_level`, `_act`, `basis` and `decompose`."""

    def __init__(self, max_dim, theory=THEORY_DL, name=""):
        self.max_dim = validate_at_most(max_dim, Config.MAX_TRUNCATION, "Truncation")
        self.theory = theory
        self.name = name
        self._levels = {}
        self._members = {}
        self._act_cache = {}

    def cells(self, level):
        """Cells at `level` in canonical order."""
        level = validate_index(level, self.max_dim + 1, "Level")
        if level not in self._levels:
            cells = tuple(self._level(level))
            self._levels[level] = cells
            self._members[level] = frozenset(cells)
            logger.debug(f"{self.name or 'cubical set'}: level {level} has {len(cells)} cells")
        return self._levels[level]

    def size(self, level):
        return len(self.cells(level))

    def sizes(self):
        return [self.size(level) for level in range(self.max_dim + 1)]

    def contains(self, cell):
        try:
            level = level_of(cell)
        except InputError:
            return False
        if not 0 <= level <= self.max_dim:
            return False
        self.cells(level)
        return cell in self._members[level]

    def check_cell(self, cell):
        if not self.contains(cell):
            raise InputError(f"Unknown cell {cell!r} in {self.name or 'cubical set'}")
        return cell

    def act(self, f, cell):
        """f^*(cell) for f: m -> n and cell at level n; the result is at level m."""
        key = (f, cell)
        if key not in self._act_cache:
            if f.theory != self.theory:
                raise UnsupportedTheoryError(f"Morphism of theory {f.theory} acting on a {self.theory} cubical set")
            self.check_cell(cell)
            if f.dst != level_of(cell):
                raise InputError(f"Cannot act with {f} on level-{level_of(cell)} cell {cell!r}")
            if f.src > self.max_dim:
                raise CapacityError(f"{f} leaves the truncation at dimension {self.max_dim}", bound="max_dim")
            self._act_cache[key] = self._act(f, cell)
        return self._act_cache[key]

    def basis(self):
        raise NotImplementedError

    def decompose(self, cell):
        """(basis cell b, morphism phi) with act(phi, b) == cell."""
        raise NotImplementedError

    def _level(self, level):
        raise NotImplementedError

    def _act(self, f, cell):
        raise NotImplementedError

    def __repr__(self):
        return f"<{type(self).__name__} {self.name!r} max_dim={self.max_dim} sizes={self.sizes()}>"


class FreeCubicalSet(CubicalSet):
    """
    The cubical set freely generated by a presentation.

    A cell at level m is a normal form (c, phi) with c a generating cell and
    phi: m -> dim(c).  (c, phi) is reducible when some component k of phi is a
    constant e and the face d<k><e> of c is declared; reduction replaces it by
    the declared face, lowest k first.
    """

    def __init__(self, presentation):
        super().__init__(presentation.max_dim, presentation.theory, presentation.name)
        self.presentation = presentation
        self._dims = dict(presentation.cells)
        self._order = {name: i for i, (name, _) in enumerate(presentation.cells)}
        self._pairs = {}
        self._check_consistency()

    def dim(self, name):
        return self._dims[name]

    def cell_id(self, name, phi):
        if phi.src == phi.dst == self._dims[name] and phi == identity(phi.src, self.theory):
            return f"{phi.src}:{name}"
        cell = f"{phi.src}:{name}[{', '.join(phi.component_texts)}]"
        self._pairs.setdefault(cell, (name, phi))
        return cell

    def _face_step(self, name, phi, axis):
        """Replace (c, phi) by the declared face it factors through at `axis`."""
        target, g = self.presentation.faces[name][(axis, int(phi.components[axis].constant_value))]
        rest = CubeMorphism(phi.src, phi.dst - 1, phi.components[:axis] + phi.components[axis + 1:],
                            self.theory)
        return target, compose(g, rest)

    def _reducible_axis(self, name, phi):
        faces = self.presentation.faces.get(name)
        if not faces:
            return None
        for axis, component in enumerate(phi.components):
            value = component.constant_value
            if value is not None and (axis, int(value)) in faces:
                return axis
        return None

    def reduce(self, name, phi):
        axis = self._reducible_axis(name, phi)
        while axis is not None:
            name, phi = self._face_step(name, phi, axis)
            axis = self._reducible_axis(name, phi)
        return name, phi

    def _check_consistency(self):
        for name, dim in self.presentation.cells:
            faces = self.presentation.faces.get(name, {})
            for (a1, e1), (a2, e2) in combinations(sorted(faces), 2):
                if a1 == a2:
                    continue
                inner = a2 - 1 if a2 > a1 else a2
                corner = compose(face(dim, a1, e1, self.theory), face(dim - 1, inner, e2, self.theory))
                first = self.reduce(*self._face_step(name, corner, a1))
                second = self.reduce(*self._face_step(name, corner, a2))
                if first != second:
                    identity_text = f"{face_name(a1, e1)} and {face_name(a2, e2)} of {name}"
                    raise PresentationError(
                        f"Faces {identity_text} disagree on their common corner: "
                        f"{self.cell_id(*first)} vs {self.cell_id(*second)}",
                        identity=identity_text)

    def _level(self, level):
        total = sum(hom_count(level, dim, self.theory) for dim in self._dims.values())
        if total > Config.CELL_BUDGET:
            raise CapacityError(f"Level {level} of {self.name or 'presentation'} would hold up to "
                                f"{total} cells", bound="CELL_BUDGET")
        cells = []
        for name, dim in self.presentation.cells:
            for phi in hom_set(level, dim, self.theory):
                if self._reducible_axis(name, phi) is None:
                    cells.append(self.cell_id(name, phi))
        return cells

    def pair(self, cell):
        """The normal form (generating cell, morphism) of a cell id."""
        self.check_cell(cell)
        if cell in self._pairs:
            return self._pairs[cell]
        level, name = cell.split(":", 1)
        return name, identity(int(level), self.theory)

    def _act(self, f, cell):
        name, phi = self.pair(cell)
        return self.cell_id(*self.reduce(name, compose(phi, f)))

    def basis(self):
        return [f"{dim}:{name}" for name, dim in self.presentation.cells]

    def decompose(self, cell):
        name, phi = self.pair(cell)
        return f"{self._dims[name]}:{name}", phi

    def to_presentation(self):
        return self.presentation.to_dict()


class TerminalCubicalSet(CubicalSet):
    """One cell per level."""

    def __init__(self, max_dim, theory=THEORY_DL):
        super().__init__(max_dim, theory, name="terminal")

    def _level(self, level):
        return [f"{level}:*"]

    def _act(self, f, cell):
        return f"{f.src}:*"

    def basis(self):
        return ["0:*"]

    def decompose(self, cell):
        self.check_cell(cell)
        return "0:*", CubeMorphism(level_of(cell), 0, (), self.theory)


class ProductCubicalSet(CubicalSet):
    """Levelwise product X1 x ... x Xk with the diagonal action."""

    def __init__(self, factors):
        factors = list(factors)
        if not factors:
            raise InputError("A product needs at least one factor")
        first = factors[0]
        for other in factors[1:]:
            if other.max_dim != first.max_dim:
                raise InputError("Product factors must share the truncation level")
            if other.theory != first.theory:
                raise InputError("Product factors must share the theory")
        super().__init__(first.max_dim, first.theory, name=" x ".join(x.name or "?" for x in factors))
        self.factors = factors
        self._tuples = {}

    def cell_for(self, components):
        level = level_of(components[0])
        cell = f"{level}:<{'|'.join(components)}>"
        self._tuples.setdefault(cell, tuple(components))
        return cell

    def components(self, cell):
        self.check_cell(cell)
        return self._tuples[cell]

    def _level(self, level):
        total = 1
        for factor in self.factors:
            total *= factor.size(level)
        if total > Config.CELL_BUDGET:
            raise CapacityError(f"Level {level} of {self.name} would hold {total} cells", bound="CELL_BUDGET")
        return [self.cell_for(combo) for combo in product(*(x.cells(level) for x in self.factors))]

    def _act(self, f, cell):
        return self.cell_for(tuple(x.act(f, c) for x, c in zip(self.factors, self._tuples[cell])))

    def _basis_cell(self, bases):
        dims = [level_of(b) for b in bases]
        total = sum(dims)
        offset = 0
        components = []
        for factor, b, dim in zip(self.factors, bases, dims):
            components.append(factor.act(projection(total, range(offset, offset + dim), self.theory), b))
            offset += dim
        return self.cell_for(tuple(components))

    def basis(self):
        result = []
        for bases in product(*(x.basis() for x in self.factors)):
            if sum(level_of(b) for b in bases) <= self.max_dim:
                result.append(self._basis_cell(bases))
        return result

    def decompose(self, cell):
        parts = [x.decompose(c) for x, c in zip(self.factors, self.components(cell))]
        total = sum(level_of(b) for b, _ in parts)
        if total > self.max_dim:
            raise CapacityError(f"Cell {cell} lies on a product cell of dimension {total}, "
                                f"above the truncation", bound="max_dim")
        components = tuple(c for _, phi in parts for c in phi.components)
        phi = CubeMorphism(level_of(cell), total, components, self.theory)
        return self._basis_cell([b for b, _ in parts]), phi


def from_presentation(data, name=""):
    """The truncated cubical set freely generated by a presentation dict."""
    presentation = data if isinstance(data, Presentation) else parse_presentation(data, name)
    cset = FreeCubicalSet(presentation)
    logger.info(f"Built cubical set {cset.name or 'from presentation'} "
                f"with {len(presentation.cells)} generating cells")
    return cset


def representable(n, max_dim, theory=THEORY_DL):
    """y(n) truncated at max_dim: level m is hom(m, n), acting by precomposition."""
    n = validate_non_negative_int(n, "Dimension")
    max_dim = validate_at_most(max_dim, Config.MAX_TRUNCATION, "Truncation")
    if n > max_dim:
        raise InputError(f"Representable y({n}) needs truncation at least {n}")
    count = hom_count(max_dim, n, theory)
    if count > Config.CELL_BUDGET:
        raise CapacityError(f"y({n}) has {count} cells at level {max_dim}", bound="CELL_BUDGET")
    presentation = Presentation(max_dim=max_dim, theory=theory, cells=[("y", n)], name=f"y({n})")
    return FreeCubicalSet(presentation)


def interval(max_dim, theory=THEORY_DL):
    return representable(1, max_dim, theory)


def terminal(max_dim, theory=THEORY_DL):
    return TerminalCubicalSet(max_dim, theory)


def product_of(*factors):
    return ProductCubicalSet(factors)


def cocubical_eval(lattice, f):
    """S_D(f): D^m -> D^n, evaluating f's components in the finite lattice D."""
    def evaluate_tuple(values):
        return evaluate_in(f, tuple(values), lattice)
    return evaluate_tuple


def is_degenerate(cset, cell):
    """True iff the cell is the image of a lower cell under a degeneracy map; connection images are not."""
    level = level_of(cset.check_cell(cell))
    if level == 0:
        return False
    maps = [degeneracy(level, axis, cset.theory) for axis in range(level)]
    return any(cset.act(f, lower) == cell for lower in cset.cells(level - 1) for f in maps)


def _generators_up_to(top, theory):
    result = []
    for dst in range(top + 1):
        for src in (dst - 1, dst, dst + 1):
            if 0 <= src <= top:
                result.extend(generator_morphisms(src, dst, theory))
    return result


def yoneda_is_S_I(n, m):
    """
    Check y(n)(m) = hom(m, n) = DL(m)^n = I^n(m) as a bijection compatible with
    the action of every generator morphism into level m.
    """
    n = validate_at_most(n, 2, "Dimension")
    m = validate_at_most(m, 2, "Level")
    max_dim = max(n, m, 1)
    y = representable(n, max_dim)
    unit = interval(max_dim)
    power = product_of(*([unit] * n)) if n else terminal(max_dim)

    def transport(cell):
        _, phi = y.pair(cell)
        if not n:
            return f"{phi.src}:*"
        return power.cell_for(tuple(unit.cell_id("y", CubeMorphism(phi.src, 1, (c,))) for c in phi.components))

    cells = y.cells(m)
    images = [transport(c) for c in cells]
    report = YonedaReport(n=n, m=m, representable_cells=len(cells), power_cells=power.size(m))
    report.bijective = len(set(images)) == len(cells) == power.size(m) and \
        set(images) == set(power.cells(m))
    for src in (m - 1, m, m + 1):
        if not 0 <= src <= max_dim:
            continue
        for f in generator_morphisms(src, m):
            report.morphisms_checked += 1
            for cell in cells:
                if transport(y.act(f, cell)) != power.act(f, transport(cell)):
                    report.failures.append(f"{f} on {cell}")
    logger.info(f"y({n})({m}) vs I^{n}({m}): {len(cells)} cells, "
                f"{report.morphisms_checked} generators, {len(report.failures)} failures")
    return report


def verify_functoriality(cset, sample_top=True, seed=None, samples=200):
    """
    Identity and composition laws of the action: exhaustive over generator
    morphisms and their composites up to level 2, sampled random morphisms
    touching level 3.
    """
    report = FunctorialityReport()
    for level in range(cset.max_dim + 1):
        unit = identity(level, cset.theory)
        for cell in cset.cells(level):
            report.identities_checked += 1
            if cset.act(unit, cell) != cell:
                report.violations.append(f"identity on {cell}")
    gens = _generators_up_to(min(cset.max_dim, 2), cset.theory)
    for f in gens:
        for g in gens:
            if g.src != f.dst:
                continue
            gf = compose(g, f)
            for cell in cset.cells(g.dst):
                report.pairs_checked += 1
                if cset.act(gf, cell) != cset.act(f, cset.act(g, cell)):
                    report.violations.append(f"({g}) . ({f}) on {cell}")
    if sample_top and cset.max_dim >= 3:
        rng = random.Random(Config.DEFAULT_SEED if seed is None else seed)
        levels = range(cset.max_dim + 1)
        for _ in range(samples):
            dims = [rng.choice(levels) for _ in range(3)]
            dims[rng.randrange(3)] = 3
            a, b, c = dims
            f = random_morphism(rng, a, b, cset.theory)
            g = random_morphism(rng, b, c, cset.theory)
            cell = rng.choice(cset.cells(c))
            report.pairs_checked += 1
            if cset.act(compose(g, f), cell) != cset.act(f, cset.act(g, cell)):
                report.violations.append(f"({g}) . ({f}) on {cell}")
    logger.info(f"Functoriality of {cset.name or 'cubical set'}: {report.pairs_checked} pairs, "
                f"{len(report.violations)} violations")
    return report
