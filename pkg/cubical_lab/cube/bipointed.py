"""
The bipointed cube category H and the comparison functors into the cube category.

A bipointed morphism m -> n has n components, each a generator index < m or
one of the two points "0", "1".  There are no connections, so the functor into
the cube category is faithful but misses x0 ^ x1 and x0 v x1.
"""
import logging
from dataclasses import dataclass
from itertools import product

from cubical_lab.constants import THEORY_DL, THEORY_DM
from cubical_lab.cube.cube import CubeMorphism, hom_set
from cubical_lab.lattice.demorgan import embed_dl_in_dm
from cubical_lab.lattice.free import LatticeElement
from cubical_lab.models.models import ComparisonReport
from cubical_lab.utils.errors import InputError
from cubical_lab.utils.validation import validate_length, validate_non_negative_int

logger = logging.getLogger(__name__)

POINTS = ("0", "1")
MISSING_SHOWN = 10


@dataclass(frozen=True)
class BipointedMorphism:
    src: int
    dst: int
    components: tuple

    def __post_init__(self):
        validate_non_negative_int(self.src, "Source dimension")
        validate_non_negative_int(self.dst, "Target dimension")
        components = tuple(self.components)
        validate_length(components, self.dst, "Morphism components")
        for c in components:
            if c in POINTS:
                continue
            if isinstance(c, bool) or not isinstance(c, int) or not 0 <= c < self.src:
                raise InputError(f"Bipointed component {c!r} is neither a point nor a generator < {self.src}")
        object.__setattr__(self, "components", components)

    def __str__(self):
        texts = [c if c in POINTS else f"x{c}" for c in self.components]
        return f"bipointed {self.src} -> {self.dst} : [{', '.join(texts)}]"


def bipointed_identity(n):
    return BipointedMorphism(n, n, tuple(range(n)))


def compose_bipointed(g, f):
    if f.dst != g.src:
        raise InputError(f"Cannot compose {g} after {f}: dimensions {f.dst} and {g.src} differ")
    return BipointedMorphism(f.src, g.dst, tuple(c if c in POINTS else f.components[c]
                                                 for c in g.components))


def bipointed_hom_set(m, n):
    choices = list(range(m)) + list(POINTS)
    return tuple(BipointedMorphism(m, n, combo) for combo in product(choices, repeat=n))


def from_bipointed(f):
    """Generators go to generators, the two points to 0 and 1."""
    components = tuple(LatticeElement.constant(c == "1", f.src) if c in POINTS
                       else LatticeElement.generator(c, f.src) for c in f.components)
    return CubeMorphism(f.src, f.dst, components, THEORY_DL)


def from_distributive(f):
    """The inclusion of the cube category into its De Morgan variant."""
    if f.theory != THEORY_DL:
        raise InputError("Only distributive-lattice cube morphisms embed into the De Morgan cubes")
    components = tuple(embed_dl_in_dm(c).underlying for c in f.components)
    return CubeMorphism(f.src, f.dst, components, THEORY_DM)


def _row(m, n, sources, functor, targets):
    images = [functor(f) for f in sources]
    image = set(images)
    return {"m": m, "n": n, "source": len(sources), "target": len(targets),
            "image": len(image), "injective": len(image) == len(images),
            "missing": sorted(str(t) for t in targets if t not in image)[:MISSING_SHOWN]}


def compare_bipointed(max_dim=2):
    """Hom-set sizes of H -> cube for all m, n <= max_dim."""
    max_dim = validate_non_negative_int(max_dim, "Maximum dimension")
    rows = [_row(m, n, bipointed_hom_set(m, n), from_bipointed, hom_set(m, n, THEORY_DL))
            for m in range(max_dim + 1) for n in range(max_dim + 1)]
    report = ComparisonReport(functor="bipointed -> dl", rows=rows)
    logger.info(f"Bipointed comparison up to dimension {max_dim}: "
                f"faithful={report.faithful}, full={report.full}")
    return report


def compare_distributive(max_dim=1):
    """Hom-set sizes of the DL cube category -> De Morgan cube category."""
    max_dim = validate_non_negative_int(max_dim, "Maximum dimension")
    rows = [_row(m, n, hom_set(m, n, THEORY_DL), from_distributive, hom_set(m, n, THEORY_DM))
            for m in range(max_dim + 1) for n in range(max_dim + 1)]
    report = ComparisonReport(functor="dl -> dm", rows=rows)
    logger.info(f"Distributive comparison up to dimension {max_dim}: "
                f"faithful={report.faithful}, full={report.full}")
    return report
