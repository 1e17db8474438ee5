"""
Bounded flatness checking of finite distributive lattices.

D is flat when the cocubical object n -> D^n satisfies the filtering
conditions.  Inhabitedness and transitivity always hold; the freeness clause
is searched: for alpha, beta: m -> n and d in D^m with alpha(d) = beta(d)
there must be gamma: k -> m and d' in D^k with alpha.gamma = beta.gamma and
gamma(d') = d.  Only refutations are conclusive, so success is reported as
"flat up to bounds".
"""
import logging
from functools import lru_cache
from itertools import product
from multiprocessing import Pool

from cubical_lab.config import Config
from cubical_lab.constants import STATUS_COUNTEREXAMPLE, STATUS_FLAT_UP_TO_BOUNDS, STATUS_PASS
from cubical_lab.cube.cube import CubeMorphism, compose, evaluate_in, hom_count, hom_set, projection
from cubical_lab.lattice.finite import FiniteLattice
from cubical_lab.lattice.free import LatticeElement, parse_element
from cubical_lab.models.models import (
    DisjunctionReport,
    FlatnessInstance,
    FlatnessReport,
    FlatnessWitness,
)
from cubical_lab.utils.errors import CapacityError, InputError
from cubical_lab.utils.validation import validate_length, validate_non_negative_int

logger = logging.getLogger(__name__)

STATIC_FACTS = {"inhabited": True, "transitive": True}


def check_disjunction_property(lattice):
    """First pair (a, b) in element order with a v b = 1 but a, b != 1."""
    top = lattice.top
    elements = lattice.elements
    for i, a in enumerate(elements):
        for b in elements[i:]:
            if lattice.join(a, b) == top and a != top and b != top:
                logger.info(f"Disjunction property fails in {lattice.name or 'lattice'}: {a} v {b} = {top}")
                return DisjunctionReport(status=STATUS_COUNTEREXAMPLE, lattice=lattice.name,
                                         counterexample=(a, b))
    return DisjunctionReport(status=STATUS_PASS, lattice=lattice.name)


def validate_witness(lattice, instance, witness):
    """alpha.gamma == beta.gamma as normal forms and gamma(d') == d pointwise."""
    gamma = witness.gamma
    if gamma.dst != instance.m or len(witness.d_prime) != gamma.src:
        return False
    if compose(instance.alpha, gamma) != compose(instance.beta, gamma):
        return False
    return evaluate_in(gamma, witness.d_prime, lattice) == tuple(instance.d)


def _tuples(lattice, size):
    return list(product(lattice.elements, repeat=size))


def _estimate(lattice, n_max, m_max, k_max):
    instances = len(lattice.elements) ** m_max * hom_count(m_max, n_max) ** 2
    witnesses = len(lattice.elements) ** k_max * hom_count(k_max, m_max)
    return instances, witnesses


@lru_cache(maxsize=4096)
def _image_map(lattice, gamma):
    """gamma(d') -> first d' in element order, over all d' in D^k."""
    images = {}
    for d_prime in _tuples(lattice, gamma.src):
        images.setdefault(evaluate_in(gamma, d_prime, lattice), d_prime)
    return images


class WitnessSearch:
    """Smallest witness first: increasing k, gamma in canonical order, first d' in element order."""

    def __init__(self, lattice, k_max):
        self.lattice = lattice
        self.k_max = k_max
        self._compose = {}

    def _composite(self, alpha, gamma):
        key = (alpha, gamma)
        if key not in self._compose:
            self._compose[key] = compose(alpha, gamma)
        return self._compose[key]

    def find(self, instance):
        m = instance.m
        for k in range(self.k_max + 1):
            for gamma in hom_set(k, m):
                if self._composite(instance.alpha, gamma) != self._composite(instance.beta, gamma):
                    continue
                d_prime = _image_map(self.lattice, gamma).get(tuple(instance.d))
                if d_prime is not None:
                    return FlatnessWitness(gamma=gamma, d_prime=d_prime)
        return None


def _check_alpha(task):
    """Every instance with this alpha and an earlier beta; first failure or None."""
    lattice, n, m, alpha_index, k_max = task
    morphisms = hom_set(m, n)
    points = _tuples(lattice, m)
    alpha = morphisms[alpha_index]
    alpha_values = [evaluate_in(alpha, d, lattice) for d in points]
    search = WitnessSearch(lattice, k_max)
    checked = 0
    for beta in morphisms[:alpha_index]:
        for d, value in zip(points, alpha_values):
            if evaluate_in(beta, d, lattice) != value:
                continue
            checked += 1
            instance = FlatnessInstance(alpha=alpha, beta=beta, d=d)
            if search.find(instance) is None:
                return checked, instance
    return checked, None


def _run_tasks(tasks, workers):
    if workers <= 1:
        for task in tasks:
            yield _check_alpha(task)
        return
    with Pool(workers) as pool:
        yield from pool.imap(_check_alpha, tasks)


def check_flatness_bounded(lattice, bounds, workers=None):
    """
    Search every instance with 1 <= n <= n_max, 1 <= m <= m_max for a witness
    with k <= k_max.

    Instances are ordered by n, m, alpha in canonical order, beta over the
    morphisms preceding alpha, then d in element order; the first instance
    without a witness is reported, also when the search fans out over workers.

    Raises:
        CapacityError: the search would exceed Config.FLATNESS_SEARCH_BUDGET
    """
    n_max, m_max, k_max = (validate_non_negative_int(b, "Bound") for b in validate_length(bounds, 3, "Bounds"))
    instances, witnesses = _estimate(lattice, n_max, m_max, k_max)
    if instances > Config.FLATNESS_SEARCH_BUDGET:
        raise CapacityError(f"Flatness search over {instances} instances exceeds the budget "
                            f"{Config.FLATNESS_SEARCH_BUDGET}; lower n or m", bound="n,m")
    if witnesses > Config.FLATNESS_SEARCH_BUDGET:
        raise CapacityError(f"Witness search over {witnesses} candidates exceeds the budget "
                            f"{Config.FLATNESS_SEARCH_BUDGET}; lower k", bound="k")
    workers = Config.FLATNESS_WORKERS if workers is None else workers
    tasks = [(lattice, n, m, index, k_max)
             for n in range(1, n_max + 1) for m in range(1, m_max + 1)
             for index in range(len(hom_set(m, n)))]
    report = FlatnessReport(lattice=lattice.name, bounds=(n_max, m_max, k_max), facts=dict(STATIC_FACTS))
    for checked, failure in _run_tasks(tasks, workers):
        report.instances_checked += checked
        if failure is not None:
            report.status = STATUS_COUNTEREXAMPLE
            report.counterexample = failure
            logger.info(f"{lattice.name or 'lattice'} is not flat: {failure.to_dict()}")
            return report
    report.status = STATUS_FLAT_UP_TO_BOUNDS
    logger.info(f"{lattice.name or 'lattice'} flat up to bounds {report.bounds} "
                f"({report.instances_checked} instances)")
    return report


def _chain_rank(lattice):
    if not lattice.is_chain():
        raise InputError(f"{lattice.name or 'lattice'} is not a linear order")
    return {x: sum(1 for y in lattice.elements if lattice.leq(y, x)) for x in lattice.elements}


def _check_hypothesis(lattice, instance):
    if evaluate_in(instance.alpha, instance.d, lattice) != evaluate_in(instance.beta, instance.d, lattice):
        raise InputError("alpha(d) and beta(d) differ; no witness is required")


def linear_order_witness(lattice, instance):
    """
    The constructive witness on a chain: d' lists the distinct entries of d
    strictly between bottom and top in increasing order, gamma sends entry
    d' [p] to x0 v ... v xp and the endpoints to the constants 0 and 1.

    gamma factors as the cumulative-join map k -> k followed by the map
    k -> m picking those coordinates (or constants) per entry of d.
    """
    rank = _chain_rank(lattice)
    _check_hypothesis(lattice, instance)
    d = tuple(instance.d)
    inner = sorted({x for x in d if x not in (lattice.bottom, lattice.top)}, key=rank.get)
    k = len(inner)
    position = {x: p for p, x in enumerate(inner)}
    cumulative = []
    running = LatticeElement.bottom(k)
    for p in range(k):
        running = running.join(LatticeElement.generator(p, k))
        cumulative.append(running)
    joins = CubeMorphism(k, k, tuple(cumulative))
    picks = []
    for x in d:
        if x == lattice.bottom:
            picks.append(LatticeElement.bottom(k))
        elif x == lattice.top:
            picks.append(LatticeElement.top(k))
        else:
            picks.append(LatticeElement.generator(position[x], k))
    gamma = compose(CubeMorphism(k, instance.m, tuple(picks)), joins)
    witness = FlatnessWitness(gamma=gamma, d_prime=tuple(inner))
    if not validate_witness(lattice, instance, witness):
        raise InputError("Linear-order witness failed validation")
    return witness


def free_lattice_witness(n_generators, instance):
    """
    Witness in D = DL(j) (element ids are printed normal forms): d' is the
    generators and gamma has the entries of d as components.
    """
    lattice = FiniteLattice.free(n_generators)
    _check_hypothesis(lattice, instance)
    gamma = CubeMorphism(n_generators, instance.m,
                         tuple(parse_element(x, n_generators) for x in instance.d))
    d_prime = tuple(str(LatticeElement.generator(i, n_generators)) for i in range(n_generators))
    witness = FlatnessWitness(gamma=gamma, d_prime=d_prime)
    if not validate_witness(lattice, instance, witness):
        raise InputError("Free-lattice witness failed validation")
    return witness


def transitivity_witness(y, z):
    """
    For y in D^a and z in D^b: w = y ++ z in D^(a+b) with the two projections
    sending w to y and to z.

    Returns:
        tuple: (w, projection to y, projection to z)
    """
    a, b = len(y), len(z)
    w = tuple(y) + tuple(z)
    return w, projection(a + b, range(a)), projection(a + b, range(a, a + b))


def enumerate_instances(lattice, n_max, m_max):
    """Every instance within bounds in search order."""
    for n in range(1, n_max + 1):
        for m in range(1, m_max + 1):
            morphisms = hom_set(m, n)
            points = _tuples(lattice, m)
            for index, alpha in enumerate(morphisms):
                for beta in morphisms[:index]:
                    for d in points:
                        if evaluate_in(alpha, d, lattice) == evaluate_in(beta, d, lattice):
                            yield FlatnessInstance(alpha=alpha, beta=beta, d=d)
