from cubical_lab.lattice.demorgan import (
    DeMorganElement,
    dm_negate,
    embed_dl_in_dm,
    enumerate_dm,
    evaluate_dm,
    normalize_dm,
)
from cubical_lab.lattice.finite import FiniteLattice
from cubical_lab.lattice.free import (
    UNIT_INTERVAL,
    FreeAlgebra,
    LatticeElement,
    enumerate_free,
    evaluate,
    normalize,
    parse_element,
    substitute,
)
from cubical_lab.lattice.terms import Const, Join, Meet, Neg, Var, parse_term
