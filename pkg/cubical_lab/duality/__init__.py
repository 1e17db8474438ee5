from cubical_lab.duality.duality import (
    FinitePoset,
    InvolutivePoset,
    duality_roundtrip,
    enumerate_lower_sets,
    find_isomorphism,
    join_irreducibles,
    lower_set_involution,
    lower_sets,
    verify_isomorphism,
)
