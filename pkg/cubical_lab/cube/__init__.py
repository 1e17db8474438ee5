from cubical_lab.cube.bipointed import (
    BipointedMorphism,
    bipointed_hom_set,
    bipointed_identity,
    compare_bipointed,
    compare_distributive,
    compose_bipointed,
    from_bipointed,
    from_distributive,
)
from cubical_lab.cube.cube import (
    CubeMorphism,
    apply,
    compose,
    connection,
    degeneracy,
    diagonal,
    evaluate_in,
    face,
    generator,
    generator_morphisms,
    hom_count,
    hom_set,
    identity,
    morphism_from_dict,
    parse_morphism,
    projection,
    random_morphism,
    reversal,
    symmetry,
)
