from cubical_lab.flatness.flatness import (
    check_disjunction_property,
    check_flatness_bounded,
    enumerate_instances,
    free_lattice_witness,
    linear_order_witness,
    transitivity_witness,
    validate_witness,
)
