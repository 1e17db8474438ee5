from cubical_lab.moore.moore import (
    MoorePath,
    PathSquare,
    concat,
    constant_edge,
    contract_edge,
    contract_path,
    edge_source,
    edge_target,
    enumerate_paths,
    is_degenerate_edge,
    path_from_dict,
    reverse,
    staircase_boundary,
    verify_staircase,
)
