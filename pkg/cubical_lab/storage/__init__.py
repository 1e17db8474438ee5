from cubical_lab.storage.storage import (
    dumps,
    load_lattice,
    load_path,
    load_poset,
    load_presentation,
    read_json,
    resolve_path,
    save_path,
    write_bytes,
    write_json,
)
