import os

basedir = os.path.abspath(os.path.dirname(__file__))

ENV_PREFIX = "CUBICAL_LAB_"


def _env_int(name, default):
    return int(os.environ.get(ENV_PREFIX + name) or default)


class Config:
    # Free lattice enumeration stops at Dedekind number M(4) = 168.
    MAX_FREE_GENERATORS = _env_int('MAX_FREE_GENERATORS', 4)
    MAX_DM_GENERATORS = _env_int('MAX_DM_GENERATORS', 2)
    MAX_TERM_DEPTH = _env_int('MAX_TERM_DEPTH', 100)
    MAX_TRUNCATION = _env_int('MAX_TRUNCATION', 3)
    CELL_BUDGET = _env_int('CELL_BUDGET', 10000)
    FLATNESS_SEARCH_BUDGET = _env_int('FLATNESS_SEARCH_BUDGET', 2000000)
    MAX_MESH_POINTS = _env_int('MAX_MESH_POINTS', 200000)
    MAX_POSET_SIZE = _env_int('MAX_POSET_SIZE', 16)
    MAX_HOM_COUNT = _env_int('MAX_HOM_COUNT', 2 ** 63 - 1)
    MAX_HOM_ENUMERATION = _env_int('MAX_HOM_ENUMERATION', 100000)
    FLATNESS_WORKERS = _env_int('FLATNESS_WORKERS', 1)
    DEFAULT_SEED = _env_int('DEFAULT_SEED', 0)
    LOG_LEVEL = os.environ.get(ENV_PREFIX + 'LOG_LEVEL') or 'WARNING'
    DATA_DIR = os.environ.get(ENV_PREFIX + 'DATA_DIR') or \
        os.path.join(os.path.dirname(basedir), 'data')
