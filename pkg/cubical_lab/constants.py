# Theories
THEORY_DL = "dl"
THEORY_DM = "dm"
THEORY_BIPOINTED = "bipointed"

THEORIES = [
    THEORY_DL,
    THEORY_DM,
    THEORY_BIPOINTED,
]

# Export formats
FORMAT_OFF = "off"
FORMAT_OBJ = "obj"
FORMAT_JSON = "json"

EXPORT_FORMATS = [
    FORMAT_OFF,
    FORMAT_OBJ,
    FORMAT_JSON,
]

# Flatness verdicts
STATUS_FLAT_UP_TO_BOUNDS = "flat_up_to_bounds"
STATUS_COUNTEREXAMPLE = "counterexample"
STATUS_PASS = "pass"

FLATNESS_STATUSES = [
    STATUS_FLAT_UP_TO_BOUNDS,
    STATUS_COUNTEREXAMPLE,
    STATUS_PASS,
]

# Generator kinds of the cube category
KIND_FACE = "face"
KIND_DEGENERACY = "degeneracy"
KIND_CONNECTION = "connection"
KIND_DIAGONAL = "diagonal"
KIND_SYMMETRY = "symmetry"
KIND_REVERSAL = "reversal"

GENERATOR_KINDS = [
    KIND_FACE,
    KIND_DEGENERACY,
    KIND_CONNECTION,
    KIND_DIAGONAL,
    KIND_SYMMETRY,
    KIND_REVERSAL,
]

CONNECTION_MEET = "meet"
CONNECTION_JOIN = "join"

# Exit codes
EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_INPUT_ERROR = 2
EXIT_CAPACITY_ERROR = 3
