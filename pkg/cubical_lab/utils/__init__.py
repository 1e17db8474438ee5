from cubical_lab.utils.errors import (
    CapacityError,
    CubicalLabError,
    DualityError,
    InputError,
    PresentationError,
    UnsupportedTheoryError,
)
