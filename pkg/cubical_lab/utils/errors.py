"""
Exception types shared by every module of the package.
"""
from cubical_lab.constants import EXIT_CAPACITY_ERROR, EXIT_INPUT_ERROR


class CubicalLabError(Exception):
    """Base class; `exit_code` is what the CLI returns for it."""

    exit_code = EXIT_INPUT_ERROR


class InputError(CubicalLabError):
    """Malformed term, arity or dimension mismatch, bad JSON, unknown cell."""


class PresentationError(InputError):
    """A cellular presentation whose face assignments disagree."""

    def __init__(self, message, identity=None):
        super().__init__(message)
        self.identity = identity


class UnsupportedTheoryError(InputError):
    """Operation needs structure (e.g. reversal) the theory does not have."""


class CapacityError(CubicalLabError):
    """A configured bound or search budget would be exceeded."""

    exit_code = EXIT_CAPACITY_ERROR

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class DualityError(CubicalLabError):
    """Isomorphism verification failed; only possible on a lattice bug."""
