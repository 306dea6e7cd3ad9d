"""Exception hierarchy shared by every module.

All library errors derive from :class:`SuperLeibnizError` so the command line
front end can map them to exit code 2 in one place.
"""

from __future__ import annotations


class SuperLeibnizError(Exception):
    """Base class for every error raised by the package."""


class DimensionMismatch(SuperLeibnizError, ValueError):
    pass


class InconsistentSystem(SuperLeibnizError, ValueError):
    pass


class SpaceMismatch(SuperLeibnizError, ValueError):
    pass


class ParityError(SuperLeibnizError, ValueError):
    """A tensor, form or map entry breaks the Z2-grading rule."""


class NotHomogeneous(ParityError):
    pass


class InapplicableIdentity(SuperLeibnizError, TypeError):
    pass


class SupersymmetryConflict(SuperLeibnizError, ValueError):
    pass


class DegenerateForm(SuperLeibnizError, ValueError):
    """Raised with a nonzero kernel vector of the Gram matrix."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class WitnessedError(SuperLeibnizError, ValueError):
    """An error that carries a named equation and a witness tuple."""

    def __init__(self, message, equation=None, witness=None):
        super().__init__(message)
        self.equation = equation
        self.witness = witness


class NotLeibniz(WitnessedError):
    pass


class MuDataError(WitnessedError):
    pass


class TrilinearError(WitnessedError):
    pass


class CocycleError(WitnessedError):
    pass


class ExtensionError(WitnessedError):
    """A central extension, semidirect product or double extension was rejected."""


class DeconstructionError(WitnessedError):
    pass


class NotIsomorphism(SuperLeibnizError, ValueError):
    pass


class InternalInconsistency(SuperLeibnizError, AssertionError):
    """Two independent computations of the same fact disagree."""


class SingularMatrix(SuperLeibnizError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
