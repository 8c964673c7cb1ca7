"""Exception types shared across the package."""


class InconsistencyError(ValueError):
    """A numeric identity that must hold exactly does not.

    Raised for failed halvings, non-integral branched-cover Euler numbers,
    a non-integral A-hat genus and similar arithmetic contradictions.  The
    message names the failing equation.
    """


class StageError(ValueError):
    """A pipeline operation received a block at the wrong stage."""


class ClassificationError(ValueError):
    """Holonomy could not be classified although the hypotheses hold."""


class DegeneratePartialError(ValueError):
    """A Jacobian-ring spec would need a partial derivative of negative degree."""


class TruncationError(IndexError):
    """Requested coefficient lies beyond the truncation order of a series."""


class UnsupportedStratumError(ValueError):
    """Point counting was requested on a stratum with three or more variables."""


class ScenarioError(ValueError):
    """A scenario file or dictionary does not match the documented schema."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
