"""Exception hierarchy shared by all modules.

Every domain error carries a short machine-parsable ``code`` used by the CLI
when rendering one-line error messages.
"""


class PerronError(Exception):
    code = "error"


class ParameterRangeError(PerronError):
    """An argument is outside the documented domain of an operation."""

    code = "parameter-range"


class ResourceLimitError(PerronError):
    """An enumeration would exceed its configured cap."""

    code = "resource-limit"

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class NoRootAtLeastOne(PerronError):
    """The sign-variation certificate shows no real root >= 1."""

    code = "no-root-at-least-one"


class Inconclusive(PerronError):
    """A certified interval is too wide to decide the question at this tolerance."""

    code = "inconclusive"


class FixtureNotFound(PerronError):
    """A fixture reconstruction search came up empty."""

    code = "fixture-not-found"


class RefinementLimitError(PerronError):
    """Brackets could not be separated within the refinement floor."""

    code = "refinement-limit"


class CounterexampleError(PerronError):
    """An exhaustive verification sweep found a counterexample."""

    code = "counterexample"
