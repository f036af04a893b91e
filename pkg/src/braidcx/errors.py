"""Exception types shared across the package.

The CLI maps these onto exit codes: input problems exit with 1, failed
guards and hypotheses exit with 2.
"""


class BraidcxError(Exception):
    """Base class for all errors raised by this package."""


class ComplexFormatError(BraidcxError, ValueError):
    """Complex file text could not be parsed."""


class UnknownVertexError(BraidcxError, KeyError):
    def __str__(self):
        return f"unknown vertex {self.args[0]!r}"


class DimensionError(BraidcxError, ValueError):
    """Operation needs a complex of lower dimension (take the 2-skeleton first)."""


class GuardFailed(BraidcxError):
    """A move or construction was refused because a hypothesis does not hold.

    ``hypothesis`` names the violated condition so callers can report it.
    """

    def __init__(self, hypothesis, detail=""):
        self.hypothesis = hypothesis
        self.detail = detail
        msg = hypothesis if not detail else f"{hypothesis}: {detail}"
        super().__init__(msg)


class ExcludedCase(GuardFailed):
    """The solid tetrahedron, whose 2-skeleton is a 2-sphere."""


class SpecialSurface(GuardFailed):
    """Input is the 2-sphere or the projective plane."""


class NotElementary(GuardFailed):
    pass


class OracleBudgetExceeded(BraidcxError):
    """Cube complex enumeration passed the configured cell ceiling."""


class PipelineError(BraidcxError):
    """Internal inconsistency detected while folding homology contributions."""
