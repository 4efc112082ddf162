"""Exception hierarchy.  The CLI maps each class onto its own exit code."""


class KEGraphError(Exception):
    pass


class GraphFormatError(KEGraphError, ValueError):
    """Input text could not be decoded into a simple graph."""


class SizeGuardError(KEGraphError):
    """An exponential routine was asked to run beyond its size guard."""


class OmegaCapExceeded(SizeGuardError):
    """The family of maximum independent sets is larger than the configured cap."""

    def __init__(self, cap: int):
        super().__init__(f"more than {cap} maximum independent sets")
        self.cap = cap


class PreconditionError(KEGraphError, ValueError):
    """Input violates the hypothesis of a construction."""


class TheoremViolation(KEGraphError, AssertionError):
    """A proven statement failed on a concrete graph.

    This always signals an implementation bug, never a mathematical discovery.
    """
