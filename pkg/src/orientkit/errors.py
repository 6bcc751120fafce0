"""Exception hierarchy shared across the package.

Everything user-facing derives from OrientkitError so the CLI can map
failures to a single exit code.  BudgetExceeded is kept separate because
it signals an interrupted search rather than a bad input.
"""


class OrientkitError(Exception):
    """Base class for precondition and recognition failures."""


class BudgetExceeded(Exception):
    """Raised when a search exhausts its node budget."""

    def __init__(self, nodes):
        super().__init__(f"search budget exhausted after {nodes} nodes")
        self.nodes = nodes


class PreconditionViolated(OrientkitError):
    """An operation's stated precondition does not hold for the input."""


class InvalidPEO(OrientkitError):
    """The supplied ordering is not a perfect elimination ordering."""


class NotChordal(OrientkitError):
    pass


class NotSplit(OrientkitError):
    pass


class NotCobipartite(OrientkitError):
    pass


class NotUniformBlock(OrientkitError):
    pass


class UnsupportedK(OrientkitError):
    pass


class NotStrip(OrientkitError):
    pass


class NotApplicable(OrientkitError):
    pass


class BadCompensation(OrientkitError):
    """(color, indegree) pair outside the compensated-orientation contract."""


class BadShape(OrientkitError):
    """A clique sequence or decomposition does not have the required shape."""


class HypothesisViolated(OrientkitError):
    """A structured constructor was called outside its stated hypotheses."""


class DegreeConditionViolated(OrientkitError):
    def __init__(self, edge):
        u, v = edge
        super().__init__(f"adjacent vertices {u} and {v} both exceed the degree bound")
        self.edge = edge


class NotCubic(OrientkitError):
    pass


class BadK(OrientkitError):
    pass


class NotACover(OrientkitError):
    pass


class BadParams(OrientkitError):
    pass


class ConstructionError(OrientkitError):
    """Internal: a constructive proof step found no admissible extension."""
