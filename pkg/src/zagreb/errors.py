"""Exception hierarchy shared by all modules."""


class ZagrebError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(ZagrebError):
    """Input is well-formed but outside the mathematical domain
    (inadmissible class parameters, bad degree values, ...)."""


class GraphFormatError(ZagrebError):
    """Malformed graph encoding (graph6 or edge list)."""


class NotATreeError(GraphFormatError):
    """The input parsed as a graph but failed the tree check."""
