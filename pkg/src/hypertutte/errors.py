"""Exception hierarchy.

Input problems derive from :class:`HypergraphError` (a ``ValueError``); resource
limits raise :class:`BudgetExceeded`.
"""


class HypergraphError(ValueError):
    """Base class for invalid input documents and arguments."""


class ParseError(HypergraphError):
    pass


class DuplicateIdentifierError(HypergraphError):
    pass


class EmptyHyperedgeError(HypergraphError):
    pass


class UndeclaredVertexError(HypergraphError):
    pass


class LoopError(HypergraphError):
    pass


class UnknownHyperedgeError(HypergraphError):
    pass


class DomainMismatchError(HypergraphError):
    """A hyperedge map or ordering does not cover exactly the hyperedge set."""


class DisconnectedError(HypergraphError):
    pass


class BudgetExceeded(RuntimeError):
    """An exhaustive computation would exceed its configured bound."""
