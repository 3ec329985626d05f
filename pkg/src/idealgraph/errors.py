"""Exception types shared across the package."""


class IdealGraphError(Exception):
    """Base class for all errors raised by this package."""


class TableSyntaxError(IdealGraphError):
    """Malformed Cayley table text (bad row count, token, or index)."""


class NotAssociativeError(IdealGraphError):
    """The operation table is not associative.

    Carries the first violating triple (a, b, c) in lexicographic order,
    meaning (a*b)*c != a*(b*c).
    """

    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


class TruncatedFamilyError(IdealGraphError):
    """An ideal family hit its enumeration cap, so the graph would be incomplete."""


class OutOfRangeError(IdealGraphError):
    """A size parameter is outside its supported range."""


class UnknownVertexError(IdealGraphError):
    """The requested vertex is not in the graph."""


class TooLargeError(IdealGraphError):
    """The graph exceeds the size cap of an exact algorithm."""


class NotIndependentError(IdealGraphError):
    """The given vertex set is not an independent set."""


class NotAPermutationError(IdealGraphError):
    """The given sequence is not a bijection on range(n)."""


class CorpusLoadError(IdealGraphError):
    """A corpus file could not be parsed as a Cayley table."""
