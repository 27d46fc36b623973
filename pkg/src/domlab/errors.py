"""Exception types shared across domlab modules."""


class DomlabError(Exception):
    """Base class for all domlab errors."""


class Graph6Error(DomlabError, ValueError):
    """Malformed graph6 input. `offset` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class EdgeListError(DomlabError, ValueError):
    """Malformed edge-list input. `line_no` is 1-based."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ScopeError(DomlabError, ValueError):
    """A property does not satisfy the flag hypotheses an operation requires."""


class OracleCapError(DomlabError, ValueError):
    """Brute-force oracle invoked beyond its documented size cap."""


class UndefinedGammaError(DomlabError, ValueError):
    """Operation requires a finite domination number but none exists."""


class CorpusError(DomlabError, ValueError):
    """Unknown corpus name or unreadable corpus source."""


class BoundViolation(DomlabError):
    """A guaranteed bound failed on a concrete instance.

    Carries enough to replay: the graph6 string, the property key, and a
    description of the observed values.
    """

    def __init__(self, graph6: str, property_key: str, detail: str):
        super().__init__(f"{detail} [graph {graph6!r}, property {property_key}]")
        self.graph6 = graph6
        self.property_key = property_key
        self.detail = detail
