"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed graph, interval, or list file."""


class DisconnectedGraph(ValueError):
    """The input graph has more than one connected component."""


class NotIntervalGraph(ValueError):
    """No ordering of the maximal cliques satisfies the consecutiveness property."""


class ReductionFailure(Exception):
    """A PQ-tree reduction found no frontier keeping the set consecutive."""


class ScaleLimit(RuntimeError):
    """A brute-force computation would exceed its hard size cap."""


class LimitExceeded(ScaleLimit):
    """Frontier enumeration would produce more orderings than allowed."""


class ListAssignmentError(ValueError):
    """A list assignment violates a precondition (non-uniform, too short, wrong vertex count)."""


class ListExhausted(RuntimeError):
    """Greedy clique coloring ran out of colors."""


class NoColoringFound(RuntimeError):
    """Construction of a distinguishing list coloring failed or hit its work cap."""


class InvariantError(AssertionError):
    """An internal invariant was violated; indicates a bug."""
