"""Exception types shared by the kernels and the public modules."""


class SatgraphError(Exception):
    pass


class GraphError(SatgraphError, ValueError):
    """Invalid graph operation (loop, out-of-range vertex, malformed input)."""


class BudgetExceeded(SatgraphError):
    """An enumeration ran past its configured node budget."""
