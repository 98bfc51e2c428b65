"""Exception hierarchy shared by the library and the CLI.

Every error carries a machine-readable ``category`` so the command line
front end can map it onto an exit code without string matching.
"""


class FactroidError(Exception):
    category = "error"


class ParseError(FactroidError, ValueError):
    category = "parse"


class DomainError(FactroidError, ValueError):
    """Bad ring, bad multiplicative set, or an operation outside its domain."""

    category = "domain"


class RingMismatchError(DomainError):
    category = "ring-mismatch"


class UnsupportedError(DomainError):
    category = "unsupported"


class DegreeOverflowError(FactroidError, ValueError):
    """An element lies above the degree bound of the ambient space."""

    category = "degree-overflow"


class BudgetError(FactroidError, RuntimeError):
    category = "budget"
