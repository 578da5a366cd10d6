class DomkitError(Exception):
    """Base class for errors raised by domkit."""


class FamilySpecError(DomkitError, ValueError):
    """Malformed or out-of-range graph family string."""


class BudgetExceededError(DomkitError, RuntimeError):
    """The brute-force search would test more subsets than allowed."""


class ConvergenceError(DomkitError, RuntimeError):
    """The eigensolver hit its sweep cap before converging."""


class DisconnectedGraphError(DomkitError, ValueError):
    """An operation that needs a connected graph received a disconnected one."""
