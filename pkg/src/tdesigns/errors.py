class BudgetExceeded(RuntimeError):
    """An enumeration would exceed its configured work budget."""


class InconsistencyError(RuntimeError):
    """Two routes that must agree did not; signals a bug, not bad input."""


class NotBooleanError(ValueError):
    """A spectrum does not come from a {0,1}-valued function."""
