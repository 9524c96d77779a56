import os

DEFAULT_BUDGET = 10**7
DEFAULT_PATH_CAP = 10**6


def default_budget():
    """Search budget, overridable through the ``TWW_BUDGET`` environment variable."""
    value = os.environ.get("TWW_BUDGET")
    if value is None:
        return DEFAULT_BUDGET
    budget = int(value)
    if budget <= 0:
        raise ValueError(f"TWW_BUDGET must be positive, got {value!r}")
    return budget


class Budget:
    """Counts search nodes and raises once the allowance is spent."""

    def __init__(self, limit=None, what="search"):
        self.limit = default_budget() if limit is None else limit
        self.what = what
        self.used = 0

    def tick(self, best_known=None):
        from .errors import ResourceLimitError

        self.used += 1
        if self.used > self.limit:
            raise ResourceLimitError(
                f"{self.what} exceeded its budget of {self.limit} nodes",
                best_known=best_known,
            )
