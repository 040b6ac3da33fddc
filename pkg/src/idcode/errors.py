"""Exception types shared across the package."""


class InputError(ValueError):
    """An argument is outside the domain an operation accepts."""


class NoCharacterization(ValueError):
    """No local characterization covers the requested (n, r)."""


class ConstructionError(RuntimeError):
    """A construction could not be validated, even after repair."""


class BudgetExceeded(RuntimeError):
    """The exhaustive search would exceed its configured budget."""
