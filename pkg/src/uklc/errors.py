"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-domain input supplied by a caller."""


class BudgetError(RuntimeError):
    """A configured size or effort cap would be exceeded."""


class InternalInconsistency(AssertionError):
    """An invariant that the algorithms guarantee was violated (a bug)."""
