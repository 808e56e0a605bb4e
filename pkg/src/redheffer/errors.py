class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


class BracketError(ValueError):
    """Bisection bracket does not straddle a sign change of the predicate."""


class ResourceError(ValueError):
    """A requested register exceeds the configured amplitude budget."""
