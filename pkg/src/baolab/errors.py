"""Exception types shared across the package."""


class BaolabError(Exception):
    """Base class for package-specific errors."""


class ConfigurationError(BaolabError):
    """An enabled operator has no atom-level relation, or dimensions disagree."""


class PreconditionError(BaolabError):
    """A documented precondition of a construction fails on the given input."""


class UnsupportedQueryError(BaolabError):
    """The object cannot answer the requested query (e.g. no sup certificate)."""


class UnboundVariableError(BaolabError):
    """A term mentions a variable the environment does not bind."""


class BudgetExceededError(BaolabError):
    """An enumeration or game search ran past its resource budget."""

    def __init__(self, message: str, spent: int | None = None):
        super().__init__(message)
        self.spent = spent
