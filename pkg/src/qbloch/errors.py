"""Shared error types, mapped to CLI exit codes 2 and 3."""


class UsageError(ValueError):
    """Malformed input or incompatible arguments (CLI exit code 2)."""


class BudgetError(RuntimeError):
    """A configured resource budget would be exceeded (CLI exit code 3)."""
