class InputError(Exception):
    """Invalid input data or configuration (CLI exit code 1)."""


class InternalError(Exception):
    """Violated internal invariant (CLI exit code 2)."""
