class PreconditionError(ValueError):
    """A mathematical precondition of an operation does not hold."""


class InputError(ValueError):
    """Malformed input data (file contents, shapes, labels)."""


class DeterminatorAssertionError(AssertionError):
    """The safe determinator failed its runtime determination check."""

    def __init__(self, message: str, diagnostics: dict | None = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
