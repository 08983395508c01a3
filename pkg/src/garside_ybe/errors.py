"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed caller input: bad indices, wrong sizes, unusable values."""


class ParseError(InputError):
    """Text input rejected; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ContractError(ValueError):
    """An operation was called on data that fails its precondition."""


class PresentationError(ValueError):
    """A tableau presentation violates one of the structural conditions."""

    def __init__(self, reason: str, witness=None):
        super().__init__(reason if witness is None else f"{reason} (witness: {witness})")
        self.reason = reason
        self.witness = witness


class InternalConsistencyError(RuntimeError):
    """Two independent computations of the same fact disagreed.

    This is never a property of the input: it signals a bug in the package
    itself and is deliberately not a ValueError.
    """
