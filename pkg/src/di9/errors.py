"""Exception types raised across the package."""


class DI9Error(Exception):
    """Base class for all errors raised by di9."""


class FormulaSyntaxError(DI9Error, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class WorldSyntaxError(DI9Error, ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UndeclaredAtomError(DI9Error, KeyError):
    def __init__(self, atom: str):
        super().__init__(atom)
        self.atom = atom

    def __str__(self) -> str:
        return f"undeclared atom: {self.atom!r}"


class BoundExceededError(DI9Error):
    pass


class InvalidTimeError(DI9Error, ValueError):
    pass


class MismatchedAtomsError(DI9Error, ValueError):
    pass
