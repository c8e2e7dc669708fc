"""Exception types shared across the package."""


class SmallCoverError(Exception):
    """Base class for domain errors."""


class PolytopeParseError(SmallCoverError, ValueError):
    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class InvalidPolytopeError(SmallCoverError, ValueError):
    pass


class ColoringError(SmallCoverError, ValueError):
    pass
