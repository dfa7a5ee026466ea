"""Exception types shared across the package."""


class YangianError(Exception):
    """Base class for every error raised by this package."""


class TruncationError(YangianError, ArithmeticError):
    """A requested quantity lies beyond what the stored truncation determines."""


class IncompatibleError(YangianError, ValueError):
    """Operands cannot be combined (different N, arity, or variable directions)."""


class ParseError(YangianError, ValueError):
    """Malformed expression text.  ``pos`` is the 0-based offset of the problem."""

    def __init__(self, message: str, text: str = "", pos: int = 0):
        self.text = text
        self.pos = pos
        if text:
            message = f"{message} at position {pos}\n  {text}\n  {' ' * pos}^"
        super().__init__(message)
