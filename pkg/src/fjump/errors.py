"""Exception types.  Every error carries a stable machine-readable ``code``."""

from __future__ import annotations


class FjumpError(Exception):
    """Base error; ``code`` is a short upper-case identifier used by the CLI."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message}


class ParseError(FjumpError):
    """Syntax error in a polynomial string; ``pos`` is a 0-based offset."""

    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__("PARSE_ERROR", f"{message} at position {pos}")
        self.pos = pos
        self.text = text

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "pos": self.pos}


class RingMismatchError(FjumpError):
    def __init__(self, left, right):
        super().__init__("RING_MISMATCH", f"operands live in different rings: {left} vs {right}")


class PreconditionError(FjumpError):
    """A documented precondition failed.  ``generator`` names the offending
    polynomial (as a string) when there is one."""

    def __init__(self, code: str, message: str, generator=None):
        super().__init__(code, message)
        self.generator = None if generator is None else str(generator)

    def to_json(self) -> dict:
        out = super().to_json()
        if self.generator is not None:
            out["generator"] = self.generator
        return out
