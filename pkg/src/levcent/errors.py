"""Exception hierarchy shared by the toolkit and mapped to CLI exit codes."""

from __future__ import annotations


class LevcentError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class GraphError(LevcentError, ValueError):
    """Structural violation: self-loop, out-of-range vertex id, bad size."""

    exit_code = 2


class ParseError(GraphError):
    """Malformed edge-list input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DomainError(LevcentError, ValueError):
    """A value outside an operation's mathematical domain (e.g. isolated vertex)."""

    exit_code = 3


class ResourceError(LevcentError, RuntimeError):
    """A brute-force request would exceed the configured vertex budget."""

    exit_code = 4


class UnknownCheckError(LevcentError, KeyError):
    """Verification check name not registered."""

    exit_code = 2

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""
