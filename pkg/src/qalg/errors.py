"""Exception hierarchy.  CLI exit codes hang off these classes."""
from __future__ import annotations


class QalgError(Exception):
    exit_code = 3


class PathError(QalgError, ValueError):
    pass


class CompositionError(PathError):
    pass


class ParseError(QalgError):
    """Diagnostic from the ``.qalg`` parser, with a 1-based position and a stable code."""

    exit_code = 1

    def __init__(self, code: str, message: str, line: int, column: int):
        self.code = code
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {code}: {message}")


class ValidationError(QalgError):
    exit_code = 1
    code = "invalid"


class NotMinimal(ValidationError):
    code = "not-minimal"

    def __init__(self, divisor, multiple):
        self.divisor = divisor
        self.multiple = multiple
        super().__init__(f"relation {divisor} divides relation {multiple}")


class InfiniteDimensional(ValidationError):
    code = "infinite-dimensional"

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"algebra is infinite-dimensional; no relation kills powers of the cycle {witness}")


class EmptyRelations(ValidationError):
    code = "no-relations"

    def __init__(self):
        super().__init__("relation set is empty; a monomial algebra needs at least one relation")


class PreconditionError(QalgError):
    exit_code = 2


class NotStacked(PreconditionError):
    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"algebra is not (D,A)-stacked: {verdict.reason}")


class ConsistencyError(QalgError, AssertionError):
    """An internal cross-check failed; always a bug, never bad input."""

    exit_code = 3


class MissingChain(ConsistencyError):
    pass


class DistinctVertexViolation(ConsistencyError):
    pass
