"""Exception hierarchy shared by every stage of the interpreter."""

from __future__ import annotations


class GP2Error(Exception):
    """Base class for all interpreter errors."""


class GraphError(GP2Error):
    """Illegal operation on a host graph (absent key, dangling edge, bad mark)."""


class ParseError(GP2Error):
    def __init__(self, line: int, column: int, expected: str, found: str):
        self.line = line
        self.column = column
        self.expected = expected
        self.found = found
        super().__init__(f"{line}:{column}: expected {expected}, found {found!r}")


class CheckError(GP2Error):
    """A statically detected problem in a parsed program."""


class UndeclaredRule(CheckError):
    pass


class UndeclaredVariable(CheckError):
    pass


class VariableNotInLHS(CheckError):
    pass


class TwoListVariablesInLabel(CheckError):
    pass


class TwoStringVariablesInConcat(CheckError):
    pass


class LhsExpressionForbidden(CheckError):
    pass


class MarkOnWrongEntity(CheckError):
    pass


class InterfaceNotInBothSides(CheckError):
    pass


class UnknownNodeReference(CheckError):
    pass


class PreservedEdgeMismatch(CheckError):
    pass


class DuplicateDeclaration(CheckError):
    pass


class NoMain(CheckError):
    pass


class RecursiveMacro(CheckError):
    pass


class TypeMismatch(CheckError):
    pass


class EvaluationError(GP2Error):
    """Runtime failure while evaluating a label expression; aborts the run."""
