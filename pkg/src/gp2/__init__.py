"""A reference interpreter for GP 2 graph programs.

Typical use::

    program = check(parse_program(source))
    output = eval_program(program, parse_host_graph(graph_text), max_apps=10_000)
"""

from .checker import CheckedProgram, check
from .errors import CheckError, EvaluationError, GP2Error, GraphError, ParseError
from .evaluator import Active, EvalOutput, Failed, Mode, Unfinished, eval_program, run
from .graph import HostGraph, HostLabel, HostNode, Mark
from .isomorphism import isomorphic, partition_classes
from .parser import parse_host_graph, parse_program
from .printer import format_host_graph, format_program

__all__ = [
    "Active",
    "CheckError",
    "CheckedProgram",
    "EvalOutput",
    "EvaluationError",
    "Failed",
    "GP2Error",
    "GraphError",
    "HostGraph",
    "HostLabel",
    "HostNode",
    "Mark",
    "Mode",
    "ParseError",
    "Unfinished",
    "check",
    "eval_program",
    "format_host_graph",
    "format_program",
    "isomorphic",
    "parse_host_graph",
    "parse_program",
    "partition_classes",
    "run",
]
