"""Quaternion Sylvester equations ``a x - x b = c`` in closed form."""

from qsylv.quat import (
    DEFAULT_TOL,
    I,
    J,
    K,
    ONE,
    ZERO,
    DivisionByZero,
    DomainError,
    InternalError,
    Quaternion,
    QuaternionError,
    Tolerance,
)
from qsylv.roots import RootKind, RootSet, sqrt, sqrt_product
from qsylv.sylvester import Classification, SolutionKind, SolutionSet, SylvesterProblem, classify, solve
from qsylv.text import ParseError, format_quaternion, parse_quaternion

__all__ = [
    "DEFAULT_TOL",
    "I",
    "J",
    "K",
    "ONE",
    "ZERO",
    "DivisionByZero",
    "DomainError",
    "InternalError",
    "Quaternion",
    "QuaternionError",
    "Tolerance",
    "RootKind",
    "RootSet",
    "sqrt",
    "sqrt_product",
    "Classification",
    "SolutionKind",
    "SolutionSet",
    "SylvesterProblem",
    "classify",
    "solve",
    "ParseError",
    "format_quaternion",
    "parse_quaternion",
]
