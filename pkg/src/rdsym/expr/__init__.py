"""Symbolic expression kernel."""

from .core import (
    ELEMENTARY,
    MINUS_ONE,
    ONE,
    SIGN_PARAMETER,
    TWO,
    ZERO,
    Abs,
    Antiderivative,
    Elementary,
    Expr,
    Power,
    Product,
    Rational,
    Sum,
    Symbol,
    Unspecified,
    add,
    arctan,
    as_expr,
    cos,
    depends_on,
    elementary,
    exp,
    free_symbols,
    func,
    integral,
    ln,
    mul,
    neg,
    power,
    sign,
    sin,
    sub,
    sym,
    symbols,
    tan,
    unspecified_instances,
    walk,
)
from .calculus import Binding, coefficient, collect_coefficients, diff, diff_raw, substitute, substitute_raw
from .normal import clear_caches, simplify
from .numeric import DomainViolation, Unbound, Verdict, eval_numeric, is_nonzero, is_zero, probe, random_point
from .syntax import ParseError, check_jet, jet_name, parse, render

E = parse

__all__ = [
    "Abs",
    "Antiderivative",
    "Binding",
    "DomainViolation",
    "E",
    "ELEMENTARY",
    "Elementary",
    "Expr",
    "MINUS_ONE",
    "ONE",
    "ParseError",
    "Power",
    "Product",
    "Rational",
    "SIGN_PARAMETER",
    "Sum",
    "Symbol",
    "TWO",
    "Unbound",
    "Unspecified",
    "Verdict",
    "ZERO",
    "add",
    "arctan",
    "as_expr",
    "check_jet",
    "clear_caches",
    "coefficient",
    "collect_coefficients",
    "cos",
    "depends_on",
    "diff",
    "diff_raw",
    "elementary",
    "eval_numeric",
    "exp",
    "free_symbols",
    "func",
    "integral",
    "is_nonzero",
    "is_zero",
    "jet_name",
    "ln",
    "mul",
    "neg",
    "parse",
    "power",
    "probe",
    "random_point",
    "render",
    "sign",
    "simplify",
    "sin",
    "sub",
    "substitute",
    "substitute_raw",
    "sym",
    "symbols",
    "tan",
    "unspecified_instances",
    "walk",
]
