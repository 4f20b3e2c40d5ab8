"""Seeded random expression trees for randomized oracles."""

import random
from fractions import Fraction

from .core import (
    Rational,
    Symbol,
    Unspecified,
    add,
    elementary,
    mul,
    power,
)

SYMBOLS = tuple(Symbol(n) for n in ("x", "t", "u", "u_x", "eps"))


def random_expr(rng: random.Random, depth: int = 3, symbols=SYMBOLS, opaque: bool = True):
    """A random expression of bounded depth, built through the light constructors."""
    if depth <= 0 or rng.random() < 0.25:
        r = rng.random()
        if r < 0.2:
            return Rational(Fraction(rng.choice((-3, -2, -1, 1, 2, 3, 5)), rng.choice((1, 1, 2, 3))))
        if opaque and r < 0.3:
            return Unspecified(rng.choice(("f", "g")), [rng.choice(symbols)])
        return rng.choice(symbols)
    op = rng.random()
    sub = lambda: random_expr(rng, depth - 1, symbols, opaque)  # noqa: E731
    if op < 0.35:
        return add(sub(), sub())
    if op < 0.65:
        return mul(sub(), sub())
    if op < 0.78:
        base = sub()
        k = rng.choice((-2, -1, 2, 3))
        return power(base, Rational(k)) if base != Rational(0) else base
    if op < 0.84:
        return power(elementary("abs", sub()), Rational(rng.choice((1, 2, 3))) if rng.random() < 0.5 else Symbol("n"))
    if op < 0.9:
        return elementary("exp", mul(Rational(Fraction(rng.choice((-1, 1, 2)), 2)), sub()))
    kind = rng.choice(("sin", "cos", "arctan", "sign", "ln"))
    arg = sub()
    if kind == "ln":
        arg = add(power(arg, Rational(2)), Rational(1))
    return elementary(kind, arg)
