"""Floating-point evaluation and the three-way zero test."""

import enum
import math
import random

from .core import (
    SIGN_PARAMETER,
    Antiderivative,
    Elementary,
    Power,
    Product,
    Rational,
    Sum,
    Symbol,
    Unspecified,
    walk,
)
from .normal import simplify


class DomainViolation(ArithmeticError):
    pass


class Unbound(KeyError):
    pass


class Verdict(enum.Enum):
    PROVED_ZERO = "proved_zero"
    PROBED_NONZERO = "probed_nonzero"
    UNKNOWN = "unknown"


def _lookup(point, node, label):
    if node in point:
        return point[node]
    if label in point:
        return point[label]
    raise Unbound(f"no value bound for {label}")


_ELEMENTARY = {
    "exp": math.exp,
    "sin": math.sin,
    "cos": math.cos,
    "tan": math.tan,
    "arctan": math.atan,
    "abs": abs,
}


def eval_numeric(e, point=None):
    """Evaluate ``e`` in double precision.

    ``point`` maps symbols (or their names), unspecified-function instances
    and antiderivative nodes to floats.
    """
    point = point or {}
    memo = {}

    def ev(x):
        hit = memo.get(x)
        if hit is not None:
            return hit
        t = type(x)
        if t is Rational:
            v = float(x.value)
        elif t is Symbol:
            v = float(_lookup(point, x, x.name))
        elif t is Sum:
            v = math.fsum(ev(a) for a in x.terms)
        elif t is Product:
            v = 1.0
            for a in x.factors:
                v *= ev(a)
        elif t is Power:
            b = ev(x.base)
            p = ev(x.exponent)
            if b == 0 and p < 0:
                raise DomainViolation("division by zero")
            if b < 0 and not float(p).is_integer():
                raise DomainViolation("fractional power of a negative number")
            try:
                v = b ** p
            except (OverflowError, ZeroDivisionError) as exc:
                raise DomainViolation(str(exc)) from None
        elif t is Elementary:
            a = ev(x.arg)
            k = x.kind
            if k == "ln":
                if a <= 0:
                    raise DomainViolation("logarithm of a nonpositive number")
                v = math.log(a)
            elif k == "sign":
                v = float((a > 0) - (a < 0))
            else:
                try:
                    v = _ELEMENTARY[k](a)
                except OverflowError:
                    raise DomainViolation("overflow") from None
        elif t is Unspecified:
            v = float(_lookup(point, x, x.name))
        elif t is Antiderivative:
            v = float(_lookup(point, x, repr(x)))
        else:
            raise TypeError(f"cannot evaluate {x!r}")
        if isinstance(v, complex) or math.isnan(v) or math.isinf(v):
            raise DomainViolation("non-finite value")
        memo[x] = v
        return v

    return ev(e)


def random_point(e, rng, low=0.1, high=2.1):
    """Random values for every symbol and opaque instance occurring in ``e``."""
    point = {}
    for node in walk(e):
        t = type(node)
        if t is Symbol and node not in point:
            if node.name == SIGN_PARAMETER:
                point[node] = rng.choice((-1.0, 1.0))
            else:
                point[node] = rng.uniform(low, high)
        elif (t is Unspecified or t is Antiderivative) and node not in point:
            point[node] = rng.uniform(low, high)
    return point


PROBES = 20
THRESHOLD = 1e-6


def _magnitude(e, point):
    if type(e) is Sum:
        return sum(abs(eval_numeric(t, point)) for t in e.terms)
    return abs(eval_numeric(e, point))


def probe(e, seed=42, probes=PROBES, fixed=None):
    """Largest relative magnitude seen over random points (None if none evaluable)."""
    rng = random.Random(seed)
    worst = None
    done = 0
    attempts = 0
    while done < probes and attempts < probes * 20:
        attempts += 1
        point = random_point(e, rng)
        if fixed:
            point.update(fixed)
        try:
            v = eval_numeric(e, point)
            scale = _magnitude(e, point)
        except (DomainViolation, ZeroDivisionError, ValueError, OverflowError):
            continue
        done += 1
        rel = abs(v) / max(1.0, scale)
        if worst is None or rel > worst:
            worst = rel
    return worst


def is_zero(e, seed=42, fixed=None):
    """PROVED_ZERO iff the canonical form is 0; otherwise probe numerically."""
    s = simplify(e)
    if s == Rational(0):
        return Verdict.PROVED_ZERO
    worst = probe(s, seed=seed, fixed=fixed)
    if worst is not None and worst > THRESHOLD:
        return Verdict.PROBED_NONZERO
    return Verdict.UNKNOWN


def is_nonzero(e, seed=42, fixed=None):
    return is_zero(e, seed=seed, fixed=fixed) is Verdict.PROBED_NONZERO
