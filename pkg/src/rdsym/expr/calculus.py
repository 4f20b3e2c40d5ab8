"""Differentiation, substitution and coefficient extraction."""

from fractions import Fraction

from .core import (
    MINUS_ONE,
    ONE,
    TWO,
    ZERO,
    Antiderivative,
    Elementary,
    Power,
    Product,
    Rational,
    Sum,
    Symbol,
    Unspecified,
    add,
    depends_on,
    elementary,
    mul,
    power,
    rebuild,
    children,
)
from .normal import from_ratfun, rf_reduce, simplify, to_ratfun, RatFun


def _diff_elementary(kind, arg, node):
    if kind == "exp":
        return node
    if kind == "ln":
        return power(arg, MINUS_ONE)
    if kind == "sin":
        return elementary("cos", arg)
    if kind == "cos":
        return mul(MINUS_ONE, elementary("sin", arg))
    if kind == "tan":
        return add(ONE, power(node, TWO))
    if kind == "arctan":
        return power(add(ONE, power(arg, TWO)), MINUS_ONE)
    if kind == "abs":
        return elementary("sign", arg)
    if kind == "sign":
        return ZERO
    raise ValueError(kind)


def diff_raw(e, s, memo=None):
    """Partial derivative without the final simplification."""
    if memo is None:
        memo = {}
    hit = memo.get(e)
    if hit is not None:
        return hit
    if not depends_on(e, s):
        out = ZERO
    else:
        t = type(e)
        if t is Symbol:
            out = ONE
        elif t is Sum:
            out = add(*[diff_raw(x, s, memo) for x in e.terms])
        elif t is Product:
            fs = e.factors
            terms = []
            for i, f in enumerate(fs):
                d = diff_raw(f, s, memo)
                if d != ZERO:
                    terms.append(mul(*fs[:i], d, *fs[i + 1:]))
            out = add(*terms)
        elif t is Power:
            b, x = e.base, e.exponent
            db = diff_raw(b, s, memo)
            if not depends_on(x, s):
                out = mul(x, power(b, add(x, MINUS_ONE)), db)
            else:
                dx = diff_raw(x, s, memo)
                out = mul(e, add(mul(dx, elementary("ln", b)), mul(x, db, power(b, MINUS_ONE))))
        elif t is Elementary:
            out = mul(_diff_elementary(e.kind, e.arg, e), diff_raw(e.arg, s, memo))
        elif t is Unspecified:
            terms = []
            for i, a in enumerate(e.args):
                d = diff_raw(a, s, memo)
                if d != ZERO:
                    terms.append(mul(e.derivative(i), d))
            out = add(*terms)
        elif t is Antiderivative:
            if e.var == s:
                out = e.integrand
            else:
                d = diff_raw(e.integrand, s, memo)
                out = ZERO if simplify(d) == ZERO else Antiderivative(d, e.var)
        else:
            out = ZERO
    memo[e] = out
    return out


def diff(e, s, times=1):
    """Simplified partial derivative of ``e`` with respect to the symbol ``s``."""
    if type(s) is not Symbol:
        raise TypeError("differentiation variable must be a symbol")
    for _ in range(times):
        e = simplify(diff_raw(e, s))
    return e


class Binding:
    """Replacement of a symbol, or of an unspecified head given by parameters.

    ``Binding(Symbol('u_t'), rhs)`` replaces a symbol.  ``Binding('g', rhs,
    params=(u,))`` replaces every instance ``g(a)`` and its derivatives by the
    corresponding derivative of ``rhs`` with ``u := a``.
    """

    __slots__ = ("target", "replacement", "params")

    def __init__(self, target, replacement, params=None):
        from .core import as_expr
        self.target = target
        self.replacement = as_expr(replacement)
        self.params = tuple(params) if params is not None else None
        if isinstance(target, str) and self.params is None:
            raise ValueError("a head binding needs its parameter list")

    def __repr__(self):
        return f"Binding({self.target!r}, {self.replacement!r}, {self.params!r})"


def _as_bindings(bs):
    if isinstance(bs, dict):
        out = []
        for k, v in bs.items():
            if isinstance(k, tuple):
                out.append(Binding(k[0], v, k[1:]))
            else:
                out.append(Binding(k, v))
        return out
    return list(bs)


def substitute_raw(e, bs):
    syms = {}
    heads = {}
    for b in _as_bindings(bs):
        if isinstance(b.target, str):
            prev = heads.get(b.target)
            if prev is not None and (prev[0] != b.params or prev[1] != b.replacement):
                raise ValueError(f"conflicting bindings for {b.target}")
            heads[b.target] = (b.params, b.replacement)
        else:
            prev = syms.get(b.target)
            if prev is not None and prev != b.replacement:
                raise ValueError(f"conflicting bindings for {b.target}")
            syms[b.target] = b.replacement
    if not syms and not heads:
        return e
    memo = {}
    deriv_memo = {}

    def head_value(node, args):
        params, repl = heads[node.name]
        if len(params) != len(args):
            raise ValueError(f"arity mismatch for {node.name}")
        key = (node.name, node.orders)
        d = deriv_memo.get(key)
        if d is None:
            d = repl
            for p, k in zip(params, node.orders):
                for _ in range(k):
                    d = diff_raw(d, p)
            deriv_memo[key] = d
        return substitute_raw(d, {p: a for p, a in zip(params, args) if p != a})

    def go(x):
        hit = memo.get(x)
        if hit is not None:
            return hit
        t = type(x)
        if t is Symbol:
            out = syms.get(x, x)
        elif t is Rational:
            out = x
        elif t is Unspecified:
            args = [go(a) for a in x.args]
            if x.name in heads:
                out = head_value(x, args)
            else:
                out = Unspecified(x.name, args, x.orders)
        elif t is Antiderivative:
            var = x.var
            if var in syms:
                r = syms[var]
                if type(r) is not Symbol:
                    raise ValueError("cannot substitute an expression for an integration variable")
                var = r
            out = Antiderivative(go(x.integrand), var)
        else:
            out = rebuild(x, [go(c) for c in children(x)])
        memo[x] = out
        return out

    return go(e)


def substitute(e, bs):
    """Simultaneous substitution followed by simplification."""
    return simplify(substitute_raw(e, bs))


def collect_coefficients(e, v):
    """Coefficients of ``e`` as a polynomial in the symbol ``v``.

    Returns (exponent, coefficient) pairs, highest exponent first, zero
    coefficients omitted.
    """
    from .core import free_symbols
    r = rf_reduce(to_ratfun(e))
    for b in r.den:
        if v in free_symbols(b):
            raise ValueError(f"denominator depends on {v.name}")
    groups = {}
    for m, c in r.num.items():
        k = 0
        rest = []
        for a, x in m:
            if a == v:
                if type(x) is not int or x < 0:
                    raise ValueError(f"non-polynomial dependence on {v.name}")
                k = x
            else:
                if v in free_symbols(a) or (not isinstance(x, (int, Fraction)) and v in free_symbols(x)):
                    raise ValueError(f"non-polynomial dependence on {v.name}")
                rest.append((a, x))
        groups.setdefault(k, {})[tuple(rest)] = c
    out = []
    for k in sorted(groups, reverse=True):
        coef = from_ratfun(rf_reduce(RatFun(groups[k], dict(r.den))))
        if coef != ZERO:
            out.append((k, coef))
    return out


def coefficient(e, v, k):
    for j, c in collect_coefficients(e, v):
        if j == k:
            return c
    return ZERO
