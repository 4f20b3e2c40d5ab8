"""Immutable expression nodes and the light canonicalizing constructors.

Every node caches its hash and a sort key.  The sort key gives the total
order used to arrange the terms of a sum and the factors of a product, so
two expressions built through the constructors below are equal exactly when
they are structurally equal.
"""

from fractions import Fraction

ELEMENTARY = ("exp", "ln", "sin", "cos", "tan", "arctan", "abs", "sign")

# Symbols with this name are sign parameters: their square is 1.
SIGN_PARAMETER = "eps"


class Expr:
    __slots__ = ("_hash", "_key")

    rank = -1

    def __hash__(self):
        return self._hash

    @property
    def key(self):
        k = self._key
        if k is None:
            k = self._key = self._make_key()
        return k

    def __lt__(self, other):
        return self.key < other.key

    # arithmetic sugar, used mostly by tests and the catalog builders
    def __add__(self, other):
        return add(self, as_expr(other))

    def __radd__(self, other):
        return add(as_expr(other), self)

    def __sub__(self, other):
        return add(self, neg(as_expr(other)))

    def __rsub__(self, other):
        return add(as_expr(other), neg(self))

    def __mul__(self, other):
        return mul(self, as_expr(other))

    def __rmul__(self, other):
        return mul(as_expr(other), self)

    def __truediv__(self, other):
        return mul(self, power(as_expr(other), MINUS_ONE))

    def __rtruediv__(self, other):
        return mul(as_expr(other), power(self, MINUS_ONE))

    def __pow__(self, other):
        return power(self, as_expr(other))

    def __neg__(self):
        return neg(self)

    def __repr__(self):
        from .syntax import render
        return f"<{type(self).__name__} {render(self)}>"

    def __str__(self):
        from .syntax import render
        return render(self)


class Rational(Expr):
    __slots__ = ("value",)
    rank = 0

    def __init__(self, value):
        self.value = Fraction(value)
        self._hash = hash(("Q", self.value))
        self._key = None

    @property
    def numerator(self):
        return self.value.numerator

    @property
    def denominator(self):
        return self.value.denominator

    def _make_key(self):
        return (0, self.value)

    def __eq__(self, other):
        return self is other or (type(other) is Rational and self.value == other.value)

    __hash__ = Expr.__hash__


class Symbol(Expr):
    __slots__ = ("name",)
    rank = 1

    def __init__(self, name):
        self.name = name
        self._hash = hash(("S", name))
        self._key = None

    def _make_key(self):
        return (1, self.name)

    def __eq__(self, other):
        return self is other or (type(other) is Symbol and self.name == other.name)

    __hash__ = Expr.__hash__


class Unspecified(Expr):
    """An opaque function applied to arguments, with partial-derivative orders."""

    __slots__ = ("name", "args", "orders")
    rank = 2

    def __init__(self, name, args, orders=None):
        self.name = name
        self.args = tuple(args)
        self.orders = tuple(orders) if orders is not None else (0,) * len(self.args)
        if len(self.orders) != len(self.args):
            raise ValueError("derivative orders must match the argument count")
        self._hash = hash(("U", name, self.args, self.orders))
        self._key = None

    def _make_key(self):
        return (2, self.name, len(self.args), tuple(a.key for a in self.args), self.orders)

    def __eq__(self, other):
        return self is other or (
            type(other) is Unspecified
            and self._hash == other._hash
            and self.name == other.name
            and self.orders == other.orders
            and self.args == other.args
        )

    __hash__ = Expr.__hash__

    def derivative(self, position, times=1):
        orders = list(self.orders)
        orders[position] += times
        return Unspecified(self.name, self.args, orders)

    @property
    def base(self):
        return Unspecified(self.name, self.args)


class Elementary(Expr):
    __slots__ = ("kind", "arg")
    rank = 3

    def __init__(self, kind, arg):
        if kind not in ELEMENTARY:
            raise ValueError(f"unknown elementary function {kind!r}")
        self.kind = kind
        self.arg = arg
        self._hash = hash(("E", kind, arg))
        self._key = None

    def _make_key(self):
        return (3, self.kind, self.arg.key)

    def __eq__(self, other):
        return self is other or (
            type(other) is Elementary
            and self._hash == other._hash
            and self.kind == other.kind
            and self.arg == other.arg
        )

    __hash__ = Expr.__hash__


class Antiderivative(Expr):
    """A fixed antiderivative of ``integrand`` with respect to ``var``."""

    __slots__ = ("integrand", "var")
    rank = 4

    def __init__(self, integrand, var):
        if type(var) is not Symbol:
            raise TypeError("integration variable must be a symbol")
        self.integrand = integrand
        self.var = var
        self._hash = hash(("I", integrand, var))
        self._key = None

    def _make_key(self):
        return (4, self.integrand.key, self.var.key)

    def __eq__(self, other):
        return self is other or (
            type(other) is Antiderivative
            and self._hash == other._hash
            and self.var == other.var
            and self.integrand == other.integrand
        )

    __hash__ = Expr.__hash__


class Product(Expr):
    __slots__ = ("factors",)
    rank = 5

    def __init__(self, factors):
        self.factors = tuple(factors)
        self._hash = hash(("P", self.factors))
        self._key = None

    def _make_key(self):
        return (5, len(self.factors), tuple(f.key for f in self.factors))

    def __eq__(self, other):
        return self is other or (
            type(other) is Product and self._hash == other._hash and self.factors == other.factors
        )

    __hash__ = Expr.__hash__


class Power(Expr):
    __slots__ = ("base", "exponent")
    rank = 6

    def __init__(self, base, exponent):
        self.base = base
        self.exponent = exponent
        self._hash = hash(("W", base, exponent))
        self._key = None

    def _make_key(self):
        return (6, self.base.key, self.exponent.key)

    def __eq__(self, other):
        return self is other or (
            type(other) is Power
            and self._hash == other._hash
            and self.base == other.base
            and self.exponent == other.exponent
        )

    __hash__ = Expr.__hash__


class Sum(Expr):
    __slots__ = ("terms",)
    rank = 7

    def __init__(self, terms):
        self.terms = tuple(terms)
        self._hash = hash(("A", self.terms))
        self._key = None

    def _make_key(self):
        return (7, len(self.terms), tuple(t.key for t in self.terms))

    def __eq__(self, other):
        return self is other or (
            type(other) is Sum and self._hash == other._hash and self.terms == other.terms
        )

    __hash__ = Expr.__hash__


ZERO = Rational(0)
ONE = Rational(1)
MINUS_ONE = Rational(-1)
TWO = Rational(2)


def as_expr(value):
    if isinstance(value, Expr):
        return value
    if isinstance(value, (int, Fraction)):
        return Rational(value)
    if isinstance(value, str):
        from .syntax import parse
        return parse(value)
    raise TypeError(f"cannot convert {value!r} to an expression")


def sym(name):
    return Symbol(name)


def symbols(names):
    return tuple(Symbol(n) for n in names.replace(",", " ").split())


def is_rational(e):
    return type(e) is Rational


def is_integer(e):
    return type(e) is Rational and e.value.denominator == 1


def split_coefficient(term):
    """Return (rational coefficient, remaining factor) of a term."""
    if type(term) is Rational:
        return term.value, ONE
    if type(term) is Product and type(term.factors[0]) is Rational:
        rest = term.factors[1:]
        return term.factors[0].value, rest[0] if len(rest) == 1 else Product(rest)
    return Fraction(1), term


def _with_coefficient(coef, rest):
    if coef == 1:
        return rest
    if rest == ONE:
        return Rational(coef)
    if type(rest) is Product:
        return Product((Rational(coef),) + rest.factors)
    return Product((Rational(coef), rest))


def add(*args):
    const = Fraction(0)
    coeffs = {}
    order = []
    stack = list(args)
    stack.reverse()
    while stack:
        a = stack.pop()
        if type(a) is Sum:
            stack.extend(reversed(a.terms))
            continue
        if type(a) is Rational:
            const += a.value
            continue
        c, rest = split_coefficient(a)
        if rest in coeffs:
            coeffs[rest] += c
        else:
            coeffs[rest] = c
            order.append(rest)
    terms = [_with_coefficient(coeffs[r], r) for r in order if coeffs[r] != 0]
    if const != 0:
        terms.append(Rational(const))
    if not terms:
        return ZERO
    if len(terms) == 1:
        return terms[0]
    terms.sort(key=lambda t: t.key)
    return Sum(terms)


def neg(e):
    return mul(MINUS_ONE, e)


def sub(a, b):
    return add(a, neg(b))


def mul(*args):
    coef = Fraction(1)
    exps = {}
    order = []
    stack = list(args)
    stack.reverse()
    while stack:
        a = stack.pop()
        t = type(a)
        if t is Product:
            stack.extend(reversed(a.factors))
            continue
        if t is Rational:
            if a.value == 0:
                return ZERO
            coef *= a.value
            continue
        if t is Power:
            b, e = a.base, a.exponent
        else:
            b, e = a, ONE
        if b in exps:
            exps[b].append(e)
        else:
            exps[b] = [e]
            order.append(b)
    factors = []
    for b in order:
        es = exps[b]
        e = es[0] if len(es) == 1 else add(*es)
        p = power(b, e)
        tp = type(p)
        if tp is Rational:
            if p.value == 0:
                return ZERO
            coef *= p.value
        elif tp is Product:
            for f in p.factors:
                if type(f) is Rational:
                    coef *= f.value
                else:
                    factors.append(f)
        else:
            factors.append(p)
    if not factors:
        return Rational(coef)
    if len(factors) > 1:
        # a product produced by power() may repeat a base; merge once more
        bases = [f.base if type(f) is Power else f for f in factors]
        if len(set(bases)) != len(bases):
            return mul(Rational(coef), *factors)
        factors.sort(key=lambda f: f.key)
    if coef == 1:
        return factors[0] if len(factors) == 1 else Product(factors)
    return Product([Rational(coef)] + factors)


def _rational_root(q, n):
    """Exact n-th root of a nonnegative Fraction, or None."""
    def iroot(k):
        r = round(k ** (1.0 / n))
        for cand in (r - 1, r, r + 1):
            if cand >= 0 and cand ** n == k:
                return cand
        return None
    a, b = iroot(q.numerator), iroot(q.denominator)
    if a is None or b is None:
        return None
    return Fraction(a, b)


def power(base, exponent):
    if type(exponent) is Rational:
        ev = exponent.value
        if ev == 0:
            return ONE
        if ev == 1:
            return base
        if type(base) is Rational:
            bv = base.value
            if ev.denominator == 1:
                if bv == 0 and ev < 0:
                    raise ZeroDivisionError("division by literal zero")
                return Rational(bv ** int(ev))
            if bv == 0:
                return ZERO
            if bv == 1:
                return ONE
            if bv > 0:
                root = _rational_root(bv, ev.denominator)
                if root is not None:
                    return Rational(root ** ev.numerator)
            return Power(base, exponent)
        if ev.denominator == 1:
            if type(base) is Power:
                return power(base.base, mul(base.exponent, exponent))
            if type(base) is Product:
                return mul(*[power(f, exponent) for f in base.factors])
    if type(base) is Rational and base.value == 1:
        return ONE
    if type(base) is Elementary and base.kind == "exp":
        return elementary("exp", mul(base.arg, exponent))
    return Power(base, exponent)


def elementary(kind, arg):
    """Build an elementary function node, folding obvious constant values."""
    if type(arg) is Rational:
        v = arg.value
        if kind == "abs":
            return Rational(abs(v))
        if kind == "sign":
            return Rational((v > 0) - (v < 0))
        if v == 0 and kind in ("sin", "tan", "arctan"):
            return ZERO
        if v == 0 and kind in ("exp", "cos"):
            return ONE
        if v == 1 and kind == "ln":
            return ZERO
    if kind == "ln" and type(arg) is Elementary and arg.kind == "exp":
        return arg.arg
    if type(arg) is Symbol and arg.name == SIGN_PARAMETER:
        if kind == "abs":
            return ONE
        if kind == "sign":
            return arg
    return Elementary(kind, arg)


def exp(a):
    return elementary("exp", as_expr(a))


def ln(a):
    return elementary("ln", as_expr(a))


def sin(a):
    return elementary("sin", as_expr(a))


def cos(a):
    return elementary("cos", as_expr(a))


def tan(a):
    return elementary("tan", as_expr(a))


def arctan(a):
    return elementary("arctan", as_expr(a))


def Abs(a):
    return elementary("abs", as_expr(a))


def sign(a):
    return elementary("sign", as_expr(a))


def func(name, *args, orders=None):
    return Unspecified(name, [as_expr(a) for a in args], orders)


def integral(integrand, var):
    return Antiderivative(as_expr(integrand), var)


def children(e):
    t = type(e)
    if t is Sum:
        return e.terms
    if t is Product:
        return e.factors
    if t is Power:
        return (e.base, e.exponent)
    if t is Elementary:
        return (e.arg,)
    if t is Unspecified:
        return e.args
    if t is Antiderivative:
        return (e.integrand, e.var)
    return ()


def rebuild(e, kids):
    """Rebuild a node of the same type from new children through the constructors."""
    t = type(e)
    if t is Sum:
        return add(*kids)
    if t is Product:
        return mul(*kids)
    if t is Power:
        return power(kids[0], kids[1])
    if t is Elementary:
        return elementary(e.kind, kids[0])
    if t is Unspecified:
        return Unspecified(e.name, kids, e.orders)
    if t is Antiderivative:
        return Antiderivative(kids[0], kids[1])
    return e


_free_cache = {}


def free_symbols(e):
    """Symbols occurring anywhere in ``e`` (including inside function arguments)."""
    r = _free_cache.get(e)
    if r is not None:
        return r
    t = type(e)
    if t is Symbol:
        r = frozenset((e,))
    elif t is Rational:
        r = frozenset()
    else:
        r = frozenset().union(*[free_symbols(c) for c in children(e)]) if children(e) else frozenset()
    if len(_free_cache) > 200000:
        _free_cache.clear()
    _free_cache[e] = r
    return r


def depends_on(e, s):
    return s in free_symbols(e)


def unspecified_instances(e, name=None):
    """All Unspecified nodes in ``e`` (optionally with a given head name)."""
    out = set()
    stack = [e]
    while stack:
        a = stack.pop()
        if type(a) is Unspecified and (name is None or a.name == name):
            out.add(a)
        stack.extend(children(a))
    return out


def walk(e):
    stack = [e]
    while stack:
        a = stack.pop()
        yield a
        stack.extend(children(a))
