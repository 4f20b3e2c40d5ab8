"""Canonical simplification through a rational-function normal form.

An expression is brought to the shape N / (b1^k1 ... br^kr) where N is a
Laurent polynomial in *atoms* (symbols, unspecified-function instances,
elementary-function applications, antiderivatives, and opaque powers of
constants or sums) and every b_i is a primitive multi-term polynomial.
Monomials are normalized by a small set of rules so that atoms behave as
algebraically independent quantities:

* all exponentials merge into one ``exp`` of the summed argument,
* ``eps^2 = 1``,
* ``abs(y)^2 = y^2`` (exponents of ``abs`` are kept in ``[0, 2)``),
* ``sign(y) = abs(y)/y``,
* ``sin(a)^2 = 1 - cos(a)^2``.

Two expressions with the same normal form are therefore equal, and a
residual whose numerator polynomial is empty is zero.
"""

from fractions import Fraction
from math import floor, gcd

from .core import (
    SIGN_PARAMETER,
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
    mul,
    power,
)

F0 = 0
F1 = Fraction(1)


def _num(e):
    return type(e) is int or type(e) is Fraction


def _cn(q):
    """Integral rationals become ints so monomial keys hash quickly."""
    if type(q) is Fraction and q.denominator == 1:
        return q.numerator
    return q


# ---------------------------------------------------------------- exponents

def _exp_to_expr(e):
    return Rational(e) if _num(e) else e


def _exp_norm(e):
    """Canonical exponent: a Fraction when the simplified value is rational."""
    if _num(e):
        return _cn(e)
    s = simplify(e)
    if type(s) is Rational:
        return _cn(s.value)
    return s


def _exp_add(a, b):
    if _num(a) and _num(b):
        return _cn(a + b)
    return _exp_norm(add(_exp_to_expr(a), _exp_to_expr(b)))


def _exp_mul(a, b):
    if _num(a) and _num(b):
        return _cn(a * b)
    return _exp_norm(mul(_exp_to_expr(a), _exp_to_expr(b)))


def _exp_split(e):
    """Split an exponent into (symbolic part or None, rational constant)."""
    if _num(e):
        return None, e
    if type(e) is Sum and type(e.terms[0]) is Rational:
        rest = e.terms[1:]
        return (rest[0] if len(rest) == 1 else Sum(rest)), _cn(e.terms[0].value)
    return e, F0


def _exp_join(s, c):
    if s is None:
        return _cn(c)
    if c == 0:
        return s
    return _exp_norm(add(s, Rational(c)))


def _exp_key(e):
    return (0, e) if _num(e) else (1, e.key)


# ----------------------------------------------------------------- monomials

def _mono_key(mono):
    return tuple((a.key, _exp_key(e)) for a, e in mono)


def _freeze(raw):
    return tuple(sorted(raw.items(), key=lambda it: it[0].key))


def _is_kind(atom, kind):
    return type(atom) is Elementary and atom.kind == kind


def _needs_work(raw):
    n_exp = 0
    for a, e in raw.items():
        ta = type(a)
        if e == 0:
            return True
        if ta is Elementary:
            k = a.kind
            if k == "exp":
                n_exp += 1
                if n_exp > 1 or e != 1:
                    return True
            elif k == "abs":
                c = e if _num(e) else _exp_split(e)[1]
                if not (0 <= c < 2):
                    return True
            elif k == "sin":
                if type(e) is int and (e >= 2 or e < 0):
                    return True
        elif ta is Symbol:
            if a.name == SIGN_PARAMETER and type(e) is int and e != 1:
                return True
        elif ta is Rational or ta is Sum:
            c = e if _num(e) else _exp_split(e)[1]
            if type(e) is int:
                return True
            if not (0 <= c < 1):
                return True
    return False


def _normalize(raw, coef, lazy=False):
    """Normalize a raw monomial (dict atom -> exponent) times ``coef``.

    Returns a RatFun.  With ``lazy`` set, positive powers of polynomial bases
    are kept unexpanded as negative denominator exponents so that a caller
    can cancel them against its own denominator first.
    """
    if not _needs_work(raw):
        return RatFun({_freeze(raw): coef} if coef else {}, {})
    mono = {}
    extras = []
    exp_args = []
    held = {}
    for a, e in raw.items():
        if e == 0:
            continue
        ta = type(a)
        if ta is Elementary:
            k = a.kind
            if k == "exp":
                exp_args.append(mul(_exp_to_expr(e), a.arg))
                continue
            if k == "abs":
                s, c = _exp_split(e)
                ci = floor(c)
                p = ci % 2
                rest = _exp_join(s, c - ci + p)
                if rest != 0:
                    mono[a] = rest
                if ci - p:
                    if not (lazy and ci - p > 0 and _hold(a.arg, ci - p, held)):
                        extras.append(rf_pow(to_ratfun(a.arg), ci - p))
                continue
            if k == "sin" and type(e) is int:
                q, r = divmod(e, 2)
                if r:
                    mono[a] = 1
                if q:
                    cos_sq = RatFun({(): F1, ((Elementary("cos", a.arg), 2),): -F1}, {})
                    extras.append(rf_pow(cos_sq, q))
                continue
            mono[a] = e
        elif ta is Symbol and a.name == SIGN_PARAMETER and type(e) is int:
            if e % 2:
                mono[a] = 1
        elif ta is Rational or ta is Sum:
            s, c = _exp_split(e)
            ci = floor(c)
            rest = _exp_join(s, c - ci)
            if ta is Rational and _num(rest) and rest != 0:
                root = _rational_power(a.value, rest)
                if root is not None:
                    coef *= root
                    rest = F0
            if rest != 0:
                mono[a] = rest
            if ci:
                if ta is Sum and lazy and ci > 0 and _hold(a, ci, held):
                    continue
                base = RatFun({(): a.value}, {}) if ta is Rational else to_ratfun(a)
                extras.append(rf_pow(base, ci))
        else:
            mono[a] = e
    r = RatFun({_freeze(mono): coef} if coef else {}, {})
    if exp_args:
        total = simplify(add(*exp_args))
        if total != ZERO:
            r = rf_mul(r, _canon_exp(total))
    for x in extras:
        r = rf_mul(r, x)
    if held and r.num:
        den = dict(r.den)
        for b, k in held.items():
            den[b] = den.get(b, 0) - k
        r = RatFun(r.num, {b: k for b, k in den.items() if k})
    return r


def _hold(y, k, held):
    """Record y**k as an unexpanded factor when y is a primitive base."""
    if type(y) is not Sum:
        return False
    if y not in _BASES:
        ry = to_ratfun(y)
        if ry.den or len(ry.num) < 2:
            return False
        content, g, prim = _primitive(ry.num)
        if content != 1 or g or _register_base(prim) != y:
            return False
    held[y] = held.get(y, 0) + k
    return True


def _settle(r):
    """Expand held (negative-exponent) denominator entries into the numerator."""
    if all(k > 0 for k in r.den.values()):
        return r
    out = RatFun(r.num, {})
    den = {}
    for b, k in r.den.items():
        if k < 0:
            out = rf_mul(out, _poly_pow(_BASES[b], -k))
        else:
            den[b] = k
    return _with_den(out, den)


def _rational_power(q, e):
    """q**e as a Fraction when exact, else None."""
    if q <= 0:
        return None
    from .core import _rational_root
    root = _rational_root(q, e.denominator)
    if root is None:
        return None
    return root ** e.numerator


def _mono_mul_raw(m1, m2):
    if not m1:
        return dict(m2)
    d = dict(m1)
    for a, e in m2:
        if a in d:
            d[a] = _exp_add(d[a], e)
        else:
            d[a] = e
    return d


# ------------------------------------------------------------------ RatFun

_BASES = {}


class RatFun:
    """Numerator polynomial over a product of primitive polynomial bases."""

    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    def is_zero(self):
        return not self.num

    def __eq__(self, other):
        return type(other) is RatFun and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((frozenset(self.num.items()), frozenset(self.den.items())))


def _const(c):
    return RatFun({(): Fraction(c)} if c else {}, {})


def _accumulate(pairs, lazy=False):
    """Sum of normalized raw monomials: iterable of (raw dict, coef)."""
    num = {}
    others = []
    for raw, c in pairs:
        if not c:
            continue
        if _needs_work(raw):
            others.append(_normalize(raw, c, lazy))
            continue
        m = _freeze(raw)
        v = num.get(m, F0) + c
        if v:
            num[m] = v
        else:
            num.pop(m, None)
    if lazy and not num and len(others) == 1:
        return others[0]
    r = RatFun(num, {})
    for o in others:
        r = rf_add(r, _settle(o))
    return r


def _poly_add(p, q):
    out = dict(p)
    for m, c in q.items():
        v = out.get(m, F0) + c
        if v:
            out[m] = v
        else:
            del out[m]
    return out


def _poly_mul(p, q):
    """Product of two numerator polynomials, as a RatFun."""
    if not p or not q:
        return RatFun({}, {})
    if len(p) > len(q):
        p, q = q, p
    return _accumulate(
        ((_mono_mul_raw(m1, m2), c1 * c2) for m1, c1 in p.items() for m2, c2 in q.items()), True
    )


def _poly_pow(p, k):
    result = RatFun({(): F1}, {})
    base = RatFun(p, {})
    while k:
        if k & 1:
            result = rf_mul(result, base)
        k >>= 1
        if k:
            base = rf_mul(base, base)
    return result


def rf_add(r, s):
    if not r.num:
        return s
    if not s.num:
        return r
    if r.den == s.den:
        num = _poly_add(r.num, s.num)
        return RatFun(num, dict(r.den) if num else {})
    den = dict(r.den)
    for b, k in s.den.items():
        if den.get(b, 0) < k:
            den[b] = k
    a = _scale_to(r, den)
    b = _scale_to(s, den)
    return _with_den(rf_add(a, b), den)


def _with_den(r, den):
    if not r.num:
        return RatFun({}, {})
    if not r.den:
        return RatFun(r.num, dict(den))
    out = dict(den)
    for b, k in r.den.items():
        out[b] = out.get(b, 0) + k
    return RatFun(r.num, out)


def _scale_to(r, den):
    """Numerator of r rewritten over the common denominator ``den``."""
    out = RatFun(r.num, {})
    for b, k in den.items():
        extra = k - r.den.get(b, 0)
        if extra:
            out = rf_mul(out, _poly_pow(_BASES[b], extra))
    return out


def rf_neg(r):
    return RatFun({m: -c for m, c in r.num.items()}, dict(r.den))


def rf_mul(r, s):
    if not r.num or not s.num:
        return RatFun({}, {})
    if len(r.num) == 1 and not r.den and next(iter(r.num)) == ():
        c = r.num[()]
        if c == 1:
            return s
        return RatFun({m: c * v for m, v in s.num.items()}, dict(s.den))
    if len(s.num) == 1 and not s.den and next(iter(s.num)) == ():
        return rf_mul(s, r)
    prod = _poly_mul(r.num, s.num)
    if not prod.num:
        return prod
    den = dict(prod.den)
    for d in (r.den, s.den):
        for b, k in d.items():
            den[b] = den.get(b, 0) + k
    return _settle(RatFun(prod.num, {b: k for b, k in den.items() if k}))


def _primitive(p):
    """Split a polynomial into (content, gcd monomial raw dict, primitive poly).

    The primitive part has integer coefficients without common factor, a
    positive leading coefficient and no monomial factor.
    """
    atoms = {}
    for m in p:
        for a, e in m:
            atoms.setdefault(a, []).append(e)
    n = len(p)
    g = {}
    for a, es in atoms.items():
        if len(es) < n:
            es = es + [F0]
        if all(_num(e) for e in es):
            lo = min(es)
        elif all(e == es[0] for e in es):
            lo = es[0]
        else:
            e0 = es[0]
            diffs = []
            for e in es:
                d = _exp_norm(add(_exp_to_expr(e), mul(Rational(-1), _exp_to_expr(e0))))
                if not _num(d):
                    diffs = None
                    break
                diffs.append(d)
            if diffs is None:
                continue
            lo = _exp_add(e0, min(diffs))
        if lo != 0:
            g[a] = lo
    nums = [c.numerator for c in p.values()]
    dens = [c.denominator for c in p.values()]
    cn = 0
    for v in nums:
        cn = gcd(cn, v)
    cd = 1
    for v in dens:
        cd = cd * v // gcd(cd, v)
    content = Fraction(cn, cd)
    if g:
        inv = {a: _exp_mul(e, -1) for a, e in g.items()}
        prim = {}
        for m, c in p.items():
            raw = _mono_mul_raw(m, _freeze(inv))
            raw = {a: e for a, e in raw.items() if e != 0}
            prim[_freeze(raw)] = c / content
    else:
        prim = {m: c / content for m, c in p.items()}
    if prim[max(prim, key=_mono_key)] < 0:
        content = -content
        prim = {m: -c for m, c in prim.items()}
    return content, g, prim


def _register_base(prim):
    b = _poly_to_expr(prim)
    if b not in _BASES:
        _BASES[b] = prim
    return b


def rf_invert(r):
    if not r.num:
        raise ZeroDivisionError("division by zero")
    out = RatFun({(): F1}, {})
    for b, k in r.den.items():
        out = rf_mul(out, _poly_pow(_BASES[b], k))
    if len(r.num) == 1:
        (m, c), = r.num.items()
        inv = {a: _exp_mul(e, -1) for a, e in m}
        return rf_mul(out, _normalize(inv, 1 / c))
    content, g, prim = _primitive(r.num)
    inv = {a: _exp_mul(e, -1) for a, e in g.items()}
    out = rf_mul(out, _normalize(inv, 1 / content))
    b = _register_base(prim)
    return _with_den(out, {b: 1})


def rf_pow(r, k):
    if k < 0:
        return rf_pow(rf_invert(r), -k)
    result = RatFun({(): F1}, {})
    base = r
    while k:
        if k & 1:
            result = rf_mul(result, base)
        k >>= 1
        if k:
            base = rf_mul(base, base)
    return result


def _atom_rf(atom, e=1):
    return _normalize({atom: e}, F1)


def rf_pow_general(r, e):
    """r ** e for a non-integer or symbolic exponent ``e``."""
    if not r.num:
        return RatFun({}, {})
    out = RatFun({(): F1}, {})
    for b, k in r.den.items():
        out = rf_mul(out, _atom_rf(b, _exp_mul(e, -k)))
    if len(r.num) == 1:
        (m, c), = r.num.items()
        raw = {a: _exp_mul(x, e) for a, x in m}
        out = rf_mul(out, _normalize(raw, F1))
        content = c
    else:
        content, g, prim = _primitive(r.num)
        raw = {a: _exp_mul(x, e) for a, x in g.items()}
        out = rf_mul(out, _normalize(raw, F1))
        out = rf_mul(out, _atom_rf(_register_base(prim), e))
    if content != 1:
        out = rf_mul(out, _atom_rf(Rational(content), e))
    return out


# ------------------------------------------------------------ to / from Expr

def _poly_to_expr(p):
    terms = []
    for m, c in p.items():
        factors = [power(a, _exp_to_expr(e)) for a, e in m]
        terms.append(mul(Rational(c), *factors))
    return add(*terms)


def from_ratfun(r):
    n = _poly_to_expr(r.num)
    if not r.den:
        return n
    dens = [power(b, Rational(-k)) for b, k in sorted(r.den.items(), key=lambda it: it[0].key)]
    return mul(n, *dens)


_cache = {}
_CACHE_LIMIT = 400000


def to_ratfun(e):
    r = _cache.get(e)
    if r is not None:
        return r
    r = _to_ratfun(e)
    if len(_cache) > _CACHE_LIMIT:
        _cache.clear()
    _cache[e] = r
    return r


def _to_ratfun(e):
    t = type(e)
    if t is Rational:
        return _const(e.value)
    if t is Symbol:
        return RatFun({((e, 1),): F1}, {})
    if t is Sum:
        r = RatFun({}, {})
        for x in e.terms:
            r = rf_add(r, to_ratfun(x))
        return r
    if t is Product:
        r = RatFun({(): F1}, {})
        for x in e.factors:
            r = rf_mul(r, to_ratfun(x))
            if not r.num:
                break
        return r
    if t is Power:
        ex = _exp_norm(e.exponent)
        base = to_ratfun(e.base)
        if type(ex) is int:
            return rf_pow(base, ex)
        return rf_pow_general(base, ex)
    if t is Elementary:
        return _canon_elementary(e.kind, to_ratfun(e.arg))
    if t is Unspecified:
        atom = Unspecified(e.name, [simplify(a) for a in e.args], e.orders)
        return RatFun({((atom, 1),): F1}, {})
    if t is Antiderivative:
        atom = Antiderivative(simplify(e.integrand), e.var)
        return RatFun({((atom, 1),): F1}, {})
    raise TypeError(f"unknown node {e!r}")


# ---------------------------------------------------- elementary functions

def _lead_negative(r):
    if not r.num:
        return False
    lead = max(r.num, key=_mono_key)
    return r.num[lead] < 0


def _canon_exp(arg_expr):
    """exp(arg) for a simplified argument; pulls out c*ln(y) terms."""
    if arg_expr == ZERO:
        return _const(1)
    r = to_ratfun(arg_expr)
    if r.den:
        return RatFun({((Elementary("exp", arg_expr), 1),): F1}, {})
    keep = {}
    out = RatFun({(): F1}, {})
    for m, c in r.num.items():
        if len(m) == 1 and _is_kind(m[0][0], "ln") and m[0][1] == 1:
            y = to_ratfun(m[0][0].arg)
            out = rf_mul(out, rf_pow(y, int(c)) if c.denominator == 1 else rf_pow_general(y, c))
        else:
            keep[m] = c
    if len(keep) == len(r.num):
        return RatFun({((Elementary("exp", arg_expr), 1),): F1}, {})
    if keep:
        rest = _poly_to_expr(keep)
        out = rf_mul(out, RatFun({((Elementary("exp", rest), 1),): F1}, {}))
    return out


def _abs_atom(a):
    """abs of a single atom, as a RatFun."""
    ta = type(a)
    if ta is Symbol and a.name == SIGN_PARAMETER:
        return _const(1)
    if ta is Elementary and a.kind in ("exp", "abs"):
        return RatFun({((a, 1),): F1}, {})
    if ta is Rational:
        return RatFun({((Rational(abs(a.value)), 1),): F1}, {}) if a.value != -1 else _const(1)
    return RatFun({((Elementary("abs", from_ratfun(to_ratfun(a)) if ta is Sum else a), 1),): F1}, {})


def _abs_poly(p):
    if len(p) == 1:
        (m, c), = p.items()
        out = _const(abs(c))
        for a, e in m:
            ab = _abs_atom(a)
            out = rf_mul(out, _pow_any(ab, e))
        return out
    content, g, prim = _primitive(p)
    out = _const(abs(content))
    for a, e in g.items():
        out = rf_mul(out, _pow_any(_abs_atom(a), e))
    b = _register_base(prim)
    return rf_mul(out, _atom_rf(Elementary("abs", b)))


def _pow_any(r, e):
    if type(e) is int:
        return rf_pow(r, e)
    return rf_pow_general(r, e)


def _canon_elementary(kind, r):
    if kind == "exp":
        return _canon_exp(from_ratfun(rf_reduce(r)))
    if not r.num:
        if kind in ("sin", "tan", "arctan", "abs", "sign"):
            return _const(0)
        if kind == "cos":
            return _const(1)
        raise ValueError("logarithm of zero")
    if kind == "abs":
        out = _abs_poly(r.num)
        for b, k in r.den.items():
            out = rf_mul(out, _atom_rf(Elementary("abs", b), -k))
        return out
    if kind == "sign":
        return rf_mul(_canon_elementary("abs", r), rf_invert(r))
    if kind == "ln":
        if len(r.num) == 1 and not r.den:
            (m, c), = r.num.items()
            if c == 1 and len(m) == 1 and _is_kind(m[0][0], "exp") and m[0][1] == 1:
                return to_ratfun(m[0][0].arg)
            if c == 1 and not m:
                return _const(0)
        return RatFun({((Elementary("ln", from_ratfun(rf_reduce(r))), 1),): F1}, {})
    negate = _lead_negative(r)
    if negate:
        r = rf_neg(r)
    arg = from_ratfun(rf_reduce(r))
    atom = RatFun({((Elementary(kind, arg), 1),): F1}, {})
    if negate and kind != "cos":
        return rf_neg(atom)
    return atom


# ---------------------------------------------------------------- reduction

def _exact_divide(p, b):
    """Formal division of p by b in R[X], X the atoms of b; quotient or None.

    R is the ring of Laurent polynomials in the remaining atoms, so a
    monomial leading term of b is always invertible over R.
    """
    xs = sorted({a for m in b for a, _ in m}, key=lambda a: a.key)
    index = {a: i for i, a in enumerate(xs)}

    def split(m):
        vec = [F0] * len(xs)
        rest = []
        for a, e in m:
            i = index.get(a)
            if i is None:
                rest.append((a, e))
            else:
                if not _num(e):
                    return None, None
                vec[i] = e
        return tuple(vec), tuple(rest)

    b_terms = []
    for m, c in b.items():
        vec, _ = split(m)
        if vec is None:
            return None
        b_terms.append((vec, c))
    lvec, lc = max(b_terms, key=lambda it: it[0])
    rem = {}
    for m, c in p.items():
        vec, rest = split(m)
        if vec is None:
            return None
        rem[(vec, rest)] = c
    quot = {}
    limit = 4 * len(p) + 20
    while rem:
        limit -= 1
        if limit < 0:
            return None
        (vec, rest) = max(rem, key=lambda k: (k[0], _mono_key(k[1])))
        qvec = tuple(a - b_ for a, b_ in zip(vec, lvec))
        if any(x < 0 for x in qvec):
            return None
        qc = rem[(vec, rest)] / lc
        quot[(qvec, rest)] = quot.get((qvec, rest), F0) + qc
        for bvec, c in b_terms:
            k = (tuple(x + y for x, y in zip(qvec, bvec)), rest)
            v = rem.get(k, F0) - qc * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    out = {}
    for (vec, rest), c in quot.items():
        raw = dict(rest)
        for a, e in zip(xs, vec):
            if e:
                raw[a] = e
        out[_freeze(raw)] = c
    return out


def rf_reduce(r):
    """Cancel denominator bases that divide the numerator."""
    if not r.den or not r.num:
        return r
    num = r.num
    den = dict(r.den)
    changed = False
    for b in sorted(den, key=lambda x: x.key):
        while den.get(b):
            if len(num) < len(_BASES[b]):
                break
            content, g, prim = _primitive(num)
            q = _exact_divide(prim, _BASES[b])
            if q is None:
                break
            rebuilt = rf_mul(_normalize(dict(g), content), _accumulate((dict(m), c) for m, c in q.items()))
            if rebuilt.den:
                break
            num = rebuilt.num
            den[b] -= 1
            if not den[b]:
                del den[b]
            changed = True
    if not changed:
        return r
    return RatFun(num, den)


# ------------------------------------------------------------------- public

_simp_cache = {}


def simplify(e):
    """Canonical form of ``e``."""
    s = _simp_cache.get(e)
    if s is not None:
        return s
    if type(e) in (Rational, Symbol):
        return e
    s = from_ratfun(rf_reduce(to_ratfun(e)))
    if len(_simp_cache) > _CACHE_LIMIT:
        _simp_cache.clear()
    _simp_cache[e] = s
    return s


def clear_caches():
    _cache.clear()
    _simp_cache.clear()
