"""Invariance criterion, determining equations, side relations and Lie algebras of vector fields."""

import random
from dataclasses import dataclass
from fractions import Fraction

from .expr import (
    ONE,
    SIGN_PARAMETER,
    ZERO,
    Rational,
    Symbol,
    Unspecified,
    Verdict,
    add,
    as_expr,
    collect_coefficients,
    diff,
    diff_raw,
    free_symbols,
    is_zero,
    mul,
    neg,
    render,
    simplify,
    substitute,
    substitute_raw,
    unspecified_instances,
)
from .expr.normal import RatFun, from_ratfun, rf_reduce, to_ratfun
from .jet import VectorField, prolong2, t, u, u_t, u_x, u_xx, x

EPS = Symbol(SIGN_PARAMETER)
OPAQUE_F = Unspecified("f", [u_x])
OPAQUE_G = Unspecified("g", [u])


# ------------------------------------------------------------------ members

def _verdict_bool(v):
    if v is Verdict.PROVED_ZERO:
        return True
    if v is Verdict.PROBED_NONZERO:
        return False
    return None


@dataclass(frozen=True)
class ClassMember:
    """One equation u_t = f(u_x) u_xx + g(u) of the class."""

    f: object = OPAQUE_F
    g: object = OPAQUE_G
    constraints: tuple = ()
    params: tuple = ()
    relations: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "f", as_expr(self.f))
        object.__setattr__(self, "g", as_expr(self.g))

    @property
    def rhs(self):
        return simplify(add(mul(self.f, u_xx), self.g))

    def content_id(self):
        return f"f={render(simplify(self.f))};g={render(simplify(self.g))}"

    def subclass_tests(self):
        """Truth values (or None when undecided) of the defining conditions."""
        f_ux = diff(self.f, u_x)
        l_cond = diff(mul(u_x, u_x, self.f), u_x)
        g_u = diff(self.g, u)
        return {
            "H": _verdict_bool(is_zero(f_ux)),
            "L": _verdict_bool(is_zero(l_cond)),
            "F": _verdict_bool(is_zero(g_u)),
            "F'": _verdict_bool(is_zero(self.g)),
        }

    def tags(self):
        tests = self.subclass_tests()
        out = {k for k, v in tests.items() if v}
        if tests["H"] is False and tests["L"] is False and tests["F"] is False:
            out.add("C")
        return frozenset(out)

    def with_relations(self, e):
        if not self.relations:
            return e
        return substitute(e, list(self.relations))


def evolution_rhs(member_or_rhs):
    if isinstance(member_or_rhs, ClassMember):
        return member_or_rhs.rhs
    return as_expr(member_or_rhs)


# ----------------------------------------------------------- side relations

class SideRelation:
    """t-derivative of an unspecified head expressed through its other derivatives.

    ``rhs`` is written with the head applied to ``params``; ``time_index`` is
    the position of the time argument.
    """

    def __init__(self, head, params, rhs, time_index=0):
        self.head = head
        self.params = tuple(params)
        self.rhs = as_expr(rhs)
        self.time_index = time_index
        for inst in unspecified_instances(self.rhs, head):
            if inst.orders[time_index]:
                raise ValueError("side relation must not contain time derivatives of its head")

    def __repr__(self):
        return f"SideRelation({self.head}_t = {render(self.rhs)})"

    def _rewrite(self, inst):
        orders = list(inst.orders)
        orders[self.time_index] -= 1
        d = self.rhs
        for p, k in zip(self.params, orders):
            for _ in range(k):
                d = diff_raw(d, p)
        return substitute_raw(d, {p: a for p, a in zip(self.params, inst.args) if p != a})


def apply_side_relations(e, rels, limit=50):
    """Rewrite t-derivatives of related heads until none remain."""
    rels = list(rels)
    e = simplify(e)
    for _ in range(limit):
        reps = {}
        for r in rels:
            for inst in unspecified_instances(e, r.head):
                if inst.orders[r.time_index]:
                    reps[inst] = r._rewrite(inst)
        if not reps:
            return e
        e = simplify(_replace_instances(e, reps))
    raise RuntimeError("side relations did not reach a fixed point")


def _replace_instances(e, reps):
    from .expr.core import children, rebuild
    memo = {}

    def go(n):
        hit = memo.get(n)
        if hit is not None:
            return hit
        if n in reps:
            out = reps[n]
        else:
            kids = children(n)
            out = rebuild(n, [go(c) for c in kids]) if kids else n
        memo[n] = out
        return out

    return go(e)


# ------------------------------------------------------- invariance criterion

def invariance_residual(q: VectorField, member, allow_general=False):
    """Q^(2)(u_t - F) restricted to u_t = F, for an evolution equation u_t = F."""
    if not allow_general and not q.evolution_reduced:
        raise ValueError("the t-component must depend on t only")
    rhs = evolution_rhs(member)
    pr = prolong2(q)
    terms = [pr.eta10]
    for var, coef in ((t, q.tau), (x, q.xi), (u, q.eta), (u_x, pr.eta01), (u_xx, pr.eta02)):
        d = diff_raw(rhs, var)
        terms.append(neg(mul(coef, d)))
    res = simplify(add(*terms))
    return substitute(res, {u_t: rhs})


def symmetry_verdict(q, member, rels=(), relations=()):
    """(verdict, residual) of the invariance check for one field."""
    res = invariance_residual(q, member)
    if rels:
        res = apply_side_relations(res, rels)
    if relations:
        res = substitute(res, list(relations))
    if isinstance(member, ClassMember):
        res = member.with_relations(res)
    return is_zero(res), res


def is_symmetry(q, member, rels=(), relations=()):
    v, res = symmetry_verdict(q, member, rels, relations)
    if v is not Verdict.PROVED_ZERO:
        return False
    # sign-instantiated reruns for sign-dependent rows
    if EPS in free_symbols(q.tau + q.xi + q.eta + evolution_rhs(member)):
        for val in (1, -1):
            sub = {EPS: Rational(val)}
            qs = VectorField(substitute(q.tau, sub), substitute(q.xi, sub), substitute(q.eta, sub))
            rhs = substitute(evolution_rhs(member), sub)
            r = invariance_residual(qs, rhs)
            if rels:
                r = apply_side_relations(r, [_relation_at(rel, sub) for rel in rels])
            if relations:
                r = substitute(r, list(relations))
            if isinstance(member, ClassMember):
                r = member.with_relations(r)
            if is_zero(substitute(r, sub)) is not Verdict.PROVED_ZERO:
                return False
    return True


def _relation_at(rel, sub):
    return SideRelation(rel.head, rel.params, substitute(rel.rhs, sub), rel.time_index)


TAU = Unspecified("tau", [t])
XI = Unspecified("xi", [t, x, u])
ETA = Unspecified("eta", [t, x, u])
GENERIC_FIELD = VectorField(TAU, XI, ETA)


def determining_equations(member=None, q: VectorField = GENERIC_FIELD):
    """The u_xx^1 and u_xx^0 coefficients of the invariance condition.

    Signs are chosen so that, for generic components, the two expressions read
    as the usual determining equations ``... = 0``.
    """
    member = member if member is not None else ClassMember()
    res = invariance_residual(q, member)
    coeffs = dict(collect_coefficients(res, u_xx))
    extra = [k for k in coeffs if k not in (0, 1)]
    if extra:
        raise ValueError("residual is not affine in u_xx")
    return [simplify(neg(coeffs.get(1, ZERO))), simplify(neg(coeffs.get(0, ZERO)))]


# -------------------------------------------------------------- vector fields

class GeneralVectorField:
    """Sum of coefficient * d/d(coordinate) over an ordered coordinate tuple."""

    __slots__ = ("coords", "coeffs")

    def __init__(self, coords, coeffs):
        coords = tuple(coords)
        coeffs = tuple(simplify(as_expr(c)) for c in coeffs)
        if len(coords) != len(coeffs):
            raise ValueError("one coefficient per coordinate is required")
        if len(set(coords)) != len(coords) or not all(type(c) is Symbol for c in coords):
            raise ValueError("coordinates must be distinct symbols")
        self.coords = coords
        self.coeffs = coeffs

    @classmethod
    def from_dict(cls, coords, comps):
        comps = {(Symbol(k) if isinstance(k, str) else k): v for k, v in comps.items()}
        return cls(coords, [comps.get(c, ZERO) for c in coords])

    def apply(self, e):
        return simplify(add(*[mul(c, diff_raw(e, s)) for s, c in zip(self.coords, self.coeffs) if c != ZERO]))

    def _check(self, other):
        if self.coords != other.coords:
            raise ValueError("vector fields live on different coordinate tuples")

    def __add__(self, other):
        self._check(other)
        return GeneralVectorField(self.coords, [add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return GeneralVectorField(self.coords, [add(a, neg(b)) for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c):
        c = as_expr(c)
        return GeneralVectorField(self.coords, [mul(c, a) for a in self.coeffs])

    def __rmul__(self, c):
        return self.scale(c)

    def __neg__(self):
        return self.scale(Rational(-1))

    def is_zero(self):
        return all(c == ZERO for c in self.coeffs)

    def __eq__(self, other):
        return isinstance(other, GeneralVectorField) and self.coords == other.coords and (self - other).is_zero()

    def __hash__(self):
        return hash((self.coords, self.coeffs))

    def component(self, coord):
        if isinstance(coord, str):
            coord = Symbol(coord)
        return self.coeffs[self.coords.index(coord)]

    def __repr__(self):
        return f"<GeneralVectorField {self}>"

    def __str__(self):
        parts = [f"({render(c)})*d_{s.name}" for s, c in zip(self.coords, self.coeffs) if c != ZERO]
        return " + ".join(parts) if parts else "0"


def as_general(q):
    return q.general() if isinstance(q, VectorField) else q


def lie_bracket(q1, q2):
    """[Q1, Q2] with coefficients Q1(Q2^i) - Q2(Q1^i)."""
    q1, q2 = as_general(q1), as_general(q2)
    q1._check(q2)
    coeffs = [add(q1.apply(b), neg(q2.apply(a))) for a, b in zip(q1.coeffs, q2.coeffs)]
    return GeneralVectorField(q1.coords, coeffs)


# ---------------------------------------------------- linear algebra on fields

def _split_by_coords(e, coords):
    """Decompose e into {coordinate-function key: parameter coefficient}."""
    cs = set(coords)
    r = rf_reduce(to_ratfun(e))
    den_key = tuple((b, k) for b, k in sorted(r.den.items(), key=lambda it: it[0].key) if free_symbols(b) & cs)
    par_den = {b: k for b, k in r.den.items() if not (free_symbols(b) & cs)}
    out = {}
    for m, c in r.num.items():
        var_part = []
        par_part = []
        for a, ex in m:
            dep = bool(free_symbols(a) & cs) or (not isinstance(ex, (int, Fraction)) and bool(free_symbols(ex) & cs))
            (var_part if dep else par_part).append((a, ex))
        key = (tuple(var_part), den_key)
        out.setdefault(key, {})[tuple(par_part)] = c
    return {k: from_ratfun(rf_reduce(RatFun(v, dict(par_den)))) for k, v in out.items()}


def field_vector(q, coords=None):
    """Coordinates of a field in the (coordinate index, function) monomial basis."""
    q = as_general(q)
    coords = coords or q.coords
    vec = {}
    for i, c in enumerate(q.coeffs):
        if c == ZERO:
            continue
        for k, v in _split_by_coords(c, coords).items():
            if v != ZERO:
                vec[(i, k)] = v
    return vec


def _solve(columns, target):
    """Solve sum_k c_k * columns[k] = target over parameter expressions.

    Vectors are dicts keyed by basis labels.  Returns (coefficients, remainder)
    where the remainder is the unrepresentable part (empty when solvable).
    """
    keys = sorted({k for col in columns for k in col} | set(target), key=repr)
    rows = [[col.get(k, ZERO) for col in columns] + [target.get(k, ZERO)] for k in keys]
    n = len(columns)
    pivots = []
    r = 0
    for cidx in range(n):
        piv = None
        for i in range(r, len(rows)):
            if simplify(rows[i][cidx]) != ZERO:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][cidx]
        inv = simplify(mul(ONE, as_expr(pv) ** Rational(-1)))
        rows[r] = [simplify(mul(inv, v)) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][cidx] != ZERO:
                fac = rows[i][cidx]
                rows[i] = [simplify(add(a, neg(mul(fac, b)))) for a, b in zip(rows[i], rows[r])]
        pivots.append(cidx)
        r += 1
        if r == len(rows):
            break
    coeffs = [ZERO] * n
    for i, cidx in enumerate(pivots):
        coeffs[cidx] = rows[i][n]
    remainder = {keys[i]: rows[i][n] for i in range(r, len(rows)) if rows[i][n] != ZERO}
    return coeffs, remainder, len(pivots)


def rank(fields):
    vecs = [field_vector(q) for q in fields]
    _, _, rk = _solve(vecs, {})
    return rk


@dataclass
class ClosureFailure:
    pair: tuple
    remainder: GeneralVectorField

    def __bool__(self):
        return False


def represent(q, basis):
    """Coefficients of q in the span of basis, or None with the remainder field."""
    q = as_general(q)
    cols = [field_vector(b, q.coords) for b in basis]
    coeffs, rem, _ = _solve(cols, field_vector(q))
    if rem:
        approx = GeneralVectorField(q.coords, [ZERO] * len(q.coords))
        for c, b in zip(coeffs, basis):
            approx = approx + as_general(b).scale(c)
        return None, q - approx
    return coeffs, None


def structure_constants(basis):
    """c[i][j] = coefficients of [e_i, e_j] in the basis, or a ClosureFailure."""
    basis = [as_general(b) for b in basis]
    n = len(basis)
    if rank(basis) != n:
        raise ValueError("basis elements are linearly dependent")
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            br = lie_bracket(basis[i], basis[j])
            if br.is_zero():
                continue
            coeffs, rem = represent(br, basis)
            if coeffs is None:
                return ClosureFailure((i, j), rem)
            table[i][j] = coeffs
            table[j][i] = [simplify(neg(c)) for c in coeffs]
    return table


# ------------------------------------------------------------------ signatures

@dataclass(frozen=True)
class AlgebraSignature:
    dim: int
    dim_pr_t: int
    derived_series_dims: tuple
    lower_central_dims: tuple
    center_dim: int


def _frac_rank(rows):
    rows = [list(r) for r in rows if any(r)]
    rk = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        for i in range(len(rows)):
            if i != rk and rows[i][c] != 0:
                f = rows[i][c] / rows[rk][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rk])]
        rk += 1
    return rk, rows[:rk]


def _frac_value(e, values):
    s = substitute(e, values) if values else simplify(e)
    if type(s) is not Rational:
        raise ValueError(f"structure constant {render(s)} is not a number after instantiation")
    return s.value


def default_parameter_values(exprs, seed=42):
    """Generic rational values for the parameters occurring in exprs."""
    rng = random.Random(seed)
    syms = set()
    for e in exprs:
        syms |= free_symbols(e)
    out = {}
    for s in sorted(syms, key=lambda s: s.name):
        if s == EPS:
            out[s] = Rational(1)
        else:
            out[s] = Rational(Fraction(rng.randint(3, 40), rng.randint(41, 97)))
    return out


def algebra_signature(basis, values=None, seed=42):
    basis = [as_general(b) for b in basis]
    table = structure_constants(basis)
    if isinstance(table, ClosureFailure):
        raise ValueError(f"basis does not close: pair {table.pair}")
    n = len(basis)
    consts = [c for row in table for col in row for c in col]
    if values is None:
        values = default_parameter_values(consts + [b.coeffs[0] for b in basis], seed)
        values = {k: v for k, v in values.items() if k not in basis[0].coords}
    c = [[[_frac_value(table[i][j][k], values) for k in range(n)] for j in range(n)] for i in range(n)]

    def bracket(a, b):
        out = [Fraction(0)] * n
        for i in range(n):
            if a[i] == 0:
                continue
            for j in range(n):
                if b[j] == 0:
                    continue
                w = a[i] * b[j]
                for k in range(n):
                    if c[i][j][k]:
                        out[k] += w * c[i][j][k]
        return out

    def span_brackets(A, B):
        rows = [bracket(a, b) for a in A for b in B]
        rk, basis_rows = _frac_rank(rows) if rows else (0, [])
        return basis_rows

    unit = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    derived = [n]
    cur = unit
    while True:
        cur = span_brackets(cur, cur)
        d = len(cur)
        repeat = d == derived[-1]
        derived.append(d)
        if d == 0 or repeat:
            break
    lower = [n]
    cur = unit
    while True:
        cur = span_brackets(unit, cur)
        d = len(cur)
        repeat = d == lower[-1]
        lower.append(d)
        if d == 0 or repeat:
            break
    # center: x with sum_i x_i c[i][j][k] = 0 for all j, k
    rows = [[c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    rk, _ = _frac_rank(rows)
    center = n - rk
    return AlgebraSignature(n, projection_rank([b.coeffs[0] for b in basis], basis[0].coords[0], values),
                            tuple(derived), tuple(lower), center)


def projection_rank(taus, tvar=t, values=None, seed=7):
    """Dimension of the span of the t-components as functions of t."""
    taus = [substitute(e, values) if values else simplify(e) for e in taus]
    vecs = []
    ok = True
    for e in taus:
        parts = _split_by_coords(e, (tvar,)) if e != ZERO else {}
        vec = {}
        for k, v in parts.items():
            if type(v) is not Rational:
                ok = False
                break
            vec[k] = v.value
        vecs.append(vec)
        if not ok:
            break
    if ok:
        keys = sorted({k for v in vecs for k in v}, key=repr)
        rk, _ = _frac_rank([[v.get(k, Fraction(0)) for k in keys] for v in vecs])
        return rk
    # pointwise fallback at several t values
    from .expr import eval_numeric
    rng = random.Random(seed)
    pts = [rng.uniform(0.2, 1.8) for _ in range(5)]
    rows = [[Fraction(eval_numeric(e, {tvar: p})).limit_denominator(10**9) for p in pts] for e in taus]
    rk, _ = _frac_rank(rows)
    return rk


__all__ = [
    "AlgebraSignature",
    "EPS",
    "ClassMember",
    "ClosureFailure",
    "GeneralVectorField",
    "SideRelation",
    "algebra_signature",
    "apply_side_relations",
    "as_general",
    "determining_equations",
    "invariance_residual",
    "is_symmetry",
    "lie_bracket",
    "rank",
    "structure_constants",
    "symmetry_verdict",
]
