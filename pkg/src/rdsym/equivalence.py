"""Point transformations of (t, x, u): arbitrary-element maps, push-forwards,
group templates and infinitesimal generators."""

from dataclasses import dataclass, field

from .expr import (
    ONE,
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
    power,
    render,
    simplify,
    substitute,
)
from .expr.normal import rf_reduce, to_ratfun
from .jet import t, total_derivative, u, u_t, u_x, u_xx, x
from .symmetry import ClassMember, GeneralVectorField, evolution_rhs

# constant value of g inside the subclass with g_u = 0
GAMMA = Symbol("gamma")

F_COORD = Symbol("f")
G_COORD = Symbol("g")
EQUIVALENCE_COORDS = (t, x, u, u_x, F_COORD, G_COORD)


class DegenerateTransformation(ValueError):
    pass


def _inv(e):
    return power(e, Rational(-1))


@dataclass(frozen=True)
class PointTransformation:
    """t~ = T(t), x~ = X(t,x,u), u~ = U(t,x,u).

    ``G`` is optional: for equations with constant g = gamma it gives the new
    constant as a function of gamma (and the components may then involve
    gamma).  Without it the g-component is derived by ``map_elements``.
    """

    T: object
    X: object
    U: object
    G: object = None
    params: tuple = ()
    constraints: tuple = ()

    def __post_init__(self):
        for name in ("T", "X", "U"):
            object.__setattr__(self, name, simplify(as_expr(getattr(self, name))))
        if self.G is not None:
            object.__setattr__(self, "G", simplify(as_expr(self.G)))
        if free_symbols(self.T) & {x, u}:
            raise ValueError("the t-component may depend on t only")
        object.__setattr__(self, "constraints", tuple(as_expr(c) for c in self.constraints))

    @property
    def DxX(self):
        return total_derivative(self.X, "x")

    @property
    def DxU(self):
        return total_derivative(self.U, "x")

    @property
    def V(self):
        """The u_x component, D_x U / D_x X."""
        return simplify(mul(self.DxU, _inv(self.DxX)))

    @property
    def jacobian(self):
        return simplify(add(mul(diff(self.X, x), diff(self.U, u)), neg(mul(diff(self.X, u), diff(self.U, x)))))

    @property
    def T_t(self):
        return diff(self.T, t)

    def nondegeneracy(self):
        return simplify(mul(self.T_t, self.jacobian))

    def check_nondegenerate(self):
        if is_zero(self.nondegeneracy()) is Verdict.PROVED_ZERO:
            raise DegenerateTransformation("T_t (X_x U_u - X_u U_x) vanishes")
        for c in self.constraints:
            if is_zero(c) is Verdict.PROVED_ZERO:
                raise DegenerateTransformation(f"constraint {render(c)} != 0 violated")

    def components(self):
        return {t: self.T, x: self.X, u: self.U}

    def subs(self, values):
        """Instantiate parameters."""
        g = None if self.G is None else substitute(self.G, values)
        return PointTransformation(
            substitute(self.T, values), substitute(self.X, values), substitute(self.U, values), g,
            tuple(p for p in self.params if p not in values),
            tuple(substitute(c, values) for c in self.constraints),
        )

    def __str__(self):
        s = f"t~={render(self.T)}, x~={render(self.X)}, u~={render(self.U)}"
        if self.G is not None:
            s += f", gamma~={render(self.G)}"
        return s


IDENTITY = PointTransformation(t, x, u)


def _elements(m):
    if isinstance(m, ClassMember):
        return m.f, m.g
    f, g = m
    return as_expr(f), as_expr(g)


def map_elements(tr: PointTransformation, m):
    """Target (f, g) written in source variables."""
    tr.check_nondegenerate()
    f, g = _elements(m)
    dxX, dxU, T_t = tr.DxX, tr.DxU, tr.T_t
    V = tr.V
    f_new = simplify(mul(power(dxX, Rational(2)), _inv(T_t), f))
    corr = add(diff_raw(V, x), mul(u_x, diff_raw(V, u)))
    time_part = add(mul(diff_raw(tr.U, t), dxX), neg(mul(diff_raw(tr.X, t), dxU)))
    g_new = simplify(add(
        mul(tr.jacobian, _inv(mul(T_t, dxX)), g),
        neg(mul(dxX, _inv(T_t), corr, f)),
        mul(time_part, _inv(mul(T_t, dxX))),
    ))
    return f_new, g_new


def target_derivatives(tr: PointTransformation):
    """(u~_t~, u~_x~, u~_x~x~) in source jet variables."""
    dxX = tr.DxX
    V = tr.V
    ut = simplify(mul(add(total_derivative(tr.U, "t"), neg(mul(V, total_derivative(tr.X, "t")))), _inv(tr.T_t)))
    uxx = simplify(mul(total_derivative(V, "x"), _inv(dxX)))
    return ut, V, uxx


def pull_back(tr: PointTransformation, e):
    """Rewrite an expression in target variables (t, x, u, u_x, u_xx) through tr.

    Constants such as gamma are left alone: a target equation is written with
    the source-side values of its constants.
    """
    _, V, uxx = target_derivatives(tr)
    return substitute(e, {t: tr.T, x: tr.X, u: tr.U, u_x: V, u_xx: uxx})


def push_forward_residual(tr: PointTransformation, source, target):
    """u~_t~ - F~ on solutions of the source equation, in source variables.

    ``source`` and ``target`` are class members or right-hand sides F of
    u_t = F; the target is written in its own variables with the same names.
    """
    tr.check_nondegenerate()
    ut, _, _ = target_derivatives(tr)
    res = add(ut, neg(pull_back(tr, evolution_rhs(target))))
    return substitute(res, {u_t: evolution_rhs(source)})


def maps_solutions(tr, source, target):
    return is_zero(push_forward_residual(tr, source, target)) is Verdict.PROVED_ZERO


class NotInClass(ValueError):
    pass


def target_member(tr: PointTransformation, m) -> ClassMember:
    """The image equation as a class member, written in target variables.

    Raises NotInClass when the mapped f depends on more than u_x or the
    mapped g on more than u.
    """
    f_new, g_new = map_elements(tr, m)
    xx, xu = diff(tr.X, x), diff(tr.X, u)
    ux_, uu = diff(tr.U, x), diff(tr.U, u)
    if free_symbols(xx + xu + ux_ + uu) & {t, x, u}:
        raise NotInClass("u_x component is not a fractional linear map of u_x")
    # invert u_x -> (U_x + U_u u_x)/(X_x + X_u u_x)
    old_ux = mul(add(mul(xx, u_x), neg(ux_)), _inv(add(uu, neg(mul(xu, u_x)))))
    f_t = substitute(f_new, {u_x: old_ux})
    if free_symbols(f_t) & {t, x, u}:
        raise NotInClass(f"mapped f depends on more than u_x: {render(f_t)}")
    g_t = g_new
    if free_symbols(g_t) & {t, x, u_x}:
        raise NotInClass(f"mapped g depends on more than u: {render(g_t)}")
    if u in free_symbols(g_t):
        if free_symbols(tr.U) & {t, x}:
            raise NotInClass("u component mixes u with t or x")
        slope, offset = _affine(tr.U, u)
        g_t = substitute(g_t, {u: mul(add(u, neg(offset)), _inv(slope))})
    return ClassMember(f_t, g_t)


def certify_in_class(tr: PointTransformation, m):
    """(target member, push-forward residual) for an in-class map."""
    target = target_member(tr, m)
    return target, push_forward_residual(tr, m, target)


# ---------------------------------------------------------------- composition

def compose(outer: PointTransformation, inner: PointTransformation) -> PointTransformation:
    """outer o inner: apply inner first."""
    sub = {t: inner.T, x: inner.X, u: inner.U}
    if inner.G is not None:
        sub[GAMMA] = inner.G
    elif outer.G is not None:
        raise ValueError("cannot compose: inner transformation lacks the gamma component")
    g = None
    if outer.G is not None:
        g = substitute(outer.G, sub)
    elif inner.G is not None and GAMMA in free_symbols(outer.T + outer.X + outer.U):
        raise ValueError("cannot compose: outer transformation lacks the gamma component")
    params = tuple(dict.fromkeys(inner.params + outer.params))
    return PointTransformation(
        substitute(outer.T, sub), substitute(outer.X, sub), substitute(outer.U, sub), g,
        params, inner.constraints + outer.constraints,
    )


def _affine(e, v):
    """(slope, offset) of e as an affine function of v."""
    cs = dict(collect_coefficients(e, v))
    if any(k > 1 for k in cs):
        raise ValueError(f"component is not affine in {v.name}")
    return cs.get(1, ZERO), cs.get(0, ZERO)


def _affine_many(e, vs):
    """Coefficients of e in the variables vs plus the free term."""
    coeffs = []
    rest = e
    for v in vs:
        a, b = _affine(rest, v)
        if free_symbols(a) & set(vs):
            raise ValueError("components must be affine with parameter coefficients")
        coeffs.append(a)
        rest = b
    return coeffs, rest


def invert(tr: PointTransformation) -> PointTransformation:
    """Exact inverse of a transformation affine in (t, x, u) (and gamma)."""
    tr.check_nondegenerate()
    a, b = _affine(tr.T, t)
    if free_symbols(a) & {t}:
        raise ValueError("t-component is not affine")
    t_old = mul(add(t, neg(b)), _inv(a))
    (xx, xu), xr = _affine_many(tr.X, (x, u))
    (ux, uu), ur = _affine_many(tr.U, (x, u))
    det = add(mul(xx, uu), neg(mul(xu, ux)))
    if is_zero(det) is Verdict.PROVED_ZERO:
        raise DegenerateTransformation("singular (x, u) block")
    gamma_old = GAMMA
    if tr.G is not None:
        p, q = _affine(tr.G, GAMMA)
        if GAMMA in free_symbols(p):
            raise ValueError("gamma component is not affine")
        gamma_old = mul(add(GAMMA, neg(q)), _inv(p))
    # target variables are named t, x, u, gamma again
    back = {t: t_old, GAMMA: gamma_old}
    xx, xu, ux, uu, xr, ur, det = (substitute(c, back) for c in (xx, xu, ux, uu, xr, ur, det))
    dx = add(x, neg(xr))
    du = add(u, neg(ur))
    x_old = mul(add(mul(uu, dx), neg(mul(xu, du))), _inv(det))
    u_old = mul(add(mul(xx, du), neg(mul(ux, dx))), _inv(det))
    return PointTransformation(t_old, x_old, u_old, None if tr.G is None else gamma_old,
                               tr.params, tr.constraints)


def same_transformation(a: PointTransformation, b: PointTransformation) -> bool:
    parts = [add(a.T, neg(b.T)), add(a.X, neg(b.X)), add(a.U, neg(b.U))]
    if a.G is not None or b.G is not None:
        parts.append(add(a.G if a.G is not None else GAMMA, neg(b.G if b.G is not None else GAMMA)))
    return all(is_zero(p) is Verdict.PROVED_ZERO for p in parts)


# ------------------------------------------------------------------ templates

def _syms(names):
    return tuple(Symbol(n) for n in names.split())


@dataclass(frozen=True)
class GroupTemplate:
    """A group given by component patterns with named parameters.

    ``readings`` say where each parameter can be read off a concrete element:
    (component, monomial) with the monomial a dict of exponents over
    ``monomial_vars``.
    """

    group_id: str
    T: object
    X: object
    U: object
    G: object
    params: tuple
    identity: dict
    nondegeneracy: object
    readings: dict
    monomial_vars: tuple
    functional: bool = False
    notes: str = ""

    def element(self, values=None) -> PointTransformation:
        tr = PointTransformation(self.T, self.X, self.U, self.G, self.params, (self.nondegeneracy,))
        return tr.subs(values) if values else tr

    def family(self, param, delta=None):
        """One-parameter family: ``param`` moves, the rest sit at the identity."""
        delta = delta or Symbol("delta")
        vals = {p: v for p, v in self.identity.items() if p != param}
        start = self.identity[param]
        if start == ONE:
            vals[param] = _exp(delta)
        else:
            vals[param] = add(start, delta)
        return TransformationFamily(self.element(vals), delta)

    def generic_values(self, prefix):
        """Fresh parameter symbols (or functions of gamma) with a name prefix."""
        out = {}
        for p in self.params:
            name = prefix + p.name
            out[p] = Unspecified(name, [GAMMA]) if self.functional else Symbol(name)
        return out


def _exp(e):
    from .expr import exp
    return exp(e)


T0, T1, X0, X1, X2, U0, U1, U2, U3 = _syms("T0 T1 X0 X1 X2 U0 U1 U2 U3")


def _gfun(name):
    return Unspecified(name, [GAMMA])


def _templates():
    g = GAMMA
    out = {}
    out["R"] = GroupTemplate(
        "R",
        add(mul(T1, t), T0), add(mul(X1, x), X0), add(mul(U2, u), U0), None,
        (T0, T1, X0, X1, U0, U2),
        {T0: ZERO, T1: ONE, X0: ZERO, X1: ONE, U0: ZERO, U2: ONE},
        mul(T1, X1, U2),
        {T1: ("T", {t: 1}), T0: ("T", {}), X1: ("X", {x: 1}), X0: ("X", {}), U2: ("U", {u: 1}), U0: ("U", {})},
        (t, x, u),
    )
    out["F"] = GroupTemplate(
        "F",
        add(mul(T1, t), T0), add(mul(X1, x), X0),
        add(mul(U1, x), mul(U2, u), mul(U3, t), U0),
        mul(add(mul(U2, g), U3), _inv(T1)),
        (T0, T1, X0, X1, U0, U1, U2, U3),
        {T0: ZERO, T1: ONE, X0: ZERO, X1: ONE, U0: ZERO, U1: ZERO, U2: ONE, U3: ZERO},
        mul(T1, X1, U2),
        {T1: ("T", {t: 1}), T0: ("T", {}), X1: ("X", {x: 1}), X0: ("X", {}),
         U1: ("U", {x: 1}), U2: ("U", {u: 1}), U3: ("U", {t: 1}), U0: ("U", {})},
        (t, x, u, g),
    )
    out["F'"] = GroupTemplate(
        "F'",
        add(mul(T1, t), T0), add(mul(X1, x), mul(X2, u), X0), add(mul(U1, x), mul(U2, u), U0), None,
        (T0, T1, X0, X1, X2, U0, U1, U2),
        {T0: ZERO, T1: ONE, X0: ZERO, X1: ONE, X2: ZERO, U0: ZERO, U1: ZERO, U2: ONE},
        mul(T1, add(mul(X1, U2), neg(mul(X2, U1)))),
        {T1: ("T", {t: 1}), T0: ("T", {}), X1: ("X", {x: 1}), X2: ("X", {u: 1}), X0: ("X", {}),
         U1: ("U", {x: 1}), U2: ("U", {u: 1}), U0: ("U", {})},
        (t, x, u),
    )
    bT0, bT1, bX0, bX1, bX2, bU0, bU1, bU2, bF = (_gfun(n) for n in
                                                   ("T0", "T1", "X0", "X1", "X2", "U0", "U1", "U2", "F"))
    out["bar F"] = GroupTemplate(
        "bar F",
        add(mul(bT1, t), bT0),
        add(mul(bX1, x), mul(bX2, u), neg(mul(g, bX2, t)), bX0),
        add(mul(bU1, x), mul(bU2, u), mul(add(mul(bT1, bF), neg(mul(g, bU2))), t), bU0),
        bF,
        (T0, T1, X0, X1, X2, U0, U1, U2, Symbol("F")),
        {T0: ZERO, T1: ONE, X0: ZERO, X1: ONE, X2: ZERO, U0: ZERO, U1: ZERO, U2: ONE, Symbol("F"): g},
        mul(bT1, add(mul(bX1, bU2), neg(mul(bX2, bU1))), diff(bF, g)),
        {T1: ("T", {t: 1}), T0: ("T", {}), X1: ("X", {x: 1}), X2: ("X", {u: 1}), X0: ("X", {}),
         U1: ("U", {x: 1}), U2: ("U", {u: 1}), U0: ("U", {}), Symbol("F"): ("G", {})},
        (t, x, u),
        functional=True,
    )
    out["hat F"] = GroupTemplate(
        "hat F",
        add(mul(T1, t), T0),
        add(mul(X1, x), mul(X2, u), neg(mul(X2, g, t)), X0),
        add(mul(U1, x), mul(U2, u), mul(add(ONE, neg(U2)), g, t), mul(U3, t), mul(T0, _inv(T1), g), U0),
        mul(add(g, U3), _inv(T1)),
        (T0, T1, X0, X1, X2, U0, U1, U2, U3),
        {T0: ZERO, T1: ONE, X0: ZERO, X1: ONE, X2: ZERO, U0: ZERO, U1: ZERO, U2: ONE, U3: ZERO},
        mul(T1, add(mul(X1, U2), neg(mul(X2, U1)))),
        {T1: ("T", {t: 1}), T0: ("T", {}), X1: ("X", {x: 1}), X2: ("X", {u: 1}), X0: ("X", {}),
         U1: ("U", {x: 1}), U2: ("U", {u: 1}), U3: ("U", {t: 1}), U0: ("U", {})},
        (t, x, u, g),
    )
    return out


GROUP_TEMPLATES = _templates()


def template(group_id) -> GroupTemplate:
    try:
        return GROUP_TEMPLATES[group_id]
    except KeyError:
        raise KeyError(f"unknown group {group_id!r}; known: {', '.join(GROUP_TEMPLATES)}") from None


def monomial_coefficients(e, vs):
    """{exponent tuple: coefficient} of e as a polynomial in vs."""
    out = {}

    def go(expr, i, exps):
        if i == len(vs):
            if expr != ZERO:
                out[exps] = expr
            return
        for k, c in collect_coefficients(expr, vs[i]):
            go(c, i + 1, exps + (k,))

    go(simplify(e), 0, ())
    return out


def _component(tr, name):
    if name == "G":
        return tr.G if tr.G is not None else GAMMA
    return getattr(tr, name)


def _read(tr, tmpl, name, mono):
    vs = tmpl.monomial_vars
    key = tuple(mono.get(v, 0) for v in vs)
    return monomial_coefficients(_component(tr, name), vs).get(key, ZERO)


def _primitive_condition(e):
    """Numerator of e without monomial factors or content, sign normalized."""
    from fractions import Fraction
    from .expr.normal import RatFun, from_ratfun
    num = rf_reduce(to_ratfun(e)).num
    low = {}
    for m in num:
        for a, k in m:
            if isinstance(k, (int, Fraction)):
                low[a] = min(low.get(a, 0), k)
    for m in num:
        seen = {a for a, _ in m}
        for a in list(low):
            if a not in seen:
                low[a] = min(low[a], 0)
    shifted = {}
    for m, c in num.items():
        exps = dict(m)
        for a, k in low.items():
            exps[a] = exps.get(a, 0) - k
        shifted[tuple(sorted(((a, k) for a, k in exps.items() if k != 0), key=lambda p: p[0].key))] = c
    lead = max(shifted.items(), key=lambda it: repr(it[0]))[1]
    out = from_ratfun(RatFun({m: c / lead for m, c in shifted.items()}, {}))
    return simplify(out)


def template_mismatch(tr: PointTransformation, group_id):
    """Parameter readings and the residual conditions for tr to lie in the group.

    Returns (values, conditions): ``values`` reads every template parameter off
    tr; ``conditions`` are the expressions that must vanish for tr to equal
    the template element at those values.
    """
    tmpl = template(group_id)
    values = {p: _read(tr, tmpl, comp, mono) for p, (comp, mono) in tmpl.readings.items()}
    if tmpl.functional:
        fit = _functional_element(tmpl, values)
    else:
        fit = tmpl.element(values)
    conds = []
    names = ("T", "X", "U") + (("G",) if tmpl.G is not None else ())
    vs = tmpl.monomial_vars
    for name in names:
        diff_e = simplify(add(_component(tr, name), neg(_component(fit, name))))
        if diff_e == ZERO:
            continue
        try:
            parts = monomial_coefficients(diff_e, vs).values()
        except ValueError:
            parts = [diff_e]
        for c in parts:
            conds.append(_primitive_condition(c))
    return values, list(dict.fromkeys(conds))


def _functional_element(tmpl, values):
    """Template element with parameter functions of gamma set to given expressions."""
    reps = {}
    for p in tmpl.params:
        reps[(p.name, GAMMA)] = values[p]
    return PointTransformation(*(substitute(c, reps) for c in (tmpl.T, tmpl.X, tmpl.U, tmpl.G)))


def match_group_template(tr: PointTransformation, group_id):
    """Parameter values placing tr in the group, or None."""
    try:
        values, conds = template_mismatch(tr, group_id)
    except ValueError:
        return None
    if any(is_zero(c) is not Verdict.PROVED_ZERO for c in conds):
        return None
    tmpl = template(group_id)
    nd = tmpl.nondegeneracy
    if tmpl.functional:
        nd = substitute(nd, {(p.name, GAMMA): values[p] for p in tmpl.params})
    else:
        nd = substitute(nd, values)
    if is_zero(nd) is Verdict.PROVED_ZERO:
        return None
    return values


# ---------------------------------------------------------------- generators

@dataclass(frozen=True)
class TransformationFamily:
    transformation: PointTransformation
    delta: Symbol = field(default_factory=lambda: Symbol("delta"))


def _at_identity(e, delta):
    return substitute(diff(e, delta), {delta: ZERO})


def infinitesimal_generator(fam: TransformationFamily) -> GeneralVectorField:
    """Vector field on (t, x, u, u_x, f, g) generating the family at delta = 0."""
    tr, d = fam.transformation, fam.delta
    at0 = tr.subs({d: ZERO})
    if not same_transformation(at0, PointTransformation(t, x, u, None if tr.G is None else GAMMA)):
        raise ValueError("family is not the identity at delta = 0")
    f_new, g_new = map_elements(tr, (F_COORD, G_COORD if tr.G is None else GAMMA))
    if tr.G is not None:
        g_new = tr.G
    comps = [tr.T, tr.X, tr.U, tr.V, f_new, g_new]
    coeffs = [substitute(_at_identity(c, d), {GAMMA: G_COORD}) for c in comps]
    return GeneralVectorField(EQUIVALENCE_COORDS, coeffs)


def _field(**comps):
    return GeneralVectorField.from_dict(EQUIVALENCE_COORDS, {k: as_expr(v) for k, v in comps.items()})


# named basis of the equivalence algebras of the subclass with g_u = 0
EQUIVALENCE_BASIS = {
    "P^t": _field(t=1),
    "D^t": _field(t="t", f="-f", g="-g"),
    "P^x": _field(x=1),
    "D^x": _field(x="x", u_x="-u_x", f="2*f"),
    "P^u": _field(u=1),
    "D^u": _field(u="u", u_x="u_x", g="g"),
    "Z^t": _field(u="t", g=1),
    "Z^x": _field(u="x", u_x=1),
    "R": _field(x="u - g*t", u_x="-u_x^2", f="2*u_x*f"),
}
Q_ORDER = ("P^t", "D^t", "P^x", "D^x", "P^u", "D^u", "Z^t", "Z^x", "R")

HAT_BASIS = {
    "P^t+gP^u": EQUIVALENCE_BASIS["P^t"] + EQUIVALENCE_BASIS["P^u"].scale(G_COORD),
    "D^t": EQUIVALENCE_BASIS["D^t"],
    "P^x": EQUIVALENCE_BASIS["P^x"],
    "D^x": EQUIVALENCE_BASIS["D^x"],
    "P^u": EQUIVALENCE_BASIS["P^u"],
    "D^u-gZ^t": EQUIVALENCE_BASIS["D^u"] - EQUIVALENCE_BASIS["Z^t"].scale(G_COORD),
    "Z^t": EQUIVALENCE_BASIS["Z^t"],
    "Z^x": EQUIVALENCE_BASIS["Z^x"],
    "R": EQUIVALENCE_BASIS["R"],
}


def group_generators(group_id):
    """Generators of the one-parameter families of a constant-parameter template."""
    tmpl = template(group_id)
    if tmpl.functional:
        raise ValueError("parameter functions give a module of generators, not a finite basis")
    return {p.name: infinitesimal_generator(tmpl.family(p)) for p in tmpl.params}


__all__ = [
    "EQUIVALENCE_BASIS",
    "EQUIVALENCE_COORDS",
    "GAMMA",
    "GROUP_TEMPLATES",
    "HAT_BASIS",
    "IDENTITY",
    "DegenerateTransformation",
    "GroupTemplate",
    "PointTransformation",
    "TransformationFamily",
    "compose",
    "group_generators",
    "infinitesimal_generator",
    "invert",
    "map_elements",
    "match_group_template",
    "push_forward_residual",
    "same_transformation",
    "template",
    "template_mismatch",
]
