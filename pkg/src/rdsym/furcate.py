"""Furcate splitting for the subclass with f_ux != 0, (u_x^2 f)_ux != 0 and g_u != 0.

Template equations with constant coefficients are solved in closed form.  The
branch structure and its consistency constraints are fixed by hand; every
emitted normal form is checked against the template equations of its branch
and its extension fields against the invariance criterion.
"""

from dataclasses import dataclass, field

from .expr import (
    ZERO,
    Abs,
    Rational,
    Symbol,
    Verdict,
    add,
    as_expr,
    diff,
    exp,
    free_symbols,
    is_zero,
    ln,
    mul,
    neg,
    parse,
    power,
    render,
    simplify,
)
from .jet import VectorField, u, u_x
from .symmetry import ClassMember, is_symmetry

INTEGRATION_CONSTANT = Symbol("C")


class TemplateRejected(ValueError):
    pass


@dataclass(frozen=True)
class TemplateF:
    """a2 u_x f' + a4 f = 0."""

    a2: object
    a4: object

    def equation(self, f):
        f = as_expr(f)
        return simplify(add(mul(as_expr(self.a2), u_x, diff(f, u_x)), mul(as_expr(self.a4), f)))


@dataclass(frozen=True)
class TemplateFSingular:
    """(a1 u_x^2 + a2 u_x + a3) f' + (2 a1 u_x + a4) f = 0, the form before xi_u = eta_x = 0 is known."""

    a1: object
    a2: object
    a3: object
    a4: object

    def equation(self, f):
        f = as_expr(f)
        a1, a2, a3, a4 = (as_expr(a) for a in (self.a1, self.a2, self.a3, self.a4))
        lead = add(mul(a1, u_x, u_x), mul(a2, u_x), a3)
        return simplify(add(mul(lead, diff(f, u_x)), mul(add(mul(Rational(2), a1, u_x), a4), f)))


@dataclass(frozen=True)
class TemplateG:
    """(b1 u + b2) g' + b3 g = b4 u + b5."""

    b1: object
    b2: object
    b3: object
    b4: object
    b5: object

    def coefficients(self):
        return tuple(as_expr(b) for b in (self.b1, self.b2, self.b3, self.b4, self.b5))

    def equation(self, g):
        g = as_expr(g)
        b1, b2, b3, b4, b5 = self.coefficients()
        lhs = add(mul(add(mul(b1, u), b2), diff(g, u)), mul(b3, g))
        return simplify(add(lhs, neg(add(mul(b4, u), b5))))


@dataclass(frozen=True)
class TemplateSolution:
    expr: object
    admissible: object  # True, False or None when it depends on parameters
    conditions: tuple = ()
    reason: str = ""


def _zero(e):
    return simplify(as_expr(e)) == ZERO


def _signed_power(base, exponent):
    """|base|^exponent, or base^exponent when the exponent is an integer."""
    exponent = simplify(exponent)
    if type(exponent) is Rational and exponent.value.denominator == 1:
        return power(base, exponent)
    return power(Abs(base), exponent)


def _verdict(conditions):
    """True if every condition is a nonzero number, False if one vanishes, else None."""
    out = True
    for c in conditions:
        c = simplify(c)
        if c == ZERO:
            return False
        if free_symbols(c):
            out = None
    return out


def solve_template_f(a2, a4):
    """Solution of a2 u_x f' + a4 f = 0 up to a constant factor."""
    a2, a4 = as_expr(a2), as_expr(a4)
    if _zero(a2):
        raise TemplateRejected("a2 = 0 forces f = 0")
    n = simplify(neg(mul(a4, power(a2, Rational(-1)))))
    f = simplify(_signed_power(u_x, n))
    conds = (n, simplify(add(n, Rational(2))))
    verdict = _verdict(conds)
    reason = ""
    if verdict is False:
        reason = "f_ux = 0" if _zero(n) else "(u_x^2 f)_ux = 0"
    return TemplateSolution(f, verdict, conds, reason)


def _g_admissibility(g, need_curvature):
    g_u = simplify(diff(g, u))
    checks = [("g_u", g_u)]
    if need_curvature:
        checks.append(("g_uu", simplify(diff(g_u, u))))
    for name, e in checks:
        if e == ZERO:
            return False, f"{name} = 0"
    return True, ""


def solve_template_g(b1, b2, b3, b4, b5, need_curvature=False):
    """General solution of (b1 u + b2) g' + b3 g = b4 u + b5 with constant C."""
    tg = TemplateG(b1, b2, b3, b4, b5)
    b1, b2, b3, b4, b5 = tg.coefficients()
    if all(_zero(b) for b in (b1, b2, b3, b4, b5)):
        raise TemplateRejected("identity template")
    C = INTEGRATION_CONSTANT
    inv = lambda e: power(e, Rational(-1))  # noqa: E731
    if not _zero(b1):
        b2, b3, b4, b5 = (simplify(mul(b, inv(b1))) for b in (b2, b3, b4, b5))
        s = simplify(add(u, b2))
        c = simplify(add(b5, neg(mul(b4, b2))))
        g = mul(C, _signed_power(s, neg(b3)))
        if _zero(add(b3, Rational(1))):
            g = add(g, mul(b4, s, ln(Abs(s))))
        else:
            g = add(g, mul(b4, inv(add(b3, Rational(1))), s))
        if _zero(b3):
            g = add(g, mul(c, ln(Abs(s))))
        else:
            g = add(g, mul(c, inv(b3)))
    elif not _zero(b2):
        if _zero(b3):
            g = add(mul(b4, inv(mul(Rational(2), b2)), u, u), mul(b5, inv(b2), u), C)
        else:
            alpha = mul(b4, inv(b3))
            beta = mul(add(b5, neg(mul(b2, alpha))), inv(b3))
            g = add(mul(C, exp(neg(mul(b3, inv(b2), u)))), mul(alpha, u), beta)
    else:
        if _zero(b3):
            raise TemplateRejected("inconsistent template: 0 = b4 u + b5")
        g = mul(add(mul(b4, u), b5), inv(b3))
    g = simplify(g)
    ok, reason = _g_admissibility(g, need_curvature)
    return TemplateSolution(g, ok, (), reason)


# ------------------------------------------------------------------ branches

def _v(tau, xi, eta):
    return VectorField(parse(str(tau)), parse(str(xi)), parse(str(eta)))


@dataclass(frozen=True)
class FurcateCase:
    path: str
    f: object
    g: object
    fields: tuple
    f_templates: tuple = ()
    g_templates: tuple = ()
    extension: bool = True
    axiom: bool = False
    gauge: str = ""

    @property
    def member(self):
        return ClassMember(self.f, self.g)

    @property
    def id(self):
        return "C:" + self.member.content_id()

    def template_residuals(self):
        out = [tf.equation(self.f) for tf in self.f_templates]
        out += [tg.equation(self.g) for tg in self.g_templates]
        return out

    def templates_hold(self):
        return all(is_zero(r) is Verdict.PROVED_ZERO for r in self.template_residuals())

    def fields_hold(self):
        return all(is_symmetry(q, self.member) for q in self.fields)


KERNEL = (_v(1, 0, 0), _v(0, 1, 0))


def _case(path, f, g, extra, ftemps=(), gtemps=(), **kw):
    return FurcateCase(path, parse(f) if isinstance(f, str) else f, parse(g) if isinstance(g, str) else g,
                       KERNEL + tuple(extra), tuple(ftemps), tuple(gtemps), **kw)


def _normal(sol, values):
    """Instantiate the integration constant and gauge parameters of a template solution."""
    from .expr import substitute
    return simplify(substitute(sol.expr, {Symbol(k) if isinstance(k, str) else k: as_expr(v)
                                          for k, v in values.items()}))


def _singular_cases():
    # fields with xi_u != 0 or eta_x != 0; template tuple (a1, a2, a3, a4) with k = 1
    return [
        _case("singular/a1!=0", "u_x*(u_x+1)^-3", "eps*u",
              [_v(0, 0, "exp(eps*t)"), _v("exp(-eps*t)", "-eps*u*exp(-eps*t)", "eps*u*exp(-eps*t)")],
              [TemplateFSingular(1, 1, 0, -1)], [TemplateG(1, 0, -1, 0, 0)], axiom=True,
              gauge="a2 = 1, g = u rescaled by the sign of t"),
        _case("singular/a3!=0", "(u_x+1)^-1", "eps*u",
              [_v(0, 0, "exp(eps*t)"), _v("exp(eps*t)", 0, "eps*exp(eps*t)*(u+x)")],
              [TemplateFSingular(0, 1, 1, 1)], [TemplateG(1, 0, -1, 0, 0)], axiom=True,
              gauge="a2 = 1, g = u rescaled by the sign of t"),
    ]


def _k0_cases():
    f = parse("f(u_x)")
    # eta2 = c1, tau_t = 2 c1, so b3 = b1 and b4 = 0
    out = [_case("k=0/l=0", f, "g(u)", [], extension=False)]
    lin = solve_template_g(0, 1, 0, 0, 1)
    g = _normal(lin, {"C": 0})
    out.append(_case("k=0/l=1/b1=0", f, g, [_v(0, 0, "exp(t)")], gtemps=[TemplateG(0, 1, 0, 0, 1)],
                     gauge="g = u + C shifted to g = u"))
    hyp = solve_template_g(1, 0, 1, 0, 0)
    g = _normal(hyp, {"C": 1})
    # g = 1/u + nu keeps only the kernel unless nu = 0
    out.append(_case("k=0/l=1/b1!=0", f, g, [_v("2*t", "x", "u")], gtemps=[TemplateG(1, 0, 1, 0, 0)],
                     gauge="C = 1 by scaling, nu = 0 forced"))
    return out


def _k1_cases():
    n = Symbol("n")
    fsol = solve_template_f(1, neg(n))
    f = fsol.expr
    ft = [TemplateF(1, neg(n))]
    out = []
    # l >= 2, g_uuu = 0 and g_uu != 0: n = 1, g = u^2 + delta
    quad = solve_template_g(0, 1, 0, 2, 0, need_curvature=True)
    f1 = solve_template_f(1, -1).expr
    fields = {
        0: [_v("t", 0, "-u"), _v("t^2", 0, "-(2*t*u+1)")],
        1: [_v("cos(2*t)", 0, "2*cos(2*t) + 2*u*sin(2*t)"), _v("sin(2*t)", 0, "2*sin(2*t) - 2*u*cos(2*t)")],
        -1: [_v("exp(2*t)", 0, "-2*exp(2*t)*(u+1)"), _v("exp(-2*t)", 0, "2*exp(-2*t)*(u-1)")],
    }
    for delta in (0, 1, -1):
        out.append(_case(f"k=1/l>=2/quadratic/delta={delta}", f1, _normal(quad, {"C": delta}), fields[delta],
                         [TemplateF(1, -1)], [TemplateG(0, 1, 0, 2, 0)], gauge="n = 1 forced, delta in {-1, 0, 1}"))
    # l >= 2, g_uu = 0: g = eps u, in fact l = 3
    lin = solve_template_g(0, 1, 0, 0, 1)
    g = simplify(mul(Symbol("eps"), _normal(lin, {"C": 0})))
    out.append(_case("k=1/l>=2/linear", f, g,
                     [_v(0, 0, "exp(eps*t)"), _v(0, "n*x", "(n+2)*u"), _v("exp(-eps*n*t)", 0, "eps*exp(-eps*n*t)*u")],
                     ft, [TemplateG(1, 0, -1, 0, 0), TemplateG(0, 1, 0, 0, "eps"), TemplateG(0, 0, 1, "eps", 0)],
                     gauge="g = u scaled to eps*u"))
    # l = 1, (b1, b4) != (0, 0): b2 = b5 = 0, b1 = 1
    m = Symbol("m")
    power_sol = solve_template_g(1, 0, neg(m), 0, 0)
    out.append(_case("k=1/l=1/b1=1/b4=0", f, _normal(power_sol, {"C": 1}),
                     [_v("(1-m)*(n+2)*t", "(n+1-m)*x", "(n+2)*u")], ft, [TemplateG(1, 0, neg(m), 0, 0)],
                     gauge="C = 1 by scaling"))
    # b4 != 0 forces c1 = 0 and b3 = -n-1
    b4 = simplify(neg(mul(Symbol("eps"), n)))
    mixed = solve_template_g(1, 0, parse("-n-1"), b4, 0)
    out.append(_case("k=1/l=1/b1=1/b4!=0", f, _normal(mixed, {"C": 1}),
                     [_v("eps*exp(-eps*n*t)", 0, "exp(-eps*n*t)*u")], ft, [TemplateG(1, 0, parse("-n-1"), b4, 0)],
                     gauge="C = 1 by scaling, b4 = -eps*n by scaling of t"))
    # l = 1, b1 = b4 = 0: b2 != 0 and b5 = 0
    expo = solve_template_g(0, 1, -1, 0, 0)
    out.append(_case("k=1/l=1/b1=b4=0", f, _normal(expo, {"C": Symbol("eps")}), [_v("(n+2)*t", "x", "-(n+2)")],
                     ft, [TemplateG(0, 1, -1, 0, 0)], gauge="b3 = -1 by scaling of u, C = eps"))
    return out


def furcate_enumerate_C():
    """All branches of the splitting, including the kernel case and the two rows with x-dependent or u-dependent spatial components."""
    return _singular_cases() + _k0_cases() + _k1_cases()


def extension_ids(cases=None):
    cases = furcate_enumerate_C() if cases is None else cases
    return sorted(c.id for c in cases if c.extension)


@dataclass
class ClassificationDiff:
    emitted: list
    expected: list
    missing: list = field(default_factory=list)
    extra: list = field(default_factory=list)

    @property
    def empty(self):
        return not self.missing and not self.extra


def classify_c(expected_ids):
    emitted = extension_ids()
    expected = sorted(expected_ids)
    return ClassificationDiff(emitted, expected, sorted(set(expected) - set(emitted)),
                              sorted(set(emitted) - set(expected)))


def describe(case: FurcateCase):
    return f"{case.path}: f = {render(case.f)}, g = {render(case.g)}"


__all__ = [
    "ClassificationDiff",
    "FurcateCase",
    "TemplateF",
    "TemplateFSingular",
    "TemplateG",
    "TemplateRejected",
    "TemplateSolution",
    "classify_c",
    "describe",
    "extension_ids",
    "furcate_enumerate_C",
    "solve_template_f",
    "solve_template_g",
]
