"""Invariant ansatzes, reduced ODEs, closed-form solutions and first integrals."""

from dataclasses import dataclass

from .expr import (
    ZERO,
    Rational,
    Symbol,
    Verdict,
    add,
    as_expr,
    diff,
    diff_raw,
    free_symbols,
    is_nonzero,
    is_zero,
    mul,
    neg,
    power,
    render,
    simplify,
    substitute,
)
from .expr.normal import rf_reduce, to_ratfun
from .jet import VectorField, t, u, u_t, u_x, u_xx, x
from .symmetry import _split_by_coords, evolution_rhs

OMEGA = Symbol("omega")
PHI = Symbol("phi")
PHI_W = Symbol("phi_w")
PHI_WW = Symbol("phi_ww")
PHI_WWW = Symbol("phi_www")
ODE_VARS = (PHI, PHI_W, PHI_WW, PHI_WWW)


class ReductionError(ValueError):
    pass


def d_omega(e):
    """Total derivative in omega, with phi a function of omega."""
    terms = [diff_raw(e, OMEGA)]
    for lo, hi in zip(ODE_VARS, ODE_VARS[1:]):
        d = diff_raw(e, lo)
        if d != ZERO:
            if lo == PHI_WWW:
                raise ReductionError("derivative order exceeds three")
            terms.append(mul(hi, d))
    if diff_raw(e, PHI_WWW) != ZERO:
        raise ReductionError("derivative order exceeds three")
    return simplify(add(*terms))


def _chain(e, w, var):
    """Derivative in t or x of e(t, x, phi(w(t,x)), ...)."""
    return simplify(add(diff_raw(e, var), mul(diff(w, var), d_omega(e))))


def highest_derivative(e):
    syms = free_symbols(e)
    for s in reversed(ODE_VARS):
        if s in syms:
            return s
    return None


@dataclass(frozen=True)
class ReductionEntry:
    member: object
    generator: VectorField
    ansatz: object
    invariant_var: object
    reduced_ode: object
    label: str = ""

    def __post_init__(self):
        for name in ("ansatz", "invariant_var", "reduced_ode"):
            object.__setattr__(self, name, as_expr(getattr(self, name)))

    def ansatz_derivatives(self):
        A, W = self.ansatz, self.invariant_var
        At = _chain(A, W, t)
        Ax = _chain(A, W, x)
        Axx = _chain(Ax, W, x)
        return At, Ax, Axx

    def invariance_defects(self):
        """(generator applied to omega, characteristic on the ansatz); both vanish for a valid row."""
        q = self.generator
        A, W = self.ansatz, self.invariant_var
        At, Ax, _ = self.ansatz_derivatives()
        on = {u: A}
        w_defect = simplify(add(mul(substitute(q.tau, on), diff(W, t)), mul(substitute(q.xi, on), diff(W, x))))
        char = add(q.eta, neg(mul(q.tau, u_t)), neg(mul(q.xi, u_x)))
        c_defect = substitute(char, {u: A, u_t: At, u_x: Ax})
        return w_defect, c_defect

    def ansatz_invariant(self):
        return all(is_zero(d) is Verdict.PROVED_ZERO for d in self.invariance_defects())


def _eliminate(e, w):
    """Replace (t, x) by omega using w = omega."""
    fs = free_symbols(w)
    if x in fs:
        cs = dict(_affine_in(w, x))
        a, b = cs.get(1, ZERO), cs.get(0, ZERO)
        return substitute(e, {x: mul(add(OMEGA, neg(b)), power(a, Rational(-1)))})
    if t in fs:
        cs = dict(_affine_in(w, t))
        a, b = cs.get(1, ZERO), cs.get(0, ZERO)
        return substitute(e, {t: mul(add(OMEGA, neg(b)), power(a, Rational(-1)))})
    raise ReductionError("invariant variable depends on neither t nor x")


def _affine_in(w, v):
    from .expr import collect_coefficients
    try:
        cs = collect_coefficients(w, v)
    except ValueError:
        raise ReductionError(f"invariant variable is not affine in {v.name}") from None
    if any(k > 1 for k, _ in cs) or any(v in free_symbols(c) for _, c in cs):
        raise ReductionError(f"invariant variable is not affine in {v.name}")
    return cs


def _leading_sign_positive(e):
    """Fix the overall sign: the highest derivative enters with a positive coefficient."""
    num = rf_reduce(to_ratfun(e)).num
    hi = highest_derivative(e)
    cands = [(m, c) for m, c in num.items() if any(hi in free_symbols(a) for a, _ in m)] or list(num.items())
    if not cands:
        return e
    lead = max(cands, key=lambda it: repr(it[0]))[1]
    return e if lead > 0 else simplify(neg(e))


def reduce(entry: ReductionEntry):
    """Residual of the equation on the ansatz, as an ODE expression in omega."""
    At, Ax, Axx = entry.ansatz_derivatives()
    rhs = evolution_rhs(entry.member)
    res = substitute(add(u_t, neg(rhs)), {u: entry.ansatz, u_t: At, u_x: Ax, u_xx: Axx})
    res = _eliminate(res, entry.invariant_var)
    if res == ZERO:
        return res
    # strip the multiplier carried by the leading phi-monomial
    parts = _split_by_coords(res, ODE_VARS + (OMEGA,))
    order = {s: i for i, s in enumerate(ODE_VARS)}

    def weight(key):
        syms = set()
        for a, _ in key[0]:
            syms |= free_symbols(a)
        return max((order[s] for s in syms if s in order), default=-1), repr(key)

    lead_key = max(parts, key=weight)
    lead = parts[lead_key]
    res = simplify(mul(res, power(lead, Rational(-1))))
    if free_symbols(res) & {t, x}:
        raise ReductionError(f"explicit t or x remains after reduction: {render(res)}")
    return _leading_sign_positive(res)


def proportionality(expr, ode):
    """The multiplier mu with expr = mu * ode, read off the highest derivative."""
    hi = highest_derivative(ode)
    if hi is None:
        raise ReductionError("reduced equation has no derivative of phi")
    return simplify(mul(diff(expr, hi), power(diff(ode, hi), Rational(-1))))


def is_multiple(expr, ode):
    """True iff expr = mu * ode with mu probed nonzero."""
    mu = proportionality(expr, ode)
    if is_nonzero(mu) is not True:
        return False
    return is_zero(add(expr, neg(mul(mu, ode)))) is Verdict.PROVED_ZERO


def verify_reduction(entry: ReductionEntry, values=None) -> bool:
    if not entry.ansatz_invariant():
        return False
    red = reduce(entry)
    ode = entry.reduced_ode
    if values:
        red, ode = substitute(red, values), substitute(ode, values)
    return is_multiple(red, ode)


# ---------------------------------------------------------------- solutions

@dataclass(frozen=True)
class SolutionCandidate:
    u: object
    member: object
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "u", as_expr(self.u))


def solution_residual(c: SolutionCandidate):
    rhs = evolution_rhs(c.member)
    ut, ux = diff(c.u, t), diff(c.u, x)
    uxx = diff(ux, x)
    return substitute(add(u_t, neg(rhs)), {u: c.u, u_t: ut, u_x: ux, u_xx: uxx})


def verify_solution(c: SolutionCandidate) -> bool:
    return is_zero(solution_residual(c)) is Verdict.PROVED_ZERO


def ode_residual(ode, phi):
    """The ODE evaluated on phi(omega)."""
    phi, ode = as_expr(phi), as_expr(ode)
    ds = [phi]
    for _ in range(3):
        ds.append(diff(ds[-1], OMEGA))
    return substitute(ode, dict(zip(ODE_VARS, ds)))


def verify_ode_solution(ode, phi) -> bool:
    return is_zero(ode_residual(ode, phi)) is Verdict.PROVED_ZERO


def verify_first_integral(ode, integral) -> bool:
    """D_omega I is a nonzero multiple of the ODE."""
    di = d_omega(as_expr(integral))
    ode = as_expr(ode)
    if di == ZERO or highest_derivative(ode) is None:
        return False
    try:
        return is_multiple(di, ode)
    except ReductionError:
        return False


def solve_for_highest(ode):
    """(derivative symbol, its value) from an ODE linear in its highest derivative."""
    ode = as_expr(ode)
    hi = highest_derivative(ode)
    a = diff(ode, hi)
    if hi in free_symbols(a):
        raise ReductionError("ODE is not linear in its highest derivative")
    b = substitute(ode, {hi: ZERO})
    return hi, simplify(mul(neg(b), power(a, Rational(-1))))


def on_ode(e, ode):
    """Rewrite e modulo the ODE, eliminating its highest derivative."""
    hi, val = solve_for_highest(ode)
    return substitute(e, {hi: val})


def change_of_variables_residual(ode, new_indep, new_dep, target, target_vars):
    """Target first-order ODE under y = new_indep, p = new_dep, modulo the source ODE.

    ``target`` is written in ``target_vars = (y, p, p_y)`` symbols; the new
    variables are expressions over (omega, phi, phi_w, ...).
    """
    y_sym, p_sym, py_sym = target_vars
    dy = d_omega(new_indep)
    dp = d_omega(new_dep)
    py = mul(dp, power(dy, Rational(-1)))
    res = substitute(target, {y_sym: new_indep, p_sym: new_dep, py_sym: py})
    return on_ode(res, ode)


def separation_coefficients(rhs, ansatz, var=x, base=None):
    """Coefficients of rhs[u := ansatz] in powers of e^var.

    Returns {exponent: coefficient} after substituting var = ln z.
    """
    z = base or Symbol("z")
    ut = diff(ansatz, t)
    ux = diff(ansatz, var)
    uxx = diff(ux, var)
    e = substitute(rhs, {u: ansatz, u_t: ut, u_x: ux, u_xx: uxx})
    from .expr import ln, collect_coefficients
    e = substitute(e, {var: ln(z)})
    r = rf_reduce(to_ratfun(e))
    low = 0
    for m in r.num:
        for a, k in m:
            if a == z and isinstance(k, int):
                low = min(low, k)
    shifted = simplify(mul(e, power(z, Rational(-low))))
    return {k + low: c for k, c in collect_coefficients(shifted, z)}


__all__ = [
    "OMEGA",
    "PHI",
    "PHI_W",
    "PHI_WW",
    "PHI_WWW",
    "ReductionEntry",
    "ReductionError",
    "SolutionCandidate",
    "change_of_variables_residual",
    "d_omega",
    "is_multiple",
    "on_ode",
    "ode_residual",
    "proportionality",
    "reduce",
    "separation_coefficients",
    "solution_residual",
    "verify_first_integral",
    "verify_ode_solution",
    "verify_reduction",
    "verify_solution",
]
