import pytest
import sympy as sp

from rdsym.expr import ZERO, Rational, Symbol, Verdict, add, is_zero, neg, parse, simplify, substitute
from rdsym.jet import VectorField, t, u_x, x
from rdsym.symmetry import EPS, ClassMember
from rdsym.reduction import (
    PHI,
    PHI_W,
    ReductionEntry,
    ReductionError,
    SolutionCandidate,
    change_of_variables_residual,
    d_omega,
    proportionality,
    reduce,
    separation_coefficients,
    verify_first_integral,
    verify_ode_solution,
    verify_reduction,
    verify_solution,
)
from rdsym import catalog as cat

E = parse
QUAD = ClassMember(f=u_x, g=E("u^2"))
FRAC = ClassMember(f=E("(u_x+1)^-1"), g=E("eps*u"))
TRAVEL = E("u_x*u_xx - eps*u*u_x")


def same(a, b):
    return simplify(add(a, neg(b))) == ZERO


def _row(label):
    return next(r for r in cat.TABLE2 if r.label == label)


# reduce

def test_stationary_reduction():
    got = reduce(ReductionEntry(QUAD, VectorField(1, 0, 0), PHI, x, PHI_W))
    assert same(got, E("phi_w*phi_ww + phi^2"))


def test_spatially_uniform_reduction():
    got = reduce(ReductionEntry(FRAC, VectorField(0, 1, 0), PHI, t, PHI_W))
    assert same(got, E("phi_w - eps*phi"))


def test_opaque_spatially_uniform_reduction():
    got = reduce(ReductionEntry(ClassMember(), VectorField(0, 1, 0), PHI, t, PHI_W))
    assert same(got, E("phi_w - g(phi)"))


def test_leftover_variables_are_an_error():
    # omega = x is not invariant under the time shift, so t survives
    entry = ReductionEntry(QUAD, VectorField(0, 1, 0), E("phi + t"), x, PHI_W)
    with pytest.raises(ReductionError):
        reduce(entry)


# verify_reduction

def test_quadrature_row():
    row = next(r for r in cat.TABLE2 if same(r.reduced_ode, E("phi_ww - eps*omega*phi_w")))
    assert same(row.ansatz, E("phi*exp(eps*t) - x")) and row.invariant_var == x
    assert verify_reduction(row)


def test_arctan_row_and_corruption():
    row = next(r for r in cat.TABLE2 if same(r.reduced_ode, E("phi_w*phi_ww + phi^2 + kappa*phi_w + 1")))
    assert verify_reduction(row)
    bad = ReductionEntry(row.member, row.generator, row.ansatz, row.invariant_var,
                         E("phi_w*phi_ww + phi^2 + kappa*phi_w + 2"), row.label)
    assert not verify_reduction(bad)


@pytest.mark.parametrize("row", cat.TABLE2, ids=lambda r: r.label)
def test_table2_row(row):
    assert row.ansatz_invariant()
    assert verify_reduction(row)
    if EPS in _syms(row):
        for v in (1, -1):
            assert verify_reduction(row, {EPS: Rational(v)})


def _syms(row):
    from rdsym.expr import free_symbols
    out = set()
    for e in (row.ansatz, row.invariant_var, row.reduced_ode, row.generator.tau, row.generator.xi, row.generator.eta):
        out |= free_symbols(e)
    return out


def test_table2_size():
    assert len(cat.TABLE2) == 14


# solutions

def test_pole_solution():
    assert verify_solution(SolutionCandidate(E("-1/(t+c1)"), QUAD))


def test_separation_family_both_signs():
    plus = substitute(TRAVEL, {EPS: Rational(1)})
    minus = substitute(TRAVEL, {EPS: Rational(-1)})
    assert verify_solution(SolutionCandidate(E("c0 + c1*exp(x - c0*t) + c2*exp(-x + c0*t)"), plus))
    assert verify_solution(SolutionCandidate(E("c0 + c1*cos(x + c0*t + c2)"), minus))


def test_separation_family_with_printed_signs_fails():
    plus = substitute(TRAVEL, {EPS: Rational(1)})
    assert not verify_solution(SolutionCandidate(E("c0 + c1*exp(x + c0*t) + c2*exp(-x - c0*t)"), plus))


def test_separation_span_is_preserved():
    plus = substitute(TRAVEL, {EPS: Rational(1)})
    coeffs = separation_coefficients(plus, E("tau0(t) + tau1(t)*exp(x) + tau2(t)*exp(-x)"))
    assert set(coeffs) <= {-1, 0, 1}


def test_separation_oracle():
    # the reference system confirms the span claim independently
    tt, xx = sp.symbols("t x")
    a, b, c = (sp.Function(n)(tt) for n in ("a", "b", "c"))
    v = a + b * sp.exp(xx) + c * sp.exp(-xx)
    rhs = sp.expand(sp.diff(v, xx) * sp.diff(v, xx, 2) - v * sp.diff(v, xx))
    z = sp.Symbol("z", positive=True)
    poly = sp.expand(rhs.subs(sp.exp(xx), z).subs(sp.exp(-xx), 1 / z))
    powers = {term.as_coeff_exponent(z)[1] for term in sp.Add.make_args(poly)}
    assert powers <= {-1, 0, 1}


def test_quadrature_ode_solution():
    assert verify_ode_solution(E("phi_ww - eps*omega*phi_w"), E("c1*Int(exp(eps*omega^2/2), omega) + c2"))


# first integrals

def test_first_integral_with_factor_two():
    ode = E("phi_w*(phi_ww - eps*phi) - eps^-1")
    integral = E("phi_w^2 - eps*phi^2 - 2*eps^-1*omega")
    assert verify_first_integral(ode, integral)
    assert same(proportionality(d_omega(integral), ode), E("2"))


def test_trivial_integral_rejected():
    assert not verify_first_integral(E("phi_ww"), PHI)


def test_traveling_wave_integral():
    assert verify_first_integral(E("phi_ww + eps*phi*(phi_w + 1)"), E("phi_w - ln(abs(phi_w + 1)) + eps*phi^2/2"))


# change of variables

def test_abel_substitution_sign():
    ode = E("phi_w*(phi_ww - eps*phi) - eps^-1")
    Y, P, PY = Symbol("Y"), Symbol("P"), Symbol("P_Y")
    y, p = E("-1/phi_w"), E("1/phi_w + phi")
    good = change_of_variables_residual(ode, y, p, E("P*P_Y + P + eps/Y^3"), (Y, P, PY))
    bad = change_of_variables_residual(ode, y, p, E("P*P_Y - P - eps/Y^3"), (Y, P, PY))
    assert is_zero(good) is Verdict.PROVED_ZERO
    assert is_zero(bad) is Verdict.PROBED_NONZERO


@pytest.mark.parametrize("item", cat.SOLUTIONS, ids=lambda s: s.label)
def test_solution_catalog(item):
    from rdsym.harness import solution_holds
    assert solution_holds(item) == item.expected
