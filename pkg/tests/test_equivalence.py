import pytest
from hypothesis import given, settings, strategies as st

from rdsym.expr import ZERO, Rational, Symbol, Verdict, add, is_zero, neg, parse, simplify
from rdsym.jet import t, u, x
from rdsym.symmetry import ClassMember
from rdsym.equivalence import (
    EQUIVALENCE_BASIS,
    GAMMA,
    GROUP_TEMPLATES,
    HAT_BASIS,
    IDENTITY,
    PointTransformation,
    certify_in_class,
    compose,
    infinitesimal_generator,
    invert,
    map_elements,
    match_group_template,
    push_forward_residual,
    same_transformation,
    target_member,
    template_mismatch,
)
from rdsym.harness import GROUP_MEMBERS

E = parse


def same(a, b):
    return simplify(add(a, neg(b))) == ZERO


def test_identity_maps_elements_to_themselves():
    f, g = map_elements(IDENTITY, ClassMember())
    m = ClassMember()
    assert f == m.f and g == m.g


def test_scaling_maps_elements():
    tr = PointTransformation(E("T1*t"), E("X1*x"), E("U2*u"))
    f, g = map_elements(tr, ClassMember())
    assert same(f, E("X1^2/T1*f(u_x)"))
    assert same(g, E("U2/T1*g(u)"))


def test_hodograph_gives_kolmogorov():
    hod = PointTransformation(t, u, x)
    res = push_forward_residual(hod, ClassMember(f=E("c*u_x^-2")), E("c*u_xx - g(x)*u_x"))
    assert is_zero(res) is Verdict.PROVED_ZERO


def test_identity_push_forward():
    rhs = E("f(u_x)*u_xx + g(u)")
    assert push_forward_residual(IDENTITY, rhs, rhs) == ZERO


def test_arctan_map_orientation():
    tr = PointTransformation(E("arctan(t)"), x, E("(t^2+1)*u + t"))
    quad, shifted = E("u_x*u_xx + u^2"), E("u_x*u_xx + u^2 + 1")
    assert is_zero(push_forward_residual(tr, quad, shifted)) is Verdict.PROVED_ZERO
    assert is_zero(push_forward_residual(tr, shifted, quad)) is Verdict.PROBED_NONZERO


def test_exponential_time_map():
    tr = PointTransformation(E("eps^-1*exp(eps*t)"), E("x+u"), E("exp(-eps*t)*u"))
    res = push_forward_residual(tr, E("u_x*u_xx/(u_x+1)^3 + eps*u"), E("u_x*u_xx - eps*u*u_x"))
    assert is_zero(res) is Verdict.PROVED_ZERO


def test_compose_identity():
    tr = PointTransformation(E("2*t+1"), E("x+u"), E("3*u"))
    assert same_transformation(compose(IDENTITY, tr), tr)


def test_compose_scalings():
    a = PointTransformation(E("A1*t"), E("B1*x"), E("C1*u"))
    b = PointTransformation(E("A2*t"), E("B2*x"), E("C2*u"))
    want = PointTransformation(E("A1*A2*t"), E("B1*B2*x"), E("C1*C2*u"))
    assert same_transformation(compose(a, b), want)


def test_compose_hat_elements_multiplies_time_scale():
    tmpl = GROUP_TEMPLATES["hat F"]
    a, b = tmpl.element(tmpl.generic_values("a")), tmpl.element(tmpl.generic_values("b"))
    got = match_group_template(compose(a, b), "hat F")
    assert got is not None
    assert same(got[Symbol("T1")], E("aT1*bT1"))
    # the (x, u) block composes as a matrix product
    assert same(got[Symbol("X1")], E("aX1*bX1 + aX2*bU1"))
    assert same(got[Symbol("U2")], E("aU1*bX2 + aU2*bU2"))


def test_invert_time_shift():
    inv = invert(PointTransformation(E("T1*t + T0"), x, u))
    assert same(inv.T, E("(t - T0)/T1"))


def test_hodograph_is_involution():
    hod = PointTransformation(t, u, x)
    assert same_transformation(invert(hod), hod)


def test_invert_hat_element_stays_in_template():
    tmpl = GROUP_TEMPLATES["hat F"]
    assert match_group_template(invert(tmpl.element(tmpl.generic_values("a"))), "hat F") is not None


def test_match_time_scaling():
    got = match_group_template(PointTransformation(E("2*t"), x, u), "R")
    assert got[Symbol("T1")] == Rational(2)
    assert all(got[Symbol(p)] == Rational(v) for p, v in (("T0", 0), ("X1", 1), ("X0", 0), ("U2", 1), ("U0", 0)))


def test_conditional_element_not_in_r():
    assert match_group_template(GROUP_TEMPLATES["F"].element(), "R") is None


def test_f_and_hat_intersection():
    _, conds = template_mismatch(GROUP_TEMPLATES["F"].element(), "hat F")
    got = {str(simplify(c)) for c in conds}
    assert got in ({str(E("T0")), str(simplify(E("1 - U2")))}, {str(E("T0")), str(simplify(E("U2 - 1")))})
    vals = {Symbol("T0"): ZERO, Symbol("U2"): Rational(1)}
    assert match_group_template(GROUP_TEMPLATES["F"].element(vals), "hat F") is not None


def test_generator_of_time_scaling():
    fam = GROUP_TEMPLATES["R"].family(Symbol("T1"))
    assert infinitesimal_generator(fam) == EQUIVALENCE_BASIS["D^t"]


def test_generator_of_hat_time_shift():
    fam = GROUP_TEMPLATES["hat F"].family(Symbol("T0"))
    assert infinitesimal_generator(fam) == HAT_BASIS["P^t+gP^u"]


def test_generator_of_space_shift():
    fam = GROUP_TEMPLATES["R"].family(Symbol("X0"))
    assert infinitesimal_generator(fam) == EQUIVALENCE_BASIS["P^x"]


@pytest.mark.parametrize("gid", sorted(GROUP_TEMPLATES))
def test_templates_certify_in_class(gid):
    tr = GROUP_TEMPLATES[gid].element()
    _, res = certify_in_class(tr, GROUP_MEMBERS[gid])
    assert is_zero(res) is Verdict.PROVED_ZERO


nonzero = st.integers(min_value=-5, max_value=5).filter(bool)
small = st.integers(min_value=-5, max_value=5)


@settings(max_examples=25, deadline=None)
@given(nonzero, small, nonzero, small, nonzero, small)
def test_roundtrip_for_scalings(t1, t0, x1, x0, u2, u0):
    vals = {Symbol(k): Rational(v) for k, v in
            (("T1", t1), ("T0", t0), ("X1", x1), ("X0", x0), ("U2", u2), ("U0", u0))}
    tr = GROUP_TEMPLATES["R"].element(vals)
    m = ClassMember()
    back = target_member(invert(tr), target_member(tr, m))
    assert same(back.f, m.f) and same(back.g, m.g)


@settings(max_examples=25, deadline=None)
@given(nonzero, nonzero, small, nonzero, small, small)
def test_roundtrip_for_f_group(t1, x1, u1, u2, u3, x0):
    vals = {Symbol(k): Rational(v) for k, v in
            (("T1", t1), ("T0", 0), ("X1", x1), ("X0", x0), ("U0", 0), ("U1", u1), ("U2", u2), ("U3", u3))}
    tr = GROUP_TEMPLATES["F"].element(vals)
    m = ClassMember(g=GAMMA)
    back = target_member(invert(tr), target_member(tr, m))
    assert same(back.f, m.f) and same(back.g, m.g)
