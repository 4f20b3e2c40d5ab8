"""Compiled-in results: symmetry extensions, reductions, edges, solutions and algebra data."""

from dataclasses import dataclass, field

from .equivalence import EQUIVALENCE_BASIS, G_COORD, GROUP_TEMPLATES, Q_ORDER, PointTransformation
from .expr import Symbol, parse, render
from .jet import VectorField, t, u, x
from .reduction import ReductionEntry
from .symmetry import ClassMember, SideRelation

N, M, MU, NU, KAPPA = (Symbol(s) for s in ("n", "m", "mu", "nu", "kappa"))


def _v(tau, xi, eta):
    return VectorField(parse(str(tau)), parse(str(xi)), parse(str(eta)))


DT, DX = _v(1, 0, 0), _v(0, 1, 0)

HEAT = SideRelation("h", (t, x), parse("D(h,x,x)(t,x)"))
HEAT_EPS = SideRelation("h", (t, x), parse("D(h,x,x)(t,x) + eps*h(t,x)"))


def kolmogorov_relation(g):
    """hk_t = hk_uu - g(u) hk_u for the x-coefficient hk(t, u) of the linearizable rows."""
    return SideRelation("hk", (t, u), parse(f"D(hk,u,u)(t,u) - ({g})*D(hk,u)(t,u)"))


@dataclass(frozen=True)
class CatalogEntry:
    block: str
    member: ClassMember
    fields: tuple
    side_relations: tuple = ()
    constraints: tuple = ()
    notes: str = ""
    crossed_out: bool = False

    @property
    def id(self):
        return f"{self.block}:{self.member.content_id()}"

    @property
    def finite(self):
        return not self.side_relations

    def to_json(self):
        return {
            "id": self.id,
            "block": self.block,
            "f": render(self.member.f),
            "g": render(self.member.g),
            "fields": [[render(q.tau), render(q.xi), render(q.eta)] for q in self.fields],
            "side_relations": [f"{r.head}_t = {render(r.rhs)}" for r in self.side_relations],
            "constraints": list(self.constraints),
            "crossed_out": self.crossed_out,
            "notes": self.notes,
        }


def _row(block, f, g, fields, rels=(), constraints=(), notes="", crossed_out=False):
    return CatalogEntry(block, ClassMember(parse(f), parse(g)), (DT, DX) + tuple(fields), tuple(rels),
                        tuple(constraints), notes, crossed_out)


TAN_G = "(2*nu*tan(nu*ln(abs(u))) - 1)/u"


def _table1():
    rows = [
        _row("C", "f(u_x)", "g(u)", []),
        _row("C", "f(u_x)", "u", [_v(0, 0, "exp(t)")]),
        _row("C", "f(u_x)", "u^-1", [_v("2*t", "x", "u")]),
        _row("C", "abs(u_x)^n", "eps*exp(u)", [_v("(n+2)*t", "x", "-(n+2)")], constraints=("n != 0", "n != -2")),
        _row("C", "abs(u_x)^n", "abs(u)^m", [_v("(1-m)*(n+2)*t", "(n+1-m)*x", "(n+2)*u")],
             constraints=("n != 0", "n != -2", "m != -1", "m != 0", "m != 1", "(n, m) != (1, 2)")),
        _row("C", "abs(u_x)^n", "abs(u)^(n+1) + eps*u", [_v("eps*exp(-eps*n*t)", 0, "exp(-eps*n*t)*u")],
             constraints=("n != 0", "n != -2", "n != 1", "n != -1")),
        _row("C", "(u_x+1)^-1", "eps*u", [_v(0, 0, "exp(eps*t)"), _v("exp(eps*t)", 0, "eps*exp(eps*t)*(u+x)")]),
        _row("C", "u_x", "u^2", [_v("t", 0, "-u"), _v("t^2", 0, "-(2*t*u+1)")]),
        _row("C", "u_x", "u^2+1", [_v("cos(2*t)", 0, "2*cos(2*t) + 2*u*sin(2*t)"),
                                   _v("sin(2*t)", 0, "2*sin(2*t) - 2*u*cos(2*t)")]),
        _row("C", "u_x", "u^2-1", [_v("exp(2*t)", 0, "-2*exp(2*t)*(u+1)"), _v("exp(-2*t)", 0, "2*exp(-2*t)*(u-1)")]),
        _row("C", "u_x*(u_x+1)^-3", "eps*u", [_v(0, 0, "exp(eps*t)"), _v("exp(-eps*t)", "-eps*u*exp(-eps*t)",
                                                                          "eps*u*exp(-eps*t)")]),
        _row("C", "abs(u_x)^n", "eps*u", [_v(0, 0, "exp(eps*t)"), _v(0, "n*x", "(n+2)*u"),
                                          _v("exp(-eps*n*t)", 0, "eps*exp(-eps*n*t)*u")],
             constraints=("n != 0", "n != -2")),
        # g = 0
        _row("F", "f(u_x)", "0", [_v(0, 0, 1), _v("2*t", "x", "u")]),
        _row("F", "abs(u_x)^n", "0", [_v(0, 0, 1), _v("2*t", "x", "u"), _v("n*t", 0, "-u")],
             constraints=("n != 0", "n != -2")),
        _row("F", "exp(u_x)", "0", [_v(0, 0, 1), _v("2*t", "x", "u"), _v("t", 0, "-x")]),
        _row("F", "exp(m*arctan(u_x))/(u_x^2+1)", "0", [_v(0, 0, 1), _v("2*t", "x", "u"), _v("m*t", "u", "-x")]),
        _row("F", "1", "0", [_v(0, 0, 1), _v("2*t", "x", 0), _v(0, 0, "u"), _v(0, "2*t", "-x*u"),
                             _v("4*t^2", "4*t*x", "-(x^2+2*t)*u"), _v(0, 0, "h(t,x)")], rels=(HEAT,)),
        # f = 1
        _row("H", "1", "eps*exp(u)", [_v("2*t", "x", -2)]),
        _row("H", "1", "abs(u)^m", [_v("2*(1-m)*t", "(1-m)*x", "2*u")], constraints=("m != 0", "m != 1")),
        _row("H", "1", "eps*u*ln(abs(u))", [_v(0, "2*exp(eps*t)", "-eps*x*u*exp(eps*t)"), _v(0, 0, "exp(eps*t)*u")]),
        _row("H", "1", "eps*u", [_v("2*t", "x", "2*eps*t*u"), _v(0, 0, "u"), _v(0, "2*t", "-x*u"),
                                 _v("4*t^2", "4*t*x", "-(x^2+2*t-4*eps*t^2)*u"), _v(0, 0, "h(t,x)")],
             rels=(HEAT_EPS,)),
        _row("H", "1", "1", [_v("2*t", "x", "2*t"), _v(0, 0, "u-t"), _v(0, "2*t", "-x*(u-t)"),
                             _v("4*t^2", "4*t*x", "-((x^2+2*t)*(u-t)-4*t^2)"), _v(0, 0, "h(t,x)")],
             rels=(HEAT,), crossed_out=True,
             notes="equivalent to the linear heat equation by u -> u - t; the parameter function solves h_t = h_xx"),
        # f = u_x^-2, linearizable by the hodograph map
        _row("L", "u_x^-2", "g(u)", [_v(0, "hk(t,u)", 0), _v(0, "x", 0)], rels=(kolmogorov_relation("g(u)"),)),
        _row("L", "u_x^-2", "mu/u", [_v(0, "hk(t,u)", 0), _v(0, "x", 0), _v("4*t", 0, "2*u"),
                                     _v("4*t^2", "-(u^2+2*(1-mu)*t)*x", "4*t*u")],
             rels=(kolmogorov_relation("mu/u"),), constraints=("mu >= 1", "mu != 2"),
             notes="the projective field carries the coefficient 1 - mu"),
        _row("L", "u_x^-2", TAN_G, [_v(0, "hk(t,u)", 0), _v(0, "x", 0),
                                    _v("2*t", f"x*u*({TAN_G})/2", "u"),
                                    _v("4*t^2", f"-(u^2+2*t-2*t*u*({TAN_G}))*x", "4*t*u")],
             rels=(kolmogorov_relation(TAN_G),), constraints=("nu > 0",),
             notes="drift sign fixed so that the Kolmogorov potential is -(1/4+nu^2)/u^2"),
        _row("L", "u_x^-2", "0", [_v(0, "hk(t,u)", 0), _v(0, "x", 0), _v("2*t", 0, "u"),
                                  _v("4*t^2", "-(u^2+2*t)*x", "4*t*u"), _v(0, "-x*u", "2*t")],
             rels=(kolmogorov_relation("0"),), crossed_out=True,
             notes="hodograph image of the linear heat equation"),
    ]
    return rows


def row_id(block, f, g):
    return f"{block}:" + ClassMember(parse(f), parse(g)).content_id()


TABLE1 = _table1()

# the subclass-C rows that the classification of that subclass must reproduce
CLASSIFICATION_TARGET_C = tuple(e.id for e in TABLE1 if e.block == "C" and e.member.content_id() != "f=f(u_x);g=g(u)")

# the only rows where xi_u or eta_x may be nonzero
XI_U_ROW = row_id("C", "u_x*(u_x+1)^-3", "eps*u")
ETA_X_ROW = row_id("C", "(u_x+1)^-1", "eps*u")


def entry(entry_id):
    for e in TABLE1:
        if e.id == entry_id:
            return e
    raise KeyError(entry_id)


# ---------------------------------------------------------------- reductions

M5 = ClassMember(parse("(u_x+1)^-1"), parse("eps*u"))
M6 = ClassMember(parse("u_x"), parse("u^2"))
# image of the row u_x (u_x+1)^-3, eps*u under the map t~ = e^(eps t)/eps, x~ = x + u, u~ = e^(-eps t) u
R7 = parse("u_x*u_xx - eps*u*u_x")


def _red(label, member, q, ansatz, w, ode):
    return ReductionEntry(member, q, ansatz, w, ode, label)


TABLE2 = (
    _red("5.1", M5, DX, "phi", "t", "phi_w - eps*phi"),
    _red("5.2", M5, _v(1, "kappa", 0), "phi", "x - kappa*t", "phi_ww + (kappa*phi_w + eps*phi)*(phi_w + 1)"),
    _red("5.3", M5, _v("exp(eps*t)", 0, "eps*exp(eps*t)*(u+x)"), "phi*exp(eps*t) - x", "x",
         "phi_ww - eps*omega*phi_w"),
    _red("5.4", M5, _v("exp(eps*t)", 1, "eps*exp(eps*t)*(u+x)"), "phi*exp(eps*t) - x - exp(-eps*t)/(2*eps)",
         "x + exp(-eps*t)/eps", "phi_ww - phi_w*(eps*omega - phi_w)"),
    _red("6a.1", M6, DX, "phi", "t", "phi_w - phi^2"),
    _red("6a.2", M6, DT, "phi", "x", "phi_w*phi_ww + phi^2"),
    _red("6a.3", M6, _v(1, 1, 0), "phi", "x - t", "phi_w*phi_ww + phi^2 + phi_w"),
    _red("6a.4", M6, _v("t", "kappa", "-u"), "phi/t", "x - kappa*ln(abs(t))", "phi_w*phi_ww + phi^2 + kappa*phi_w + phi"),
    _red("6a.5", M6, _v("t^2+1", "kappa", "-(2*t*u+1)"), "(phi - t)/(t^2+1)", "x - kappa*arctan(t)",
         "phi_w*phi_ww + phi^2 + kappa*phi_w + 1"),
    _red("7.1", R7, DX, "phi", "t", "phi_w"),
    _red("7.2", R7, _v(0, "t", "eps^-1"), "phi + x/(eps*t)", "t", "phi_w + phi/omega"),
    _red("7.3", R7, DT, "phi", "x", "phi_w*(phi_ww - eps*phi)"),
    _red("7.4", R7, _v(1, "t", "eps^-1"), "phi + t/eps", "x - t^2/2", "phi_w*(phi_ww - eps*phi) - eps^-1"),
    _red("7.5", R7, _v("t", "kappa", "-u"), "(phi + kappa/eps)/t", "x - kappa*ln(abs(t))",
         "phi_w*(phi_ww - eps*phi) + phi + kappa/eps"),
)

# ------------------------------------------------- additional equivalence maps


@dataclass(frozen=True)
class EquivalenceEdge:
    label: str
    from_id: str
    to_id: str
    transformation: PointTransformation
    source_rhs: object
    target_rhs: object
    specialization: dict = field(default_factory=dict)


def _edge(label, source, target, T, X, U, src, tgt, specialization=None):
    return EquivalenceEdge(label, row_id(*source), row_id(*target), PointTransformation(parse(T), parse(X), parse(U)),
                           parse(src), parse(tgt), specialization or {})


EQUIVALENCE_EDGES = (
    _edge("6b->6a", ("C", "u_x", "u^2+1"), ("C", "u_x", "u^2"), "arctan(t)", "x", "(t^2+1)*u + t",
          "u_x*u_xx + u^2 + 1", "u_x*u_xx + u^2"),
    _edge("6c->6a", ("C", "u_x", "u^2-1"), ("C", "u_x", "u^2"), "ln(abs((t-1)/(t+1)))/2", "x", "(t^2-1)*u + t",
          "u_x*u_xx + u^2 - 1", "u_x*u_xx + u^2"),
    _edge("4b->4a", ("C", "abs(u_x)^n", "abs(u)^(n+1) + eps*u"), ("C", "abs(u_x)^n", "abs(u)^m"),
          "exp(eps*n*t)/(eps*n)", "x", "exp(-eps*t)*u",
          "abs(u_x)^n*u_xx + abs(u)^(n+1) + eps*u", "abs(u_x)^n*u_xx + abs(u)^(n+1)", {"m": "n+1"}),
    _edge("9b->9a", ("C", "abs(u_x)^n", "eps*u"), ("F", "abs(u_x)^n", "0"),
          "exp(eps*n*t)/(eps*n)", "x", "exp(-eps*t)*u", "abs(u_x)^n*u_xx + eps*u", "abs(u_x)^n*u_xx"),
    _edge("12b->12a", ("H", "1", "eps*u"), ("F", "1", "0"), "t", "x", "exp(-eps*t)*u", "u_xx + eps*u", "u_xx"),
    _edge("12c->12a", ("H", "1", "1"), ("F", "1", "0"), "t", "x", "u - t", "u_xx + 1", "u_xx"),
    _edge("12d->12a", ("L", "u_x^-2", "0"), ("F", "1", "0"), "t", "u", "x", "u_x^-2*u_xx", "u_xx"),
)

# ---------------------------------------------------------------- solutions


@dataclass(frozen=True)
class SolutionItem:
    """One closed-form claim: kind is pde, ode, integral, variables or separation."""

    label: str
    kind: str
    equation: object
    payload: tuple
    expected: bool = True


def _sol(label, kind, equation, *payload, expected=True):
    return SolutionItem(label, kind, parse(equation) if isinstance(equation, str) else equation,
                        tuple(payload), expected)


R7_PLUS = "u_x*u_xx - u*u_x"
R7_MINUS = "u_x*u_xx + u*u_x"

SOLUTIONS = (
    _sol("6a:pole", "pde", "u_x*u_xx + u^2", "-1/(t+c1)"),
    _sol("6a:zero", "pde", "u_x*u_xx + u^2", "0"),
    _sol("6a:stationary-exp", "pde", "u_x*u_xx + u^2", "c2*exp(-x)"),
    _sol("5:growth", "pde", M5.rhs, "c1*exp(eps*t)"),
    _sol("5:quadrature", "pde", M5.rhs, "(c1*Int(exp(eps*x^2/2), x) + c2)*exp(eps*t) - x"),
    _sol("5.3:quadrature", "ode", "phi_ww - eps*omega*phi_w", "c1*Int(exp(eps*omega^2/2), omega) + c2"),
    _sol("5.4:quadrature", "ode", "phi_ww - phi_w*(eps*omega - phi_w)",
         "ln(abs(Int(exp(eps*omega^2/2), omega) + c1)) + c2"),
    _sol("7.3:eps=1", "ode", "phi_w*(phi_ww - phi)", "c1*exp(omega) + c2*exp(-omega)"),
    _sol("7.3:eps=-1", "ode", "phi_w*(phi_ww + phi)", "c1*cos(omega) + c2*sin(omega)"),
    _sol("7:constant", "pde", R7, "c0"),
    _sol("7.2:general", "pde", R7, "c0/t + x/(eps*t)"),
    _sol("7:separation:eps=1", "pde", R7_PLUS, "c0 + c1*exp(x - c0*t) + c2*exp(-x + c0*t)"),
    _sol("7:separation:eps=1:printed", "pde", R7_PLUS, "c0 + c1*exp(x + c0*t) + c2*exp(-x - c0*t)", expected=False),
    _sol("7:separation:eps=-1", "pde", R7_MINUS, "c0 + c1*cos(x + c0*t + c2)"),
    _sol("7.4:integral", "integral", "phi_w*(phi_ww - eps*phi) - eps^-1", "phi_w^2 - eps*phi^2 - 2*eps^-1*omega", "2"),
    _sol("5.2:integral:kappa=0", "integral", "phi_ww + eps*phi*(phi_w + 1)",
         "phi_w - ln(abs(phi_w + 1)) + eps*phi^2/2"),
    _sol("7.5:integral:kappa=0", "integral", "phi_w*(phi_ww - eps*phi) + phi",
         "phi^2 - eps^-1*phi_w^2 - 2*eps^-2*phi_w - 2*eps^-3*ln(abs(phi_w - eps^-1))"),
    _sol("6a.2:integral", "integral", "phi_w*phi_ww + phi^2", "phi_w^3 + phi^3"),
    _sol("trivial:integral", "integral", "phi_ww", "phi", expected=False),
    # first-order forms (Y, P, P_Y) obtained by changes of variables
    _sol("6a:order-lowering", "variables", "phi_w*phi_ww + phi^2 + kappa*phi_w + mu*phi + nu",
         "phi", "phi_w", "P^2*P_Y + Y^2 + kappa*P + mu*Y + nu"),
    _sol("6a:abel", "variables", "phi_w*phi_ww + phi^2 + kappa*phi_w + mu*phi + nu",
         "phi_w + phi", "phi", "((2*Y + mu - kappa)*P - Y^2 + kappa*Y + nu)*P_Y + (P - Y)^2"),
    _sol("6a:abel:nu=0", "variables", "phi_w*phi_ww + phi^2 + kappa*phi_w + mu*phi",
         "phi_w/phi", "1/phi", "((kappa*Y + mu)*P + Y^3 + 1)*P_Y - Y^2*P"),
    _sol("7.4:abel", "variables", "phi_w*(phi_ww - eps*phi) - eps^-1",
         "-1/phi_w", "1/phi_w + phi", "P*P_Y + P + eps/Y^3"),
    _sol("7.4:abel:printed", "variables", "phi_w*(phi_ww - eps*phi) - eps^-1",
         "-1/phi_w", "1/phi_w + phi", "P*P_Y - P - eps/Y^3", expected=False),
    _sol("7.5:order-lowering", "variables", "phi_w*(phi_ww - eps*phi) + phi + kappa/eps",
         "phi_w", "phi", "((1 - eps*Y)*P + kappa/eps)*P_Y + Y^2"),
    _sol("7.5:abel-canonical", "variables", "((1 - eps*omega)*phi + kappa/eps)*phi_w + omega^2",
         "(kappa/eps)/(1 - eps*omega)", "phi + (kappa/eps)/(1 - eps*omega)",
         "P*P_Y - P + eps^-3*(Y - kappa/eps)^2/Y^3"),
    _sol("7.5:abel-canonical:printed", "variables", "((1 - eps*omega)*phi + kappa/eps)*phi_w + omega^2",
         "(kappa/eps)/(1 - eps*omega)", "phi + (kappa/eps)/(1 - eps*omega)",
         "P*P_Y - P - eps^-3*(Y + kappa/eps)^2/Y^3", expected=False),
    # the exponential span {1, e^x, e^-x} is preserved by the eps = 1 operator
    _sol("7:separation-span", "separation", R7_PLUS, "tau0(t) + tau1(t)*exp(x) + tau2(t)*exp(-x)"),
)

# ------------------------------------------------------ commutator table data


def _q(name):
    return EQUIVALENCE_BASIS[name]


# nonzero brackets [A, B] among the named equivalence fields
COMMUTATORS = {
    ("P^t", "D^t"): _q("P^t"),
    ("P^x", "D^x"): _q("P^x"),
    ("P^u", "D^u"): _q("P^u"),
    ("P^t", "Z^t"): _q("P^u"),
    ("P^x", "Z^x"): _q("P^u"),
    ("Z^t", "D^t"): -_q("Z^t"),
    ("Z^x", "D^x"): -_q("Z^x"),
    ("Z^t", "D^u"): _q("Z^t"),
    ("Z^x", "D^u"): _q("Z^x"),
    ("P^t", "R"): -_q("P^x").scale(G_COORD),
    ("P^u", "R"): _q("P^x"),
    ("D^x", "R"): -_q("R"),
    ("D^u", "R"): _q("R"),
    ("Z^x", "R"): _q("D^x") - _q("D^u") + _q("Z^t").scale(G_COORD),
}

# ------------------------------------------------------- algebra signatures

# (dim, dim of the t-projection, derived series) fixed by the isomorphism types
SIGNATURE_ANCHORS = {
    row_id("C", "f(u_x)", "g(u)"): (2, 1, (2, 0)),
    row_id("C", "f(u_x)", "u"): (3, 1, (3, 1, 0)),
    row_id("C", "f(u_x)", "u^-1"): (3, 2, (3, 2, 0)),
    row_id("C", "abs(u_x)^n", "abs(u)^(n+1) + eps*u"): (3, 2, (3, 1, 0)),
    row_id("C", "(u_x+1)^-1", "eps*u"): (4, 2, (4, 2, 0)),
    row_id("C", "u_x", "u^2"): (4, 3, (4, 3, 3)),
    row_id("H", "1", "eps*u*ln(abs(u))"): (4, 1, (4, 2, 0)),
    row_id("F", "f(u_x)", "0"): (4, 2, (4, 3, 0)),
}

# computed once by bracket evaluation at generic parameter values; kept as regression data
SIGNATURE_REGRESSION = {
    row_id("C", "f(u_x)", "g(u)"): (2, 1, (2, 0)),
    row_id("C", "f(u_x)", "u"): (3, 1, (3, 1, 0)),
    row_id("C", "f(u_x)", "u^-1"): (3, 2, (3, 2, 0)),
    row_id("C", "abs(u_x)^n", "eps*exp(u)"): (3, 2, (3, 2, 0)),
    row_id("C", "abs(u_x)^n", "abs(u)^m"): (3, 2, (3, 2, 0)),
    row_id("C", "abs(u_x)^n", "abs(u)^(n+1) + eps*u"): (3, 2, (3, 1, 0)),
    row_id("C", "(u_x+1)^-1", "eps*u"): (4, 2, (4, 2, 0)),
    row_id("C", "u_x", "u^2"): (4, 3, (4, 3, 3)),
    row_id("C", "u_x", "u^2+1"): (4, 3, (4, 3, 3)),
    row_id("C", "u_x", "u^2-1"): (4, 3, (4, 3, 3)),
    row_id("C", "u_x*(u_x+1)^-3", "eps*u"): (4, 2, (4, 3, 1, 0)),
    row_id("C", "abs(u_x)^n", "eps*u"): (5, 2, (5, 3, 0)),
    row_id("F", "f(u_x)", "0"): (4, 2, (4, 3, 0)),
    row_id("F", "abs(u_x)^n", "0"): (5, 2, (5, 3, 0)),
    row_id("F", "exp(u_x)", "0"): (5, 2, (5, 3, 0)),
    row_id("F", "exp(m*arctan(u_x))/(u_x^2+1)", "0"): (5, 2, (5, 3, 0)),
    row_id("H", "1", "eps*exp(u)"): (3, 2, (3, 2, 0)),
    row_id("H", "1", "abs(u)^m"): (3, 2, (3, 2, 0)),
    row_id("H", "1", "eps*u*ln(abs(u))"): (4, 1, (4, 2, 0)),
}


def group_templates():
    return dict(GROUP_TEMPLATES)


def catalog_json():
    return {
        "table1": [e.to_json() for e in TABLE1],
        "table2": [
            {"label": r.label,
             "member": r.member.content_id() if isinstance(r.member, ClassMember) else render(r.member),
             "generator": [render(r.generator.tau), render(r.generator.xi), render(r.generator.eta)],
             "ansatz": render(r.ansatz), "invariant": render(r.invariant_var), "ode": render(r.reduced_ode)}
            for r in TABLE2
        ],
        "edges": [
            {"label": e.label, "from": e.from_id, "to": e.to_id,
             "transformation": [render(c) for c in e.transformation.components()]}
            for e in EQUIVALENCE_EDGES
        ],
        "templates": sorted(GROUP_TEMPLATES),
        "commutators": [
            {"pair": list(k), "value": str(v)} for k, v in sorted(COMMUTATORS.items(), key=lambda kv: (
                Q_ORDER.index(kv[0][0]), Q_ORDER.index(kv[0][1])))
        ],
    }


def load_catalog():
    return TABLE1, TABLE2, EQUIVALENCE_EDGES, group_templates()


__all__ = [
    "COMMUTATORS",
    "CatalogEntry",
    "EquivalenceEdge",
    "EQUIVALENCE_EDGES",
    "SIGNATURE_ANCHORS",
    "SIGNATURE_REGRESSION",
    "SOLUTIONS",
    "SolutionItem",
    "TABLE1",
    "TABLE2",
    "catalog_json",
    "entry",
    "load_catalog",
]
