"""Second-order jet calculus over (t, x; u).

Jet coordinates are flat symbols ``u``, ``u_t``, ``u_x``, ``u_tt``, ``u_tx``,
``u_xx`` and the third-order ones reached by one more total derivative.
"""

from dataclasses import dataclass

from .expr import (
    ZERO,
    Symbol,
    add,
    diff_raw,
    free_symbols,
    jet_name,
    mul,
    simplify,
    neg,
)

MAX_ORDER = 3

t, x, u = Symbol("t"), Symbol("x"), Symbol("u")


def jet(word=""):
    """Jet symbol for a derivative word, e.g. jet('tx') is u_tx."""
    return Symbol(jet_name(word))


def _word(sym):
    if sym.name == "u":
        return ""
    if sym.name.startswith("u_"):
        return sym.name[2:]
    return None


JET_COORDS = tuple(jet(w) for w in ("", "t", "x", "tt", "tx", "xx"))
SECOND_ORDER_JET = (t, x) + JET_COORDS
u_t, u_x, u_tt, u_tx, u_xx = JET_COORDS[1:]


class JetOrderError(ValueError):
    pass


def _direction(d):
    if isinstance(d, Symbol):
        d = d.name
    if d not in ("t", "x"):
        raise ValueError(f"total derivative direction must be t or x, not {d!r}")
    return d


def jet_symbols(e):
    return [s for s in free_symbols(e) if _word(s) is not None]


def total_derivative(e, direction):
    """D_t or D_x of an expression over the jet."""
    d = _direction(direction)
    terms = [diff_raw(e, Symbol(d))]
    for s in jet_symbols(e):
        w = _word(s)
        if len(w) + 1 > MAX_ORDER:
            raise JetOrderError(f"total derivative of {s.name} exceeds jet order {MAX_ORDER}")
        terms.append(mul(jet(w + d), diff_raw(e, s)))
    return simplify(add(*terms))


@dataclass(frozen=True)
class VectorField:
    """Point vector field tau*d_t + xi*d_x + eta*d_u."""

    tau: object
    xi: object
    eta: object

    def __post_init__(self):
        from .expr import as_expr
        object.__setattr__(self, "tau", as_expr(self.tau))
        object.__setattr__(self, "xi", as_expr(self.xi))
        object.__setattr__(self, "eta", as_expr(self.eta))

    @property
    def evolution_reduced(self):
        return not ({x, u} & free_symbols(self.tau)) and not any(
            _word(s) is not None for s in free_symbols(self.tau)
        )

    def characteristic(self):
        return simplify(add(self.eta, neg(mul(self.tau, u_t)), neg(mul(self.xi, u_x))))

    def apply(self, e):
        return simplify(add(mul(self.tau, diff_raw(e, t)), mul(self.xi, diff_raw(e, x)), mul(self.eta, diff_raw(e, u))))

    def general(self):
        from .symmetry import GeneralVectorField
        return GeneralVectorField((t, x, u), (self.tau, self.xi, self.eta))

    def __str__(self):
        parts = []
        for c, name in ((self.tau, "t"), (self.xi, "x"), (self.eta, "u")):
            if c != ZERO:
                parts.append(f"({c})*d_{name}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class ProlongedField:
    base: VectorField
    eta10: object
    eta01: object
    eta20: object
    eta11: object
    eta02: object

    def coefficient(self, word):
        return {
            "t": self.eta10,
            "x": self.eta01,
            "tt": self.eta20,
            "tx": self.eta11,
            "xx": self.eta02,
        }[word]

    def general(self):
        """The prolonged field on the coordinates (t, x, u, u_t, u_x, u_tt, u_tx, u_xx)."""
        from .symmetry import GeneralVectorField
        b = self.base
        return GeneralVectorField(
            SECOND_ORDER_JET,
            (b.tau, b.xi, b.eta, self.eta10, self.eta01, self.eta20, self.eta11, self.eta02),
        )

    def apply(self, e):
        return self.general().apply(e)


def prolong2(q: VectorField) -> ProlongedField:
    w = q.characteristic()
    wt = total_derivative(w, "t")
    wx = total_derivative(w, "x")
    coeffs = {}
    for word, dw in (("t", wt), ("x", wx)):
        coeffs[word] = simplify(add(dw, mul(q.tau, jet(word + "t")), mul(q.xi, jet(word + "x"))))
    for word, base, d in (("tt", wt, "t"), ("tx", wt, "x"), ("xx", wx, "x")):
        coeffs[word] = simplify(
            add(total_derivative(base, d), mul(q.tau, jet(word + "t")), mul(q.xi, jet(word + "x")))
        )
    return ProlongedField(q, coeffs["t"], coeffs["x"], coeffs["tt"], coeffs["tx"], coeffs["xx"])


def commutator_residual(e):
    """D_t D_x e - D_x D_t e (zero for expressions of order at most one)."""
    return simplify(add(total_derivative(total_derivative(e, "x"), "t"), neg(total_derivative(total_derivative(e, "t"), "x"))))


__all__ = [
    "JET_COORDS",
    "SECOND_ORDER_JET",
    "JetOrderError",
    "ProlongedField",
    "VectorField",
    "commutator_residual",
    "jet",
    "prolong2",
    "total_derivative",
    "t",
    "x",
    "u",
    "u_t",
    "u_x",
    "u_tt",
    "u_tx",
    "u_xx",
]
