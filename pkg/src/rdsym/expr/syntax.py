"""Text grammar for expressions: a precedence-climbing parser and a renderer.

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := primary ('^' unary)?
    primary := number | name | name '(' args ')' | name "'"+ '(' expr ')'
             | 'D' '(' name (',' var)* ')' '(' args ')' | 'Int' '(' expr ',' name ')'
             | '(' expr ')'

Jet variables are names ``u_w`` with ``w`` a word over {t, x} of length at
most three; the word is stored sorted, so ``u_xt`` reads as ``u_tx``.
"""

import re

from .core import (
    ELEMENTARY,
    MINUS_ONE,
    Antiderivative,
    Elementary,
    Power,
    Product,
    Rational,
    Sum,
    Symbol,
    Unspecified,
    add,
    elementary,
    mul,
    power,
    split_coefficient,
)

MAX_JET_ORDER = 3


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|('+)|(.))")


def jet_name(word):
    """Normalized jet symbol name for a derivative word like 'xt'."""
    if not word:
        return "u"
    return "u_" + "".join(sorted(word))


def check_jet(name, position=0):
    if not name.startswith("u_"):
        return name
    word = name[2:]
    if not word or len(word) > MAX_JET_ORDER or set(word) - {"t", "x"}:
        raise ParseError(f"unknown jet variable {name!r}", position)
    return jet_name(word)


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        if m.group(1) is not None:
            tokens.append(("num", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        elif m.group(3) is not None:
            tokens.append(("prime", m.group(3), start))
        elif m.group(4) is not None:
            ch = m.group(4)
            if ch not in "+-*/^(),":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.next()
        if tok[1] != value or tok[0] not in ("op",):
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def at(self, value):
        tok = self.peek()
        return tok[0] == "op" and tok[1] == value

    def parse(self):
        e = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        return e

    def expr(self):
        terms = [self.term()]
        while self.at("+") or self.at("-"):
            op = self.next()[1]
            t = self.term()
            terms.append(t if op == "+" else mul(MINUS_ONE, t))
        return terms[0] if len(terms) == 1 else add(*terms)

    def term(self):
        e = self.unary()
        while self.at("*") or self.at("/"):
            op = self.next()
            rhs = self.unary()
            if op[1] == "*":
                e = mul(e, rhs)
            else:
                if rhs == Rational(0):
                    raise ParseError("division by literal zero", op[2])
                e = mul(e, power(rhs, MINUS_ONE))
        return e

    def unary(self):
        if self.at("-"):
            self.next()
            return mul(MINUS_ONE, self.unary())
        return self.power()

    def power(self):
        base = self.primary()
        if self.at("^"):
            tok = self.next()
            exponent = self.unary()
            try:
                return power(base, exponent)
            except ZeroDivisionError:
                raise ParseError("division by literal zero", tok[2]) from None
        return base

    def args(self):
        self.expect("(")
        out = [self.expr()]
        while self.at(","):
            self.next()
            out.append(self.expr())
        self.expect(")")
        return out

    def primary(self):
        tok = self.next()
        kind, value, pos = tok
        if kind == "num":
            return Rational(int(value))
        if kind == "op" and value == "(":
            e = self.expr()
            self.expect(")")
            return e
        if kind != "name":
            raise ParseError(f"unexpected {value or 'end of input'!r}", pos)
        if self.peek()[0] == "prime":
            primes = len(self.next()[1])
            if not self.at("("):
                raise ParseError("derivative shorthand needs an argument list", pos)
            args = self.args()
            if len(args) != 1:
                raise ParseError("prime shorthand applies to unary functions only", pos)
            return Unspecified(value, args, [primes])
        if not self.at("("):
            return Symbol(check_jet(value, pos))
        if value in ELEMENTARY:
            args = self.args()
            if len(args) != 1:
                raise ParseError(f"{value} takes one argument", pos)
            return elementary(value, args[0])
        if value == "Int":
            args = self.args()
            if len(args) != 2 or type(args[1]) is not Symbol:
                raise ParseError("Int expects (integrand, variable)", pos)
            return Antiderivative(args[0], args[1])
        if value == "D":
            return self.derivative(pos)
        return Unspecified(value, self.args())

    def derivative(self, pos):
        self.expect("(")
        head = self.next()
        if head[0] != "name":
            raise ParseError("D expects a function name", head[2])
        specs = []
        while self.at(","):
            self.next()
            tok = self.next()
            if tok[0] == "num":
                specs.append(int(tok[1]))
            elif tok[0] == "name":
                specs.append(Symbol(check_jet(tok[1], tok[2])))
            else:
                raise ParseError("bad derivative specifier", tok[2])
        self.expect(")")
        args = self.args()
        orders = [0] * len(args)
        for s in specs:
            if isinstance(s, int):
                if not 1 <= s <= len(args):
                    raise ParseError(f"derivative position {s} out of range", pos)
                orders[s - 1] += 1
            else:
                hits = [i for i, a in enumerate(args) if a == s]
                if len(hits) != 1:
                    raise ParseError(f"cannot match derivative variable {s.name}", pos)
                orders[hits[0]] += 1
        return Unspecified(head[1], args, orders)


def parse(text):
    """Parse ``text`` into an expression."""
    return _Parser(text).parse()


# ------------------------------------------------------------------ render

_SUM, _PROD, _UNARY, _POW, _ATOM = 1, 2, 3, 4, 5


def _rational_text(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _wrap(text, prec, need):
    return f"({text})" if prec < need else text


def _prec(e):
    t = type(e)
    if t is Sum:
        return _SUM
    if t is Product:
        c, _ = split_coefficient(e)
        return _UNARY if c < 0 else _PROD
    if t is Rational:
        if e.value < 0:
            return _UNARY
        return _ATOM if e.value.denominator == 1 else _PROD
    if t is Power:
        return _POW
    return _ATOM


def _exponent_text(x):
    if type(x) is Rational and x.value >= 0 and x.value.denominator == 1:
        return str(x.value)
    if type(x) is Symbol:
        return x.name
    return f"({render(x)})"


def _power_text(base, exponent):
    b = render(base)
    if _prec(base) < _ATOM:
        b = f"({b})"
    return f"{b}^{_exponent_text(exponent)}"


def _factor_text(f):
    if type(f) is Power:
        return _power_text(f.base, f.exponent)
    return _wrap(render(f), _prec(f), _POW)


def _product_text(e):
    coef, rest = split_coefficient(e)
    factors = rest.factors if type(rest) is Product else (rest,)
    top, bottom = [], []
    for f in factors:
        if type(f) is Power and type(f.exponent) is Rational and f.exponent.value < 0:
            bottom.append(power(f.base, Rational(-f.exponent.value)))
        else:
            top.append(f)
    sign = "-" if coef < 0 else ""
    coef = abs(coef)
    parts = [_factor_text(f) for f in top]
    if coef != 1 or not parts:
        parts.insert(0, _rational_text(coef))
    text = "*".join(parts)
    for b in bottom:
        text += "/" + _factor_text(b)
    return sign + text


def render(e):
    """Render ``e`` in the parse grammar."""
    t = type(e)
    if t is Rational:
        return _rational_text(e.value)
    if t is Symbol:
        return e.name
    if t is Sum:
        out = []
        for i, term in enumerate(e.terms):
            c, _ = split_coefficient(term)
            if c < 0:
                body = render(mul(MINUS_ONE, term))
                if _prec(mul(MINUS_ONE, term)) < _PROD:
                    body = f"({body})"
                out.append(("-" if i == 0 else " - ") + body)
            else:
                out.append(("" if i == 0 else " + ") + render(term))
        return "".join(out)
    if t is Product:
        return _product_text(e)
    if t is Power:
        if type(e.exponent) is Rational and e.exponent.value < 0:
            return "1/" + _factor_text(power(e.base, Rational(-e.exponent.value)))
        return _power_text(e.base, e.exponent)
    if t is Elementary:
        return f"{e.kind}({render(e.arg)})"
    if t is Antiderivative:
        return f"Int({render(e.integrand)}, {e.var.name})"
    if t is Unspecified:
        args = ", ".join(render(a) for a in e.args)
        if not any(e.orders):
            return f"{e.name}({args})"
        if len(e.args) == 1:
            return f"{e.name}{chr(39) * e.orders[0]}({args})"
        named = all(type(a) is Symbol for a in e.args) and len(set(e.args)) == len(e.args)
        specs = []
        for i, (a, k) in enumerate(zip(e.args, e.orders)):
            specs += [a.name if named else str(i + 1)] * k
        return f"D({e.name}, {', '.join(specs)})({args})"
    raise TypeError(f"cannot render {e!r}")
