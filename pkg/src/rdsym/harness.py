"""Verification suites over the compiled-in catalog, with deterministic reports."""

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from . import catalog as cat
from .equivalence import (
    EQUIVALENCE_BASIS,
    GAMMA,
    GROUP_TEMPLATES,
    HAT_BASIS,
    IDENTITY,
    Q_ORDER,
    PointTransformation,
    certify_in_class,
    compose,
    group_generators,
    invert,
    match_group_template,
    push_forward_residual,
    same_transformation,
    target_member,
    template_mismatch,
)
from .expr import (
    ZERO,
    DomainViolation,
    Rational,
    Symbol,
    Verdict,
    add,
    clear_caches,
    diff,
    eval_numeric,
    free_symbols,
    is_zero,
    mul,
    neg,
    parse,
    random_point,
    render,
    simplify,
    substitute,
    unspecified_instances,
)
from .expr.core import Sum
from .expr.randexpr import random_expr
from .furcate import classify_c, furcate_enumerate_C
from .jet import VectorField, commutator_residual, prolong2, t, u, u_t, u_x, x
from .reduction import (
    change_of_variables_residual,
    d_omega,
    proportionality,
    separation_coefficients,
    verify_first_integral,
    verify_ode_solution,
    verify_reduction,
    verify_solution,
    SolutionCandidate,
)
from .symmetry import (
    EPS,
    ClassMember,
    algebra_signature,
    invariance_residual,
    is_symmetry,
    lie_bracket,
    rank,
    symmetry_verdict,
)

SUITES = ("table1", "table2", "footnote", "groups", "algebras", "solutions", "furcate", "properties")
PASS, FAIL, SKIPPED = "pass", "fail", "skipped"
FAULTS = ("drop-term",)


class UnknownSuite(ValueError):
    pass


@dataclass(frozen=True)
class Record:
    suite: str
    entry: str
    check: str
    status: str
    detail: str
    millis: int
    seed: int

    def to_json(self, stable=False):
        d = asdict(self)
        if stable:
            d["millis"] = 0
        return json.dumps(d, sort_keys=False, ensure_ascii=False)


def _ok(flag, detail=""):
    return (PASS if flag else FAIL), detail


def _verdict_name(v):
    return v.name.lower() if isinstance(v, Verdict) else str(v)


# ------------------------------------------------------------------- table1

def _affine_in_xu(e):
    return all(simplify(diff(diff(e, a), b)) == ZERO for a, b in ((x, x), (x, u), (u, u)))


def _table1_entries(seed):
    return ["kernel"] + [e.id for e in cat.TABLE1]


def _inventory():
    """Distinct catalog fields without parameter functions."""
    seen, out = set(), []
    for e in cat.TABLE1:
        for q in e.fields:
            comps = (q.tau, q.xi, q.eta)
            if any(unspecified_instances(c) for c in comps):
                continue
            key = tuple(render(c) for c in comps)
            if key not in seen:
                seen.add(key)
                out.append(q)
    return out


def _kernel_checks(seed):
    def passing():
        member = ClassMember()
        ok = [q for q in _inventory() if is_symmetry(q, member)]
        names = sorted(str(q) for q in ok)
        expected = sorted(str(q) for q in (cat.DT, cat.DX))
        return _ok(names == expected, f"{len(ok)} of {len(_inventory())} pass: {', '.join(names)}")

    def d_u():
        res = invariance_residual(VectorField(0, 0, 1), ClassMember())
        target = parse("-D(g,u)(u)")
        return _ok(simplify(add(res, neg(target))) == ZERO, f"residual {render(res)}")

    return [("kernel-fields", passing), ("d_u-residual", d_u)]


def _table1_checks(entry_id, seed):
    if entry_id == "kernel":
        return _kernel_checks(seed)
    e = cat.entry(entry_id)
    checks = []
    for i, q in enumerate(e.fields):
        def one(q=q):
            v, res = symmetry_verdict(q, e.member, e.side_relations)
            ok = v is Verdict.PROVED_ZERO and is_symmetry(q, e.member, e.side_relations)
            return _ok(ok, f"{q}: {_verdict_name(v)}" + ("" if ok else f" residual {render(res)[:200]}"))
        checks.append((f"field[{i}]", one))
    if e.block == "C":
        def affine():
            bad = [str(q) for q in e.fields if not (_affine_in_xu(q.xi) and _affine_in_xu(q.eta))]
            return _ok(not bad, "xi, eta affine in (x, u)" if not bad else "not affine: " + "; ".join(bad))

        def singular():
            xi_u = any(simplify(diff(q.xi, u)) != ZERO for q in e.fields)
            eta_x = any(simplify(diff(q.eta, x)) != ZERO for q in e.fields)
            ok = (xi_u == (entry_id == cat.XI_U_ROW)) and (eta_x == (entry_id == cat.ETA_X_ROW))
            return _ok(ok, f"xi_u nonzero: {xi_u}, eta_x nonzero: {eta_x}")

        checks += [("affine-xu", affine), ("singular-rows", singular)]
    return checks


# ------------------------------------------------------------------- table2

def _table2_entries(seed):
    return [r.label for r in cat.TABLE2]


def _table2_checks(label, seed):
    row = next(r for r in cat.TABLE2 if r.label == label)
    checks = [("invariance", lambda: _ok(row.ansatz_invariant(), "generator annihilates omega and the ansatz")),
              ("reduction", lambda: _ok(verify_reduction(row), f"ODE {render(row.reduced_ode)}"))]
    syms = set()
    for e in (row.ansatz, row.invariant_var, row.reduced_ode, row.generator.tau, row.generator.xi, row.generator.eta):
        syms |= free_symbols(e)
    if EPS in syms:
        for val in (1, -1):
            checks.append((f"reduction[eps={val}]",
                           lambda val=val: _ok(verify_reduction(row, {EPS: Rational(val)}), "")))
    return checks


# ----------------------------------------------------------------- footnote

def _footnote_entries(seed):
    return [e.label for e in cat.EQUIVALENCE_EDGES]


def edge_orientation(edge):
    """(as-written verdict, reversed verdict, involution flag) for an equivalence edge."""
    tr = edge.transformation
    a = is_zero(push_forward_residual(tr, edge.source_rhs, edge.target_rhs))
    b = is_zero(push_forward_residual(tr, edge.target_rhs, edge.source_rhs))
    involution = same_transformation(compose(tr, tr), IDENTITY)
    return a, b, involution


def _footnote_checks(label, seed):
    edge = next(e for e in cat.EQUIVALENCE_EDGES if e.label == label)
    ids = {e.id for e in cat.TABLE1}

    def orientation():
        a, b, inv = edge_orientation(edge)
        za, zb = a is Verdict.PROVED_ZERO, b is Verdict.PROVED_ZERO
        if za and zb:
            # an involution maps both ways by the same formulas
            return _ok(inv, "orientation=involution" if inv else "both orientations vanish")
        if za != zb:
            return PASS, "orientation=" + ("as-written" if za else "reversed")
        return FAIL, f"as-written {_verdict_name(a)}, reversed {_verdict_name(b)}"

    def endpoints():
        return _ok(edge.from_id in ids and edge.to_id in ids, f"{edge.from_id} -> {edge.to_id}")

    return [("orientation", orientation), ("endpoints", endpoints)]


# ------------------------------------------------------------------- groups

GROUP_MEMBERS = {
    "R": ClassMember(),
    "F": ClassMember(g=GAMMA),
    "F'": ClassMember(g=0),
    "bar F": ClassMember(g=GAMMA),
    "hat F": ClassMember(g=GAMMA),
}


def _groups_entries(seed):
    return ([f"certify:{g}" for g in sorted(GROUP_TEMPLATES)]
            + ["closure:R", "closure:hat F", "intersection:F", "generators:F", "generators:hat F",
               "kolmogorov", "traveling-wave-map", "roundtrip"])


def _certify(gid):
    tmpl = GROUP_TEMPLATES[gid]
    tr = tmpl.element()
    tgt, res = certify_in_class(tr, GROUP_MEMBERS[gid])
    v = is_zero(res)
    ok = v is Verdict.PROVED_ZERO
    if tr.G is not None:
        ok = ok and is_zero(add(tgt.g, neg(tr.G))) is Verdict.PROVED_ZERO
    return _ok(ok, f"f~ = {render(tgt.f)}, g~ = {render(tgt.g)}: {_verdict_name(v)}")


def _closure(gid):
    tmpl = GROUP_TEMPLATES[gid]
    a, b = tmpl.element(tmpl.generic_values("a")), tmpl.element(tmpl.generic_values("b"))
    comp = match_group_template(compose(a, b), gid) is not None
    inv = invert(a)
    back = match_group_template(inv, gid) is not None
    ident = PointTransformation(t, x, u, None if a.G is None else GAMMA)
    unit = same_transformation(compose(inv, a), ident)
    return _ok(comp and back and unit, f"compose {comp}, inverse {back}, inverse*element = identity {unit}")


def _intersection():
    tr = GROUP_TEMPLATES["F"].element()
    _, conds = template_mismatch(tr, "hat F")
    got = sorted(render(c) for c in conds)
    want = sorted(render(simplify(parse(c))) for c in ("T0", "U2 - 1"))
    if got != want:
        want_neg = sorted(render(simplify(parse(c))) for c in ("T0", "1 - U2"))
        if got != want_neg:
            return FAIL, f"conditions {got}"
    r_match = match_group_template(GROUP_TEMPLATES["F"].element(), "R")
    return _ok(r_match is None, f"conditions {got}; element vs R: {'none' if r_match is None else 'match'}")


def _generators(gid, basis):
    gens = list(group_generators(gid).values())
    rg, rb, rboth = rank(gens), rank(basis), rank(gens + basis)
    return _ok(rg == rb == rboth == len(basis), f"rank generators {rg}, basis {rb}, joint {rboth}")


def _kolmogorov():
    hod = PointTransformation(t, u, x)
    m = ClassMember(f=parse("c*u_x^-2"))
    res = push_forward_residual(hod, m, parse("c*u_xx - g(x)*u_x"))
    v = is_zero(res)
    return _ok(v is Verdict.PROVED_ZERO, _verdict_name(v))


def _traveling_wave_map():
    tr = PointTransformation(parse("eps^-1*exp(eps*t)"), parse("x+u"), parse("exp(-eps*t)*u"))
    res = push_forward_residual(tr, parse("u_x*u_xx/(u_x+1)^3 + eps*u"), cat.R7)
    v = is_zero(res)
    return _ok(v is Verdict.PROVED_ZERO, _verdict_name(v))


def _roundtrip():
    out = []
    for gid in ("R", "F"):
        tmpl = GROUP_TEMPLATES[gid]
        tr = tmpl.element(tmpl.generic_values("a"))
        m = GROUP_MEMBERS[gid]
        back = target_member(invert(tr), target_member(tr, m))
        ok = all(is_zero(add(p, neg(q))) is Verdict.PROVED_ZERO for p, q in ((back.f, m.f), (back.g, m.g)))
        out.append((gid, ok))
    return _ok(all(ok for _, ok in out), ", ".join(f"{g}: {ok}" for g, ok in out))


def _groups_checks(entry, seed):
    kind, _, arg = entry.partition(":")
    if kind == "certify":
        return [("in-class", lambda: _certify(arg))]
    if kind == "closure":
        return [("compose-invert", lambda: _closure(arg))]
    if kind == "intersection":
        return [("constraints", _intersection)]
    if kind == "generators":
        basis = [EQUIVALENCE_BASIS[k] for k in Q_ORDER[:8]] if arg == "F" else list(HAT_BASIS.values())
        return [("span", lambda: _generators(arg, basis))]
    if kind == "kolmogorov":
        return [("push-forward", _kolmogorov)]
    if kind == "traveling-wave-map":
        return [("push-forward", _traveling_wave_map)]
    if kind == "roundtrip":
        return [("inverse-after-map", _roundtrip)]
    raise KeyError(entry)


# ----------------------------------------------------------------- algebras

def _algebras_entries(seed):
    return ["commutators", "jacobi", "distinguishing-pair"] + [
        f"signature:{e.id}" for e in cat.TABLE1 if e.finite]


def bracket_table():
    """[Q_i, Q_j] for i < j in the fixed order of the named fields."""
    basis = [EQUIVALENCE_BASIS[k] for k in Q_ORDER]
    out = {}
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            out[(Q_ORDER[i], Q_ORDER[j])] = lie_bracket(basis[i], basis[j])
    return out


def _expected_bracket(a, b):
    if (a, b) in cat.COMMUTATORS:
        return cat.COMMUTATORS[(a, b)]
    if (b, a) in cat.COMMUTATORS:
        return -cat.COMMUTATORS[(b, a)]
    return None


def _commutator_checks(seed):
    checks = []
    table = bracket_table()
    for (a, b), br in table.items():
        def one(a=a, b=b, br=br):
            exp = _expected_bracket(a, b)
            if exp is None:
                return _ok(br.is_zero(), f"[{a}, {b}] = {br}")
            return _ok((br - exp).is_zero(), f"[{a}, {b}] = {br}")
        checks.append((f"[{a},{b}]", one))

    def count():
        nonzero = sum(1 for br in table.values() if not br.is_zero())
        return _ok(nonzero == len(cat.COMMUTATORS), f"{nonzero} nonzero relations")
    checks.append(("nonzero-count", count))
    return checks


def _jacobi_checks(seed, triples=1000):
    basis = [EQUIVALENCE_BASIS[k] for k in Q_ORDER]
    cache = {}

    def br(a, b):
        key = (repr(a), repr(b))
        if key not in cache:
            cache[key] = lie_bracket(a, b)
        return cache[key]

    rng = random.Random(seed)
    picks = [tuple(rng.randrange(len(basis)) for _ in range(3)) for _ in range(triples)]

    def antisymmetry():
        bad = [(i, j) for i, j, _ in picks if not (br(basis[i], basis[j]) + br(basis[j], basis[i])).is_zero()]
        return _ok(not bad, f"{len(picks)} pairs, {len(bad)} failures")

    def jacobi():
        bad = 0
        for i, j, k in picks:
            a, b, c = basis[i], basis[j], basis[k]
            s = br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b))
            if not s.is_zero():
                bad += 1
        return _ok(bad == 0, f"{len(picks)} triples, {bad} failures")

    return [("antisymmetry", antisymmetry), ("jacobi", jacobi)]


def signature_of(entry_id, seed=42):
    e = cat.entry(entry_id)
    s = algebra_signature(e.fields, seed=seed)
    return s.dim, s.dim_pr_t, s.derived_series_dims


def _signature_checks(entry_id, seed):
    def frozen():
        got = signature_of(entry_id)
        want = cat.SIGNATURE_REGRESSION.get(entry_id)
        return _ok(got == want, f"(dim, dim_pr_t, derived) = {got}")

    checks = [("regression", frozen)]
    if entry_id in cat.SIGNATURE_ANCHORS:
        checks.append(("anchor", lambda: _ok(signature_of(entry_id) == cat.SIGNATURE_ANCHORS[entry_id],
                                             f"expected {cat.SIGNATURE_ANCHORS[entry_id]}")))
    return checks


def _distinguishing_pair():
    a = signature_of(cat.row_id("C", "f(u_x)", "u"))
    b = signature_of(cat.row_id("C", "abs(u_x)^n", "abs(u)^(n+1) + eps*u"))
    ok = a[0] == b[0] == 3 and a[2] == b[2] and (a[1], b[1]) == (1, 2)
    return _ok(ok, f"{a} vs {b}")


def _algebras_checks(entry, seed):
    if entry == "commutators":
        return _commutator_checks(seed)
    if entry == "jacobi":
        return _jacobi_checks(seed)
    if entry == "distinguishing-pair":
        return [("dim_pr_t", _distinguishing_pair)]
    return _signature_checks(entry.split(":", 1)[1], seed)


# ---------------------------------------------------------------- solutions

def _solutions_entries(seed):
    return [s.label for s in cat.SOLUTIONS]


Y, P, P_Y = Symbol("Y"), Symbol("P"), Symbol("P_Y")


def solution_holds(item):
    if item.kind == "pde":
        return verify_solution(SolutionCandidate(item.payload[0], item.equation))
    if item.kind == "ode":
        return verify_ode_solution(item.equation, item.payload[0])
    if item.kind == "integral":
        if not verify_first_integral(item.equation, item.payload[0]):
            return False
        if len(item.payload) > 1:
            mu = proportionality(d_omega(parse(item.payload[0])), item.equation)
            return is_zero(add(mu, neg(parse(item.payload[1])))) is Verdict.PROVED_ZERO
        return True
    if item.kind == "variables":
        indep, dep, target = (parse(p) for p in item.payload)
        res = change_of_variables_residual(item.equation, indep, dep, target, (Y, P, P_Y))
        return is_zero(res) is Verdict.PROVED_ZERO
    if item.kind == "separation":
        coeffs = separation_coefficients(item.equation, parse(item.payload[0]))
        return set(coeffs) <= {-1, 0, 1}
    raise ValueError(item.kind)


def _solutions_checks(label, seed):
    item = next(s for s in cat.SOLUTIONS if s.label == label)

    def one():
        got = solution_holds(item)
        note = "holds" if got else "does not hold"
        if not item.expected:
            note += " (printed form, expected to fail)"
        return _ok(got == item.expected, note)

    return [(item.kind, one)]


# ------------------------------------------------------------------ furcate

def _furcate_entries(seed):
    return ["classify"] + [c.path for c in furcate_enumerate_C()]


def _furcate_checks(entry, seed):
    if entry == "classify":
        def diff_empty():
            d = classify_c(cat.CLASSIFICATION_TARGET_C)
            return _ok(d.empty and len(d.emitted) == 11,
                       f"{len(d.emitted)} cases; missing {d.missing}; extra {d.extra}")
        return [("catalog-diff", diff_empty)]
    case = next(c for c in furcate_enumerate_C() if c.path == entry)
    return [("templates", lambda: _ok(case.templates_hold(), render(case.f) + " ; " + render(case.g))),
            ("fields", lambda: _ok(case.fields_hold(), f"{len(case.fields)} fields"))]


# --------------------------------------------------------------- properties

def _drop_term(e):
    """Deliberately wrong simplifier used to check that the property suite notices."""
    s = simplify(e)
    if type(s) is Sum:
        return simplify(add(*s.terms[1:]))
    return s


def _simplifier(fault):
    if fault is None:
        return simplify
    if fault == "drop-term":
        return _drop_term
    raise ValueError(f"unknown fault {fault!r}")


def _exprs(seed, count, depth=4, symbols=None, opaque=True):
    rng = random.Random(seed)
    kw = {} if symbols is None else {"symbols": symbols}
    return rng, [random_expr(rng, depth, opaque=opaque, **kw) for _ in range(count)]


def _prop_idempotence(seed, simp, count=1000):
    _, es = _exprs(seed, count)
    bad = 0
    for e in es:
        s = simp(e)
        clear_caches()
        if simp(s) != s:
            bad += 1
    return _ok(bad == 0, f"{count} expressions, {bad} failures")


def _prop_numeric(seed, simp, count=1000):
    rng = random.Random(seed)
    done = bad = tries = 0
    while done < count and tries < count * 20:
        tries += 1
        e = random_expr(rng, 4)
        s = simp(e)
        p = random_point(add(e, s), rng)
        try:
            a, b = eval_numeric(e, p), eval_numeric(s, p)
        except (DomainViolation, ZeroDivisionError, ValueError, OverflowError):
            continue
        done += 1
        if abs(a - b) > 1e-9 * max(1.0, abs(a)):
            bad += 1
    return _ok(bad == 0 and done == count, f"{done} expression/point pairs, {bad} failures")


def _prop_clairaut(seed, simp, count=300):
    _, es = _exprs(seed, count)
    bad = 0
    for e in es:
        for a, b in ((x, t), (u, t), (x, u)):
            if simp(add(diff(diff(e, a), b), neg(diff(diff(e, b), a)))) != ZERO:
                bad += 1
    return _ok(bad == 0, f"{count} expressions, {bad} failures")


def _prop_leibniz(seed, simp, count=300):
    rng, es = _exprs(seed, 2 * count, depth=3)
    bad = 0
    for a, b in zip(es[::2], es[1::2]):
        v = rng.choice((x, t, u, u_x))
        lhs = diff(mul(a, b), v)
        rhs = add(mul(diff(a, v), b), mul(a, diff(b, v)))
        if simp(add(lhs, neg(rhs))) != ZERO:
            bad += 1
    return _ok(bad == 0, f"{count} pairs, {bad} failures")


JET_SYMBOLS = (t, x, u, u_t, u_x)


def _prop_commutation(seed, simp, count=200):
    _, es = _exprs(seed, count, depth=3, symbols=JET_SYMBOLS, opaque=False)
    bad = 0
    for e in es:
        if simp(commutator_residual(e)) != ZERO:
            bad += 1
    return _ok(bad == 0, f"{count} expressions, {bad} failures")


def _random_field(rng):
    comps = [random_expr(rng, 2, symbols=(t,), opaque=False)]
    comps += [random_expr(rng, 2, symbols=(t, x, u), opaque=False) for _ in range(2)]
    return VectorField(*comps)


def _prop_prolongation(seed, simp, count=40):
    rng = random.Random(seed)
    inventory = _inventory()
    bad = 0
    for i in range(count):
        if i % 2:
            q1, q2 = rng.choice(inventory), rng.choice(inventory)
            vals = {s: Rational(rng.randint(2, 5)) for s in (Symbol("n"), Symbol("m"))}
            vals[EPS] = Rational(rng.choice((-1, 1)))
            q1 = VectorField(*(substitute(c, vals) for c in (q1.tau, q1.xi, q1.eta)))
            q2 = VectorField(*(substitute(c, vals) for c in (q2.tau, q2.xi, q2.eta)))
        else:
            q1, q2 = _random_field(rng), _random_field(rng)
        b = lie_bracket(q1.general(), q2.general())
        lhs = prolong2(VectorField(*b.coeffs)).general()
        rhs = lie_bracket(prolong2(q1).general(), prolong2(q2).general())
        if any(simp(add(p, neg(q))) != ZERO for p, q in zip(lhs.coeffs, rhs.coeffs)):
            bad += 1
    return _ok(bad == 0, f"{count} field pairs, {bad} failures")


def _prop_roundtrip(seed, simp, count=500):
    from .expr import parse as _parse
    _, es = _exprs(seed, count)
    bad = 0
    for e in es:
        s = simp(e)
        if _parse(render(s)) != simplify(s):
            bad += 1
    return _ok(bad == 0, f"{count} expressions, {bad} failures")


PROPERTIES = {
    "simplify-idempotence": _prop_idempotence,
    "numeric-soundness": _prop_numeric,
    "clairaut": _prop_clairaut,
    "leibniz": _prop_leibniz,
    "dt-dx-commutation": _prop_commutation,
    "prolongation-homomorphism": _prop_prolongation,
    "parse-render-roundtrip": _prop_roundtrip,
}


def _properties_entries(seed):
    return list(PROPERTIES)


def _properties_checks(entry, seed, fault=None):
    simp = _simplifier(fault)
    return [(entry, lambda: PROPERTIES[entry](seed, simp))]


# ------------------------------------------------------------------- runner

_REGISTRY = {
    "table1": (_table1_entries, _table1_checks),
    "table2": (_table2_entries, _table2_checks),
    "footnote": (_footnote_entries, _footnote_checks),
    "groups": (_groups_entries, _groups_checks),
    "algebras": (_algebras_entries, _algebras_checks),
    "solutions": (_solutions_entries, _solutions_checks),
    "furcate": (_furcate_entries, _furcate_checks),
    "properties": (_properties_entries, _properties_checks),
}


def suite_entries(name, seed=42):
    if name not in _REGISTRY:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return _REGISTRY[name][0](seed)


def _run_task(task):
    suite, entry, seed, fault = task
    make = _REGISTRY[suite][1]
    checks = make(entry, seed, fault) if suite == "properties" else make(entry, seed)
    out = []
    for name, fn in checks:
        start = time.perf_counter()
        try:
            status, detail = fn()
        except Exception as exc:  # a crashing check is a failure, not an abort
            status, detail = FAIL, f"{type(exc).__name__}: {exc}"
        millis = int(round((time.perf_counter() - start) * 1000))
        out.append(Record(suite, entry, name, status, detail, millis, seed))
    return out


def run_suite(name, entry=None, seed=42, jobs=1, fault=None):
    """Run one suite (optionally a single entry); records come back in catalog order."""
    entries = suite_entries(name, seed)
    if entry is not None:
        if entry not in entries:
            raise KeyError(f"no entry {entry!r} in suite {name}")
        entries = [entry]
    if fault is not None and name != "properties":
        raise ValueError("fault injection applies to the properties suite only")
    tasks = [(name, e, seed, fault) for e in entries]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(tk) for tk in tasks]
    return [r for batch in results for r in batch]


def write_report(records, path, stable=False):
    with open(path, "w", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.to_json(stable) + "\n")


def failures(records):
    return [r for r in records if r.status == FAIL]


__all__ = [
    "FAIL",
    "FAULTS",
    "PASS",
    "Record",
    "SKIPPED",
    "SUITES",
    "UnknownSuite",
    "bracket_table",
    "edge_orientation",
    "failures",
    "run_suite",
    "signature_of",
    "solution_holds",
    "suite_entries",
    "write_report",
]
