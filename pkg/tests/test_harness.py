import json

import pytest

from rdsym import catalog as cat
from rdsym.cli import main
from rdsym.expr import ZERO, add, neg, parse, render, simplify
from rdsym.furcate import (
    TemplateRejected,
    classify_c,
    furcate_enumerate_C,
    solve_template_f,
    solve_template_g,
)
from rdsym.harness import FAIL, PASS, SUITES, UnknownSuite, run_suite, suite_entries, write_report
from rdsym.jet import VectorField
from rdsym.symmetry import is_symmetry

E = parse


def same(a, b):
    return simplify(add(a, neg(b))) == ZERO


def _has_field(entry, q):
    return any(all(same(a, b) for a, b in zip((p.tau, p.xi, p.eta), (q.tau, q.xi, q.eta))) for p in entry.fields)


# catalog contents

def test_catalog_shape():
    t1, t2, edges, templates = cat.load_catalog()
    assert len(t2) == 14 and len(edges) == 7 and len(templates) == 5
    crossed = {e.id for e in t1 if e.crossed_out}
    assert cat.row_id("H", "1", "1") in crossed
    assert cat.row_id("L", "u_x^-2", "0") in crossed
    assert any(e.side_relations for e in t1)


def test_fraction_row_fields():
    e = cat.entry(cat.row_id("C", "(u_x+1)^-1", "eps*u"))
    assert len(e.fields) == 4
    assert _has_field(e, VectorField(E("exp(eps*t)"), 0, E("eps*exp(eps*t)*(u+x)")))


def test_arctan_row_field():
    e = cat.entry(cat.row_id("F", "exp(m*arctan(u_x))/(u_x^2+1)", "0"))
    assert _has_field(e, VectorField(E("m*t"), E("u"), E("-x")))


def test_kolmogorov_row_field():
    e = next(e for e in cat.TABLE1 if e.block == "L" and e.side_relations)
    assert any(q.tau == ZERO and q.eta == ZERO and "hk" in render(q.xi) for q in e.fields)


def test_ids_are_content_derived():
    for e in cat.TABLE1:
        assert e.id == f"{e.block}:{e.member.content_id()}"


@pytest.mark.parametrize("entry", cat.TABLE1, ids=lambda e: e.id)
def test_catalog_fields_are_symmetries(entry):
    assert all(is_symmetry(q, entry.member, entry.side_relations) for q in entry.fields)


def test_dump_roundtrips_through_parser():
    data = json.loads(json.dumps(cat.catalog_json()))
    for row in data["table1"]:
        for comp in (c for f in row["fields"] for c in f):
            parse(comp)


# templates

def test_template_f_power():
    s = solve_template_f(1, E("-n"))
    assert render(s.expr) == "abs(u_x)^n"


def test_template_f_constant_rejected():
    s = solve_template_f(1, 0)
    assert s.admissible is False


def test_template_f_inverse_square_rejected():
    s = solve_template_f(1, 2)
    assert s.admissible is False
    assert same(s.expr, E("u_x^-2"))


def test_template_f_degenerate():
    with pytest.raises(TemplateRejected):
        solve_template_f(0, 1)


def test_template_g_examples():
    assert same(solve_template_g(1, 0, 1, 0, 0).expr, E("C/u"))
    assert same(solve_template_g(1, 0, E("-m"), 0, 0).expr, E("C*abs(u)^m"))
    assert same(solve_template_g(0, 1, 0, 1, 0).expr, E("u^2/2 + C"))


# enumerator

def _case(prefix):
    return [c for c in furcate_enumerate_C() if c.path.startswith(prefix)]


def test_linear_branch_cases():
    gs = {render(c.g) for c in _case("k=0/l=1/")}
    assert gs == {"u", "1/u"}


def test_exponential_branch():
    (case,) = _case("k=1/l=1/b1=b4=0")
    assert same(case.g, E("eps*exp(u)"))


def test_quadratic_branch():
    cases = [c for c in _case("k=1/l>=2/") if same(c.f, E("u_x"))]
    gs = sorted(render(c.g) for c in cases)
    assert gs == sorted(render(simplify(E(s))) for s in ("u^2", "u^2 + 1", "u^2 - 1"))


def test_classification_diff_is_empty():
    d = classify_c(cat.CLASSIFICATION_TARGET_C)
    assert d.empty and len(d.emitted) == 11


def test_enumerated_cases_verify():
    for case in furcate_enumerate_C():
        assert case.templates_hold() and case.fields_hold()


# runner

def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_footnote_records():
    recs = [r for r in run_suite("footnote") if r.check == "orientation"]
    assert len(recs) == 7
    assert all(r.status == PASS and r.detail.startswith("orientation=") for r in recs)


def test_table1_record_count():
    recs = run_suite("table1")
    fields = sum(len(e.fields) for e in cat.TABLE1)
    assert sum(r.check.startswith("field[") for r in recs) == fields
    assert all(r.status == PASS for r in recs)


def test_fault_injection_names_invariant():
    recs = run_suite("properties", entry="simplify-idempotence", fault="drop-term")
    assert [r.status for r in recs] == [FAIL]
    assert recs[0].entry == "simplify-idempotence"


def test_parallel_order_matches_serial():
    serial = [(r.entry, r.check, r.status) for r in run_suite("furcate")]
    parallel = [(r.entry, r.check, r.status) for r in run_suite("furcate", jobs=3)]
    assert serial == parallel


def test_report_determinism(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    write_report(run_suite("table2", seed=7), a, stable=True)
    write_report(run_suite("table2", seed=7, jobs=2), b, stable=True)
    assert a.read_bytes() == b.read_bytes()
    rec = json.loads(a.read_text().splitlines()[0])
    assert list(rec) == ["suite", "entry", "check", "status", "detail", "millis", "seed"]
    assert rec["seed"] == 7


def test_every_suite_has_entries():
    for s in SUITES:
        assert suite_entries(s)


# command line

def test_cli_verify_exit_codes(tmp_path, capsys):
    assert main(["verify", "footnote", "--report", str(tmp_path / "r.jsonl")]) == 0
    assert main(["verify", "properties", "--entry", "numeric-soundness", "--inject-fault", "drop-term"]) == 1


def test_cli_other_commands(capsys):
    assert main(["classify", "c"]) == 0
    assert main(["list", "catalog"]) == 0
    assert main(["bracket-table"]) == 0
    out = capsys.readouterr().out
    assert "[Z^x, R]" in out
    assert main(["dump", "catalog", "--format", "json"]) == 0
    assert "table1" in json.loads(capsys.readouterr().out)


def test_cli_unknown_entry(capsys):
    assert main(["verify", "table2", "--entry", "9.9"]) == 2
