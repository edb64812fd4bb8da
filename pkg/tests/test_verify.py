import csv
import io
import json
from fractions import Fraction

import pytest

from nsr import checks, cli
from nsr.checks import Outcome
from nsr.errors import DegenerateParameters
from nsr.verify import (
    CONJECTURE,
    FUNCTION_TAGS,
    PROVEN,
    CheckSpec,
    build_function,
    csv_summary,
    dumps_report,
    emit_report,
    exit_code,
    parse_param,
    run_check,
    sample_params,
)

Fr = Fraction


def test_every_check_is_classified_once():
    assert set(PROVEN) | set(CONJECTURE) == set(checks.CHECKS)
    assert not set(PROVEN) & set(CONJECTURE)
    assert len(checks.CHECKS) == 22


def test_spec_validation(monkeypatch):
    with pytest.raises(ValueError):
        CheckSpec("no-such-check").resolved()
    with pytest.raises(ValueError):
        CheckSpec("kappa0", N=1).resolved()
    with pytest.raises(ValueError):
        CheckSpec("kappa0", trials=0).resolved()
    with pytest.raises(ValueError):
        CheckSpec("theta-threebody", N=2).resolved()
    with pytest.raises(ValueError):
        CheckSpec("char-glN", params=(("K", 0), ("mu", (1,)))).resolved()
    monkeypatch.setenv("NSR_MAX_DEGREE", "3")
    with pytest.raises(ValueError):
        CheckSpec("kappa0", D=4).resolved()


def test_parse_param():
    assert parse_param("q=1/3") == ("q", Fr(1, 3))
    assert parse_param("K=2") == ("K", 2)
    assert parse_param("s=1, 2/5") == ("s", (1, Fr(2, 5)))
    assert parse_param("mu=") == ("mu", ())
    with pytest.raises(ValueError):
        parse_param("q")


def test_sample_params_is_deterministic_and_bounded():
    a, b = sample_params(1), sample_params(1)
    assert a == b
    assert sample_params(2) != a
    for x in (a.q, a.t, a.kappa) + tuple(a.s):
        assert abs(x.numerator) <= 16 and x.denominator <= 16


def test_sample_params_relations():
    p = sample_params(3, {"N": 2, "relation": "weyl", "lam": (1, 0)})
    assert p.s == (p.t * p.q, Fr(1))
    p = sample_params(3, {"N": 2, "relation": "dominant", "K": 1})
    assert p.q == p.r ** 2
    assert p.s == (1 / p.r, Fr(1))
    assert p.kappa == 1 / (p.r * p.t)
    p = sample_params(3, {"N": 3, "relation": "toda"})
    assert p.q == p.r ** 2 and p.t is None
    assert p.s == (p.q ** 2, p.q, Fr(1))
    with pytest.raises(ValueError):
        sample_params(0, {"relation": "nonsense"})


def test_reports_are_deterministic():
    spec = CheckSpec("kappa0", N=2, D=3, seed=4, trials=2)
    a = dumps_report([run_check(spec)], timing=False)
    b = dumps_report([run_check(spec)], timing=False)
    assert a == b
    doc = json.loads(a)
    assert doc["version"] == 1
    entry = doc["checks"][0]
    assert entry["status"] == "pass" and "ms" not in entry
    assert entry["params"]["kind"] == "proven"


def test_known_values_from_the_suite():
    assert run_check(CheckSpec("v0-series", D=7)).status == "pass"
    rep = run_check(CheckSpec("char-gl1", N=2, D=8))
    assert rep.status == "pass"


def _fake(ok):
    def check(ctx):
        return Outcome(ok, [] if ok else [("(1, 0)", "1", "2")], {})
    return check


def test_exit_codes(monkeypatch):
    assert exit_code([]) == 0
    monkeypatch.setitem(checks.CHECKS, "kappa0", _fake(False))
    monkeypatch.setitem(checks.CHECKS, "poincare", _fake(False))
    monkeypatch.setitem(checks.CHECKS, "v0-series", _fake(True))
    proven_fail = run_check(CheckSpec("kappa0"))
    conj_fail = run_check(CheckSpec("poincare"))
    ok = run_check(CheckSpec("v0-series"))
    assert proven_fail.status == "fail" and proven_fail.witnesses
    assert exit_code([ok]) == 0
    assert exit_code([ok, proven_fail, conj_fail]) == 1
    assert exit_code([ok, conj_fail]) == 3


def test_degenerate_parameters_are_retried_then_skipped(monkeypatch):
    calls = []

    def always_degenerate(ctx):
        calls.append(1)
        raise DegenerateParameters("vanishing factor")

    monkeypatch.setitem(checks.CHECKS, "kappa0", always_degenerate)
    rep = run_check(CheckSpec("kappa0"))
    assert rep.status == "degenerate-skipped"
    assert len(calls) == 21
    assert exit_code([rep]) == 0


def test_emit_report_writes_json_and_csv(tmp_path):
    reps = [run_check(CheckSpec("nekrasov-factorization", trials=5))]
    path = tmp_path / "out.json"
    assert emit_report(reps, str(path)) == 0
    doc = json.loads(path.read_text())
    assert doc["checks"][0]["name"] == "nekrasov-factorization"
    rows = list(csv.reader(io.StringIO((tmp_path / "out.csv").read_text())))
    assert rows[0][0] == "name" and rows[1][6] == "pass"
    assert csv_summary([]).strip() == ",".join(rows[0])


def test_empty_report_is_valid():
    assert json.loads(dumps_report([])) == {"checks": [], "version": 1}


@pytest.mark.parametrize("tag", FUNCTION_TAGS)
def test_every_function_tag_builds(tag):
    S = build_function(tag, 2, 2, seed=1)
    assert S.constant_term == 1
    assert build_function(tag, 2, 2, seed=1).dumps() == S.dumps()


def test_cli_verify_and_function(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert cli.main(["verify", "--check", "kappa0", "--order", "3", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["checks"][0]["status"] == "pass"
    assert (tmp_path / "r.csv").exists()

    assert cli.main(["verify", "--check", "char-glN", "--param", "K=0", "--param", "mu=1"]) == 2
    capsys.readouterr()

    assert cli.main(["function", "--tag", "FHat", "--order", "2", "--param", "q=1/3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["trunc"] == 2 and doc["coords"]["kind"] == "cyclic"


def test_cli_suite_runs(capsys):
    assert cli.main(["verify", "--check", "proven"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert {c["name"] for c in doc["checks"]} == set(PROVEN)


def _bump(fn):
    """Wrap a series constructor so its output gains an extra (1, 0, ...) term."""
    def wrapped(*args, **kwargs):
        S = fn(*args, **kwargs)
        key = (1,) + (0,) * (S.coords.arity - 1)
        return S + type(S)(S.coords, S.trunc, {key: Fraction(1, 3)})
    return wrapped


@pytest.mark.parametrize("name,target", [
    ("kappa0", "f_hat_kappa0"),
    ("macdonald-eigen", "f_macdonald"),
    ("char-glN", "gt_pattern_counts"),
    ("toda-limit", "f_toda_from_limit"),
    ("toda-eigen", "f_toda"),
    ("ecs-kernel", "psi0"),
    ("ecs-nonstationary", "f_ecs"),
])
def test_sabotaged_ingredient_is_detected(monkeypatch, name, target):
    monkeypatch.setattr(checks, target, _bump(getattr(checks, target)))
    rep = run_check(CheckSpec(name))
    assert rep.status == "fail"
    assert rep.witnesses


def test_sabotaged_poincare_is_detected(monkeypatch):
    # a symmetric perturbation would cancel; make it depend on t
    real = checks.phi_hat

    def skewed(point, D):
        S = real(point, D)
        return S + type(S)(S.coords, S.trunc, {(1, 0): point.t})

    monkeypatch.setattr(checks, "phi_hat", skewed)
    assert run_check(CheckSpec("poincare")).status == "fail"
