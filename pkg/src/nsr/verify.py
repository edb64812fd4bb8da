"""Verification harness: named checks, seeded sampling and reports.

A :class:`CheckSpec` names one identity and its sizes; :func:`run_check`
runs its trials with parameters drawn from a seeded random source and
returns a :class:`CheckReport`.  Reports serialise to a versioned JSON
document and a CSV summary.  Identical specs give identical JSON apart from
the ``ms`` timing field.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .checks import CHECKS, Context
from .errors import DegenerateParameters, ScalarDivisionError, SizeCapExceeded
from .partition import DominantWeight, size_cap
from .specialfn import (
    ParamPoint,
    alpha_const,
    alpha_toda,
    f_ecs,
    f_hat,
    f_hat_kappa0,
    f_macdonald,
    f_stationary,
    f_toda,
    f_toda_stationary,
    phi_hat,
    phi_macdonald,
    psi0,
)
from .scalar import TAU

PROVEN = (
    "kappa0", "macdonald-eigen", "macdonald-duality", "macdonald-limit", "toda-limit",
    "toda-commutator", "char-gl1", "char-glN", "ch-identity", "nekrasov-factorization",
    "theta-heat", "theta-threebody", "v0-series", "ecs-kernel", "ecs-conjugation",
)
CONJECTURE = (
    "poincare", "bispectral", "ruijsenaars-eigen", "stationary-regularity", "toda-eigen",
    "ecs-nonstationary", "evaluation",
)
MAX_RETRIES = 20
REPORT_VERSION = 1

# default truncation order as a function of N, default sigma order, default trials
_DEFAULTS = {
    "kappa0": (lambda N: 4 if N == 2 else 3, None, 1),
    "poincare": (lambda N: 3 if N == 2 else 2, None, 1),
    "bispectral": (lambda N: 2, 2, 1),
    "macdonald-eigen": (lambda N: 4, None, 1),
    "macdonald-duality": (lambda N: 2, 2, 1),
    "macdonald-limit": (lambda N: 3, None, 1),
    "ruijsenaars-eigen": (lambda N: 3 if N == 2 else 2, None, 1),
    "stationary-regularity": (lambda N: 3, None, 1),
    "toda-eigen": (lambda N: 4 if N == 2 else 3, None, 1),
    "toda-limit": (lambda N: 2, None, 1),
    "toda-commutator": (lambda N: 3, None, 20),
    "evaluation": (lambda N: 6, None, 1),
    "char-gl1": (lambda N: 4 * N, None, 1),
    "char-glN": (lambda N: 4, None, 1),
    "ch-identity": (lambda N: 6, None, 50),
    "nekrasov-factorization": (lambda N: 6, None, 200),
    "theta-heat": (lambda N: 2 * N, None, 1),
    "theta-threebody": (lambda N: 4, None, 1),
    "v0-series": (lambda N: 7, None, 1),
    "ecs-kernel": (lambda N: 3 * N, None, 1),
    "ecs-conjugation": (lambda N: 3, None, 10),
    "ecs-nonstationary": (lambda N: 2, None, 3),
}
_TUPLE_PARAMS = ("s", "lam", "mu", "qlambda")


@dataclass(frozen=True)
class CheckSpec:
    name: str
    N: int = 2
    D: int = None
    sigma_order: int = None
    seed: int = 0
    trials: int = None
    params: tuple = ()  # sorted (key, value) overrides

    def resolved(self) -> "CheckSpec":
        """Fill defaults and validate; raises ValueError on an invalid spec."""
        if self.name not in CHECKS:
            raise ValueError(f"unknown check {self.name!r}")
        if self.N < 2:
            raise ValueError("N must be at least 2")
        d_fn, ds, trials = _DEFAULTS[self.name]
        spec = replace(
            self,
            D=d_fn(self.N) if self.D is None else self.D,
            sigma_order=ds if self.sigma_order is None else self.sigma_order,
            trials=trials if self.trials is None else self.trials,
            params=tuple(sorted(dict(self.params).items())),
        )
        cap = size_cap()
        for label, value in (("order", spec.D), ("sigma order", spec.sigma_order)):
            if value is not None and not 0 <= value <= cap:
                raise ValueError(f"{label} {value} outside [0, {cap}] (NSR_MAX_DEGREE)")
        if spec.trials < 1:
            raise ValueError("trials must be at least 1")
        overrides = dict(spec.params)
        if spec.name == "char-glN":
            DominantWeight(int(overrides.get("K", 1)), tuple(overrides.get("mu", ()))).padded(spec.N)
        if spec.name == "theta-threebody" and spec.N < 3:
            raise ValueError("theta-threebody needs N >= 3")
        return spec

    @property
    def kind(self) -> str:
        return "proven" if self.name in PROVEN else "conjecture"


@dataclass
class CheckReport:
    spec: CheckSpec
    status: str  # pass | fail | degenerate-skipped | approx-pass
    witnesses: list = field(default_factory=list)
    points: list = field(default_factory=list)
    ms: float = 0.0
    tolerance: str = None
    residual: str = None

    def to_json(self, timing: bool = True) -> dict:
        s = self.spec
        params = {"N": s.N, "D": s.D, "seed": s.seed, "trials": s.trials,
                  "kind": s.kind, "points": self.points}
        if s.sigma_order is not None:
            params["Dsigma"] = s.sigma_order
        if s.params:
            params["overrides"] = {k: _encode(v) for k, v in s.params}
        out = {"name": s.name, "params": params, "status": self.status,
               "witnesses": [list(w) for w in self.witnesses]}
        if self.tolerance is not None:
            out["tolerance"] = self.tolerance
            out["residual"] = self.residual
        if timing:
            out["ms"] = round(self.ms, 3)
        return out


def _encode(v):
    if isinstance(v, (tuple, list)):
        return [_encode(x) for x in v]
    return str(v)


def parse_value(key: str, text: str):
    """Parse a ``--param`` value: rationals, or comma lists for tuple keys."""

    def num(x):
        f = Fraction(x.strip())
        return int(f) if f.denominator == 1 else f

    if key in _TUPLE_PARAMS:
        return tuple(num(x) for x in text.split(",") if x.strip())
    return num(text)


def parse_param(item: str):
    key, sep, value = item.partition("=")
    if not sep or not key:
        raise ValueError(f"expected key=value, got {item!r}")
    return key.strip(), parse_value(key.strip(), value)


def _rng(spec: CheckSpec) -> random.Random:
    return random.Random(f"{spec.seed}:{spec.name}:{spec.N}")


def sample_params(seed: int, constraints: dict = None) -> ParamPoint:
    """Seeded parameter point with numerators and denominators at most 16.

    ``constraints`` may hold ``N`` and ``relation``:

    * ``"free"`` (default): independent q, t, kappa, s;
    * ``"weyl"``: ``s_i = t^{N-i} q^{lam_i}`` for the integer vector ``lam``;
    * ``"dominant"``: level ``K`` and ``mu``, ``q = r^N``,
      ``s_i = r^{-K(N-i) + N mu_i}`` and ``kappa = r^{-K}/t``;
    * ``"toda"``: ``q = r^2``, ``s_i = q^{lam_i}`` and no t.

    Any of q, t, kappa, r given in ``constraints`` is used as is.
    """
    c = dict(constraints or {})
    N = int(c.get("N", 2))
    relation = c.get("relation", "free")
    ctx = Context(N, 0, None, random.Random(f"{seed}:sample:{relation}:{N}"),
                  {k: v for k, v in c.items() if k in ("q", "t", "kappa", "r", "s")})
    if relation == "free":
        return ctx.point()
    if relation == "weyl":
        lam = tuple(c.get("lam", (0,) * N))
        q, t = ctx.value("q"), ctx.value("t")
        s = tuple(t ** (N - i) * q ** lam[i - 1] for i in range(1, N + 1))
        return ParamPoint(N, q, t, ctx.value("kappa"), s)
    if relation == "dominant":
        K = int(c.get("K", 0))
        mu = DominantWeight(K, tuple(c.get("mu", ()))).padded(N)
        r, t = ctx.value("r"), ctx.value("t")
        s = tuple(r ** (-K * (N - i) + N * mu[i - 1]) for i in range(1, N + 1))
        return ParamPoint(N, r ** N, t, r ** (-K) / t, s, r=r)
    if relation == "toda":
        lam = tuple(c.get("lam", range(N - 1, -1, -1)))
        r = ctx.value("r")
        q = r * r
        s = tuple(c["s"]) if "s" in c else tuple(q ** l for l in lam)
        return ParamPoint(N, q, None, ctx.value("kappa"), s, r=r)
    raise ValueError(f"unsatisfiable or unknown constraint {relation!r}")


_DEGENERATE = (DegenerateParameters, ScalarDivisionError, ZeroDivisionError)


def run_check(spec: CheckSpec) -> CheckReport:
    """Run every trial of ``spec``; never raises on a failing identity."""
    spec = spec.resolved()
    check = CHECKS[spec.name]
    rng = _rng(spec)
    overrides = dict(spec.params)
    start = time.perf_counter()
    witnesses, points = [], []
    failed = skipped = False
    approx = None
    for trial in range(spec.trials):
        outcome = None
        last_error = None
        for _ in range(MAX_RETRIES + 1):
            ctx = Context(spec.N, spec.D, spec.sigma_order, rng, overrides)
            try:
                outcome = check(ctx)
                break
            except _DEGENERATE as exc:
                last_error = exc
            except SizeCapExceeded as exc:
                outcome = None
                last_error = exc
                break
        if outcome is None:
            if isinstance(last_error, SizeCapExceeded):
                failed = True
                witnesses.append(("resource cap", str(last_error), f"NSR_MAX_DEGREE={size_cap()}"))
            else:
                skipped = True
                points.append({"trial": trial, "skipped": str(last_error)})
            continue
        points.append(outcome.params)
        if outcome.approx is not None:
            approx = outcome.approx
        if not outcome.ok:
            failed = True
            for w in outcome.witnesses:
                witnesses.append((f"trial {trial}: {w[0]}" if spec.trials > 1 else w[0], w[1], w[2]))
    if failed:
        status = "fail"
        if not witnesses:
            witnesses.append(("unknown", "", ""))
    elif skipped:
        status = "degenerate-skipped"
    elif approx is not None:
        status = "approx-pass"
    else:
        status = "pass"
    ms = (time.perf_counter() - start) * 1000
    rep = CheckReport(spec, status, [_json_witness(w) for w in witnesses[:20]], points, ms)
    if approx is not None:
        rep.tolerance, rep.residual = approx
    return rep


def _json_witness(w):
    key, lhs, rhs = w
    key = key if isinstance(key, (str, list)) else str(key)
    return (key, lhs, rhs)


def run_suite(specs) -> list:
    return [run_check(s) for s in specs]


def report_document(reports, timing: bool = True) -> dict:
    return {"version": REPORT_VERSION, "checks": [r.to_json(timing) for r in reports]}


def dumps_report(reports, timing: bool = True) -> str:
    return json.dumps(report_document(reports, timing), indent=2, sort_keys=True)


def csv_summary(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "kind", "N", "D", "seed", "trials", "status", "witnesses", "ms"])
    for r in reports:
        s = r.spec
        w.writerow([s.name, s.kind, s.N, s.D, s.seed, s.trials, r.status, len(r.witnesses), f"{r.ms:.1f}"])
    return buf.getvalue()


def exit_code(reports) -> int:
    """0: nothing failed; 1: a proven identity failed; 3: only conjectures failed."""
    failed = [r for r in reports if r.status == "fail"]
    if any(r.spec.kind == "proven" for r in failed):
        return 1
    if failed:
        return 3
    return 0


def emit_report(reports, json_path=None, csv_path=None) -> int:
    """Write the JSON report and CSV summary; return the exit code."""
    if json_path:
        with open(json_path, "w") as fh:
            fh.write(dumps_report(reports) + "\n")
        if csv_path is None:
            csv_path = str(json_path).rsplit(".", 1)[0] + ".csv"
    if csv_path:
        with open(csv_path, "w") as fh:
            fh.write(csv_summary(reports))
    return exit_code(reports)


# ---------------------------------------------------------------------------
# named functions


FUNCTION_TAGS = ("FHat", "PhiHat", "FHatKappa0", "Alpha", "FStationary", "FMac", "PhiMac",
                 "FToda", "AlphaToda", "FTodaStationary", "FEcs", "Psi0")


def _regular_series(result, tag):
    if not result.regular:
        bad = sorted(d for d, k in result.ratio_pole_orders.items() if k)
        raise DegenerateParameters(f"{tag}: pole at kappa = 1 at {bad[0]}", where={"d": list(bad[0])})
    return result.series


def build_function(tag: str, N: int, D: int, seed: int = 0, params: dict = None):
    """Series for a FunctionTag; unspecified parameters are sampled from ``seed``."""
    if tag not in FUNCTION_TAGS:
        raise ValueError(f"unknown function tag {tag!r}")
    if not 0 <= D <= size_cap():
        raise ValueError(f"order {D} outside [0, {size_cap()}] (NSR_MAX_DEGREE)")
    c = dict(params or {})
    c["N"] = N
    rng = random.Random(f"{seed}:function:{tag}:{N}")
    ctx = Context(N, D, None, rng, c)
    if tag in ("FEcs", "Psi0"):
        beta = ctx.value("beta")
        if tag == "Psi0":
            return psi0(N, beta, D)
        lam = tuple(c.get("lam") or (ctx.signed(9) for _ in range(N)))
        return f_ecs(N, lam, ctx.value("k"), beta, D)
    if tag in ("FToda", "AlphaToda", "FTodaStationary"):
        point = sample_params(seed, dict(c, relation="toda"))
        if tag == "FToda":
            return f_toda(point, D)
        if tag == "AlphaToda":
            return alpha_toda(point, D)
        if "s" not in c:
            point = point.replace(s=tuple(ctx.rational(exclude=()) for _ in range(N)))
        return _regular_series(f_toda_stationary(point.replace(kappa=TAU), D), tag)
    point = sample_params(seed, c)
    if tag == "FHat":
        return f_hat(point, D)
    if tag == "PhiHat":
        return phi_hat(point, D)
    if tag == "FHatKappa0":
        return f_hat_kappa0(N, point.q, point.t, D)
    if tag == "Alpha":
        return alpha_const(point, D)
    if tag == "FStationary":
        return _regular_series(f_stationary(point.replace(kappa=TAU), D), tag)
    if tag == "FMac":
        return f_macdonald(N, point.s, point.q, point.t, D)
    return phi_macdonald(N, point.s, point.q, point.t, D)
