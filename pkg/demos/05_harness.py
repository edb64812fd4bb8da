"""Running named checks programmatically and reading the report.

Run: python demos/05_harness.py   (the same checks are exposed as ``nsr verify``)
"""

from nsr.verify import CONJECTURE, PROVEN, CheckSpec, csv_summary, dumps_report, exit_code, run_check

reports = [run_check(CheckSpec(name, N=3 if name == "theta-threebody" else 2, seed=1))
           for name in PROVEN + CONJECTURE]
print(csv_summary(reports))
print("exit code:", exit_code(reports))

evaluation = next(r for r in reports if r.spec.name == "evaluation")
print("evaluation residual", evaluation.residual, "tolerance", evaluation.tolerance)
print(dumps_report(reports[:1], timing=False))
