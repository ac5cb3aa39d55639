"""Run every verification suite on the default grid and print a one-line summary per check.

Usage: python3 scripts/run_verification.py [--seed N] [--out report.json]
"""
import argparse
import time

from dunkl2d import verification


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--out", default=None, help="write the JSON report here (with wall times)")
    args = ap.parse_args()

    grid = verification.default_grid(args.seed)
    report = None
    for suite in ("identities", "eigen", "orthogonality", "reduction"):
        t0 = time.perf_counter()
        r = verification.run_suite(suite, seed=args.seed, params_grid=grid)
        print(f"# {suite}: {time.perf_counter() - t0:.1f} s, {len(r.skipped)} skipped")
        report = r if report is None else report.merge(r)

    for c in sorted(report.checks, key=lambda c: c.name):
        flag = "ok  " if c.passed else "FAIL"
        print(f"{flag} {c.name:32s} {c.max_residual:10.2e} < {c.threshold:.0e}  ({c.trials} trials)")
    print("overall:", "PASS" if report.passed else "FAIL")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json(timing=True) + "\n")
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
