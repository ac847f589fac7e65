"""Run every verification sweep and print a one-line summary per identity.

    python scripts/run_all_sweeps.py --seed 7 --out-dir verification_reports
"""
import argparse
import sys
import time
from pathlib import Path

from riesz_mellin.verify import IDENTITIES, SweepSpec, emit_report, run_sweep, summarize, sweep_ok


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--out-dir", default="verification_reports")
    ap.add_argument("--only", nargs="*", choices=IDENTITIES, help="subset of identities")
    args = ap.parse_args()

    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    all_ok = True
    for ident in args.only or IDENTITIES:
        t0 = time.perf_counter()
        records = run_sweep(SweepSpec.build(ident, seed=args.seed))
        emit_report(records, out / f"{ident}.csv")
        ok = sweep_ok(ident, records)
        all_ok &= ok
        print(("ok   " if ok else "FAIL ") + summarize(ident, records, time.perf_counter() - t0))
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
