"""Decide which printed sign of the Corollary formula is correct.

Both forms are compared with the quadrature value of M(h, -rho) on the
default Corollary grid; the form matching at every point is the one the
library uses as ``VALIDATED_COROLLARY_FORM``.

    python scripts/adjudicate_corollary_sign.py [--out corollary.csv]
"""
import argparse
import sys

from riesz_mellin.mellin import VALIDATED_COROLLARY_FORM
from riesz_mellin.verify import SweepSpec, corollary_verdict, emit_report, run_sweep


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--out", help="optional CSV report")
    args = ap.parse_args()

    records = run_sweep(SweepSpec.build("corollary"))
    verdict, counts = corollary_verdict(records)
    for form, (ok, total) in counts.items():
        print(f"form {form:<6} matches quadrature at {ok}/{total} points")
    print(f"verdict: {verdict or 'mixed'} (library uses {VALIDATED_COROLLARY_FORM!r})")
    if args.out:
        emit_report(records, args.out)
    return 0 if verdict == VALIDATED_COROLLARY_FORM else 1


if __name__ == "__main__":
    sys.exit(main())
