#!/usr/bin/env python3
"""Sweep the existence frontier and print verification residuals.

For each field and each r in the list, builds the optimal code at every
feasible n (3 <= n <= rho_F(r) + 2), verifies it, and confirms that
n = rho_F(r) + 3 is rejected.
"""

import argparse

from eitff.errors import InfeasibleParametersError
from eitff.frames import build_eitff, verify_eitff
from eitff.linalg import FieldTag
from eitff.radon_hurwitz import rho_number


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--rs", default="1,2,3,4,6,8,12,16", help="comma-separated subspace dimensions"
    )
    parser.add_argument("--fields", default="RC", help="subset of 'RC'")
    args = parser.parse_args()

    rs = [int(tok) for tok in args.rs.split(",")]
    fields = [FieldTag.REAL if ch == "R" else FieldTag.COMPLEX for ch in args.fields]

    print(f"{'field':5} {'r':>4} {'n':>4} {'rho':>4} "
          f"{'tightness':>12} {'equiiso':>12} {'welch_gap':>12}")
    for field in fields:
        for r in rs:
            rho = rho_number(field, r)
            for n in range(3, rho + 3):
                report = verify_eitff(build_eitff(field, r, n))
                print(
                    f"{field.value:5} {r:>4} {n:>4} {rho:>4} "
                    f"{report.tightness_residual:>12.3e} "
                    f"{report.equiisoclinic_residual:>12.3e} "
                    f"{report.welch_gap:>12.3e}"
                )
            try:
                build_eitff(field, r, rho + 3)
                raise SystemExit(f"unexpected success at n={rho + 3}")
            except InfeasibleParametersError:
                print(f"{field.value:5} {r:>4} {rho + 3:>4} {rho:>4} "
                      f"{'infeasible':>12}")


if __name__ == "__main__":
    main()
