"""Tabulate invariant dimensions in V(n omega) next to their binomial closed forms."""

from __future__ import annotations

import argparse
from math import comb

from liebranch.invariants import dim_invariants_Kprime, dim_invariants_Ktilde


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=6)
    ap.add_argument("--oracle", type=int, default=2, help="largest n also checked by full restriction")
    args = ap.parse_args()

    heads = ["n", "C(n+7,7)", "K~ E6", "K~ E7", "K~ E8", "K' E6", "K' E7"]
    widths = [3, 9, 7, 7, 7, 7, 8]
    print(" ".join(h.rjust(w) for h, w in zip(heads, widths)))
    for n in range(args.depth + 1):
        kt = [dim_invariants_Ktilde(c, n) for c in ("E6", "E7", "E8")]
        kp = [dim_invariants_Kprime(c, n, "chain") for c in ("E6", "E7")]
        if n <= args.oracle:
            assert kp == [dim_invariants_Kprime(c, n, "oracle") for c in ("E6", "E7")]
        print(f"{n:>3} {comb(n + 7, 7):>9} {kt[0]:>7} {kt[1]:>7} {kt[2]:>7} {kp[0]:>7} {kp[1]:>8}")
    print("(K' columns are SU(2) x SU(2) counts by the chain rule)")


if __name__ == "__main__":
    main()
