"""Search the codimension 3 graph for Koszul-bearing vertices that escape H_t.

Prints counts and the smallest counterexamples, and traces the p = 0 link
followed by the smallest minimal link for the first one.
"""

import argparse

from licci.enumgraph import enumerate_levels
from licci.errors import LicciError
from licci.linkage import smallest_minimal_link
from licci.torclass import dominated_by_huneke, huneke_family, koszul_pairs, p0_link


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=20)
    ap.add_argument("--show", type=int, default=5)
    args = ap.parse_args(argv)
    g = enumerate_levels(3, args.max_k, with_edges=False)
    kos = sorted(v for v in g.vertices if v.k >= 2 and koszul_pairs(v))
    undominated = [v for v in kos if not dominated_by_huneke(v)]
    bounds = [v for v in kos if not (v.b <= 2 * v.t + 1 and v.t <= 2 * v.b - 5)]
    print(f"k <= {args.max_k}: {len(kos)} Koszul vertices, {len(undominated)} not below H_t, "
          f"{len(bounds)} outside b <= 2t+1, t <= 2b-5")
    for v in undominated[: args.show]:
        print(f"  {v.short()}  k={v.k} b={v.b} t={v.t}  H_t={huneke_family(v.t).short()}")
    if undominated:
        v = undominated[0]
        try:
            s0 = p0_link(v)
            s1 = smallest_minimal_link(s0).target
            print(f"trace: {v.short()} -p0-> {s0.short()} -smallest-> {s1.short()}; "
                  f"lam1+lam2 = {s1.lam[0] + s1.lam[1]}, k+1 = {s1.k + 1}")
        except LicciError as exc:
            print("trace stopped:", exc)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
