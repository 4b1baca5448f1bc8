"""Check the two large Dynkin formats against complement duality.

For a format with b generators and type t, the map
``lam -> (B - lam_b, ..., B - lam_1)``, ``mu -> (M - mu_t, ..., M - mu_1)``
(parts padded with zeros) sends the classes of small level to the classes of
large level.  ``B, M`` are read off the largest class.  If the enumeration is
complete, the duals of the low half must be exactly the high half.
"""

import argparse

from licci.admissibility import is_decoration_descent
from licci.core import Decoration
from licci.enumgraph import enumerate_levels
from licci.errors import LicciError

# (d, t, B, M): the largest classes are (6^7);(10,10) and (10^5);(6^4)
CASES = [(4, 2, 6, 10), (2, 4, 10, 6)]


def dual(dec, b, t, B, M):
    if dec.b > b or dec.t > t:
        return None
    lam = list(dec.lam) + [0] * (b - dec.b)
    mu = list(dec.mu) + [0] * (t - dec.t)
    try:
        return Decoration(3, tuple(B - x for x in lam), tuple(M - x for x in mu))
    except LicciError:
        return None


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=24)
    args = ap.parse_args(argv)
    g = enumerate_levels(3, args.max_k, with_edges=False)
    for d, t, B, M in CASES:
        b = 3 + d
        fmt = set(g.with_format(d, t))
        images = set()
        for v in g.vertices:
            x = dual(v, b, t, B, M)
            if x is not None and x.b == b and x.t == t and is_decoration_descent(x):
                images.add(x)
        print(f"(d, t) = ({d}, {t}): {len(fmt)} enumerated, {len(images)} dual images, "
              f"equal sets: {images == fmt}")
        print("  dual of the unit ideal:", dual(Decoration(3, (1,), ()), b, t, B, M).short())
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
