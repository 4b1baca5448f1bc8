"""Compare the Weyl orbit with the linkage graph at several word lengths."""

import argparse
import json
import time

from licci.weyl import verify_against_formula


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("lengths", type=int, nargs="*", default=[6, 10, 14])
    args = ap.parse_args(argv)
    for n in args.lengths:
        start = time.perf_counter()
        rep = verify_against_formula(n)
        out = rep.to_json()
        out["seconds"] = round(time.perf_counter() - start, 2)
        print(json.dumps(out, sort_keys=True))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
