"""Compare the stored g* and f* expansions with their detector forms, n by n."""
from __future__ import annotations

import argparse

from macdetect.expansion import verify_fstar, verify_gstar


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=200)
    parser.add_argument("--exact-scale", action="store_true", help="demand literal equality, no overall factor")
    args = parser.parse_args()
    for name, fn in (("g*", verify_gstar), ("f*", verify_fstar)):
        rep = fn(args.max_n, require_unit_scale=args.exact_scale)
        print(f"{name}: scale {rep.scale}, {len(rep.mismatches)} mismatches on [2, {args.max_n}], "
              f"zero set {rep.zero_set[:10]}")
        if rep.first_mismatch:
            fm = rep.first_mismatch
            print(f"    first mismatch n={fm['n']}: expected {fm['expected']}, got {fm['actual']}")
        print(f"    n = 1 (not compared): {rep.value_at_one} vs form {rep.target_at_one}")


if __name__ == "__main__":
    main()
