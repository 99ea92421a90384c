"""Generate the reference zero table used by the test suite.

Zeros come from mpmath (``fp.zetazero``), which is independent of the
evaluators in this package. Output lines are ``n t`` with 17 significant
digits; values are accurate to about 1e-12.

    python scripts/make_reference_table.py 20000 tests/data/zeros_20000.txt

``--resume OLD`` copies the lines of an existing table and continues after
its last index.
"""
import argparse
import sys

import mpmath


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("count", type=int, help="number of zeros")
    parser.add_argument("out", help="output path")
    parser.add_argument("--resume", metavar="OLD", help="existing table to extend")
    args = parser.parse_args(argv)

    start = 1
    with open(args.out, "w") as fh:
        fh.write("# n t_n  (mpmath fp.zetazero; ~1e-12 absolute)\n")
        if args.resume:
            with open(args.resume) as old:
                for line in old:
                    if line.startswith("#") or not line.strip():
                        continue
                    fh.write(line)
                    start = int(line.split()[0]) + 1
        for n in range(start, args.count + 1):
            t = mpmath.fp.zetazero(n).imag
            fh.write("%d %.17g\n" % (n, t))
            if n % 1000 == 0:
                print(n, t, file=sys.stderr, flush=True)


if __name__ == "__main__":
    main()
