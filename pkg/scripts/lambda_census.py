#!/usr/bin/env python3
"""Bounded-height rational census of the pulled-back elliptic-modulus values.

Scans all rationals of height <= H in (0,1), encloses the function value
rigorously and certifies at every point whether a rational value of height
<= H is possible.

    python scripts/lambda_census.py [--config scripts/configs/lambda_census.cfg] [out.csv]
"""

import sys
from pathlib import Path

from arithdyn.cli import main

DEFAULT_CFG = Path(__file__).parent / "configs" / "lambda_census.cfg"


def run(argv):
    cfg = DEFAULT_CFG
    rest = []
    it = iter(argv)
    for a in it:
        if a == "--config":
            cfg = Path(next(it))
        else:
            rest.append(a)
    args = ["census", "--config", str(cfg)]
    if rest:
        args += ["--output", rest[0]]
    return main(args)


if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
