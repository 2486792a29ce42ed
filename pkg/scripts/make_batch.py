"""Write random problems, one JSON object per line, for ``qsylv batch``.

    python scripts/make_batch.py --n 10000 > problems.jsonl
    qsylv batch --oracle < problems.jsonl | python -c \
        "import sys, json; print(sum(not json.loads(l).get('oracle_agrees') for l in sys.stdin))"
"""

import argparse
import json
import sys

import numpy as np

from qsylv import sampling
from qsylv.text import quaternion_to_json


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--regime", choices=sampling.REGIMES, help="only this regime (default: cycle through all)")
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    for k in range(args.n):
        regime = args.regime or sampling.REGIMES[k % len(sampling.REGIMES)]
        p = sampling.problem(rng, regime)
        rec = {"a": quaternion_to_json(p.a), "b": quaternion_to_json(p.b), "c": quaternion_to_json(p.c)}
        sys.stdout.write(json.dumps(rec) + "\n")


if __name__ == "__main__":
    main()
