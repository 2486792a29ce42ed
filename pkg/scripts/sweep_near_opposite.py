"""Witness accuracy as Im b approaches -Im a.

Rotates ``b = -a`` by an angle ``gap`` and reports, for each gap, the
relative residual ``|a p - p b| / (|a| |p|)`` of

* ``Im a + Im b`` (the generic witness),
* ``(Im a) q + q (Im b)`` with the best axis ``q`` (the fallback), and
* whatever :func:`qsylv.quat.similarity_witness` returns.

    python scripts/sweep_near_opposite.py [--samples N] [--seed S]
"""

import argparse
import math

import numpy as np

from qsylv.quat import I, J, K, Quaternion, im, mul, norm, similarity_witness


def rel_res(a, b, p):
    return norm(mul(a, p) - mul(p, b)) / (norm(a) * norm(p))


def rotated_opposite(rng, gap):
    v = rng.standard_normal(3)
    v /= np.linalg.norm(v)
    axis = np.cross(v, rng.standard_normal(3))
    axis /= np.linalg.norm(axis)
    w = -(v * math.cos(gap) + np.cross(axis, v) * math.sin(gap))
    re = float(rng.standard_normal())
    return Quaternion(re, *v), Quaternion(re, *w)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    print(f"{'gap':>8}  {'Im a + Im b':>12}  {'axis form':>12}  {'witness':>12}")
    for gap in [0.0] + [10.0**e for e in range(-14, 0)]:
        worst = [0.0, 0.0, 0.0]
        for _ in range(args.samples):
            a, b = rotated_opposite(rng, gap)
            s = im(a) + im(b)
            if norm(s) > 0:
                worst[0] = max(worst[0], rel_res(a, b, s))
            else:
                worst[0] = math.nan
            q = max((I, J, K), key=lambda e: norm(mul(im(a), e) + mul(e, im(b))))
            worst[1] = max(worst[1], rel_res(a, b, mul(im(a), q) + mul(q, im(b))))
            worst[2] = max(worst[2], rel_res(a, b, similarity_witness(a, b)))
        print(f"{gap:8.0e}  {worst[0]:12.3e}  {worst[1]:12.3e}  {worst[2]:12.3e}")


if __name__ == "__main__":
    main()
