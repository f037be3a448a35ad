"""Named verification suites with machine-readable reports."""

from __future__ import annotations

import random
from typing import Dict, List

from .arith import Coord
from .ideal import ideal_generators, normal_form
from .oracles import (VOGT_IDENTITIES, diagonal_rep, eval_poly, expand_laurent_at_one,
                      laurent_image, random_poly, series_image, verify_f3_kernel,
                      verify_vogt)

SUITES = ("vogt", "f3", "ideal", "oracle-agreement")
DEFAULT_SEED = 20161017
AGREEMENT_POINT = (2, 3, 5, 7)


def _check(name: str, passed: bool, **extra) -> Dict:
    return {"name": name, "passed": bool(passed), **extra}


def _vogt(seed, trials, **_) -> List[Dict]:
    return [_check(e, verify_vogt(e, seed, trials), trials=trials) for e in VOGT_IDENTITIES]


def _f3(seed, trials, **_) -> List[Dict]:
    return [_check("f3-kernel", verify_f3_kernel(seed, trials), trials=trials)]


def _ideal(n: int = 4, **_) -> List[Dict]:
    checks = []
    for r in range(1, n + 1):
        gens = ideal_generators(r)
        laurent_ok = all(laurent_image(g.poly, r).is_zero() for g in gens)
        nf_ok = all(normal_form(g.poly).is_zero() for g in gens)
        checks.append(_check(f"generators-laurent-zero n={r}", laurent_ok, count=len(gens)))
        checks.append(_check(f"generators-normal-form-zero n={r}", nf_ok, count=len(gens)))
    checks.append(_check("rank-one-generators-trivial",
                         all(g.trivial for g in ideal_generators(1))))
    return checks


def _agreement(seed, trials, order: int = 6, n: int = 4, **_) -> List[Dict]:
    n = min(n, len(AGREEMENT_POINT))
    rng = random.Random(f"{seed}:agreement")
    point = AGREEMENT_POINT[:n]
    rep = diagonal_rep(point)
    pointwise = series_ok = True
    for _ in range(trials):
        p = random_poly(rng, n, coord=rng.choice((Coord.T, Coord.TPRIME)))
        f = laurent_image(p, n)
        pointwise &= f.evaluate(point) == eval_poly(p, rep)
        series_ok &= series_image(p, order, n) == expand_laurent_at_one(f, order)
    return [_check("laurent-vs-matrix-traces", pointwise, trials=trials, point=list(point)),
            _check("series-vs-laurent-expansion", series_ok, trials=trials, order=order)]


_RUNNERS = {"vogt": _vogt, "f3": _f3, "ideal": _ideal, "oracle-agreement": _agreement}


def run_suite(suite: str, seed=DEFAULT_SEED, trials: int = 100, **options) -> Dict:
    """Run one suite; the report's ``passed`` is the conjunction of its checks."""
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if trials < 1:
        raise ValueError("trials must be positive")
    checks = _RUNNERS[suite](seed=seed, trials=trials, **options)
    return {"schema": 1, "suite": suite, "seed": seed, "trials": trials,
            "checks": checks, "passed": all(c["passed"] for c in checks)}
