"""Exhaustive search for singular points of the projected quartic over F_p."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np

from .errors import BadParameter, BadPrime, CollidingExpectedPoints
from .polynomial import partial, specialize_poly
from .scalars import is_prime
from .surfaces import ProjectivePoint, eight_points, x_quartic

__all__ = ["finite_field_singular_scan", "expected_reductions", "thread_count"]


def thread_count() -> int:
    raw = os.environ.get("CUSPLAB_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _check_inputs(k, p):
    if not isinstance(p, int) or not is_prime(p) or p in (2, 3):
        raise BadPrime(f"p = {p} must be a prime other than 2 and 3")
    k = Fraction(k)
    if k.denominator % p == 0:
        raise BadParameter(f"{p} divides the denominator of k = {k}")
    km = k.numerator * pow(k.denominator, -1, p) % p
    if km in (0, 1, p - 1):
        raise BadParameter(f"k = {k} reduces to {km} mod {p}, one of 0, 1, -1")
    return k


def expected_reductions(k, p) -> list[ProjectivePoint]:
    _check_inputs(k, p)
    pts = sorted({pt.reduce(p) for pt in eight_points()}, key=ProjectivePoint.sort_key)
    if len(pts) != 8:
        raise CollidingExpectedPoints(f"the eight points collide mod {p}")
    return pts


def _term_table(g, p):
    """(exponents, coefficient) arrays of a polynomial over F_p."""
    exps = np.array(list(g.terms), dtype=np.int64).reshape(-1, 4)
    coef = np.array([int(c) % p for c in g.terms.values()], dtype=np.int64)
    return exps, coef


def _evaluate(table, cols, p):
    exps, coef = table
    acc = np.zeros_like(cols[0])
    for e, c in zip(exps, coef):
        t = np.full_like(cols[0], c)
        for i, n in enumerate(e):
            for _ in range(n):
                t = t * cols[i] % p
        acc = (acc + t) % p
    return acc


def _scan_block(tables, chart, lead_values, p):
    """Chart ``chart``: coordinate ``chart`` is 1, earlier ones 0, later ones free."""
    free = 3 - chart
    if free == 0:
        grids = []
    else:
        ranges = [np.asarray(lead_values, dtype=np.int64)] + [np.arange(p, dtype=np.int64)] * (free - 1)
        grids = [g.ravel() for g in np.meshgrid(*ranges, indexing="ij")]
    size = grids[0].size if grids else 1
    cols = [np.zeros(size, dtype=np.int64) for _ in range(chart)]
    cols.append(np.ones(size, dtype=np.int64))
    cols.extend(grids)
    # later partials only see the survivors of earlier ones
    for t in tables:
        keep = _evaluate(t, cols, p) == 0
        cols = [c[keep] for c in cols]
        if not cols[0].size:
            return []
    return [tuple(int(v) for v in row) for row in zip(*cols)]


def finite_field_singular_scan(k, p: int, threads: int | None = None) -> list[ProjectivePoint]:
    """All points of P^3(F_p) where every partial of the quartic vanishes.

    Since p does not divide 4, Euler's relation puts such points on the surface.
    """
    k = _check_inputs(k, p)
    expected_reductions(k, p)
    f = specialize_poly(x_quartic(), k, p)
    tables = [_term_table(partial(f, n), p) for n in f.registry.names]
    threads = threads or thread_count()
    jobs = []
    for chart in range(4):
        if chart == 3:
            jobs.append((chart, [0]))
            continue
        shards = np.array_split(np.arange(p), threads)
        jobs.extend((chart, s.tolist()) for s in shards if len(s))
    if threads == 1:
        results = [_scan_block(tables, c, lv, p) for c, lv in jobs]
    else:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(lambda j: _scan_block(tables, j[0], j[1], p), jobs))
    pts = {ProjectivePoint(c, p) for block in results for c in block}
    return sorted(pts, key=ProjectivePoint.sort_key)
