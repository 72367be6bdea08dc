"""Brute-force reference computations backing the frozen expected values.

Everything here enumerates: spans over small prime fields, all up-sets of
small posets, meets over every point of an open.  Slow but unarguable.
"""
from itertools import product

import numpy as np


def span_set(p: int, rows, ambient: int) -> frozenset:
    """Every vector (as a tuple) in the GF(p)-span of the given rows."""
    rows = [tuple(int(x) % p for x in r) for r in rows]
    vectors = {tuple([0] * ambient)}
    for coeffs in product(range(p), repeat=len(rows)):
        v = [0] * ambient
        for c, row in zip(coeffs, rows):
            for i, x in enumerate(row):
                v[i] = (v[i] + c * x) % p
        vectors.add(tuple(v))
    return frozenset(vectors)


def span_rank(p: int, rows, ambient: int) -> int:
    size = len(span_set(p, rows, ambient))
    rank = 0
    while p**rank < size:
        rank += 1
    assert p**rank == size
    return rank


def kernel_set(p: int, matrix_rows, cols: int) -> frozenset:
    """All GF(p) vectors annihilated by the matrix, by enumeration."""
    out = set()
    for v in product(range(p), repeat=cols):
        image = [sum(row[j] * v[j] for j in range(cols)) % p for row in matrix_rows]
        if all(x == 0 for x in image):
            out.add(v)
    return frozenset(out)


def all_up_sets(leq: np.ndarray) -> list[frozenset]:
    """Every upward closed subset of a poset given by its order matrix."""
    n = leq.shape[0]
    out = []
    for bits in product((False, True), repeat=n):
        s = {i for i in range(n) if bits[i]}
        if all(int(j) in s for i in s for j in np.nonzero(leq[i])[0]):
            out.append(frozenset(s))
    return out


def meet_over_all_points(k, n, members) -> object:
    """Meet of per-point cycle subspaces over every point of an open."""
    from persdiff import meet

    points = sorted(members)
    if not points:
        return k.colimit_cycles(n)
    sub = k.cycles_at(n, points[0])
    for x in points[1:]:
        sub = meet(sub, k.cycles_at(n, x))
    return sub
