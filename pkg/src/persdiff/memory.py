"""Cycle and boundary presheaves on opens, and blanket-union subspaces.

Cycles over an open are the meet of the per-point cycle subspaces; by
monotonicity it suffices to meet over the minimal elements.  The empty
open produces the top subobject (the colimit cycles), which makes a pair
with empty death open the "never dies" pair.  The memory of a pair is the
meet of birth-side cycles with death-side boundaries; unions over iterated
blankets of a pair feed the finite-difference calculus.
"""
from __future__ import annotations

from dataclasses import dataclass

from .complexes import FilteredComplex
from .linalg import Matrix, Subspace, complement_basis, join, meet, quotient_dim
from .posets import (
    BlanketMode,
    PairOpen,
    UpSet,
    degree_blankets,
    make_pair,
    min_elements,
)


def cycles_on_open(k: FilteredComplex, n: int, u: UpSet) -> Subspace:
    """Cycles that have appeared by every point of the open."""
    key = ("zc", n, u.members)
    cached = k.cache.get(key)
    if cached is not None:
        return cached
    if u.is_empty:
        sub = k.colimit_cycles(n)
    else:
        mins = sorted(min_elements(k.poset, u))
        sub = k.cycles_at(n, mins[0])
        for x in mins[1:]:
            sub = meet(sub, k.cycles_at(n, x))
    k.cache[key] = sub
    return sub


def boundaries_on_open(k: FilteredComplex, n: int, v: UpSet) -> Subspace:
    """Boundaries that have appeared by every point of the open."""
    key = ("bc", n, v.members)
    cached = k.cache.get(key)
    if cached is not None:
        return cached
    if v.is_empty:
        sub = k.colimit_cycles(n)
    else:
        mins = sorted(min_elements(k.poset, v))
        sub = k.boundaries_at(n, mins[0])
        for x in mins[1:]:
            sub = meet(sub, k.boundaries_at(n, x))
    k.cache[key] = sub
    return sub


def homological_memory(k: FilteredComplex, n: int, pair: PairOpen) -> Subspace:
    """Cycles appearing by the birth open that bound by the death open."""
    key = ("mem", n, pair)
    cached = k.cache.get(key)
    if cached is not None:
        return cached
    make_pair(k.poset, pair.birth, pair.death)
    if pair.death.is_empty:
        sub = cycles_on_open(k, n, pair.birth)
    else:
        sub = meet(cycles_on_open(k, n, pair.birth), boundaries_on_open(k, n, pair.death))
    k.cache[key] = sub
    return sub


def blanket_union(
    k: FilteredComplex,
    n: int,
    pair: PairOpen,
    d: int,
    mode: BlanketMode = BlanketMode.FULL,
) -> Subspace:
    """Join of the memories of all degree-d blankets of the pair.

    d = 0 gives the pair's own memory; an empty blanket set gives zero.
    """
    if d == 0:
        return homological_memory(k, n, pair)
    key = ("bu", n, pair, d, mode)
    cached = k.cache.get(key)
    if cached is not None:
        return cached
    sub = Subspace.zero(k.field, k.ambient_dim(n))
    for w in sorted(
        degree_blankets(k.poset, pair, d, mode),
        key=lambda y: (y.birth.sorted_members(), y.death.sorted_members()),
    ):
        sub = join(sub, homological_memory(k, n, w))
    k.cache[key] = sub
    return sub


def lifespan_rank(
    k: FilteredComplex,
    n: int,
    pair: PairOpen,
    mode: BlanketMode = BlanketMode.FULL,
) -> int:
    """Rank of the memory quotient by the union of the degree-1 blankets.

    Counts the classes born exactly at the birth boundary and filled in
    exactly at the death boundary.
    """
    return quotient_dim(
        homological_memory(k, n, pair),
        blanket_union(k, n, pair, 1, mode),
    )


def lifespan_representatives(
    k: FilteredComplex,
    n: int,
    pair: PairOpen,
    mode: BlanketMode = BlanketMode.FULL,
) -> Matrix:
    """A (non-canonical) basis of a complement of the blanket union."""
    return complement_basis(
        homological_memory(k, n, pair),
        blanket_union(k, n, pair, 1, mode),
    )


@dataclass(frozen=True)
class MemoryQuery:
    """One memory/lifespan query against a fixed complex."""

    complex: FilteredComplex
    degree: int
    pair: PairOpen
    mode: BlanketMode = BlanketMode.FULL

    def memory(self) -> Subspace:
        return homological_memory(self.complex, self.degree, self.pair)

    def rank(self) -> int:
        return lifespan_rank(self.complex, self.degree, self.pair, self.mode)
