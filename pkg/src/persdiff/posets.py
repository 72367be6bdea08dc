"""Finite posets, their up-set topology, and blanket (cover) enumeration.

Opens are upward closed subsets; pairs of nested opens (birth containing
death) index where homology classes appear and where they get filled in.
A blanket of an open is the next open "one step earlier": a cover in the
inclusion order.  Two cover notions are implemented, selected by
:class:`BlanketMode`:

* ``FULL`` works in the whole up-set lattice; covers add exactly one
  element whose strict up-set already lies inside the open.
* ``PRINCIPAL`` restricts attention to principal up-sets and takes the
  inclusion-minimal principal up-sets strictly containing the open.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import product as _iter_product
from typing import Iterable, Sequence

import numpy as np


class InvalidPoset(ValueError):
    pass


class UnknownElement(KeyError):
    pass


class InvalidPair(ValueError):
    """Birth open does not contain the death open."""


class BlanketMode(Enum):
    FULL = "full"
    PRINCIPAL = "principal"

    @classmethod
    def parse(cls, token: str) -> "BlanketMode":
        t = str(token).strip().lower()
        if t in ("full", "full-lattice"):
            return cls.FULL
        if t in ("principal", "principal-only"):
            return cls.PRINCIPAL
        raise ValueError(f"unknown blanket mode {token!r}")


@dataclass(frozen=True)
class UpSet:
    """An upward closed subset, stored as a frozenset of element indices."""

    members: frozenset

    def __len__(self):
        return len(self.members)

    def __contains__(self, i):
        return i in self.members

    @property
    def is_empty(self) -> bool:
        return not self.members

    def sorted_members(self) -> tuple:
        return tuple(sorted(self.members))


EMPTY_OPEN = UpSet(frozenset())


@dataclass(frozen=True)
class PairOpen:
    """Object of the restriction category of pairs: birth contains death."""

    birth: UpSet
    death: UpSet


@dataclass(frozen=True)
class GradedPair:
    """A pair of opens together with a blanket degree."""

    pair: PairOpen
    degree: int

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError("degree must be non-negative")

    def shift(self, m: int) -> "GradedPair":
        return GradedPair(self.pair, self.degree + m)


class FinitePoset:
    """Labelled finite poset with optional integer grade vectors.

    ``leq`` is a reflexive, antisymmetric, transitive boolean matrix over
    element indices.  When grade vectors are present, ``leq`` must agree
    with the coordinatewise product order.  Immutable after construction.
    """

    def __init__(self, labels: Sequence[str], leq, grades=None):
        labels = tuple(str(l) for l in labels)
        leq = np.array(leq, dtype=bool)
        n = len(labels)
        if leq.shape != (n, n):
            raise InvalidPoset(f"leq must be {n}x{n}")
        if len(set(labels)) != n:
            raise InvalidPoset("duplicate element labels")
        if not leq.diagonal().all():
            raise InvalidPoset("leq is not reflexive")
        sym = leq & leq.T
        if np.any(sym & ~np.eye(n, dtype=bool)):
            raise InvalidPoset("leq is not antisymmetric")
        closure = (leq.astype(np.int8) @ leq.astype(np.int8)) > 0
        if np.any(closure & ~leq):
            raise InvalidPoset("leq is not transitive")
        if grades is not None:
            grades = tuple(tuple(int(g) for g in vec) for vec in grades)
            if len(grades) != n:
                raise InvalidPoset("one grade vector per element required")
            width = {len(v) for v in grades}
            if len(width) > 1:
                raise InvalidPoset("grade vectors have differing lengths")
            for i in range(n):
                for j in range(n):
                    prod = all(a <= b for a, b in zip(grades[i], grades[j]))
                    if bool(leq[i, j]) != prod:
                        raise InvalidPoset(
                            f"leq disagrees with the product order at ({labels[i]}, {labels[j]})"
                        )
        self.labels = labels
        self.grades = grades
        self.n = n
        leq.setflags(write=False)
        self.leq = leq
        self._index = {lab: i for i, lab in enumerate(labels)}
        self._grade_index = {grades[i]: i for i in range(n)} if grades else {}
        self._principal_cache: list[UpSet | None] = [None] * n
        self._blanket_cache: dict = {}
        self._pair_blanket_cache: dict = {}

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_covers(cls, labels: Sequence[str], covers: Iterable[tuple], grades=None) -> "FinitePoset":
        """Build from covering relations; the order is the transitive closure."""
        labels = tuple(str(l) for l in labels)
        n = len(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        rel = np.eye(n, dtype=bool)
        for lo, hi in covers:
            try:
                rel[index[str(lo)], index[str(hi)]] = True
            except KeyError as exc:
                raise UnknownElement(f"unknown element {exc.args[0]!r} in covers") from None
        closed = rel.copy()
        while True:
            nxt = (closed.astype(np.int8) @ closed.astype(np.int8)) > 0
            nxt |= closed
            if np.array_equal(nxt, closed):
                break
            closed = nxt
        return cls(labels, closed, grades=grades)

    @classmethod
    def grid(cls, shape: Sequence[int]) -> "FinitePoset":
        """Product order on a box of integer grade vectors, lex-ordered."""
        shape = tuple(int(s) for s in shape)
        if not shape or any(s < 1 for s in shape):
            raise InvalidPoset(f"bad grid shape {shape!r}")
        vectors = list(_iter_product(*(range(s) for s in shape)))
        labels = [",".join(str(c) for c in v) for v in vectors]
        n = len(vectors)
        leq = np.zeros((n, n), dtype=bool)
        for i, vi in enumerate(vectors):
            for j, vj in enumerate(vectors):
                leq[i, j] = all(a <= b for a, b in zip(vi, vj))
        return cls(labels, leq, grades=vectors)

    @classmethod
    def chain(cls, length: int) -> "FinitePoset":
        return cls.grid((length,))

    # -- lookups ---------------------------------------------------------

    def resolve(self, x) -> int:
        """Element index from an index, a label, or a grade vector."""
        if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
            i = int(x)
            if 0 <= i < self.n:
                return i
            raise UnknownElement(f"element index {i} out of range")
        if isinstance(x, str):
            if x in self._index:
                return self._index[x]
            raise UnknownElement(f"unknown element label {x!r}")
        if isinstance(x, (tuple, list)):
            key = tuple(int(c) for c in x)
            if key in self._grade_index:
                return self._grade_index[key]
            raise UnknownElement(f"no element with grade {key!r}")
        raise UnknownElement(f"cannot interpret element {x!r}")

    def element_key(self, i: int):
        """Deterministic sort key: the grade vector when present."""
        return self.grades[i] if self.grades else (i,)

    def is_chain(self) -> bool:
        return bool(np.all(self.leq | self.leq.T))

    def maximal_elements(self) -> tuple[int, ...]:
        strict = self.leq & ~np.eye(self.n, dtype=bool)
        return tuple(i for i in range(self.n) if not strict[i].any())

    # -- opens -----------------------------------------------------------

    def up_set(self, members: Iterable) -> UpSet:
        """Validated up-set from an iterable of elements."""
        idx = frozenset(self.resolve(x) for x in members)
        u = UpSet(idx)
        if not is_up_closed(self, idx):
            raise InvalidPoset(f"{sorted(idx)} is not upward closed")
        return u

    def closure(self, members: Iterable) -> UpSet:
        """Smallest up-set containing the given elements."""
        out: set = set()
        for x in members:
            out.update(np.nonzero(self.leq[self.resolve(x)])[0].tolist())
        return UpSet(frozenset(out))

    def top(self) -> UpSet:
        return UpSet(frozenset(range(self.n)))


def principal_up_set(p: FinitePoset, x) -> UpSet:
    """Smallest up-set containing ``x``."""
    i = p.resolve(x)
    cached = p._principal_cache[i]
    if cached is None:
        cached = UpSet(frozenset(np.nonzero(p.leq[i])[0].tolist()))
        p._principal_cache[i] = cached
    return cached


def is_up_closed(p: FinitePoset, members: Iterable) -> bool:
    s = set(members)
    for i in s:
        if not 0 <= i < p.n:
            raise UnknownElement(f"element index {i} out of range")
        for j in np.nonzero(p.leq[i])[0]:
            if int(j) not in s:
                return False
    return True


def min_elements(p: FinitePoset, u: UpSet) -> frozenset:
    """Elements of the open with nothing strictly below them in the open."""
    out = set()
    for i in u.members:
        if not any(j != i and p.leq[j, i] for j in u.members):
            out.add(i)
    return frozenset(out)


def _sort_opens(p: FinitePoset, opens: Iterable[UpSet]) -> list[UpSet]:
    return sorted(opens, key=lambda u: (len(u.members), u.sorted_members()))


def blankets_of_open(p: FinitePoset, u: UpSet, mode: BlanketMode = BlanketMode.FULL) -> list[UpSet]:
    """Blankets (covers) of an open; never contains the open itself."""
    key = (u.members, mode)
    cached = p._blanket_cache.get(key)
    if cached is not None:
        return list(cached)
    if mode is BlanketMode.FULL:
        out = []
        for m in range(p.n):
            if m in u.members:
                continue
            strict_up = {int(j) for j in np.nonzero(p.leq[m])[0]} - {m}
            if strict_up <= u.members:
                out.append(UpSet(u.members | {m}))
    else:
        cands = [
            principal_up_set(p, i)
            for i in range(p.n)
            if u.members < principal_up_set(p, i).members
        ]
        out = [
            c
            for c in cands
            if not any(o.members < c.members for o in cands)
        ]
    out = _sort_opens(p, out)
    p._blanket_cache[key] = tuple(out)
    return out


def make_pair(p: FinitePoset, birth: UpSet, death: UpSet) -> PairOpen:
    """Validated pair of nested opens."""
    if not birth.members >= death.members:
        raise InvalidPair(
            f"birth open {describe_open(p, birth)} does not contain death open {describe_open(p, death)}"
        )
    return PairOpen(birth, death)


def describe_open(p: FinitePoset, u: UpSet) -> str:
    if u.is_empty:
        return "{}"
    mins = sorted(min_elements(p, u), key=p.element_key)
    if p.grades:
        inner = ",".join("(" + ",".join(str(c) for c in p.grades[i]) + ")" for i in mins)
    else:
        inner = ",".join(p.labels[i] for i in mins)
    return "{" + inner + "}"


def _pair_sort_key(p: FinitePoset, x: PairOpen):
    return (x.birth.sorted_members(), len(x.death.members), x.death.sorted_members())


def pair_blankets(p: FinitePoset, x: PairOpen, mode: BlanketMode = BlanketMode.FULL) -> list[PairOpen]:
    """Blankets of a pair: cover one coordinate, keep the other.

    Death-side covers must stay inside the birth open.  In PRINCIPAL mode
    a death-side cover equal to the birth open is dropped, so the blanket
    set of a principal pair consists of strict pairs only.
    """
    key = (x, mode)
    cached = p._pair_blanket_cache.get(key)
    if cached is not None:
        return list(cached)
    out = [PairOpen(w, x.death) for w in blankets_of_open(p, x.birth, mode)]
    for z in blankets_of_open(p, x.death, mode):
        if not z.members <= x.birth.members:
            continue
        if mode is BlanketMode.PRINCIPAL and z == x.birth:
            continue
        out.append(PairOpen(x.birth, z))
    out = sorted(set(out), key=lambda y: _pair_sort_key(p, y))
    p._pair_blanket_cache[key] = tuple(out)
    return out


def degree_blankets(p: FinitePoset, x: PairOpen, n: int, mode: BlanketMode = BlanketMode.FULL) -> frozenset:
    """Pairs reachable by exactly ``n`` blanket steps (degree-n blankets)."""
    if n < 0:
        raise ValueError("degree must be non-negative")
    frontier: frozenset = frozenset([x])
    for _ in range(n):
        if not frontier:
            break
        nxt: set = set()
        for w in frontier:
            nxt.update(pair_blankets(p, w, mode))
        frontier = frozenset(nxt)
    return frontier


def enumerate_diagram_pairs(p: FinitePoset) -> list[PairOpen]:
    """Principal pairs reported in diagrams: strict pairs plus essentials.

    Ordering is deterministic: birth by grade (lexicographic), then death,
    with the empty death open last for each birth.
    """
    order = sorted(range(p.n), key=p.element_key)
    out = []
    for i in order:
        u = principal_up_set(p, i)
        for j in order:
            if i != j and p.leq[i, j]:
                out.append(PairOpen(u, principal_up_set(p, j)))
        out.append(PairOpen(u, EMPTY_OPEN))
    return out
