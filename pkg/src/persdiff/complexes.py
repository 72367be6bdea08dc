"""Multifiltered chain complexes over a finite poset.

The filtration is stored once as its colimit complex: each cell carries a
set of birth grades, and the complex at a poset point is spanned by the
cells born at or below that point.  Structure maps are inclusions by
construction, so the filtration is monic for free; validation checks that
faces are never born after their cofaces and that the boundary squares to
zero.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .fields import FieldSpec
from .linalg import Matrix, Subspace, column_space, kernel, matmul
from .posets import FinitePoset


class InvalidComplex(ValueError):
    pass


@dataclass(frozen=True)
class Cell:
    """One cell: simplex kind (vertex list) or generic kind (explicit faces).

    ``births`` holds poset element indices; presence at a point means some
    birth grade lies at or below it.
    """

    id: str
    dim: int
    births: tuple[int, ...]
    vertices: tuple[str, ...] | None = None
    faces: tuple[tuple[str, object], ...] | None = None

    def __post_init__(self):
        if self.dim < 0:
            raise InvalidComplex(f"cell {self.id!r} has negative dimension")
        if not self.births:
            raise InvalidComplex(f"cell {self.id!r} has no birth grades")
        if (self.vertices is None) == (self.faces is None):
            raise InvalidComplex(
                f"cell {self.id!r} must have exactly one of vertices or faces"
            )


@dataclass(frozen=True)
class Violation:
    kind: str
    detail: str
    cells: tuple[str, ...] = ()

    def __str__(self):
        where = f" [{', '.join(self.cells)}]" if self.cells else ""
        return f"{self.kind}: {self.detail}{where}"


class FilteredComplex:
    """Immutable multifiltered complex; queries are pure and memoized."""

    def __init__(self, field: FieldSpec, poset: FinitePoset, cells: Sequence[Cell]):
        self.field = field
        self.poset = poset
        by_dim: dict[int, list[Cell]] = {}
        for cell in cells:
            for b in cell.births:
                if not 0 <= b < poset.n:
                    raise InvalidComplex(f"cell {cell.id!r} born at unknown element {b}")
            by_dim.setdefault(cell.dim, []).append(cell)
        self._by_dim = {n: tuple(cs) for n, cs in by_dim.items()}
        self.max_dim = max(self._by_dim) if self._by_dim else -1
        self._col_index = {
            n: {c.id: j for j, c in enumerate(cs)} for n, cs in self._by_dim.items()
        }
        self._simplex_index = {}
        for n, cs in self._by_dim.items():
            for j, c in enumerate(cs):
                if c.vertices is not None:
                    self._simplex_index[(n, frozenset(c.vertices))] = j
        self._violations: list[Violation] | None = None
        self._boundaries: dict[int, Matrix] = {}
        self._presence: dict[int, np.ndarray] = {}
        self._point_cycles: dict = {}
        self._point_boundaries: dict = {}
        self._colimit_cycles: dict = {}
        # Shared scratch for derived pure results (open/pair subspaces etc).
        self.cache: dict = {}

    @classmethod
    def build(cls, field: FieldSpec, poset: FinitePoset, cell_specs: Iterable[dict]) -> "FilteredComplex":
        """Construct from plain dict records (the JSON cell schema)."""
        cells = []
        for spec in cell_specs:
            try:
                cid = str(spec["id"])
                births_raw = spec["births"]
            except KeyError as exc:
                raise InvalidComplex(f"cell record missing {exc.args[0]!r}") from None
            if not isinstance(births_raw, (list, tuple)) or not births_raw:
                raise InvalidComplex(f"cell {cid!r} needs a non-empty birth list")
            births = tuple(sorted({poset.resolve(b) for b in births_raw}))
            if "vertices" in spec:
                verts = tuple(str(v) for v in spec["vertices"])
                dim = int(spec.get("dim", len(verts) - 1))
                cells.append(Cell(cid, dim, births, vertices=verts))
            else:
                if "dim" not in spec:
                    raise InvalidComplex(f"generic cell {cid!r} needs an explicit dim")
                faces = tuple((str(f), c) for f, c in spec.get("faces", ()))
                cells.append(Cell(cid, int(spec["dim"]), births, faces=faces))
        return cls(field, poset, cells)

    # -- cell bookkeeping -------------------------------------------------

    def cells_of_dim(self, n: int) -> tuple[Cell, ...]:
        return self._by_dim.get(n, ())

    def ambient_dim(self, n: int) -> int:
        return len(self._by_dim.get(n, ()))

    def all_cells(self):
        for n in sorted(self._by_dim):
            yield from self._by_dim[n]

    def _face_entries(self, cell: Cell) -> list[tuple[int, object]] | None:
        """(row index, coefficient) pairs of the boundary of one cell."""
        f = self.field
        if cell.dim == 0:
            return []
        if cell.vertices is not None:
            verts = sorted(cell.vertices)
            entries = []
            for i in range(len(verts)):
                face_key = (cell.dim - 1, frozenset(verts[:i] + verts[i + 1 :]))
                row = self._simplex_index.get(face_key)
                if row is None:
                    return None
                entries.append((row, f.coerce(1) if i % 2 == 0 else f.neg(f.coerce(1))))
            return entries
        entries = []
        for fid, coeff in cell.faces:
            row = self._col_index.get(cell.dim - 1, {}).get(fid)
            if row is None:
                return None
            entries.append((row, f.coerce(coeff)))
        return entries

    # -- validation --------------------------------------------------------

    def validate(self) -> list[Violation]:
        """Structural check; returns the (possibly empty) violation list."""
        if self._violations is not None:
            return list(self._violations)
        out: list[Violation] = []
        seen: set[str] = set()
        for cell in self.all_cells():
            if cell.id in seen:
                out.append(Violation("duplicate-id", f"cell id {cell.id!r} appears twice", (cell.id,)))
            seen.add(cell.id)
        structural_ok = not out
        for cell in self.all_cells():
            if cell.vertices is not None:
                if len(set(cell.vertices)) != cell.dim + 1:
                    out.append(
                        Violation(
                            "bad-simplex",
                            f"cell {cell.id!r} needs {cell.dim + 1} distinct vertices",
                            (cell.id,),
                        )
                    )
                    structural_ok = False
                    continue
            entries = self._face_entries(cell)
            if entries is None:
                out.append(
                    Violation("unknown-face", f"cell {cell.id!r} references a missing face", (cell.id,))
                )
                structural_ok = False
                continue
            for row, _ in entries:
                face = self._by_dim[cell.dim - 1][row]
                for b in cell.births:
                    if not any(self.poset.leq[fb, b] for fb in face.births):
                        out.append(
                            Violation(
                                "birth-order",
                                f"cell {cell.id!r} is born at {self.poset.labels[b]} "
                                f"before its face {face.id!r}",
                                (cell.id, face.id),
                            )
                        )
                        break
        if structural_ok:
            for n in sorted(self._by_dim):
                if n >= 1 and (n + 1) in self._by_dim:
                    prod = matmul(self.boundary_matrix(n), self.boundary_matrix(n + 1))
                    if np.any(prod.data != 0):
                        out.append(
                            Violation(
                                "boundary-squared",
                                f"boundary composed with boundary is non-zero in degree {n + 1}",
                            )
                        )
        self._violations = out
        return list(out)

    def require_valid(self) -> None:
        bad = self.validate()
        if bad:
            raise InvalidComplex("; ".join(str(v) for v in bad[:3]))

    # -- boundary and presence ----------------------------------------------

    def boundary_matrix(self, n: int) -> Matrix:
        """Boundary in degree n: rows are (n-1)-cells, columns are n-cells."""
        cached = self._boundaries.get(n)
        if cached is not None:
            return cached
        cols = self.cells_of_dim(n)
        rows = self.ambient_dim(n - 1) if n >= 1 else 0
        a = self.field.zeros(rows, len(cols))
        for j, cell in enumerate(cols):
            entries = self._face_entries(cell)
            if entries is None:
                raise InvalidComplex(f"cell {cell.id!r} references a missing face")
            for row, coeff in entries:
                a[row, j] = self.field.normalize(a[row, j] + coeff)
        m = Matrix(self.field, a)
        self._boundaries[n] = m
        return m

    def presence_table(self, n: int) -> np.ndarray:
        """Boolean (cells x poset points) presence table for degree n."""
        cached = self._presence.get(n)
        if cached is not None:
            return cached
        cells = self.cells_of_dim(n)
        table = np.zeros((len(cells), self.poset.n), dtype=bool)
        for j, cell in enumerate(cells):
            table[j] = self.poset.leq[list(cell.births)].any(axis=0)
        table.setflags(write=False)
        self._presence[n] = table
        return table

    def cells_present(self, n: int, x) -> tuple[int, ...]:
        """Indices of n-cells with some birth grade at or below ``x``."""
        xi = self.poset.resolve(x)
        return tuple(np.nonzero(self.presence_table(n)[:, xi])[0].tolist())

    # -- per-point subspaces --------------------------------------------------

    def colimit_cycles(self, n: int) -> Subspace:
        """Kernel of the colimit boundary; the ambient for degree-n subobjects."""
        cached = self._colimit_cycles.get(n)
        if cached is None:
            cached = kernel(self.boundary_matrix(n))
            self._colimit_cycles[n] = cached
        return cached

    def cycles_at(self, n: int, x) -> Subspace:
        """Cycles present at a point, in colimit coordinates."""
        xi = self.poset.resolve(x)
        key = (n, xi)
        cached = self._point_cycles.get(key)
        if cached is not None:
            return cached
        cols = self.cells_present(n, xi)
        ambient = self.ambient_dim(n)
        if not cols:
            sub = Subspace.zero(self.field, ambient)
        else:
            restricted = Matrix(self.field, self.boundary_matrix(n).data[:, list(cols)])
            ker = kernel(restricted)
            sub = _embed(self.field, ker, cols, ambient)
        self._point_cycles[key] = sub
        return sub

    def boundaries_at(self, n: int, x) -> Subspace:
        """Boundaries of (n+1)-cells present at a point, in colimit coordinates."""
        xi = self.poset.resolve(x)
        key = (n, xi)
        cached = self._point_boundaries.get(key)
        if cached is not None:
            return cached
        cols = self.cells_present(n + 1, xi)
        ambient = self.ambient_dim(n)
        if not cols:
            sub = Subspace.zero(self.field, ambient)
        else:
            restricted = Matrix(self.field, self.boundary_matrix(n + 1).data[:, list(cols)])
            sub = column_space(restricted)
        self._point_boundaries[key] = sub
        return sub


def _embed(field: FieldSpec, sub: Subspace, positions: Sequence[int], ambient: int) -> Subspace:
    """Scatter a subspace of a coordinate restriction back into the ambient.

    Positions are increasing, so a reduced echelon basis stays reduced.
    """
    if sub.dim == 0:
        return Subspace.zero(field, ambient)
    rows = field.zeros(sub.dim, ambient)
    rows[:, list(positions)] = sub.basis.data
    pivots = tuple(positions[c] for c in sub.pivots)
    return Subspace(field, ambient, Matrix(field, rows), pivots)
