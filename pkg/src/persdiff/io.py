"""JSON input documents: field, poset, and cell records.

One document describes a multifiltered complex (``format_version`` 1).
Grid posets are declared by shape; explicit posets by labels and covering
relations, transitively closed at load.  Births name poset elements by
grade scalar/vector or by label.
"""
from __future__ import annotations

import json
from pathlib import Path

from .complexes import FilteredComplex
from .fields import FieldSpec, InvalidField
from .posets import FinitePoset, InvalidPoset, UnknownElement


FORMAT_VERSION = 1


class InputError(ValueError):
    pass


def poset_from_spec(spec) -> FinitePoset:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise InputError("poset spec must be an object with a 'kind'")
    kind = spec["kind"]
    try:
        if kind == "grid":
            return FinitePoset.grid(spec["shape"])
        if kind == "explicit":
            labels = spec["elements"]
            covers = spec.get("covers", [])
            grades = None
            if "grades" in spec:
                by_label = spec["grades"]
                grades = []
                for lab in labels:
                    if str(lab) not in by_label:
                        raise InputError(f"missing grade for element {lab!r}")
                    g = by_label[str(lab)]
                    grades.append(tuple(g) if isinstance(g, (list, tuple)) else (int(g),))
            return FinitePoset.from_covers(labels, covers, grades=grades)
    except KeyError as exc:
        raise InputError(f"poset spec missing {exc.args[0]!r}") from None
    except (InvalidPoset, UnknownElement) as exc:
        raise InputError(f"bad poset: {exc}") from None
    raise InputError(f"unknown poset kind {kind!r}")


def parse_document(doc, field_override: str | None = None) -> FilteredComplex:
    """Build a complex from a parsed JSON document."""
    if not isinstance(doc, dict):
        raise InputError("input document must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise InputError(f"unsupported format_version {version!r} (expected {FORMAT_VERSION})")
    token = field_override or doc.get("field", "gf2")
    try:
        fld = FieldSpec.parse(token)
    except InvalidField as exc:
        raise InputError(str(exc)) from None
    poset = poset_from_spec(doc.get("poset"))
    cells = doc.get("cells", [])
    if not isinstance(cells, list):
        raise InputError("'cells' must be a list")
    try:
        return FilteredComplex.build(fld, poset, cells)
    except UnknownElement as exc:
        raise InputError(f"bad birth grade: {exc}") from None
    except (InvalidField, ValueError) as exc:
        raise InputError(str(exc)) from None


def load_complex(path, field_override: str | None = None) -> FilteredComplex:
    """Read and parse an input document from a file path."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None
    return parse_document(doc, field_override=field_override)
