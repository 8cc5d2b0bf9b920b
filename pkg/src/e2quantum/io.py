"""JSON input for user-supplied Lie algebras and cobrackets.

Schema::

    {
      "dimension": 3,
      "basis": ["P1", "P2", "J"],
      "brackets": [{"i": 2, "j": 0, "k": 1, "coeff": "i"}, ...],
      "cobracket": [{"i": 2, "j": 0, "k": 1, "coeff": "1"}, ...]
    }

``brackets`` lists ``[e_i, e_j] ∋ coeff e_k`` for both orders of every pair;
``cobracket`` lists ``delta(e_i) ∋ coeff e_j ∧ e_k`` with ``j < k``.  Indices
are 0-based and coefficients use the scalar string format (``"1/2"``,
``"-i"``, ``"3-2/5*i"``).  Unknown fields are rejected.
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .lie import Cobracket, LieAlgebra, check_lie_axioms
from .scalars import parse_scalar

__all__ = ["InputError", "parse_input", "load_document", "bundled_e2_path"]

_TOP = {"dimension", "basis", "brackets", "cobracket"}
_ENTRY = {"i", "j", "k", "coeff"}


class InputError(ValueError):
    """Malformed input; ``location`` says where."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


def bundled_e2_path() -> Path:
    return Path(str(resources.files("e2quantum") / "data" / "e2.json"))


def load_document(source) -> dict:
    """``source`` is a path, inline JSON text, or an already parsed dict."""
    if isinstance(source, dict):
        return source
    text = str(source)
    if text.lstrip().startswith("{"):
        where = "<inline>"
    else:
        where = text
        try:
            text = Path(text).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(where, f"cannot read file ({exc.strerror})") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{where}:{exc.lineno}:{exc.colno}", f"invalid JSON ({exc.msg})") from None
    if not isinstance(doc, dict):
        raise InputError(where, "top level must be an object")
    return doc


def _index(entry: dict, key: str, n: int, where: str) -> int:
    v = entry[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise InputError(f"{where}.{key}", f"index must be an integer, got {v!r}")
    if not 0 <= v < n:
        raise InputError(f"{where}.{key}", f"index {v} out of range 0..{n - 1}")
    return v


def _entries(doc: dict, field: str, n: int) -> dict:
    items = doc.get(field, [])
    if not isinstance(items, list):
        raise InputError(field, "must be a list")
    table = {}
    for pos, entry in enumerate(items):
        where = f"{field}[{pos}]"
        if not isinstance(entry, dict):
            raise InputError(where, "must be an object")
        keys = set(entry)
        if keys != _ENTRY:
            extra, missing = sorted(keys - _ENTRY), sorted(_ENTRY - keys)
            raise InputError(where, f"unknown fields {extra}" if extra else f"missing fields {missing}")
        i, j, k = (_index(entry, key, n, where) for key in "ijk")
        if not isinstance(entry["coeff"], str):
            raise InputError(f"{where}.coeff", "coefficient must be a string")
        try:
            c = parse_scalar(entry["coeff"])
        except ValueError as exc:
            raise InputError(f"{where}.coeff", str(exc)) from None
        if (i, j, k) in table:
            raise InputError(where, f"duplicate entry for {(i, j, k)}")
        table[(i, j, k)] = c
    return table


def parse_input(source) -> tuple:
    """Return ``(algebra, cobracket)``; the cobracket is ``None`` when the
    document has no ``cobracket`` field and zero when it is empty.  The
    algebra must pass :func:`check_lie_axioms`."""
    doc = load_document(source)
    unknown = sorted(set(doc) - _TOP)
    if unknown:
        raise InputError("<document>", f"unknown fields {unknown}")
    for key in ("dimension", "basis", "brackets"):
        if key not in doc:
            raise InputError("<document>", f"missing field {key!r}")
    n = doc["dimension"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError("dimension", "must be a positive integer")
    basis = doc["basis"]
    if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) and b for b in basis):
        raise InputError("basis", f"must list {n} non-empty names")
    if len(set(basis)) != n:
        raise InputError("basis", "names must be distinct")
    algebra = LieAlgebra(basis, _entries(doc, "brackets", n))
    verdict = check_lie_axioms(algebra)
    if not verdict:
        names = tuple(basis[x] for x in verdict.witness)
        raise InputError("brackets", f"{verdict.check} fails at {names}")
    if "cobracket" not in doc:
        return algebra, None
    table = _entries(doc, "cobracket", n)
    for (i, j, k) in table:
        if j >= k:
            raise InputError("cobracket", f"entry {(i, j, k)} needs j < k")
    return algebra, Cobracket.from_table(algebra, table)
