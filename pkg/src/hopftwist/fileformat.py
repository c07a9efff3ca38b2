"""JSON-compatible algebra and representation files.

Scalars are cyclotomic literal strings (``"1/2"``, ``"-i"``,
``"z(8)^3 - 1/2"``).  Output is canonical: dumping a loaded file
reproduces it byte for byte.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

from .cyclo import format_cyc, parse_cyc
from .errors import DimensionMismatch, ParseError
from .linalg import Matrix
from .reps import Representation
from .structures import HopfAlgebra, HopfAutomorphism

_INLINE_WIDTH = 100


def _emit(obj, indent=0) -> str:
    flat = json.dumps(obj, ensure_ascii=False, separators=(", ", ": "))
    if len(flat) <= _INLINE_WIDTH or not isinstance(obj, (list, dict)):
        return flat
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        body = ",\n".join(
            f"{pad}{json.dumps(k, ensure_ascii=False)}: {_emit(v, indent + 1)}" for k, v in obj.items()
        )
        return "{\n" + body + "\n" + end + "}"
    body = ",\n".join(pad + _emit(v, indent + 1) for v in obj)
    return "[\n" + body + "\n" + end + "]"


def dumps(obj) -> str:
    return _emit(obj) + "\n"


def _lit(x) -> str:
    return format_cyc(x)


def _matrix(m: Matrix):
    return [[_lit(x) for x in row] for row in m.rows]


def algebra_to_dict(H: HopfAlgebra, automorphisms: dict | None = None) -> dict:
    auts = {}
    for name, a in (automorphisms or {}).items():
        auts[name] = _matrix(a.map if isinstance(a, HopfAutomorphism) else a)
    return {
        "name": H.name,
        "dim": H.dim,
        "basis": list(H.basis_labels),
        "mult": [[[_lit(c) for c in v] for v in row] for row in H.mult],
        "unit": [_lit(c) for c in H.unit],
        "comult": [[[_lit(c), l, r] for c, l, r in terms] for terms in H.comult],
        "counit": [_lit(c) for c in H.counit_values],
        "antipode": _matrix(H.antipode),
        "automorphisms": auts,
    }


def dumps_algebra(H: HopfAlgebra, automorphisms: dict | None = None) -> str:
    return dumps(algebra_to_dict(H, automorphisms))


def representation_to_dict(rep: Representation) -> dict:
    return {
        "algebra": rep.algebra.name,
        "name": rep.name,
        "dim_V": rep.dim,
        "action": [_matrix(m) for m in rep.action],
    }


def dumps_representation(rep: Representation) -> str:
    return dumps(representation_to_dict(rep))


@dataclass
class AlgebraFile:
    """A loaded algebra plus its unverified automorphism matrices."""

    algebra: HopfAlgebra
    automorphism_maps: dict[str, Matrix] = field(default_factory=dict)


def _read(source) -> dict:
    if isinstance(source, dict):
        return source
    text = source
    if isinstance(source, os.PathLike) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    return data


def _need(data, key):
    if key not in data:
        raise ParseError(f"missing field {key!r}")
    return data[key]


def _scalar(text, where):
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            text = str(text)
        else:
            raise ParseError(f"{where}: expected a cyclotomic literal string")
    try:
        return parse_cyc(text)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def _scalars(seq, n, where):
    if not isinstance(seq, list) or len(seq) != n:
        raise ParseError(f"{where}: expected an array of length {n}")
    return [_scalar(x, f"{where}[{i}]") for i, x in enumerate(seq)]


def _square(rows, n, where) -> Matrix:
    if not isinstance(rows, list) or len(rows) != n:
        raise ParseError(f"{where}: expected {n} rows")
    return Matrix._wrap([_scalars(r, n, f"{where}[{i}]") for i, r in enumerate(rows)], n)


def load_algebra(source) -> AlgebraFile:
    """Parse an algebra file (path, JSON text or already-decoded dict)."""
    data = _read(source)
    n = _need(data, "dim")
    if not isinstance(n, int) or n < 1:
        raise ParseError("dim must be a positive integer")
    basis = _need(data, "basis")
    if not isinstance(basis, list) or len(basis) != n:
        raise ParseError(f"basis must list {n} labels")
    mult_raw = _need(data, "mult")
    if not isinstance(mult_raw, list) or len(mult_raw) != n:
        raise ParseError(f"mult must have {n} rows")
    mult = []
    for i, row in enumerate(mult_raw):
        if not isinstance(row, list) or len(row) != n:
            raise ParseError(f"mult[{i}] must have {n} entries")
        mult.append([_scalars(v, n, f"mult[{i}][{j}]") for j, v in enumerate(row)])
    comult_raw = _need(data, "comult")
    if not isinstance(comult_raw, list) or len(comult_raw) != n:
        raise ParseError(f"comult must have {n} entries")
    comult = []
    for k, terms in enumerate(comult_raw):
        if not isinstance(terms, list):
            raise ParseError(f"comult[{k}] must be an array")
        parsed = []
        for t, term in enumerate(terms):
            where = f"comult[{k}][{t}]"
            if not (isinstance(term, list) and len(term) == 3):
                raise ParseError(f"{where}: expected [coeff, i, j]")
            c, l, r = term
            if not all(isinstance(x, int) and 0 <= x < n for x in (l, r)):
                raise ParseError(f"{where}: indices must be integers in [0, {n})")
            parsed.append((_scalar(c, where), l, r))
        comult.append(parsed)
    unit = _scalars(_need(data, "unit"), n, "unit")
    counit = _scalars(_need(data, "counit"), n, "counit")
    antipode = _square(_need(data, "antipode"), n, "antipode")
    try:
        H = HopfAlgebra(data.get("name", "H"), basis, mult, unit, comult, counit, antipode)
    except DimensionMismatch as exc:
        raise ParseError(str(exc)) from exc
    auts_raw = data.get("automorphisms", {})
    if not isinstance(auts_raw, dict):
        raise ParseError("automorphisms must be an object")
    auts = {name: _square(m, n, f"automorphisms[{name!r}]") for name, m in auts_raw.items()}
    return AlgebraFile(H, auts)


def load_representation(source, H: HopfAlgebra) -> Representation:
    """Parse a representation file for the algebra ``H``.

    The ``algebra`` field is either the algebra's name or a path to an
    algebra file with identical structure constants.
    """
    from .structures import same_structure

    data = _read(source)
    ref = _need(data, "algebra")
    if ref != H.name:
        other = None
        if isinstance(ref, str) and os.path.exists(ref):
            other = load_algebra(ref).algebra
        if other is None or not same_structure(other, H):
            raise ParseError(f"representation is for algebra {ref!r}, not {H.name!r}")
    dv = _need(data, "dim_V")
    if not isinstance(dv, int) or dv < 1:
        raise ParseError("dim_V must be a positive integer")
    action = _need(data, "action")
    if not isinstance(action, list) or len(action) != H.dim:
        raise ParseError(f"action must list {H.dim} matrices")
    mats = [_square(m, dv, f"action[{i}]") for i, m in enumerate(action)]
    name = data.get("name") or (os.path.basename(str(source)) if isinstance(source, str) else "V")
    return Representation(H, name, dv, mats)
