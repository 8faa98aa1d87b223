"""JSON schemas for algebras, structures and reports.

Indices are 1-based on the wire (the Python API is 0-based). Rationals travel
as strings "p" or "p/q"; Gaussian rationals as {"re": "p/q", "im": "r/s"}.
An input document looks like

    {"dim": 4,
     "brackets": [{"i": 1, "j": 2, "coeffs": {"3": "1"}}],
     "J": ["0", "0", "-1", "0", ...],          # row-major n*n rational strings
     "h": [["0", "0", "1"]],                   # optional stabilizer rows
     "J_mod_h": true}                          # present iff h is
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .acs import AlmostComplexStructure
from .errors import SchemaError, ShapeError, ValidationError
from .lie import LieAlgebra, validate_lie_algebra
from .linalg import Subspace, as_matrix
from .scalars import GaussianRational, rational_from_str, rational_to_str

__all__ = [
    "ParsedEntry",
    "parse_entry",
    "load_entry_file",
    "entry_to_dict",
    "scalar_to_json",
    "scalar_from_json",
    "vector_to_json",
    "matrix_to_row_major",
    "table_to_json",
    "dumps_canonical",
]


def scalar_to_json(x):
    x = GaussianRational.of(x)
    if not x.im:
        return rational_to_str(x.re)
    return x.to_json()


def scalar_from_json(v):
    try:
        return GaussianRational.from_json(v)
    except (ValueError, AttributeError, TypeError) as exc:
        raise SchemaError(f"bad scalar {v!r}: {exc}") from exc


def vector_to_json(v):
    return [scalar_to_json(c) for c in v]


def matrix_to_row_major(m):
    return [scalar_to_json(c) for row in m for c in row]


def _real_from_str(s):
    try:
        return rational_from_str(s) if isinstance(s, str) else rational_from_str(str(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad rational {s!r}: {exc}") from exc


@dataclass(frozen=True)
class ParsedEntry:
    algebra: LieAlgebra
    j_rows: tuple  # raw n x n matrix
    h: Subspace | None
    acs: AlmostComplexStructure | None  # constructed only when validate=True
    expected: dict | None


def parse_entry(doc, validate=True):
    """Parse one schema document.

    With validate=True the Jacobi identity is enforced and the almost complex
    structure is constructed (raising ValidationError on failure); with
    validate=False raw pieces are returned for report-style validation.
    """
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    try:
        n = int(doc["dim"])
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"missing or bad 'dim': {exc}") from exc
    table = {}
    for item in doc.get("brackets", ()):
        try:
            i, j = int(item["i"]) - 1, int(item["j"]) - 1
            coeffs = {
                int(k) - 1: _real_from_str(v) for k, v in item.get("coeffs", {}).items()
            }
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad bracket entry {item!r}: {exc}") from exc
        table[(i, j)] = coeffs
    try:
        algebra = LieAlgebra.from_brackets(n, table)
    except (ShapeError, ValidationError) as exc:
        raise SchemaError(f"bad bracket table: {exc}") from exc

    flat = doc.get("J")
    if flat is None:
        raise SchemaError("missing 'J' (row-major list of rational strings)")
    if len(flat) != n * n:
        raise SchemaError(f"'J' must have {n * n} entries, got {len(flat)}")
    vals = [_real_from_str(s) for s in flat]
    j_rows = tuple(tuple(GaussianRational.of(x) for x in vals[r * n:(r + 1) * n]) for r in range(n))

    h = None
    if "h" in doc:
        rows = doc["h"]
        try:
            h = Subspace.from_rows(n, as_matrix([[_real_from_str(s) for s in row] for row in rows]))
        except ShapeError as exc:
            raise SchemaError(f"bad 'h' rows: {exc}") from exc

    acs = None
    if validate:
        report = validate_lie_algebra(algebra)
        if not report.valid:
            (i, j, k), defect = report.violations[0]
            raise ValidationError(
                f"Jacobi identity fails on basis triple ({i + 1},{j + 1},{k + 1}); "
                f"defect {[str(c) for c in defect]}"
            )
        acs = AlmostComplexStructure(j_rows, mod_h=h)
    return ParsedEntry(algebra, j_rows, h, acs, doc.get("expected"))


def load_entry_file(path, validate=True):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc
    return parse_entry(doc, validate=validate)


def entry_to_dict(algebra, acs, h=None, expected=None):
    doc = {
        "dim": algebra.dim,
        "brackets": [
            {
                "i": i + 1,
                "j": j + 1,
                "coeffs": {
                    str(k + 1): rational_to_str(c.re) for k, c in enumerate(vec) if c
                },
            }
            for (i, j), vec in algebra.brackets
        ],
        "J": [rational_to_str(c.re) for row in acs.J for c in row],
    }
    if h is not None:
        doc["h"] = [[rational_to_str(c.re) for c in row] for row in h.basis]
        doc["J_mod_h"] = True
    if expected is not None:
        doc["expected"] = expected
    return doc


def table_to_json(table):
    """Cohomology dims keyed "p,q" with integer values."""
    return {f"{p},{q}": d for (p, q), d in table.dims}


def form_to_json(form):
    """Bigraded form as {"p,q": {monomial index: scalar}} in the stored ordering."""
    out = {}
    for (p, q), coeffs in form.components:
        comp = {str(i): scalar_to_json(c) for i, c in enumerate(coeffs) if c}
        if comp:
            out[f"{p},{q}"] = comp
    return out


def form_from_json(frame, doc):
    from .forms import BigradedForm

    comps = {}
    for key, entries in doc.items():
        try:
            p, q = (int(t) for t in key.split(","))
        except ValueError as exc:
            raise SchemaError(f"bad bidegree key {key!r}") from exc
        dim = frame.dim(p, q)
        vec = [GaussianRational.of(0)] * dim
        for idx, val in entries.items():
            i = int(idx)
            if not 0 <= i < dim:
                raise SchemaError(f"monomial index {i} out of range at bidegree ({p},{q})")
            vec[i] = scalar_from_json(val)
        comps[(p, q)] = tuple(vec)
    return BigradedForm.from_components(frame, comps)


def dumps_canonical(obj):
    """The one JSON writer: stable key order so reports are bit-identical."""
    return json.dumps(obj, indent=2, sort_keys=True)
