"""Exact linear algebra over Q(i).

Vectors are tuples of :class:`GaussianRational`; matrices are tuples of row
tuples. Subspaces are kept in reduced row-echelon form, which is a normal
form: two equal subspaces store bit-identical bases, so fixed points of the
derived-flag recursion are detected by plain equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError, WellDefinednessError
from .scalars import ONE, ZERO, GaussianRational

__all__ = [
    "Subspace",
    "QuotientMap",
    "as_vector",
    "as_matrix",
    "basis_vector",
    "zero_vector",
    "add_vectors",
    "sub_vectors",
    "scale_vector",
    "conj_vector",
    "dot",
    "mat_vec",
    "mat_mul",
    "transpose",
    "identity_matrix",
    "zero_matrix",
    "mat_inverse",
    "mat_rank",
    "rref",
    "rref_rows",
    "kernel",
    "column_space",
    "subspace_sum",
    "subspace_contains",
    "subspace_intersection",
    "solve_in_rows",
    "quotient_representatives",
    "induced_map_on_quotient",
]


# -- vector / matrix plumbing -------------------------------------------------

def as_vector(entries):
    return tuple(GaussianRational.of(x) for x in entries)


def as_matrix(rows):
    mat = tuple(as_vector(r) for r in rows)
    if mat and any(len(r) != len(mat[0]) for r in mat):
        raise ShapeError("ragged rows: all rows must have the same length")
    return mat


def zero_vector(n):
    return (ZERO,) * n


def basis_vector(n, i):
    if not 0 <= i < n:
        raise ShapeError(f"basis index {i} out of range for ambient dimension {n}")
    return (ZERO,) * i + (ONE,) + (ZERO,) * (n - i - 1)


def _check_len(v, n, what="vector"):
    if len(v) != n:
        raise ShapeError(f"{what} has length {len(v)}, expected {n}")


def add_vectors(u, v):
    _check_len(v, len(u))
    return tuple(a + b for a, b in zip(u, v))


def sub_vectors(u, v):
    _check_len(v, len(u))
    return tuple(a - b for a, b in zip(u, v))


def scale_vector(c, v):
    c = GaussianRational.of(c)
    return tuple(c * a for a in v)


def conj_vector(v):
    return tuple(a.conjugate() for a in v)


def dot(u, v):
    _check_len(v, len(u))
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


def mat_vec(m, v):
    if m and len(m[0]) != len(v):
        raise ShapeError(f"matrix has {len(m[0])} columns, vector has length {len(v)}")
    return tuple(dot(row, v) for row in m)


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m):
    if not m:
        return ()
    return tuple(zip(*m))


def identity_matrix(n):
    return tuple(basis_vector(n, i) for i in range(n))


def zero_matrix(nrows, ncols):
    return ((ZERO,) * ncols,) * nrows


def mat_rank(m):
    return len(rref_rows(m)[0])


def mat_inverse(m):
    n = len(m)
    if any(len(r) != n for r in m):
        raise ShapeError("matrix must be square")
    aug = [list(row) + list(basis_vector(n, i)) for i, row in enumerate(m)]
    ech, pivots = _rref_inplace(aug)
    if pivots != list(range(n)):
        raise ShapeError("matrix is singular")
    return tuple(tuple(row[n:]) for row in ech)


# -- reduced row-echelon form --------------------------------------------------

def _rref_inplace(mat):
    """RREF a list of row lists in place; returns (nonzero rows, pivot columns)."""
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    pivots = []
    prow = 0
    for col in range(ncols):
        sel = None
        for i in range(prow, nrows):
            if mat[i][col]:
                sel = i
                break
        if sel is None:
            continue
        mat[prow], mat[sel] = mat[sel], mat[prow]
        pv = mat[prow][col]
        if pv != ONE:
            inv = ONE / pv
            mat[prow] = [inv * x if x else x for x in mat[prow]]
        prow_vals = mat[prow]
        for i in range(nrows):
            if i != prow and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b if b else a for a, b in zip(mat[i], prow_vals)]
        pivots.append(col)
        prow += 1
        if prow == nrows:
            break
    return mat[:prow], pivots


def rref_rows(rows):
    """Canonical RREF of arbitrary rows: (tuple of nonzero echelon rows, pivots)."""
    mat = [list(r) for r in as_matrix(rows)]
    ech, pivots = _rref_inplace(mat)
    return tuple(tuple(r) for r in ech), tuple(pivots)


# -- subspaces -----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class Subspace:
    """A linear subspace of Q(i)^ambient_dim in canonical reduced echelon form."""

    ambient_dim: int
    basis: tuple

    @classmethod
    def from_rows(cls, ambient_dim, rows):
        rows = tuple(rows)
        for r in rows:
            _check_len(r, ambient_dim, "spanning vector")
        ech, _ = rref_rows(rows)
        return cls(ambient_dim, ech)

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim):
        return cls(ambient_dim, identity_matrix(ambient_dim))

    @property
    def rank(self):
        return len(self.basis)

    @property
    def pivots(self):
        return tuple(next(j for j, x in enumerate(row) if x) for row in self.basis)

    def reduce(self, v):
        """Residue of v after eliminating all pivot coordinates; zero iff v is in the span."""
        _check_len(v, self.ambient_dim)
        v = as_vector(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = tuple(a - c * b for a, b in zip(v, row))
        return v

    def contains(self, v):
        return not any(self.reduce(v))

    def contains_subspace(self, other):
        if other.ambient_dim != self.ambient_dim:
            raise ShapeError("ambient dimension mismatch")
        return all(self.contains(row) for row in other.basis)

    def is_zero(self):
        return not self.basis

    def is_full(self):
        return len(self.basis) == self.ambient_dim


def rref(rows):
    """Canonical echelon span of the given rows, with its rank."""
    rows = as_matrix(rows)
    if not rows:
        raise ShapeError("rref needs at least one row to infer the ambient dimension")
    sub = Subspace(len(rows[0]), rref_rows(rows)[0])
    return sub, sub.rank


def subspace_sum(a, b):
    if a.ambient_dim != b.ambient_dim:
        raise ShapeError(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}"
        )
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    return Subspace.from_rows(a.ambient_dim, a.basis + b.basis)


def subspace_contains(a, v):
    return a.contains(v)


def subspace_intersection(a, b):
    """a ∩ b via the kernel of the stacked-basis system."""
    if a.ambient_dim != b.ambient_dim:
        raise ShapeError(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}"
        )
    if a.is_zero() or b.is_zero():
        return Subspace.zero(a.ambient_dim)
    stacked = a.basis + b.basis
    null = kernel(transpose(stacked), ncols=len(stacked))
    gens = []
    for x in null.basis:
        w = zero_vector(a.ambient_dim)
        for c, row in zip(x[: a.rank], a.basis):
            if c:
                w = add_vectors(w, scale_vector(c, row))
        gens.append(w)
    return Subspace.from_rows(a.ambient_dim, gens)


def kernel(m, ncols=None):
    """Right null space {v : m·v = 0} as a Subspace of Q(i)^ncols."""
    if m:
        ncols = len(m[0])
    elif ncols is None:
        raise ShapeError("kernel of an empty matrix needs an explicit column count")
    else:
        return Subspace.full(ncols)
    ech, pivots = rref_rows(m)
    pivset = set(pivots)
    gens = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, p in zip(ech, pivots):
            if row[free]:
                v[p] = -row[free]
        gens.append(tuple(v))
    return Subspace.from_rows(ncols, gens)


def column_space(m):
    if not m:
        raise ShapeError("column space of an empty matrix is undefined")
    return Subspace.from_rows(len(m), transpose(m))


def solve_in_rows(rows, v):
    """Coefficients x with sum(x_i * rows[i]) == v, or None if v is outside the span.

    Free coefficients (dependent rows) are set to zero.
    """
    rows = as_matrix(rows)
    if not rows:
        return () if not any(v) else None
    n = len(rows[0])
    _check_len(v, n, "target vector")
    aug = [list(col) + [GaussianRational.of(v[i])] for i, col in enumerate(transpose(rows))]
    ech, pivots = _rref_inplace(aug)
    ncols = len(rows)
    coeffs = [ZERO] * ncols
    for row, p in zip(ech, pivots):
        if p == ncols:  # pivot in the augmented column: inconsistent
            return None
        coeffs[p] = row[ncols]
    return tuple(coeffs)


def quotient_representatives(sub, quot_by):
    """Rows of sub's canonical basis extending quot_by to a basis of sub.

    The choice is deterministic (first echelon rows that grow the span), so
    quotient presentations are reproducible.
    """
    acc = _Echelon(sub.ambient_dim)
    for row in quot_by.basis:
        acc.add(row)
    reps = []
    for row in sub.basis:
        if acc.add(row):
            reps.append(row)
    return tuple(reps)


class _Echelon:
    """Incremental (non-reduced) echelon accumulator for rank bookkeeping."""

    def __init__(self, ambient_dim):
        self.ambient_dim = ambient_dim
        self.rows = {}  # pivot column -> row

    def add(self, v):
        """Insert v; True iff it enlarged the span."""
        v = tuple(v)
        for p in sorted(self.rows):
            if v[p]:
                c = v[p]
                v = tuple(a - c * b for a, b in zip(v, self.rows[p]))
        for j, x in enumerate(v):
            if x:
                inv = ONE / x
                self.rows[j] = tuple(inv * a for a in v)
                return True
        return False

    @property
    def rank(self):
        return len(self.rows)


@dataclass(frozen=True, slots=True)
class QuotientMap:
    """A linear map between quotients, presented on echelon-complement bases."""

    matrix: tuple
    dom_reps: tuple
    cod_reps: tuple


def induced_map_on_quotient(f, dom_sub, dom_quot_by, cod_sub, cod_quot_by):
    """The map induced by f : dom_sub/dom_quot_by -> cod_sub/cod_quot_by.

    All four well-definedness inclusions are verified and named on failure.
    """
    f = as_matrix(f)
    if not dom_sub.contains_subspace(dom_quot_by):
        raise WellDefinednessError("dom_quot_by is not contained in dom_sub")
    if not cod_sub.contains_subspace(cod_quot_by):
        raise WellDefinednessError("cod_quot_by is not contained in cod_sub")
    for row in dom_sub.basis:
        if not cod_sub.contains(mat_vec(f, row)):
            raise WellDefinednessError("f(dom_sub) is not contained in cod_sub")
    for row in dom_quot_by.basis:
        if not cod_quot_by.contains(mat_vec(f, row)):
            raise WellDefinednessError("f(dom_quot_by) is not contained in cod_quot_by")

    dom_reps = quotient_representatives(dom_sub, dom_quot_by)
    cod_reps = quotient_representatives(cod_sub, cod_quot_by)
    cols = []
    solve_rows = cod_reps + cod_quot_by.basis
    for r in dom_reps:
        y = mat_vec(f, r)
        coeffs = solve_in_rows(solve_rows, y)
        if coeffs is None:  # unreachable given the checks above
            raise WellDefinednessError("image escaped cod_sub despite containment checks")
        cols.append(coeffs[: len(cod_reps)])
    matrix = transpose(cols) if cols else tuple(() for _ in cod_reps)
    if not cod_reps:
        matrix = ()
    return QuotientMap(matrix=matrix, dom_reps=dom_reps, cod_reps=cod_reps)
