"""Independent brute-force oracles used to freeze expected values.

Everything here deliberately avoids the production code paths it checks:
forms are evaluated as alternating multilinear maps on explicit vector
tuples, the differential comes from the r<s double-sum formula, and ranks
are computed by a local elimination routine.
"""

from itertools import combinations, permutations

from transdolbeault.lie import bracket
from transdolbeault.linalg import basis_vector, mat_vec
from transdolbeault.scalars import GaussianRational, I, ZERO

ONE = GaussianRational.of(1)
HALF = ONE / 2


def oracle_rank(rows):
    """Row rank by plain forward elimination (no normalization, no reuse)."""
    work = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(work[0]) if work else 0
    col = 0
    while work and col < ncols:
        pivot = None
        for r in range(rank, len(work)):
            if work[r][col]:
                pivot = r
                break
        if pivot is None:
            col += 1
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pv = work[rank][col]
        for r in range(rank + 1, len(work)):
            if work[r][col]:
                f = work[r][col] / pv
                work[r] = [a - f * b for a, b in zip(work[r], work[rank])]
        rank += 1
        col += 1
    return rank


def eval_real_form(real_form, vectors):
    """Evaluate a real-basis k-form (dict of index tuples) on k vectors."""
    k = len(vectors)
    total = ZERO
    for key, coeff in real_form.items():
        coeff = GaussianRational.of(coeff)
        if len(key) != k or not coeff:
            continue
        acc = ZERO
        for perm in permutations(range(k)):
            sign = 1
            seen = list(perm)
            for i in range(k):
                for j in range(i + 1, k):
                    if seen[i] > seen[j]:
                        sign = -sign
            prod = coeff if sign > 0 else -coeff
            for slot, idx in zip(perm, key):
                prod = prod * vectors[slot][idx]
                if not prod:
                    break
            acc = acc + prod
        total = total + acc
    return total


def oracle_d_real(algebra, real_form, degree):
    """d of a real-basis form via the invariant double-sum formula."""
    n = algebra.dim
    out = {}
    for key in combinations(range(n), degree + 1):
        vecs = [basis_vector(n, i) for i in key]
        total = ZERO
        for r, s in combinations(range(degree + 1), 2):
            rest = [vecs[t] for t in range(degree + 1) if t not in (r, s)]
            args = [bracket(algebra, vecs[r], vecs[s])] + rest
            sign = (-1) ** (r + s)
            total = total + eval_real_form(real_form, args) * sign
        if total:
            out[key] = total
    return out


def _aminus(acs, v):
    jv = mat_vec(acs.J, v)
    return tuple(a * HALF + b * (I * HALF) for a, b in zip(v, jv))


def _t01_basis(algebra, acs):
    """A spanning set of T^{0,1}: the projectors A^- e_a (not echelonized)."""
    n = algebra.dim
    return [_aminus(acs, basis_vector(n, a)) for a in range(n)]


def oracle_hp0_dims(algebra, acs, limit):
    """dim H_trans^{p,0} for all p via the closed-form joint kernel:

    forms in Lambda^p annihilated by contraction and Lie derivative along
    T^{0,1} + (limit)^C, computed on full (non-bigraded) complex p-forms.
    """
    n = algebra.dim
    m = n // 2
    constraints_z = _t01_basis(algebra, acs) + [tuple(c for c in row) for row in limit.basis]
    dims = {}
    for p in range(m + 1):
        monos = list(combinations(range(n), p))
        dim = len(monos)
        rows = []
        for zi, z in enumerate(constraints_z):
            # iota(z) omega = 0: for each (p-1)-tuple of basis vectors
            for rest in combinations(range(n), p - 1) if p else ():
                row = []
                vecs = [z] + [basis_vector(n, i) for i in rest]
                for mono in monos:
                    row.append(eval_real_form({mono: 1}, vecs))
                rows.append(row)
            # (L_z omega)(args) = -sum omega(..., [z, arg], ...) = 0
            for args in combinations(range(n), p):
                row = []
                base = [basis_vector(n, i) for i in args]
                for mono in monos:
                    total = ZERO
                    for t in range(p):
                        repl = base[:t] + [bracket(algebra, z, base[t])] + base[t + 1:]
                        total = total - eval_real_form({mono: 1}, repl)
                    row.append(total)
                rows.append(row)
        if not rows:
            dims[p] = dim
        else:
            dims[p] = dim - oracle_rank(rows)
    return dims


def largest_graded_dstable_annihilator(algebra, acs):
    """Fixed point: the largest bidegree-graded d-stable subspace of forms
    annihilated by contraction with Im N^J. The transverse module must equal it."""
    from transdolbeault.acs import nijenhuis_image
    from transdolbeault.forms import bigraded_frame
    from transdolbeault.linalg import Subspace, kernel, subspace_intersection

    frame = bigraded_frame(algebra, acs)
    coords = [frame.w_coords(v) for v in nijenhuis_image(algebra, acs).basis]
    spaces = {}
    for p, q in frame.bidegrees():
        monos = frame.mono_basis(p, q)
        dim = len(monos)
        rows = {}
        for j, mono in enumerate(monos):
            for ci, c in enumerate(coords):
                for tgt, val in frame.contract_flat(c, {mono: ONE}).items():
                    rows.setdefault((ci, tgt), [ZERO] * dim)[j] = val
        spaces[(p, q)] = (
            kernel(tuple(tuple(r) for r in rows.values()), ncols=dim)
            if rows else Subspace.full(dim)
        )
    changed = True
    while changed:
        changed = False
        for p, q in frame.bidegrees():
            space = spaces[(p, q)]
            if space.is_zero():
                continue
            dim = frame.dim(p, q)
            rowmap = {}
            for j, mono in enumerate(frame.mono_basis(p, q)):
                grouped = {}
                for tgt, c in frame.d_flat({mono: ONE}).items():
                    grouped.setdefault(frame.bidegree_of(tgt), {})[tgt] = c
                for bid, part in grouped.items():
                    vec = [ZERO] * frame.dim(*bid)
                    idx = frame.mono_index(*bid)
                    for tgt, c in part.items():
                        vec[idx[tgt]] = c
                    for t, val in enumerate(spaces[bid].reduce(tuple(vec))):
                        if val:
                            rowmap.setdefault((bid, t), [ZERO] * dim)[j] = val
            if rowmap:
                ker = kernel(tuple(tuple(r) for r in rowmap.values()), ncols=dim)
                nxt = subspace_intersection(space, ker)
                if nxt != space:
                    spaces[(p, q)] = nxt
                    changed = True
    return spaces


def module_closure_properties(algebra, acs, module):
    """(annihilates Im N^J, d-stable, splits by bidegree) for a graded module."""
    from transdolbeault.acs import nijenhuis_image
    from transdolbeault.forms import bigraded_frame
    from transdolbeault.linalg import Subspace, kernel

    frame = bigraded_frame(algebra, acs)
    spaces = dict(module.spaces) if hasattr(module, "spaces") else dict(module)
    coords = [frame.w_coords(v) for v in nijenhuis_image(algebra, acs).basis]

    def flat_of(p, q, vec):
        return {m: c for m, c in zip(frame.mono_basis(p, q), vec) if c}

    annihilates = True
    for (p, q), space in spaces.items():
        for vec in space.basis:
            for c in coords:
                if frame.contract_flat(c, flat_of(p, q, vec)):
                    annihilates = False
    d_stable = True
    for (p, q), space in spaces.items():
        for vec in space.basis:
            grouped = {}
            for tgt, c in frame.d_flat(flat_of(p, q, vec)).items():
                grouped.setdefault(frame.bidegree_of(tgt), {})[tgt] = c
            for bid, part in grouped.items():
                pvec = [ZERO] * frame.dim(*bid)
                idx = frame.mono_index(*bid)
                for tgt, c in part.items():
                    pvec[idx[tgt]] = c
                if not spaces[bid].contains(tuple(pvec)):
                    d_stable = False
    # splitting: the ungraded joint kernel on each total degree decomposes into
    # the per-bidegree kernels (contraction/Lie constraints mix bidegrees a
    # priori; J-stability of the distribution is what forbids cross terms)
    splits = True
    dist = getattr(module, "distribution", None)
    if dist is not None:
        f_coords = [frame.w_coords(f) for f in dist.basis]
        f_lie = [frame.lie_coefficients(f) for f in dist.basis]
        for k in range(algebra.dim + 1):
            bids = [(p, k - p) for p in range(k + 1)
                    if frame.dim(p, k - p)]
            offsets, total = {}, 0
            for bid in bids:
                offsets[bid] = total
                total += frame.dim(*bid)
            if not total:
                continue
            rows = {}
            for bid in bids:
                for j, mono in enumerate(frame.mono_basis(*bid)):
                    colidx = offsets[bid] + j
                    for fi, c in enumerate(f_coords):
                        for tgt, val in frame.contract_flat(c, {mono: ONE}).items():
                            rows.setdefault(("i", fi, tgt), [ZERO] * total)[colidx] = val
                    for fi, lco in enumerate(f_lie):
                        for tgt, val in frame.lie_flat(lco, {mono: ONE}).items():
                            rows.setdefault(("l", fi, tgt), [ZERO] * total)[colidx] = val
            if rows:
                joint = kernel(tuple(tuple(r) for r in rows.values()), ncols=total)
            else:
                from transdolbeault.linalg import Subspace as _S
                joint = _S.full(total)
            graded_dim = sum(spaces[bid].rank for bid in bids)
            if joint.rank != graded_dim:
                splits = False
    return annihilates, d_stable, splits
