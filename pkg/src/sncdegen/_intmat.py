"""Exact integer vector/matrix helpers shared by the cone machinery.

Everything here works on plain Python ints (arbitrary precision) and tuples;
no floating point is used anywhere.  Vectors are tuples of ints, matrices are
sequences of row tuples.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Vec = tuple[int, ...]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Sequence[int], v: Sequence[int]) -> Vec:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence[int], v: Sequence[int]) -> Vec:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c: int, v: Sequence[int]) -> Vec:
    return tuple(c * a for a in v)


def unit(rank: int, i: int) -> Vec:
    """Standard basis vector with a 1 in position i (0-based)."""
    if not 0 <= i < rank:
        raise ValueError(f"index {i} out of range for rank {rank}")
    return tuple(1 if j == i else 0 for j in range(rank))


def primitive(v: Sequence[int]) -> Vec:
    """Divide a nonzero integer vector by the gcd of its entries."""
    g = math.gcd(*(abs(a) for a in v)) if v else 0
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    return tuple(a // g for a in v)


def mat_rank(rows: Iterable[Sequence[int]]) -> int:
    """Rank of an integer matrix, by fraction-free elimination."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        prow = work[rank]
        for i in range(rank + 1, len(work)):
            f = work[i][col]
            if f:
                p = prow[col]
                work[i] = [p * a - f * b for a, b in zip(work[i], prow)]
        rank += 1
        if rank == len(work):
            break
    return rank


def independent_rows(rows: Sequence[Sequence[int]], target: int) -> list[int]:
    """Indices of up to `target` linearly independent rows, greedily."""
    picked: list[int] = []
    for i, row in enumerate(rows):
        if mat_rank([rows[j] for j in picked] + [row]) > len(picked):
            picked.append(i)
            if len(picked) == target:
                break
    return picked


def inverse_columns_primitive(rows: Sequence[Sequence[int]]) -> list[Vec]:
    """Columns of the inverse of a square integer matrix, as primitive
    integer vectors (each column rescaled by a positive rational).

    Column j of the result pairs positively with row j of the input and to
    zero with every other row.
    """
    m = len(rows)
    aug = [[Fraction(a) for a in row] + [Fraction(int(i == j)) for j in range(m)]
           for i, row in enumerate(rows)]
    for col in range(m):
        pivot = next((i for i in range(col, m) if aug[i][col] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [a / pv for a in aug[col]]
        for i in range(m):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    cols = []
    for j in range(m):
        col = [aug[i][m + j] for i in range(m)]
        denom = math.lcm(*(f.denominator for f in col))
        cols.append(primitive(tuple(int(f * denom) for f in col)))
    return cols


def invariant_factors(rows: Iterable[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors (Smith normal form diagonal) of an
    integer matrix, in divisibility order.
    """
    a = [list(r) for r in rows]
    if not a or not a[0]:
        return []
    nrows, ncols = len(a), len(a[0])
    factors: list[int] = []
    t = 0
    while t < nrows and t < ncols:
        # locate a minimal-magnitude nonzero entry in the trailing block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        # clear the row and column of the pivot
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, nrows):
                q = a[i][t] // a[t][t]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    dirty = True
            for j in range(t + 1, ncols):
                q = a[t][j] // a[t][t]
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j] != 0:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    dirty = True
        # pivot must divide the rest of the block
        pivot = a[t][t]
        culprit = next((i for i in range(t + 1, nrows)
                        if any(x % pivot for x in a[i][t:])), None)
        if culprit is not None:
            a[t] = [x + y for x, y in zip(a[t], a[culprit])]
            continue
        factors.append(abs(pivot))
        t += 1
    return factors


def extreme_rays(ineqs: Sequence[Sequence[int]], rank: int) -> list[Vec]:
    """Extreme rays of the cone {x : <a, x> >= 0 for all a in ineqs}.

    Incremental double description: start from a simplicial subsystem of
    full rank, then insert the remaining inequalities one at a time, keeping
    only extreme rays via the combinatorial adjacency test on active sets.
    The system must be pointed (the inequality rows span rank `rank`);
    otherwise a ValueError is raised.
    """
    rows: list[Vec] = []
    seen = set()
    for a in ineqs:
        p = primitive(a)
        if p not in seen:
            seen.add(p)
            rows.append(p)
    base = independent_rows(rows, rank)
    if len(base) < rank:
        raise ValueError("inequality system is not pointed (rows do not span full rank)")

    rays = inverse_columns_primitive([rows[i] for i in base])
    # evals[k][i] = pairing of ray k with the i-th processed row
    processed = list(base)
    evals = [[dot(rows[i], r) for i in processed] for r in rays]

    for idx in (i for i in range(len(rows)) if i not in set(base)):
        a = rows[idx]
        s = [dot(a, r) for r in rays]
        if all(x >= 0 for x in s):
            processed.append(idx)
            for k, r in enumerate(rays):
                evals[k].append(s[k])
            continue
        zero_masks = []
        for ev in evals:
            mask = 0
            for i, x in enumerate(ev):
                if x == 0:
                    mask |= 1 << i
            zero_masks.append(mask)

        def adjacent(p: int, q: int) -> bool:
            common = zero_masks[p] & zero_masks[q]
            return not any(k != p and k != q and common & zero_masks[k] == common
                           for k in range(len(rays)))

        pos = [k for k, x in enumerate(s) if x > 0]
        neg = [k for k, x in enumerate(s) if x < 0]
        new_rays: list[Vec] = []
        new_evals: list[list[int]] = []
        for k, x in enumerate(s):
            if x >= 0:
                new_rays.append(rays[k])
                new_evals.append(evals[k] + [x])
        for p in pos:
            for q in neg:
                if not adjacent(p, q):
                    continue
                raw = vadd(vscale(-s[q], rays[p]), vscale(s[p], rays[q]))
                g = math.gcd(*(abs(c) for c in raw))
                ray = tuple(c // g for c in raw)
                ev = [(-s[q] * x + s[p] * y) // g for x, y in zip(evals[p], evals[q])]
                new_rays.append(ray)
                new_evals.append(ev + [0])
        processed.append(idx)
        rays, evals = new_rays, new_evals
        if not rays:
            break
    return sorted(set(rays))


def extreme_rays_brute(ineqs: Sequence[Sequence[int]], rank: int) -> list[Vec]:
    """Independent oracle for extreme_rays: enumerate (rank-1)-subsets of the
    inequality rows and keep the one-dimensional kernels that satisfy the
    full system.  Exponential; for tests only.
    """
    import itertools

    rows = [primitive(a) for a in ineqs]
    if mat_rank(rows) < rank:
        raise ValueError("inequality system is not pointed")
    found = set()
    for subset in itertools.combinations(range(len(rows)), rank - 1):
        sub = [rows[i] for i in subset]
        if mat_rank(sub) != rank - 1:
            continue
        v = _kernel_vector(sub, rank)
        for cand in (v, vscale(-1, v)):
            if all(dot(a, cand) >= 0 for a in rows):
                found.add(primitive(cand))
    return sorted(found)


def _kernel_vector(rows: Sequence[Sequence[int]], rank: int) -> Vec:
    """A nonzero integer vector in the kernel of a matrix of rank rank-1."""
    aug = [[Fraction(a) for a in row] for row in rows]
    ncols = rank
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][col]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    free = next(c for c in range(ncols) if c not in pivots)
    sol = [Fraction(0)] * ncols
    sol[free] = Fraction(1)
    for row_i, col in enumerate(pivots):
        sol[col] = -aug[row_i][free]
    denom = math.lcm(*(f.denominator for f in sol))
    return primitive(tuple(int(f * denom) for f in sol))
