"""Exact lattice-polyhedral machinery for the toric resolution of the
local model  t*y = z_1*...*z_n.

The ambient lattice is N = Z^{n+1} with standard basis e_1, ..., e_{n+1};
the model cone sigma is generated by e_1, ..., e_n together with
f_i = e_i + e_{n+1}.  The affine variety Spec k[sigma^v ∩ M] is exactly
the hypersurface t*y = z_1...z_n, and subdividing sigma into the slabs

    sigma_k = cone(f_1, ..., f_k, e_k, ..., e_n),
    x_1 + ... + x_{k-1} <= x_{n+1} <= x_1 + ... + x_k,

resolves it with a reduced simple normal crossing central fiber.  This
module provides the cones, fans and chart presentations for that story,
plus exact certification routines: cone duality by the double description
method, unimodularity by Smith normal form, a bounded-exhaustive partition
check, semistability of the fiber direction, and orbit-cone class counting
in Z[L].  Everything is integer-exact; numpy is used only for the bounded
integral-point sweep (with entries far below the int64 range).
"""

from __future__ import annotations

import functools
import itertools
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from ._intmat import (
    Vec,
    dot,
    extreme_rays,
    invariant_factors,
    mat_rank,
    primitive,
    unit,
    vadd,
    vscale,
    vsub,
)
from .grothring import GrothClass, L, ONE, ZERO

__all__ = [
    "LatticeVector",
    "Cone",
    "Fan",
    "Coordinate",
    "ChartPresentation",
    "FiberCheck",
    "unit_vector",
    "dual_cone",
    "contains",
    "greedy_decompose",
    "is_smooth",
    "model_cone",
    "sigma_subcone",
    "resolution_fan",
    "dual_generators",
    "verify_partition",
    "semistable_fiber_check",
    "toric_class",
    "fiber_class",
    "blowup_chart_sequence",
    "singular_model_chart",
]

#: A lattice vector is a tuple of exact integers; its length is the ambient rank.
LatticeVector = Vec


def unit_vector(rank: int, i: int) -> LatticeVector:
    """Standard basis vector e_{i+1} (0-based index i) in Z^rank."""
    return unit(rank, i)


def _as_vec(v: Sequence[int]) -> Vec:
    return tuple(operator.index(c) for c in v)


class Cone:
    """A strongly convex rational polyhedral cone, stored by a canonical
    list of primitive extreme-ray generators.

    Construction canonicalizes: generators are made primitive, duplicates
    and non-extreme generators are dropped, and the result is sorted.  For
    full-dimensional cones the facet normals are computed (or, when the
    caller supplies an `inequalities` cache, cross-validated against the
    generators: the two descriptions must cut out the same cone).  Cones
    of lower dimension are supported only when their generators are
    linearly independent, which covers every face arising here.

    Instances are value objects: equality and hashing go through the
    canonical (rank, rays) pair, and all derived data is cached.
    """

    __slots__ = ("_rank", "_rays", "_dim", "_inequalities", "_dual", "_smooth")

    def __init__(self, rays: Iterable[Sequence[int]], rank: Optional[int] = None,
                 inequalities: Optional[Iterable[Sequence[int]]] = None):
        ray_list = [_as_vec(r) for r in rays]
        if rank is None:
            if not ray_list:
                raise ValueError("rank is required for a cone with no generators")
            rank = len(ray_list[0])
        if rank < 1:
            raise ValueError(f"ambient rank must be positive, got {rank}")
        if any(len(r) != rank for r in ray_list):
            raise ValueError("all generators must have the ambient rank as length")
        prim = sorted({primitive(r) for r in ray_list})
        self._rank = rank
        self._dim = mat_rank(prim)
        self._dual = None
        self._smooth = None

        if self._dim == rank:
            facets = extreme_rays(prim, rank)
            if mat_rank(facets) < rank:
                raise ValueError("cone is not strongly convex (contains a line)")
            self._rays = tuple(r for r in prim if self._is_extreme(r, facets))
            if inequalities is None:
                self._inequalities = tuple(facets)
            else:
                cache = sorted({primitive(a) for a in inequalities})
                for a in cache:
                    for r in self._rays:
                        if dot(a, r) < 0:
                            raise ValueError(
                                f"cached inequality {a} fails on generator {r}")
                if sorted(extreme_rays(cache, rank)) != list(self._rays):
                    raise ValueError(
                        "cached inequalities cut out a different cone than the generators")
                self._inequalities = tuple(cache)
        else:
            if inequalities is not None:
                raise ValueError(
                    "inequality caches are supported for full-dimensional cones only")
            if len(prim) != self._dim:
                raise ValueError(
                    "lower-dimensional cones require linearly independent generators")
            self._rays = tuple(prim)
            self._inequalities = None

    def _is_extreme(self, ray: Vec, facets: Sequence[Vec]) -> bool:
        active = [a for a in facets if dot(a, ray) == 0]
        return mat_rank(active) == self._rank - 1

    # -- basic data -----------------------------------------------------

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def rays(self) -> tuple[Vec, ...]:
        return self._rays

    @property
    def inequalities(self) -> Optional[tuple[Vec, ...]]:
        """Facet normals (full-dimensional cones only), each pairing >= 0
        with every point of the cone."""
        return self._inequalities

    def contains(self, v: Sequence[int]) -> bool:
        """Exact membership test for an integer vector."""
        vec = _as_vec(v)
        if len(vec) != self._rank:
            raise ValueError("vector length must equal the ambient rank")
        if self._inequalities is not None:
            return all(dot(a, vec) >= 0 for a in self._inequalities)
        coeffs = _solve_in_span(self._rays, vec)
        return coeffs is not None and all(c >= 0 for c in coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cone):
            return NotImplemented
        return self._rank == other._rank and self._rays == other._rays

    def __hash__(self) -> int:
        return hash(("Cone", self._rank, self._rays))

    def __repr__(self) -> str:
        return f"Cone(rank={self._rank}, rays={list(self._rays)})"


def _solve_in_span(rays: Sequence[Vec], v: Vec) -> Optional[list[Fraction]]:
    """Coefficients expressing v over linearly independent rays, or None
    if v is outside their span."""
    if not rays:
        return [] if all(c == 0 for c in v) else None
    cols = len(rays)
    aug = [[Fraction(rays[j][i]) for j in range(cols)] + [Fraction(v[i])]
           for i in range(len(v))]
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        piv = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][col]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    if len(pivots) < cols:
        return None  # dependent columns; callers guarantee independence
    for i in range(r, len(aug)):
        if aug[i][cols] != 0:
            return None
    sol = [Fraction(0)] * cols
    for row_i, col in enumerate(pivots):
        sol[col] = aug[row_i][cols]
    return sol


def dual_cone(c: Cone) -> Cone:
    """The dual cone {m in M : <m, x> >= 0 for all x in c}, with primitive
    irredundant generators, computed by the double description method.
    Requires a full-dimensional input (then the dual is strongly convex,
    and duality is an involution on canonical generator sets).
    """
    if c.dim < c.rank:
        raise ValueError("dual_cone requires a full-dimensional cone")
    if c._dual is None:
        c._dual = Cone(extreme_rays(c.rays, c.rank), rank=c.rank)
    return c._dual


def contains(c: Cone, v: Sequence[int]) -> bool:
    """Module-level alias for Cone.contains."""
    return c.contains(v)


def is_smooth(c: Cone) -> bool:
    """True iff the generators extend to a Z-basis of the ambient lattice:
    the Smith normal form of the generator matrix has all invariant
    factors equal to 1, with one factor per generator.
    """
    if c._smooth is None:
        factors = invariant_factors(c.rays)
        c._smooth = len(factors) == len(c.rays) and all(f == 1 for f in factors)
    return c._smooth


class Fan:
    """A fan presented by its maximal cones.

    Construction verifies the fan axiom exactly: every pairwise
    intersection of maximal cones is a common face of both, established
    through the facet descriptions (so all maximal cones must be
    full-dimensional).
    """

    __slots__ = ("_rank", "_max_cones")

    def __init__(self, max_cones: Iterable[Cone], rank: int):
        cones = tuple(max_cones)
        if not cones:
            raise ValueError("a fan needs at least one maximal cone")
        for c in cones:
            if c.rank != rank:
                raise ValueError("all cones must share the ambient rank")
            if c.inequalities is None:
                raise ValueError("maximal cones must be full-dimensional")
        for a, b in itertools.combinations(cones, 2):
            if not _common_face(a, b):
                raise ValueError(
                    f"cones do not meet in a common face: {a!r} and {b!r}")
        self._rank = rank
        self._max_cones = cones

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def max_cones(self) -> tuple[Cone, ...]:
        return self._max_cones

    def rays(self) -> tuple[Vec, ...]:
        """All extreme rays of the fan, deduplicated, in canonical order."""
        return tuple(sorted({r for c in self._max_cones for r in c.rays}))

    def __iter__(self):
        return iter(self._max_cones)

    def __len__(self) -> int:
        return len(self._max_cones)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Fan):
            return NotImplemented
        return (self._rank == other._rank
                and sorted(c.rays for c in self._max_cones)
                == sorted(c.rays for c in other._max_cones))

    def __hash__(self) -> int:
        return hash(("Fan", self._rank, tuple(sorted(c.rays for c in self._max_cones))))

    def __repr__(self) -> str:
        return f"Fan(rank={self._rank}, max_cones={len(self._max_cones)})"

    # -- serialization --------------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical JSON form: the deduplicated ray list plus each
        maximal cone as a sorted list of indices into it."""
        rays = self.rays()
        index = {r: i for i, r in enumerate(rays)}
        return {
            "rank": self._rank,
            "rays": [list(r) for r in rays],
            "max_cones": [sorted(index[r] for r in c.rays) for c in self._max_cones],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Fan":
        rays = [tuple(r) for r in data["rays"]]
        cones = [Cone([rays[i] for i in idxs], rank=data["rank"])
                 for idxs in data["max_cones"]]
        return cls(cones, rank=data["rank"])


def _face_of(cone: Cone, face_rays: Sequence[Vec]) -> bool:
    """Is the cone spanned by face_rays a face of `cone`?  Compares against
    the minimal face of `cone` containing it (the one cut out by all facet
    normals vanishing on face_rays)."""
    active = [a for a in cone.inequalities
              if all(dot(a, r) == 0 for r in face_rays)]
    cut = sorted(r for r in cone.rays if all(dot(a, r) == 0 for a in active))
    return cut == sorted(face_rays)


def _common_face(a: Cone, b: Cone) -> bool:
    meet = extreme_rays(list(a.inequalities) + list(b.inequalities), a.rank)
    return _face_of(a, meet) and _face_of(b, meet)


# -- the model cone and its subdivision ---------------------------------


def _f_vector(rank: int, i: int) -> Vec:
    return vadd(unit(rank, i), unit(rank, rank - 1))


@functools.lru_cache(maxsize=None)
def model_cone(n: int) -> Cone:
    """The cone sigma = cone(e_1, ..., e_n, f_1, ..., f_n) in Z^{n+1},
    whose affine toric variety is the hypersurface t*y = z_1*...*z_n."""
    if n < 1:
        raise ValueError(f"the model needs n >= 1, got {n}")
    rank = n + 1
    rays = [unit(rank, i) for i in range(n)] + [_f_vector(rank, i) for i in range(n)]
    return Cone(rays, rank=rank)


@functools.lru_cache(maxsize=None)
def sigma_subcone(n: int, k: int) -> Cone:
    """The k-th slab cone sigma_k = cone(f_1, ..., f_k, e_k, ..., e_n),
    carrying its defining inequality cache
    x_1 + ... + x_{k-1} <= x_{n+1} <= x_1 + ... + x_k alongside x_i >= 0.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    rank = n + 1
    rays = [_f_vector(rank, i) for i in range(k)] + [unit(rank, i) for i in range(k - 1, n)]
    lower = vsub(unit(rank, n), _ones_partial(rank, k - 1))
    upper = vsub(_ones_partial(rank, k), unit(rank, n))
    ineqs = [unit(rank, i) for i in range(n)] + [lower, upper]
    return Cone(rays, rank=rank, inequalities=ineqs)


def _ones_partial(rank: int, count: int) -> Vec:
    """e_1* + ... + e_count* as a vector in Z^rank."""
    return tuple(1 if i < count else 0 for i in range(rank))


@functools.lru_cache(maxsize=None)
def resolution_fan(n: int) -> Fan:
    """The subdivision of the model cone into the slabs sigma_1, ..., sigma_n.
    Every maximal cone is unimodular, so the associated toric variety is a
    resolution of the model hypersurface."""
    if n < 1:
        raise ValueError(f"the model needs n >= 1, got {n}")
    return Fan([sigma_subcone(n, k) for k in range(1, n + 1)], rank=n + 1)


def dual_generators(n: int) -> list[Vec]:
    """The n+2 canonical generators of the dual of the model cone, in the
    order e_1*, ..., e_n*, e_{n+1}*, e_1* + ... + e_n* - e_{n+1}*.
    (For n >= 2 these are exactly the extreme rays of dual_cone(model_cone(n)).)
    """
    if n < 1:
        raise ValueError(f"the model needs n >= 1, got {n}")
    rank = n + 1
    last = tuple([1] * n + [-1])
    return [unit(rank, i) for i in range(rank)] + [last]


def greedy_decompose(v: Sequence[int], generators: Sequence[Sequence[int]]) -> Optional[list[int]]:
    """Express a lattice point of the dual model cone as a nonnegative
    integer combination of the n+2 canonical dual generators.

    The decomposition follows the sign of the last coordinate a_{n+1}:
    when a_{n+1} >= 0 the point is a combination of e_1*, ..., e_{n+1}*
    directly; when a_{n+1} < 0, subtracting -a_{n+1} copies of
    e_1* + ... + e_n* - e_{n+1}* lands in the positive orthant.  Returns
    None when v lies outside the dual cone (some defining inequality
    a_i >= 0 or a_i + a_{n+1} >= 0 fails).  The expansion is re-verified
    exactly before returning.
    """
    vec = _as_vec(v)
    n = len(vec) - 1
    if n < 1:
        raise ValueError("vectors must have length at least 2")
    expected = dual_generators(n)
    if [_as_vec(g) for g in generators] != expected:
        raise ValueError("generators must be the canonical dual generators, in order")
    body, last = vec[:n], vec[n]
    if any(a < 0 for a in body) or any(a + last < 0 for a in body):
        return None
    if last >= 0:
        coeffs = list(body) + [last, 0]
    else:
        coeffs = [a + last for a in body] + [0, -last]
    acc = (0,) * (n + 1)
    for c, g in zip(coeffs, expected):
        acc = vadd(acc, vscale(c, g))
    if acc != vec or any(c < 0 for c in coeffs):
        raise AssertionError(f"greedy expansion failed to reproduce {vec}")
    return coeffs


# -- certification ------------------------------------------------------


def verify_partition(f: Fan, parent: Cone, bound: int = 4) -> bool:
    """Certify that the maximal cones of f partition the parent cone:

    (a) every maximal cone is contained in the parent,
    (b) every pairwise intersection of maximal cones is a common face,
    (c) every integral point of the parent with coordinates of absolute
        value <= bound lies in at least one maximal cone (bounded
        exhaustive sweep; restricted to the nonnegative orthant when the
        parent lies inside it).

    All three checks are exact; the sweep is vectorized over int64, which
    is ample for the bounds in scope.
    """
    if parent.inequalities is None:
        raise ValueError("verify_partition requires a full-dimensional parent")
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    for c in f:
        if any(not parent.contains(r) for r in c.rays):
            return False
    for a, b in itertools.combinations(f.max_cones, 2):
        if not _common_face(a, b):
            return False
    return _sweep_covered(f, parent, bound)


def _sweep_covered(f: Fan, parent: Cone, bound: int) -> bool:
    m = parent.rank
    lo = 0 if all(c >= 0 for r in parent.rays for c in r) else -bound
    base = bound - lo + 1
    total = base ** m
    parent_rows = np.array(parent.inequalities, dtype=np.int64)
    cone_rows = [np.array(c.inequalities, dtype=np.int64) for c in f]
    chunk = 1 << 18
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        pts = np.empty((len(idx), m), dtype=np.int64)
        for col in range(m - 1, -1, -1):
            pts[:, col] = idx % base + lo
            idx //= base
        inside = np.all(pts @ parent_rows.T >= 0, axis=1)
        if not inside.any():
            continue
        pts = pts[inside]
        covered = np.zeros(len(pts), dtype=bool)
        for rows in cone_rows:
            todo = ~covered
            if not todo.any():
                break
            covered[todo] = np.all(pts[todo] @ rows.T >= 0, axis=1)
        if not covered.all():
            return False
    return True


@dataclass(frozen=True)
class FiberCheck:
    """Semistability report for the fiber of a monomial direction."""

    reduced: bool
    smooth: bool
    snc: bool

    def to_json_dict(self) -> dict:
        return {"reduced": self.reduced, "smooth": self.smooth, "snc": self.snc}


def semistable_fiber_check(f: Fan, direction: Sequence[int]) -> FiberCheck:
    """Check that the fiber of the monomial with exponent `direction` over
    zero is reduced with simple normal crossing support:

    * reduced  — every ray pairing positively with the direction pairs to
      exactly 1 (multiplicity-one components);
    * smooth   — every maximal cone is unimodular;
    * snc      — both (smooth toric ambient + reduced invariant divisors).
    """
    d = _as_vec(direction)
    if len(d) != f.rank:
        raise ValueError("direction must live in the dual lattice of the fan")
    pairings = [dot(d, r) for r in f.rays()]
    reduced = all(p == 1 for p in pairings if p > 0)
    smooth = all(is_smooth(c) for c in f)
    return FiberCheck(reduced=reduced, smooth=smooth, snc=reduced and smooth)


def _face_subsets(f: Fan) -> set[frozenset[Vec]]:
    """All faces of all maximal cones of a smooth fan, as ray subsets.
    Smooth cones are simplicial, so faces = subsets of generators."""
    faces: set[frozenset[Vec]] = set()
    for c in f:
        if not is_smooth(c):
            raise ValueError(f"orbit counting requires smooth cones, got {c!r}")
        rays = c.rays
        for size in range(len(rays) + 1):
            for sub in itertools.combinations(rays, size):
                faces.add(frozenset(sub))
    return faces


def toric_class(f: Fan) -> GrothClass:
    """Class of the toric variety of the fan in Z[L], by orbit-cone
    correspondence: each face of dimension j contributes a torus orbit
    (L-1)^{rank-j}."""
    total = ZERO
    for face in _face_subsets(f):
        total = total + (L - ONE) ** (f.rank - len(face))
    return total


def fiber_class(f: Fan, direction: Sequence[int]) -> GrothClass:
    """Class of the fiber over zero of the monomial with exponent
    `direction`: the orbit sum restricted to faces meeting the support of
    the monomial's zero divisor (faces containing a ray pairing >= 1 with
    the direction)."""
    d = _as_vec(direction)
    if len(d) != f.rank:
        raise ValueError("direction must live in the dual lattice of the fan")
    total = ZERO
    for face in _face_subsets(f):
        if any(dot(d, r) >= 1 for r in face):
            total = total + (L - ONE) ** (f.rank - len(face))
    return total


# -- chart presentations ------------------------------------------------


@dataclass(frozen=True)
class Coordinate:
    """A named affine coordinate given by its monomial exponent vector."""

    name: str
    monomial: Vec

    def __post_init__(self):
        object.__setattr__(self, "monomial", _as_vec(self.monomial))


@dataclass(frozen=True)
class ChartPresentation:
    """A symbolic affine chart: named coordinate monomials in the dual
    lattice M, plus an optional binomial relation prod(left) = prod(right)
    given by multisets of coordinate indices.

    The relation is validated on construction as an identity of lattice
    vectors: the sum of the left monomials equals the sum of the right
    monomials.
    """

    coordinates: tuple[Coordinate, ...]
    relation: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None

    def __post_init__(self):
        coords = tuple(self.coordinates)
        object.__setattr__(self, "coordinates", coords)
        if not coords:
            raise ValueError("a chart needs at least one coordinate")
        rank = len(coords[0].monomial)
        if any(len(c.monomial) != rank for c in coords):
            raise ValueError("all monomials must share the ambient rank")
        if self.relation is not None:
            left, right = self.relation
            left, right = tuple(left), tuple(right)
            object.__setattr__(self, "relation", (left, right))
            for idx in left + right:
                if not 0 <= idx < len(coords):
                    raise ValueError(f"relation index {idx} out of range")
            lsum = functools.reduce(vadd, (coords[i].monomial for i in left),
                                    (0,) * rank)
            rsum = functools.reduce(vadd, (coords[i].monomial for i in right),
                                    (0,) * rank)
            if lsum != rsum:
                raise ValueError(
                    f"relation is not a lattice identity: {lsum} != {rsum}")

    @property
    def rank(self) -> int:
        return len(self.coordinates[0].monomial)

    def monomials(self) -> tuple[Vec, ...]:
        return tuple(c.monomial for c in self.coordinates)

    def monomial_cone(self) -> Cone:
        """The cone generated by the coordinate monomials (canonicalized)."""
        return Cone(self.monomials(), rank=self.rank)

    def render_relation(self) -> Optional[str]:
        if self.relation is None:
            return None
        left, right = self.relation
        fmt = lambda idxs: "*".join(self.coordinates[i].name for i in idxs) or "1"
        return f"{fmt(left)} = {fmt(right)}"

    def to_json_dict(self) -> dict:
        data: dict = {
            "coords": [{"name": c.name, "monomial": list(c.monomial)}
                       for c in self.coordinates],
        }
        if self.relation is not None:
            data["relation"] = {"left": list(self.relation[0]),
                                "right": list(self.relation[1])}
        else:
            data["relation"] = None
        return data

    @classmethod
    def from_json_dict(cls, data: dict) -> "ChartPresentation":
        coords = tuple(Coordinate(c["name"], tuple(c["monomial"]))
                       for c in data["coords"])
        rel = data.get("relation")
        relation = None if rel is None else (tuple(rel["left"]), tuple(rel["right"]))
        return cls(coordinates=coords, relation=relation)


def singular_model_chart(n: int) -> ChartPresentation:
    """The starting presentation of the model: coordinates z_1, ..., z_n,
    t, y with monomials e_1*, ..., e_n*, e_{n+1}*, e_1*+...+e_n*-e_{n+1}*
    and the defining relation t*y = z_1*...*z_n."""
    if n < 1:
        raise ValueError(f"the model needs n >= 1, got {n}")
    rank = n + 1
    coords = [Coordinate(f"z{i + 1}", unit(rank, i)) for i in range(n)]
    coords.append(Coordinate("t", unit(rank, n)))
    coords.append(Coordinate("y", tuple([1] * n + [-1])))
    return ChartPresentation(
        coordinates=tuple(coords),
        relation=((n, n + 1), tuple(range(n))),
    )


def _residual_monomial(rank: int, j: int) -> Vec:
    """Monomial of the residual coordinate after j blow-up steps:
    e_{n+1}* - e_1* - ... - e_j*."""
    return vsub(unit(rank, rank - 1), _ones_partial(rank, j))


def blowup_chart_sequence(n: int) -> list[ChartPresentation]:
    """Replay the resolution as a sequence of n-1 blow-ups, returning the
    n smooth charts U_1, ..., U_n.

    Step k blows up the locus where the residual coordinate t_{k-1} (with
    t_0 = t) and z_k vanish together.  In the chart U_k the substitution
    z_k = t_{k-1} * z_k' turns the running relation into the solved form
    y = z_k' * z_{k+1} * ... * z_n; the residual chart keeps z_k and
    continues with t_k = t_{k-1} / z_k.  After n-1 steps the residual
    chart is itself smooth with relation t_{n-1} * y = z_n, and is
    returned as U_n.

    Coordinate naming: "t" (residual, step 0) then "t1", "t2", ...;
    original coordinates "z1", ..., "zn" and "y"; the substituted
    coordinate at step k is "zk'".  The coordinate monomials of U_k
    generate exactly the dual cone of sigma_k.
    """
    if n < 2:
        raise ValueError(f"the blow-up sequence needs n >= 2, got {n}")
    rank = n + 1
    y_mono = tuple([1] * n + [-1])
    charts = []
    for k in range(1, n):
        t_name = "t" if k == 1 else f"t{k - 1}"
        coords = [Coordinate(t_name, _residual_monomial(rank, k - 1))]
        coords += [Coordinate(f"z{i}", unit(rank, i - 1)) for i in range(1, k)]
        coords.append(Coordinate(f"z{k}'",
                                 vsub(_ones_partial(rank, k), unit(rank, n))))
        coords += [Coordinate(f"z{i}", unit(rank, i - 1)) for i in range(k + 1, n + 1)]
        coords.append(Coordinate("y", y_mono))
        # y = z_k' * z_{k+1} * ... * z_n ; coordinate k holds z_k'
        charts.append(ChartPresentation(
            coordinates=tuple(coords),
            relation=((n + 1,), tuple(range(k, n + 1))),
        ))
    final_name = "t" if n == 1 else f"t{n - 1}"
    coords = [Coordinate(final_name, _residual_monomial(rank, n - 1))]
    coords += [Coordinate(f"z{i}", unit(rank, i - 1)) for i in range(1, n + 1)]
    coords.append(Coordinate("y", y_mono))
    # t_{n-1} * y = z_n
    charts.append(ChartPresentation(
        coordinates=tuple(coords),
        relation=((0, n + 1), (n,)),
    ))
    return charts
