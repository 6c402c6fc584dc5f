"""Independent oracles used by the test suite.

Each function here derives its answer by a different route than the
library code it checks: faces are enumerated through facet-normal subsets
rather than generator subsets, extreme rays through exhaustive kernel
enumeration, and random smooth cones through explicit unimodular row
operations.  Deliberately slow and simple.
"""

import itertools
import random

from sncdegen._intmat import dot, extreme_rays_brute, mat_rank
from sncdegen.grothring import GrothClass, L, ONE, ZERO
from sncdegen.toriclat import Cone


def dual_rays_brute(cone):
    """Extreme rays of the dual cone by (rank-1)-subset kernel enumeration."""
    return extreme_rays_brute(cone.rays, cone.rank)


def faces_via_facets(cone):
    """All faces of a full-dimensional cone, as frozensets of rays, derived
    from facet-normal subsets: a face is the set of rays on which some
    collection of facet normals vanishes simultaneously."""
    faces = set()
    facets = cone.inequalities
    for size in range(len(facets) + 1):
        for sub in itertools.combinations(facets, size):
            rays = frozenset(r for r in cone.rays
                             if all(dot(a, r) == 0 for a in sub))
            faces.add(rays)
    return faces


def fan_faces_via_facets(fan):
    faces = set()
    for c in fan:
        faces |= faces_via_facets(c)
    return faces


def orbit_class_oracle(fan, direction=None):
    """Toric (or fiber) class by facet-derived face enumeration, with face
    dimension computed by matrix rank rather than by counting generators."""
    total = ZERO
    for face in fan_faces_via_facets(fan):
        if direction is not None and not any(dot(direction, r) >= 1 for r in face):
            continue
        total = total + (L - ONE) ** (fan.rank - mat_rank(list(face)))
    return total


def affine_union_class_oracle(k):
    """[{x_1*...*x_k = 0} in A^k] by literal inclusion-exclusion over the k
    coordinate hyperplanes: a subset S of them meets in A^{k-|S|}."""
    total = ZERO
    for mask in range(1, 1 << k):
        s = mask.bit_count()
        term = L ** (k - s)
        total = total + (term if s % 2 == 1 else -term)
    return total


def random_unimodular_matrix(rng, rank, steps=20):
    """A random element of GL(rank, Z) built from elementary operations."""
    m = [[1 if i == j else 0 for j in range(rank)] for i in range(rank)]
    if rank == 1:
        return [(rng.choice([-1, 1]),)]
    for _ in range(steps):
        i, j = rng.sample(range(rank), 2)
        c = rng.randint(-2, 2)
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        if rng.random() < 0.3:
            m[i], m[j] = m[j], m[i]
        if rng.random() < 0.3:
            m[i] = [-a for a in m[i]]
    return [tuple(row) for row in m]


def random_unimodular_cone(rng, max_rank=5):
    """A random full-dimensional smooth cone: the rows of a random
    GL(rank, Z) matrix."""
    rank = rng.randint(1, max_rank)
    return Cone(random_unimodular_matrix(rng, rank), rank=rank)
