"""Brute-force checks for determination on enumerable families of modules."""

from __future__ import annotations

import itertools
from typing import Iterable

import numpy as np

from . import linalg as la
from .errors import PreconditionError
from .quiver import BoundQuiverAlgebra
from .rep import (Representation, RepMorphism, hom_space, is_indecomposable, is_isomorphic,
                  solve_factorization)

DEFAULT_MODULE_CAP = 200_000
DEFAULT_MORPHISM_CAP = 10_000


def _iso_invariant(m: Representation) -> tuple:
    return (m.dim_vector, tuple(la.rank(m.path_matrix(q), m.p) for q in m.algebra.paths))


def enumerate_test_modules(alg: BoundQuiverAlgebra, max_dims: dict[str, int],
                           cap: int = DEFAULT_MODULE_CAP) -> list[Representation]:
    """All modules with ``dims[v] <= max_dims[v]``, one per isomorphism class."""
    p = alg.p
    bounds = [int(max_dims.get(v, 0)) for v in alg.vertices]
    dim_vectors = list(itertools.product(*(range(b + 1) for b in bounds)))
    total = 0
    for dv in dim_vectors:
        d = dict(zip(alg.vertices, dv))
        total += p ** sum(d[a.target] * d[a.source] for a in alg.arrows)
    if total > cap:
        raise PreconditionError(
            f"{total} arrow-matrix assignments exceed the cap {cap}; use smaller dimension bounds")
    buckets: dict[tuple, list[Representation]] = {}
    found: list[Representation] = []
    for dv in dim_vectors:
        d = dict(zip(alg.vertices, dv))
        shapes = [(d[a.target], d[a.source]) for a in alg.arrows]
        sizes = [r * c for r, c in shapes]
        for entries in itertools.product(range(p), repeat=sum(sizes)):
            maps, off = {}, 0
            for a, (r, c), s in zip(alg.arrows, shapes, sizes):
                maps[a.name] = np.array(entries[off: off + s], dtype=np.int64).reshape(r, c)
                off += s
            try:
                m = Representation(alg, d, maps)
            except PreconditionError:
                continue
            key = _iso_invariant(m)
            bucket = buckets.setdefault(key, [])
            if any(is_isomorphic(r, m) is not None for r in bucket):
                continue
            bucket.append(m)
            found.append(m)
    return found


def enumerate_indecomposables(alg: BoundQuiverAlgebra, max_dims: dict[str, int],
                              cap: int = DEFAULT_MODULE_CAP) -> list[Representation]:
    return [m for m in enumerate_test_modules(alg, max_dims, cap) if is_indecomposable(m)]


def enumerate_morphisms(X: Representation, Y: Representation,
                        cap: int = DEFAULT_MORPHISM_CAP) -> Iterable[RepMorphism]:
    """Linear combinations of the Hom basis in lexicographic coefficient order, at most ``cap``."""
    space = hom_space(X, Y)
    for k, coeffs in enumerate(itertools.product(range(X.p), repeat=space.dim)):
        if k >= cap:
            return
        yield space.element(coeffs)


def satisfies_composite_condition(a_prime: RepMorphism, a: RepMorphism, C: Representation) -> bool:
    """For every ``phi: C -> X'`` the composite ``a' phi`` factors through ``a``.

    Checking a basis of Hom(C, X') suffices since the factoring maps form a subspace.
    """
    return all(solve_factorization(a, a_prime @ phi) is not None
               for phi in hom_space(C, a_prime.source).basis)


def refute_determination(a: RepMorphism, C: Representation, family: list[Representation],
                         cap: int = DEFAULT_MORPHISM_CAP) -> RepMorphism | None:
    """A morphism ``a': X' -> Y`` (``X'`` in the family) satisfying the composite
    condition for ``C`` without factoring through ``a``; ``None`` if the search finds none."""
    Y = a.target
    for Xp in family:
        if Xp.algebra is not a.algebra:
            raise PreconditionError("family module over a different algebra")
        for ap in enumerate_morphisms(Xp, Y, cap):
            if ap.is_zero():
                continue
            if not satisfies_composite_condition(ap, a, C):
                continue
            if solve_factorization(a, ap) is None:
                return ap
    return None


def random_representation(alg: BoundQuiverAlgebra, dims: dict[str, int], seed: int) -> Representation:
    if alg.relations:
        raise PreconditionError("random generation is only supported without relations")
    rng = np.random.default_rng(seed)
    d = {v: int(dims.get(v, 0)) for v in alg.vertices}
    maps = {a.name: rng.integers(0, alg.p, size=(d[a.target], d[a.source]), dtype=np.int64)
            for a in alg.arrows}
    return Representation(alg, d, maps)


def random_morphism(X: Representation, Y: Representation, seed: int) -> RepMorphism:
    space = hom_space(X, Y)
    rng = np.random.default_rng(seed)
    return space.element(rng.integers(0, X.p, size=space.dim, dtype=np.int64))


def projective_points(X: Representation, Y: Representation) -> list[RepMorphism]:
    """Zero plus one nonzero morphism per line in Hom(X, Y) (first nonzero coefficient 1)."""
    space = hom_space(X, Y)
    out = [space.element(np.zeros(space.dim, dtype=np.int64))]
    for coeffs in itertools.product(range(X.p), repeat=space.dim):
        nz = [c for c in coeffs if c]
        if nz and nz[0] == 1:
            out.append(space.element(coeffs))
    return out


def all_isomorphic(xs: list[Representation], ys: list[Representation]) -> bool:
    """Multiset equality up to isomorphism."""
    if len(xs) != len(ys):
        return False
    used = [False] * len(ys)
    for x in xs:
        for j, y in enumerate(ys):
            if not used[j] and is_isomorphic(x, y) is not None:
                used[j] = True
                break
        else:
            return False
    return True
