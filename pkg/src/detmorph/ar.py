"""Projectives, injectives, the Nakayama functor, transpose and AR translates.

A direct sum of indecomposable projectives ``P(v_1) (+) ... (+) P(v_k)`` is
built with a fixed basis: at vertex ``w`` the basis elements are the pairs
``(k, q)`` with ``q`` a basis path from ``v_k`` to ``w``, listed summand by
summand in path order.  The list ``(v_1, ..., v_k)`` is recorded on the
representation as ``tops``.  Injective sums are duals of projective sums of
the opposite algebra and record ``socles``.

Nakayama functor on projective morphisms: ``nu = D o Hom(-, Lambda)``, so
``nu P(v) = D P_op(v)`` and ``Hom(M, nu P) = D Hom(P, M)`` through the
pairing in :func:`nakayama_pairing`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import linalg as la
from .errors import PreconditionError
from .quiver import BoundQuiverAlgebra, Path
from .rep import (Representation, RepMorphism, cokernel, kernel, zero_rep)


@lru_cache(maxsize=None)
def _layout(alg: BoundQuiverAlgebra, tops: tuple[str, ...]):
    """Per-vertex basis ``[(k, path)]`` and position lookup for a projective sum."""
    basis: dict[str, list[tuple[int, Path]]] = {w: [] for w in alg.vertices}
    for k, v in enumerate(tops):
        for w in alg.vertices:
            basis[w].extend((k, q) for q in alg.paths_between(v, w))
    pos = {w: {item: i for i, item in enumerate(items)} for w, items in basis.items()}
    return basis, pos


def projective_sum(alg: BoundQuiverAlgebra, tops) -> Representation:
    tops = tuple(tops)
    basis, pos = _layout(alg, tops)
    dims = {w: len(basis[w]) for w in alg.vertices}
    maps = {}
    for a in alg.arrows:
        m = la.zeros(dims[a.target], dims[a.source])
        step = (a.source, (a.name,))
        for col, (k, q) in enumerate(basis[a.source]):
            q2 = alg.concat(q, step)
            if q2 is not None:
                m[pos[a.target][(k, q2)], col] = 1
        maps[a.name] = m
    return Representation(alg, dims, maps, tops=tops, check=False)


def indec_projective(alg: BoundQuiverAlgebra, v: str) -> Representation:
    if v not in alg.quiver.vertex_index:
        raise PreconditionError(f"unknown vertex {v}")
    return projective_sum(alg, (v,))


def regular_module(alg: BoundQuiverAlgebra) -> Representation:
    return projective_sum(alg, alg.vertices)


def indec_injective(alg: BoundQuiverAlgebra, v: str) -> Representation:
    """``I(v)``: at ``w`` the dual basis of paths ``w -> v``; arrows strip a leading arrow."""
    if v not in alg.quiver.vertex_index:
        raise PreconditionError(f"unknown vertex {v}")
    basis = {w: alg.paths_between(w, v) for w in alg.vertices}
    pos = {w: {q: i for i, q in enumerate(qs)} for w, qs in basis.items()}
    dims = {w: len(qs) for w, qs in basis.items()}
    maps = {}
    for a in alg.arrows:
        m = la.zeros(dims[a.target], dims[a.source])
        for col, q in enumerate(basis[a.source]):
            if q[1] and q[1][0] == a.name:
                m[pos[a.target][(a.target, q[1][1:])], col] = 1
        maps[a.name] = m
    return Representation(alg, dims, maps, socles=(v,), check=False)


def injective_sum(alg: BoundQuiverAlgebra, socles) -> Representation:
    return dualize(projective_sum(alg.opposite(), tuple(socles)))


def dualize(m: Representation) -> Representation:
    """Vector-space dual, a representation of the opposite algebra."""
    op = m.algebra.opposite()
    maps = {a.name: np.ascontiguousarray(m.maps[a.name].T) for a in m.algebra.arrows}
    return Representation(op, m.dims, maps, tops=m.socles, socles=m.tops, check=False)


def dualize_morphism(f: RepMorphism, source: Representation | None = None,
                     target: Representation | None = None) -> RepMorphism:
    """``Df: D(target) -> D(source)``."""
    src = source or dualize(f.target)
    tgt = target or dualize(f.source)
    return RepMorphism(src, tgt, {v: np.ascontiguousarray(m.T) for v, m in f.maps.items()},
                       check=False)


def morphism_from_generators(P: Representation, M: Representation, images) -> RepMorphism:
    """The map from a projective sum sending the ``k``-th top generator to ``images[k]``."""
    if P.tops is None:
        raise PreconditionError("source has no recorded projective decomposition")
    alg = P.algebra
    basis, _ = _layout(alg, P.tops)
    maps = {}
    for w in alg.vertices:
        cols = [la.matmul(M.path_matrix(q), np.asarray(images[k]).reshape(-1, 1), M.p)
                for k, q in basis[w]]
        maps[w] = np.hstack(cols) if cols else la.zeros(M.dims[w], 0)
    return RepMorphism(P, M, maps, check=False)


def generator_position(alg: BoundQuiverAlgebra, tops: tuple[str, ...], k: int) -> int:
    _, pos = _layout(alg, tops)
    return pos[tops[k]][(k, (tops[k], ()))]


def generator_images(f: RepMorphism) -> list[np.ndarray]:
    P = f.source
    if P.tops is None:
        raise PreconditionError("source has no recorded projective decomposition")
    return [f.maps[v][:, generator_position(P.algebra, P.tops, k)] for k, v in enumerate(P.tops)]


def hom_dual(f: RepMorphism) -> RepMorphism:
    """``Hom(f, Lambda)`` for ``f: P -> Q`` between projective sums: ``Q_op -> P_op``."""
    P, Q = f.source, f.target
    if P.tops is None or Q.tops is None:
        raise PreconditionError("unrecorded projective decomposition")
    alg = f.algebra
    op = alg.opposite()
    imgs = generator_images(f)
    _, qpos = _layout(alg, Q.tops)
    p_op = projective_sum(op, P.tops)
    q_op = projective_sum(op, Q.tops)
    _, ppos_op = _layout(op, P.tops)
    gens = []
    for l, jl in enumerate(Q.tops):
        vec = np.zeros(p_op.dims[jl], dtype=np.int64)
        for k, ik in enumerate(P.tops):
            for q in alg.paths_between(jl, ik):
                vec[ppos_op[jl][(k, alg.op_path(q))]] = imgs[k][qpos[ik][(l, q)]]
        gens.append(vec)
    return morphism_from_generators(q_op, p_op, gens)


def nakayama(f: RepMorphism) -> RepMorphism:
    """``nu f: nu P -> nu Q`` for ``f: P -> Q`` between recorded projective sums."""
    return dualize_morphism(hom_dual(f))


def nakayama_object(P: Representation) -> Representation:
    if P.tops is None:
        raise PreconditionError("unrecorded projective decomposition")
    return injective_sum(P.algebra, P.tops)


def nakayama_pairing(psi: RepMorphism, beta: RepMorphism) -> int:
    """``<psi, beta>`` for ``psi: Y -> nu P`` and ``beta: P -> Y``.

    Sum over summands ``k`` of the coefficient of the dual of the trivial
    path at the top of summand ``k`` in ``(psi o beta)(generator_k)``.
    """
    P = beta.source
    alg = P.algebra
    comp = psi @ beta
    total = 0
    for k, v in enumerate(P.tops):
        col = generator_position(alg, P.tops, k)
        row = generator_position(alg.opposite(), P.tops, k)
        total += int(comp.maps[v][row, col])
    return total % alg.p


# covers and presentations

def radical_bases(m: Representation) -> dict[str, np.ndarray]:
    p = m.p
    out = {}
    for w in m.vertices:
        cols = [m.maps[a.name] for a in m.algebra.arrows if a.target == w and m.maps[a.name].shape[1]]
        if cols and m.dims[w]:
            out[w] = la.canonical_basis(np.hstack(cols), p)
        else:
            out[w] = la.zeros(m.dims[w], 0)
    return out


def top_dims(m: Representation) -> dict[str, int]:
    rad = radical_bases(m)
    return {w: m.dims[w] - rad[w].shape[1] for w in m.vertices}


def projective_cover(m: Representation) -> RepMorphism:
    """``P(top m) -> m``; generators are standard vectors completing rad m."""
    rad = radical_bases(m)
    tops, images = [], []
    for w in m.vertices:
        comp = la.complement_basis(rad[w], m.dims[w], m.p)
        for j in range(comp.shape[1]):
            tops.append(w)
            images.append(comp[:, j])
    P = projective_sum(m.algebra, tuple(tops))
    return morphism_from_generators(P, m, images)


@dataclass
class Presentation:
    """``P1 --differential--> P0 --cover--> M -> 0`` with minimal projectives."""

    differential: RepMorphism
    cover: RepMorphism

    @property
    def p0(self) -> Representation:
        return self.cover.source

    @property
    def p1(self) -> Representation:
        return self.differential.source


def minimal_projective_presentation(m: Representation) -> Presentation:
    cover = projective_cover(m)
    k, incl = kernel(cover)
    c1 = projective_cover(k)
    diff = incl @ c1
    return Presentation(RepMorphism(c1.source, cover.source, diff.maps, check=False), cover)


def transpose(m: Representation) -> Representation:
    """``Tr m``: cokernel of ``Hom(P0, Lambda) -> Hom(P1, Lambda)``; a module over the opposite."""
    pres = minimal_projective_presentation(m)
    return cokernel(hom_dual(pres.differential))[0]


def tau(m: Representation) -> Representation:
    return dualize(transpose(m))


def tau_inverse(m: Representation) -> Representation:
    return transpose(dualize(m))


def is_projective(m: Representation) -> bool:
    cover = projective_cover(m)
    return cover.source.total_dim == m.total_dim


def is_injective(m: Representation) -> bool:
    return is_projective(dualize(m))


def zero_module(alg: BoundQuiverAlgebra) -> Representation:
    return zero_rep(alg)
