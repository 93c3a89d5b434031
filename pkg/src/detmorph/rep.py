"""Representations of bound quivers and their morphisms.

A representation assigns a dimension to each vertex and a matrix to each
arrow ``a: u -> v`` of shape ``(dims[v], dims[u])``.  A morphism ``f: M -> N``
is one matrix per vertex with ``N_a f_u = f_v M_a`` for every arrow.
Morphisms are flattened to vectors vertex by vertex (declaration order),
each matrix row-major; Hom spaces are kernels of the intertwining system in
that coordinate system.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import linalg as la
from .errors import InputError, PreconditionError
from .fdalg import FDAlgebra
from .quiver import BoundQuiverAlgebra, Path


class Representation:
    """A finite-dimensional representation; immutable once built.

    ``tops`` / ``socles`` record a decomposition into indecomposable
    projectives / injectives (in the basis used by :mod:`detmorph.ar`).
    """

    def __init__(self, algebra: BoundQuiverAlgebra, dims: dict, maps: dict | None = None, *,
                 tops: tuple[str, ...] | None = None, socles: tuple[str, ...] | None = None,
                 check: bool = True):
        self.algebra = algebra
        p = algebra.p
        self.dims: dict[str, int] = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        if check:
            extra = set(map(str, dims)) - set(algebra.vertices)
            if extra:
                raise InputError(f"unknown vertices {sorted(extra)}")
            if any(d < 0 for d in self.dims.values()):
                raise InputError("negative dimension")
        maps = maps or {}
        self.maps: dict[str, np.ndarray] = {}
        for a in algebra.arrows:
            shape = (self.dims[a.target], self.dims[a.source])
            if a.name in maps:
                try:
                    m = np.asarray(maps[a.name], dtype=np.int64)
                except (TypeError, ValueError) as exc:
                    raise InputError(f"map {a.name} is not an integer matrix: {exc}") from exc
                if m.size == 0:
                    m = np.zeros(shape, dtype=np.int64)
                if m.shape != shape:
                    raise InputError(f"map {a.name} has shape {m.shape}, expected {shape}")
                m = m % p
            else:
                m = np.zeros(shape, dtype=np.int64)
            m.flags.writeable = False
            self.maps[a.name] = m
        if check:
            extra = set(maps) - set(self.maps)
            if extra:
                raise InputError(f"unknown arrows {sorted(extra)}")
            for r in algebra.relations:
                if np.any(self.arrow_path_matrix(r, algebra.quiver.arrow[r[0]].source)):
                    raise PreconditionError(f"relation {list(r)} does not vanish")
        self.tops = tops
        self.socles = socles

    @property
    def p(self) -> int:
        return self.algebra.p

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.algebra.vertices

    @cached_property
    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def arrow_path_matrix(self, arrows, start: str) -> np.ndarray:
        m = la.identity(self.dims[start])
        for name in arrows:
            m = la.matmul(self.maps[name], m, self.p)
        return m

    def path_matrix(self, q: Path) -> np.ndarray:
        return self.arrow_path_matrix(q[1], q[0])

    @cached_property
    def offsets(self) -> dict[str, int]:
        off, out = 0, {}
        for v in self.vertices:
            out[v] = off
            off += self.dims[v]
        return out

    def fingerprint(self) -> tuple:
        """Deterministic sort key; equal for identical data, not an iso invariant."""
        ranks = tuple(la.rank(self.path_matrix(q), self.p) for q in self.algebra.paths)
        flat = tuple(tuple(self.maps[a.name].ravel().tolist()) for a in self.algebra.arrows)
        return (self.dim_vector, ranks, flat)

    def to_dict(self) -> dict:
        return {
            "dims": {v: self.dims[v] for v in self.vertices},
            "maps": {a.name: self.maps[a.name].tolist() for a in self.algebra.arrows},
        }

    @classmethod
    def from_dict(cls, algebra: BoundQuiverAlgebra, d: dict) -> Representation:
        try:
            dims = {str(k): int(v) for k, v in d["dims"].items()}
            maps = {str(k): v for k, v in d.get("maps", {}).items()}
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise InputError(f"malformed representation: {exc}") from exc
        return cls(algebra, dims, maps)

    def __repr__(self):
        return f"Representation(dims={self.dim_vector})"


class RepMorphism:
    def __init__(self, source: Representation, target: Representation, maps: dict | None = None,
                 check: bool = True):
        if source.algebra is not target.algebra:
            raise PreconditionError("source and target live over different algebras")
        self.source = source
        self.target = target
        p = source.p
        maps = maps or {}
        self.maps: dict[str, np.ndarray] = {}
        for v in source.vertices:
            shape = (target.dims[v], source.dims[v])
            if v in maps:
                try:
                    m = np.asarray(maps[v], dtype=np.int64)
                except (TypeError, ValueError) as exc:
                    raise InputError(f"vertex map {v} is not an integer matrix: {exc}") from exc
                if m.size == 0:
                    m = np.zeros(shape, dtype=np.int64)
                if m.shape != shape:
                    raise InputError(f"vertex map {v} has shape {m.shape}, expected {shape}")
                m = m % p
            else:
                m = np.zeros(shape, dtype=np.int64)
            m.flags.writeable = False
            self.maps[v] = m
        if check:
            extra = set(maps) - set(self.maps)
            if extra:
                raise InputError(f"unknown vertices {sorted(extra)}")
            for a in source.algebra.arrows:
                lhs = la.matmul(target.maps[a.name], self.maps[a.source], p)
                rhs = la.matmul(self.maps[a.target], source.maps[a.name], p)
                if not np.array_equal(lhs, rhs):
                    raise PreconditionError(f"vertex maps do not intertwine arrow {a.name}")

    @property
    def p(self) -> int:
        return self.source.p

    @property
    def algebra(self) -> BoundQuiverAlgebra:
        return self.source.algebra

    def __matmul__(self, other: RepMorphism) -> RepMorphism:
        """``self @ other`` is the composite ``self o other`` (``other`` first)."""
        if other.target is not self.source and other.target.dim_vector != self.source.dim_vector:
            raise PreconditionError("morphisms are not composable")
        maps = {v: la.matmul(self.maps[v], other.maps[v], self.p) for v in self.source.vertices}
        return RepMorphism(other.source, self.target, maps, check=False)

    def __add__(self, other: RepMorphism) -> RepMorphism:
        maps = {v: (self.maps[v] + other.maps[v]) % self.p for v in self.maps}
        return RepMorphism(self.source, self.target, maps, check=False)

    def __sub__(self, other: RepMorphism) -> RepMorphism:
        maps = {v: (self.maps[v] - other.maps[v]) % self.p for v in self.maps}
        return RepMorphism(self.source, self.target, maps, check=False)

    def scale(self, c: int) -> RepMorphism:
        maps = {v: (int(c) * self.maps[v]) % self.p for v in self.maps}
        return RepMorphism(self.source, self.target, maps, check=False)

    def vector(self) -> np.ndarray:
        parts = [self.maps[v].ravel() for v in self.source.vertices]
        return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)

    def is_zero(self) -> bool:
        return not any(np.any(m) for m in self.maps.values())

    def is_isomorphism(self) -> bool:
        return all(la.inverse(self.maps[v], self.p) is not None for v in self.maps)

    def is_mono(self) -> bool:
        return all(la.rank(m, self.p) == m.shape[1] for m in self.maps.values())

    def is_epi(self) -> bool:
        return all(la.rank(m, self.p) == m.shape[0] for m in self.maps.values())

    def inverse(self) -> RepMorphism:
        maps = {}
        for v, m in self.maps.items():
            inv = la.inverse(m, self.p)
            if inv is None:
                raise PreconditionError("morphism is not invertible")
            maps[v] = inv
        return RepMorphism(self.target, self.source, maps, check=False)

    def power(self, k: int) -> RepMorphism:
        maps = {v: la.matrix_power(m, k, self.p) for v, m in self.maps.items()}
        return RepMorphism(self.source, self.target, maps, check=False)

    def is_nilpotent(self) -> bool:
        return all(not np.any(la.matrix_power(m, m.shape[0], self.p)) for m in self.maps.values())

    def equals(self, other: RepMorphism) -> bool:
        return all(np.array_equal(self.maps[v], other.maps[v]) for v in self.maps)

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "vertexMaps": {v: self.maps[v].tolist() for v in self.source.vertices},
        }

    @classmethod
    def from_dict(cls, algebra: BoundQuiverAlgebra, d: dict) -> RepMorphism:
        try:
            src = Representation.from_dict(algebra, d["source"])
            tgt = Representation.from_dict(algebra, d["target"])
            maps = {str(k): v for k, v in d["vertexMaps"].items()}
        except (KeyError, TypeError, AttributeError) as exc:
            raise InputError(f"malformed morphism: {exc}") from exc
        return cls(src, tgt, maps)

    def __repr__(self):
        return f"RepMorphism({self.source.dim_vector} -> {self.target.dim_vector})"


# basic constructions

def zero_rep(algebra: BoundQuiverAlgebra) -> Representation:
    return Representation(algebra, {})


def simple(algebra: BoundQuiverAlgebra, v: str) -> Representation:
    return Representation(algebra, {v: 1})


def identity(m: Representation) -> RepMorphism:
    return RepMorphism(m, m, {v: la.identity(d) for v, d in m.dims.items()}, check=False)


def zero_morphism(m: Representation, n: Representation) -> RepMorphism:
    return RepMorphism(m, n, {}, check=False)


def morphism_from_vector(m: Representation, n: Representation, vec: np.ndarray,
                         check: bool = False) -> RepMorphism:
    maps, off = {}, 0
    for v in m.vertices:
        size = n.dims[v] * m.dims[v]
        maps[v] = np.asarray(vec[off: off + size], dtype=np.int64).reshape(n.dims[v], m.dims[v])
        off += size
    return RepMorphism(m, n, maps, check=check)


@dataclass
class DirectSum:
    module: Representation
    inclusions: list[RepMorphism]
    projections: list[RepMorphism]


def direct_sum(mods: list[Representation], algebra: BoundQuiverAlgebra | None = None) -> DirectSum:
    if not mods and algebra is None:
        raise ValueError("empty direct sum needs an algebra")
    alg = algebra or mods[0].algebra
    dims = {v: sum(m.dims[v] for m in mods) for v in alg.vertices}
    maps = {a.name: la.block_diag([m.maps[a.name] for m in mods]) if mods
            else la.zeros(0, 0) for a in alg.arrows}
    tops = socles = None
    if mods and all(m.tops is not None for m in mods):
        tops = tuple(itertools.chain.from_iterable(m.tops for m in mods))
    if mods and all(m.socles is not None for m in mods):
        socles = tuple(itertools.chain.from_iterable(m.socles for m in mods))
    total = Representation(alg, dims, maps, tops=tops, socles=socles, check=False)
    incs, projs = [], []
    offs = {v: 0 for v in alg.vertices}
    for m in mods:
        imap, pmap = {}, {}
        for v in alg.vertices:
            e = la.zeros(dims[v], m.dims[v])
            e[offs[v]: offs[v] + m.dims[v], :] = la.identity(m.dims[v])
            imap[v] = e
            pmap[v] = np.ascontiguousarray(e.T)
            offs[v] += m.dims[v]
        incs.append(RepMorphism(m, total, imap, check=False))
        projs.append(RepMorphism(total, m, pmap, check=False))
    return DirectSum(total, incs, projs)


def sum_morphism(fs: list[RepMorphism]) -> RepMorphism:
    """``f_1 + ... + f_k`` on ``X_1 (+) ... (+) X_k -> Y`` (a row of morphisms)."""
    ds = direct_sum([f.source for f in fs])
    maps = {v: np.hstack([f.maps[v] for f in fs]) for v in ds.module.vertices}
    return RepMorphism(ds.module, fs[0].target, maps, check=False)


def stack_morphism(fs: list[RepMorphism]) -> RepMorphism:
    """``(f_1, ..., f_k): X -> Y_1 (+) ... (+) Y_k`` (a column of morphisms)."""
    ds = direct_sum([f.target for f in fs])
    maps = {v: np.vstack([f.maps[v] for f in fs]) for v in ds.module.vertices}
    return RepMorphism(fs[0].source, ds.module, maps, check=False)


def direct_sum_morphism(fs: list[RepMorphism]) -> RepMorphism:
    src = direct_sum([f.source for f in fs]).module
    tgt = direct_sum([f.target for f in fs]).module
    maps = {v: la.block_diag([f.maps[v] for f in fs]) for v in src.vertices}
    return RepMorphism(src, tgt, maps, check=False)


def transport(m: Representation, change: dict[str, np.ndarray]) -> tuple[Representation, RepMorphism]:
    """Conjugate ``m`` by invertible vertex matrices; returns the copy and the iso ``m -> copy``."""
    p = m.p
    inv = {v: la.inverse(g, p) for v, g in change.items()}
    maps = {a.name: la.matmul(la.matmul(change[a.target], m.maps[a.name], p), inv[a.source], p)
            for a in m.algebra.arrows}
    new = Representation(m.algebra, m.dims, maps, check=False)
    return new, RepMorphism(m, new, change, check=False)


# Hom spaces

def hom_system(m: Representation, n: Representation) -> np.ndarray:
    """Matrix whose kernel is Hom(m, n) in flattened coordinates."""
    if m.algebra is not n.algebra:
        raise PreconditionError("modules over different algebras")
    p = m.p
    alg = m.algebra
    col_off, off = {}, 0
    for v in alg.vertices:
        col_off[v] = off
        off += n.dims[v] * m.dims[v]
    blocks = []
    for a in alg.arrows:
        u, w = a.source, a.target
        rows = n.dims[w] * m.dims[u]
        if rows == 0:
            continue
        block = la.zeros(rows, off)
        if n.dims[u] * m.dims[u]:
            left = np.kron(n.maps[a.name], la.identity(m.dims[u]))
            block[:, col_off[u]: col_off[u] + n.dims[u] * m.dims[u]] += left
        if n.dims[w] * m.dims[w]:
            right = np.kron(la.identity(n.dims[w]), m.maps[a.name].T)
            block[:, col_off[w]: col_off[w] + n.dims[w] * m.dims[w]] -= right
        blocks.append(block % p)
    if not blocks:
        return la.zeros(0, off)
    return np.vstack(blocks)


class HomSpace:
    def __init__(self, m: Representation, n: Representation):
        self.source = m
        self.target = n
        self.p = m.p
        system = hom_system(m, n)
        self.ambient = system.shape[1]
        self.matrix = la.kernel_basis(system, self.p) if self.ambient else la.zeros(0, 0)
        self.dim = self.matrix.shape[1]
        self.basis = [morphism_from_vector(m, n, self.matrix[:, i]) for i in range(self.dim)]

    def element(self, coeffs) -> RepMorphism:
        c = np.asarray(coeffs, dtype=np.int64).reshape(self.dim)
        vec = la.matmul(self.matrix, c.reshape(-1, 1), self.p)[:, 0] if self.dim else \
            np.zeros(self.ambient, dtype=np.int64)
        return morphism_from_vector(self.source, self.target, vec)

    def coords(self, f: RepMorphism) -> np.ndarray:
        if self.dim == 0:
            if not f.is_zero():
                raise ValueError("morphism not in Hom space")
            return np.zeros(0, dtype=np.int64)
        return la.coordinates(self.matrix, f.vector(), self.p)

    def coords_many(self, fs: list[RepMorphism]) -> np.ndarray:
        """Columns of coordinates for a list of morphisms."""
        if not fs:
            return la.zeros(self.dim, 0)
        if self.dim == 0:
            return la.zeros(0, len(fs))
        return la.coordinates(self.matrix, np.column_stack([f.vector() for f in fs]), self.p)


def hom_space(m: Representation, n: Representation) -> HomSpace:
    return HomSpace(m, n)


def hom_basis(m: Representation, n: Representation) -> list[RepMorphism]:
    return hom_space(m, n).basis


def end_algebra(m: Representation) -> tuple[FDAlgebra, HomSpace]:
    """End(m) with product ``b_i * b_j = b_i o b_j``, acting faithfully on ``m``."""
    space = hom_space(m, m)
    d = space.dim
    p = m.p
    c = np.zeros((d, d, d), dtype=np.int64)
    if d:
        prods = [space.basis[i] @ space.basis[j] for i in range(d) for j in range(d)]
        coords = space.coords_many(prods)
        c = coords.T.reshape(d, d, d)
        unit = space.coords(identity(m))
        action = [la.block_diag([b.maps[v] for v in m.vertices]) for b in space.basis]
    else:
        unit = np.zeros(0, dtype=np.int64)
        action = []
    return FDAlgebra(p, c, unit, action=action), space


def solve_factorization(a: RepMorphism, b: RepMorphism) -> RepMorphism | None:
    """Some ``phi`` with ``a o phi = b`` (``a: X -> Y``, ``b: X' -> Y``), else ``None``."""
    if a.target.dim_vector != b.target.dim_vector:
        raise PreconditionError("morphisms do not share a target")
    X, Xp = a.source, b.source
    p = a.p
    system = hom_system(Xp, X)
    ncols = system.shape[1]
    rows, rhs = [], []
    off = 0
    for v in X.vertices:
        k, n = Xp.dims[v], X.dims[v]
        y = a.target.dims[v]
        if y * k:
            block = la.zeros(y * k, ncols)
            if n * k:
                block[:, off: off + n * k] = np.kron(a.maps[v], la.identity(k))
            rows.append(block)
            rhs.append(b.maps[v].reshape(-1))
        off += n * k
    if ncols == 0:
        return zero_morphism(Xp, X) if b.is_zero() else None
    mat = np.vstack([system] + rows) if rows else system
    vec = np.concatenate([np.zeros(system.shape[0], dtype=np.int64)] + rhs) if rows else \
        np.zeros(system.shape[0], dtype=np.int64)
    if mat.shape[0] == 0:
        return zero_morphism(Xp, X)
    sol = la.solve_right(mat % p, vec % p, p)
    if sol is None:
        return None
    return morphism_from_vector(Xp, X, sol)


def solve_cofactorization(a: RepMorphism, b: RepMorphism) -> RepMorphism | None:
    """Some ``psi`` with ``psi o a = b`` (``a: X -> Y``, ``b: X -> Y'``), else ``None``."""
    space = hom_space(a.target, b.target)
    if space.dim == 0:
        return zero_morphism(a.target, b.target) if b.is_zero() else None
    cols = np.column_stack([(g @ a).vector() for g in space.basis])
    sol = la.solve_right(cols, b.vector(), a.p)
    return None if sol is None else space.element(sol)


# sub- and quotient modules

def submodule(m: Representation, bases: dict[str, np.ndarray]) -> tuple[Representation, RepMorphism]:
    """Subrepresentation spanned vertexwise by ``bases`` (independent columns)."""
    p = m.p
    dims = {v: bases[v].shape[1] for v in m.vertices}
    maps = {}
    for a in m.algebra.arrows:
        img = la.matmul(m.maps[a.name], bases[a.source], p)
        x = la.solve_right(bases[a.target], img, p) if dims[a.target] else \
            (la.zeros(0, dims[a.source]) if not np.any(img) else None)
        if x is None:
            raise PreconditionError("subspaces are not closed under the arrow maps")
        maps[a.name] = x
    sub = Representation(m.algebra, dims, maps, check=False)
    return sub, RepMorphism(sub, m, {v: bases[v] for v in m.vertices}, check=False)


def quotient(m: Representation, bases: dict[str, np.ndarray]) -> tuple[Representation, RepMorphism]:
    """Quotient by the subrepresentation spanned vertexwise by ``bases``."""
    p = m.p
    q = {}
    for v in m.vertices:
        n = m.dims[v]
        q[v] = la.left_kernel_basis(bases[v], p) if bases[v].shape[1] else la.identity(n)
        if n == 0:
            q[v] = la.zeros(0, 0)
    sections = {v: la.solve_right(q[v], la.identity(q[v].shape[0]), p) for v in m.vertices}
    dims = {v: q[v].shape[0] for v in m.vertices}
    maps = {a.name: la.matmul(la.matmul(q[a.target], m.maps[a.name], p), sections[a.source], p)
            for a in m.algebra.arrows}
    quo = Representation(m.algebra, dims, maps, check=False)
    return quo, RepMorphism(m, quo, q, check=False)


def kernel(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    bases = {v: la.kernel_basis(f.maps[v], f.p) if f.source.dims[v] else la.zeros(0, 0)
             for v in f.source.vertices}
    for v in bases:
        if bases[v].shape[0] != f.source.dims[v]:
            bases[v] = la.zeros(f.source.dims[v], 0)
    return submodule(f.source, bases)


def image(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    bases = {v: la.image_basis(f.maps[v], f.p) if f.maps[v].shape[1] else
             la.zeros(f.target.dims[v], 0) for v in f.source.vertices}
    return submodule(f.target, bases)


def cokernel(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    bases = {v: la.image_basis(f.maps[v], f.p) if f.maps[v].shape[1] else
             la.zeros(f.target.dims[v], 0) for v in f.source.vertices}
    return quotient(f.target, bases)


def corestrict_to_image(f: RepMorphism) -> tuple[RepMorphism, RepMorphism]:
    """Epi-mono factorization ``f = incl o e``."""
    img, incl = image(f)
    maps = {v: la.solve_right(incl.maps[v], f.maps[v], f.p) if img.dims[v] else
            la.zeros(0, f.source.dims[v]) for v in f.source.vertices}
    return RepMorphism(f.source, img, maps, check=False), incl


@dataclass
class Pullback:
    module: Representation
    to_first: RepMorphism
    to_second: RepMorphism


def pullback(f: RepMorphism, g: RepMorphism) -> Pullback:
    """Pullback of ``f: A -> C`` and ``g: B -> C``."""
    if f.target.dim_vector != g.target.dim_vector:
        raise PreconditionError("pullback needs a common target")
    ds = direct_sum([f.source, g.source])
    diff = sum_morphism([f, g.scale(-1)])
    diff = RepMorphism(ds.module, f.target, diff.maps, check=False)
    k, incl = kernel(diff)
    return Pullback(k, ds.projections[0] @ incl, ds.projections[1] @ incl)


# decomposition and isomorphism

def _split_by_endomorphism(e: RepMorphism) -> list[tuple[Representation, RepMorphism]]:
    """Fitting decomposition ``X = Im e^N (+) Ker e^N`` with inclusions."""
    n = max(e.source.dims.values(), default=0)
    en = e.power(max(n, 1))
    im, iim = image(en)
    ker, iker = kernel(en)
    return [(im, iim), (ker, iker)]


@dataclass
class Summand:
    module: Representation
    inclusion: RepMorphism


def indecomposable_summands(m: Representation) -> list[Summand]:
    """Indecomposable summands with inclusions whose sum is an isomorphism onto ``m``."""
    if m.is_zero():
        return []
    alg, space = end_algebra(m)
    if alg.is_local():
        return [Summand(m, identity(m))]
    e = alg.find_nontrivial_idempotent()
    idem = space.element(e)
    out = []
    for part in (idem, identity(m) - idem):
        sub, incl = image(part)
        for s in indecomposable_summands(sub):
            out.append(Summand(s.module, incl @ s.inclusion))
    out.sort(key=lambda s: s.module.fingerprint())
    return out


def indecomposable_decomposition(m: Representation) -> list[Representation]:
    return [s.module for s in indecomposable_summands(m)]


def is_indecomposable(m: Representation) -> bool:
    if m.is_zero():
        return False
    return end_algebra(m)[0].is_local()


def _iso_by_basis_sweep(m: Representation, n: Representation) -> RepMorphism | None:
    for f in hom_basis(m, n):
        if f.is_isomorphism():
            return f
    return None


def _iso_indecomposable(m: Representation, n: Representation) -> RepMorphism | None:
    # with End(m) local, an isomorphism exists iff some Hom basis element is one
    if m.dim_vector != n.dim_vector:
        return None
    return _iso_by_basis_sweep(m, n)


def is_isomorphic(m: Representation, n: Representation) -> RepMorphism | None:
    """An isomorphism ``m -> n`` if one exists, else ``None``."""
    if m.algebra is not n.algebra:
        raise PreconditionError("modules over different algebras")
    if m.dim_vector != n.dim_vector:
        return None
    if m.is_zero():
        return zero_morphism(m, n)
    quick = _iso_by_basis_sweep(m, n)
    if quick is not None:
        return quick
    ms, ns = indecomposable_summands(m), indecomposable_summands(n)
    if len(ms) != len(ns):
        return None
    used = [False] * len(ns)
    pieces = []
    for s in ms:
        for j, t in enumerate(ns):
            if used[j]:
                continue
            iso = _iso_indecomposable(s.module, t.module)
            if iso is not None:
                used[j] = True
                pieces.append((s, t, iso))
                break
        else:
            return None
    # m -> (+) m_i -> (+) n_j -> n
    m_split = sum_morphism([s.inclusion for s in ms]).inverse()
    ds = direct_sum([s.module for s in ms])
    total = zero_morphism(m, n)
    for idx, (s, t, iso) in enumerate(pieces):
        total = total + (t.inclusion @ iso @ ds.projections[idx] @ _retarget(m_split, ds.module))
    return total


def _retarget(f: RepMorphism, target: Representation) -> RepMorphism:
    return RepMorphism(f.source, target, f.maps, check=False)


def iso_classes(mods: list[Representation]) -> list[Representation]:
    """One representative per isomorphism class, first occurrence kept."""
    reps: list[Representation] = []
    for m in mods:
        if not any(r.dim_vector == m.dim_vector and is_isomorphic(r, m) is not None for r in reps):
            reps.append(m)
    return reps


def add_member(m: Representation, c: Representation | list[Representation]) -> bool:
    """Whether every indecomposable summand of ``m`` is a summand of ``c``."""
    cs = c if isinstance(c, list) else [c]
    c_inds = [x for ci in cs for x in indecomposable_decomposition(ci)]
    for s in indecomposable_decomposition(m):
        if not any(_iso_indecomposable(s, t) is not None for t in c_inds):
            return False
    return True


# right minimal version

@dataclass
class RightMinimalization:
    """``f`` restricted to ``X'`` is right minimal and ``f`` vanishes on ``X''``."""

    morphism: RepMorphism
    inclusion: RepMorphism
    complement: Representation
    complement_inclusion: RepMorphism
    original: RepMorphism = field(repr=False)


def annihilator_basis(f: RepMorphism) -> list[RepMorphism]:
    """Basis of ``{phi in End(X) : f o phi = 0}``."""
    X = f.source
    system = hom_system(X, X)
    extra = []
    off = 0
    ncols = system.shape[1]
    for v in X.vertices:
        n = X.dims[v]
        y = f.target.dims[v]
        if y * n and n * n:
            block = la.zeros(y * n, ncols)
            block[:, off: off + n * n] = np.kron(f.maps[v], la.identity(n))
            extra.append(block)
        off += n * n
    if ncols == 0:
        return []
    mat = np.vstack([system] + extra) if extra else system
    k = la.kernel_basis(mat % f.p, f.p) if mat.shape[0] else la.identity(ncols)
    return [morphism_from_vector(X, X, k[:, i]) for i in range(k.shape[1])]


def _span_is_nilpotent(ops: list[RepMorphism], X: Representation) -> bool:
    """Whether the (multiplicatively closed) span of ``ops`` is nilpotent.

    Iterates ``U <- sum_x x(U)`` from ``U = X``; the span is nilpotent iff
    this reaches zero.
    """
    p = X.p
    spaces = {v: la.identity(X.dims[v]) for v in X.vertices}
    for _ in range(X.total_dim + 1):
        if all(s.shape[1] == 0 for s in spaces.values()):
            return True
        new = {}
        for v in X.vertices:
            cols = [la.matmul(x.maps[v], spaces[v], p) for x in ops if spaces[v].shape[1]]
            if cols and X.dims[v]:
                new[v] = la.canonical_basis(np.hstack(cols), p)
            else:
                new[v] = la.zeros(X.dims[v], 0)
        if all(np.array_equal(new[v], spaces[v]) for v in X.vertices):
            return False
        spaces = new
    return all(s.shape[1] == 0 for s in spaces.values())


def _non_nilpotent_element(ops: list[RepMorphism], seed: int = 0) -> RepMorphism:
    for x in ops:
        if not x.is_nilpotent():
            return x
    for x, y in itertools.combinations(ops, 2):
        s = x + y
        if not s.is_nilpotent():
            return s
    rng = np.random.default_rng(seed)
    for _ in range(2000):
        coeffs = rng.integers(0, ops[0].p, size=len(ops))
        s = ops[0].scale(0)
        for c, x in zip(coeffs, ops):
            s = s + x.scale(int(c))
        if not s.is_nilpotent():
            return s
    raise RuntimeError("no non-nilpotent element found in a non-nilpotent right ideal")


def right_minimalize(f: RepMorphism) -> RightMinimalization:
    """Split ``X = X' (+) X''`` with ``f|X'`` right minimal and ``f|X'' = 0``.

    While the right ideal ``L = {phi : f phi = 0}`` of End(X) is not
    nilpotent, a non-nilpotent ``phi`` in it gives the Fitting splitting
    ``X = Im phi^N (+) Ker phi^N`` with ``f`` vanishing on the first part.
    """
    X = f.source
    incl = identity(X)
    current = f
    killed: list[tuple[Representation, RepMorphism]] = []
    while not current.source.is_zero():
        ann = annihilator_basis(current)
        if not ann or _span_is_nilpotent(ann, current.source):
            break
        phi = _non_nilpotent_element(ann)
        (im, iim), (ker, iker) = _split_by_endomorphism(phi)
        killed.append((im, incl @ iim))
        incl = incl @ iker
        current = current @ iker
    if killed:
        complement = direct_sum([k for k, _ in killed]).module
        comp_incl = RepMorphism(complement, X, sum_morphism([i for _, i in killed]).maps, check=False)
    else:
        complement = zero_rep(X.algebra)
        comp_incl = zero_morphism(complement, X)
    return RightMinimalization(current, incl, complement, comp_incl, f)


def is_right_minimal(f: RepMorphism) -> bool:
    ann = annihilator_basis(f)
    return not ann or _span_is_nilpotent(ann, f.source)
