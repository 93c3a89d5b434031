"""Quivers with monomial relations and their path bases.

Paths are pairs ``(start_vertex, arrows)`` where ``arrows`` lists arrow
names in the order they are traversed (first arrow applied first); the
trivial path at ``v`` is ``(v, ())``.  Representations are covariant, so a
path ``q`` from ``u`` to ``w`` acts on a representation as a map
``M_u -> M_w``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from .errors import InputError, PreconditionError
from .linalg import PrimeField

Path = tuple[str, tuple[str, ...]]

DEFAULT_PATH_CAP = 10_000


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


class Quiver:
    def __init__(self, vertices: Iterable[str], arrows: Iterable[Arrow | tuple]):
        self.vertices: tuple[str, ...] = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("duplicate vertex labels")
        arrs = []
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(*map(str, a))
            arrs.append(a)
        self.arrows: tuple[Arrow, ...] = tuple(arrs)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise InputError("duplicate arrow names")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise InputError(f"arrow {a.name} has an undeclared endpoint")
        self.arrow = {a.name: a for a in self.arrows}
        self.vertex_index = {v: i for i, v in enumerate(self.vertices)}
        self.arrow_index = {a.name: i for i, a in enumerate(self.arrows)}

    def out_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def opposite(self) -> Quiver:
        return Quiver(self.vertices, [Arrow(a.name, a.target, a.source) for a in self.arrows])

    def __repr__(self):
        arrows = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({list(self.vertices)}; {arrows})"


def path_basis(quiver: Quiver, relations: Iterable[Iterable[str]] = (),
               cap: int = DEFAULT_PATH_CAP) -> list[Path]:
    """All paths containing no relation as a contiguous subpath.

    Ordered by length, then by start vertex, then by arrow sequence (in
    declaration order).
    """
    rels = {tuple(r) for r in relations}
    for r in rels:
        if len(r) < 2:
            raise InputError(f"relation {list(r)} has length < 2")
        for x, y in zip(r, r[1:]):
            if quiver.arrow[x].target != quiver.arrow[y].source:
                raise InputError(f"relation {list(r)} is not a path")
    max_rel = max((len(r) for r in rels), default=0)

    def killed(arrows: tuple[str, ...]) -> bool:
        # only suffixes can be new relation occurrences
        return any(arrows[-k:] in rels for k in range(2, min(max_rel, len(arrows)) + 1))

    level: list[Path] = [(v, ()) for v in quiver.vertices]
    basis: list[Path] = list(level)
    while level:
        nxt: list[Path] = []
        for start, arrows in level:
            end = quiver.arrow[arrows[-1]].target if arrows else start
            for a in quiver.out_arrows(end):
                cand = arrows + (a.name,)
                if not killed(cand):
                    nxt.append((start, cand))
        basis.extend(nxt)
        if len(basis) > cap:
            raise PreconditionError(
                f"infinite-or-too-large algebra: path basis exceeds {cap} elements")
        level = nxt
    return basis


class BoundQuiverAlgebra:
    """Path algebra of a quiver modulo monomial relations, over F_p."""

    def __init__(self, quiver: Quiver, relations: Iterable[Iterable[str]] = (), p: int = 2,
                 cap: int = DEFAULT_PATH_CAP):
        self.quiver = quiver
        self.relations: tuple[tuple[str, ...], ...] = tuple(tuple(map(str, r)) for r in relations)
        for r in self.relations:
            for name in r:
                if name not in quiver.arrow:
                    raise InputError(f"relation uses unknown arrow {name}")
        self.field = PrimeField(int(p))
        self.p = self.field.p
        self.paths: list[Path] = path_basis(quiver, self.relations, cap)
        self.index = {q: i for i, q in enumerate(self.paths)}
        self._between: dict[tuple[str, str], list[Path]] = {}
        for q in self.paths:
            self._between.setdefault((q[0], self.target(q)), []).append(q)
        self._opposite: BoundQuiverAlgebra | None = None
        self._cap = cap

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple[Arrow, ...]:
        return self.quiver.arrows

    @property
    def dim(self) -> int:
        return len(self.paths)

    @property
    def is_hereditary(self) -> bool:
        return not self.relations

    def target(self, q: Path) -> str:
        start, arrows = q
        return self.quiver.arrow[arrows[-1]].target if arrows else start

    def paths_between(self, u: str, w: str) -> list[Path]:
        return self._between.get((u, w), [])

    def concat(self, q: Path, r: Path) -> Path | None:
        """Path ``q`` followed by ``r``; ``None`` if not composable or zero."""
        if self.target(q) != r[0]:
            return None
        cand = (q[0], q[1] + r[1])
        return cand if cand in self.index else None

    def opposite(self) -> BoundQuiverAlgebra:
        if self._opposite is None:
            op = BoundQuiverAlgebra(self.quiver.opposite(),
                                    [tuple(reversed(r)) for r in self.relations],
                                    self.p, self._cap)
            op._opposite = self
            self._opposite = op
        return self._opposite

    def op_path(self, q: Path) -> Path:
        """The path of the opposite algebra traversing ``q`` backwards."""
        return (self.target(q), tuple(reversed(q[1])))

    @cached_property
    def structure_constants(self) -> np.ndarray:
        """``c[i, j]`` = coordinates of ``b_i * b_j`` (``b_j`` first, then ``b_i``)."""
        n = self.dim
        c = np.zeros((n, n, n), dtype=np.int64)
        for i, x in enumerate(self.paths):
            for j, y in enumerate(self.paths):
                z = self.concat(y, x)
                if z is not None:
                    c[i, j, self.index[z]] = 1
        return c

    def as_fd_algebra(self):
        from .fdalg import FDAlgebra

        unit = np.zeros(self.dim, dtype=np.int64)
        for v in self.vertices:
            unit[self.index[(v, ())]] = 1
        return FDAlgebra(self.p, self.structure_constants, unit)

    # serialization

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "vertices": list(self.vertices),
            "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in self.arrows],
            "relations": [list(r) for r in self.relations],
        }

    @classmethod
    def from_dict(cls, d: dict, cap: int = DEFAULT_PATH_CAP) -> BoundQuiverAlgebra:
        try:
            p = int(d["p"])
            vertices = [str(v) for v in d["vertices"]]
            arrows = [Arrow(str(a["name"]), str(a["from"]), str(a["to"]))
                      for a in d.get("arrows", [])]
            relations = [[str(x) for x in r] for r in d.get("relations", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed algebra description: {exc}") from exc
        try:
            field = PrimeField(p)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        return cls(Quiver(vertices, arrows), relations, field.p, cap)

    @classmethod
    def from_json(cls, text: str) -> BoundQuiverAlgebra:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)

    def __repr__(self):
        return f"BoundQuiverAlgebra({self.quiver!r}, relations={list(self.relations)}, p={self.p})"


def linear_quiver(n: int) -> Quiver:
    """``1 -> 2 -> ... -> n`` with arrows ``a1, ..., a{n-1}``."""
    vs = [str(i) for i in range(1, n + 1)]
    return Quiver(vs, [Arrow(f"a{i}", str(i), str(i + 1)) for i in range(1, n)])


def linear_algebra(n: int, p: int = 5) -> BoundQuiverAlgebra:
    return BoundQuiverAlgebra(linear_quiver(n), (), p)
