"""Finite posets viewed as categories.

There is a morphism ``x -> y`` iff ``x <= y``, and it is unique.  A morphism
``x' -> y`` factors through ``alpha: x -> y`` iff ``x' <= x``, and a composite
``c -> x' -> y`` exists iff ``c <= x'``.  Both the closed-form criterion (the
candidate set has a least element) and the raw definition are evaluated;
``object_determines`` insists they agree.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import InputError, PreconditionError


class FinitePoset:
    def __init__(self, elements, le: np.ndarray):
        self.elements: tuple[str, ...] = tuple(str(e) for e in elements)
        if len(set(self.elements)) != len(self.elements):
            raise InputError("duplicate poset elements")
        self.le = np.asarray(le, dtype=bool)
        n = len(self.elements)
        if self.le.shape != (n, n):
            raise InputError("order matrix has the wrong shape")
        self.index = {e: i for i, e in enumerate(self.elements)}
        self._validate()

    def _validate(self):
        le = self.le
        if not np.all(np.diag(le)):
            raise InputError("relation is not reflexive")
        if np.any(le & le.T & ~np.eye(len(self.elements), dtype=bool)):
            raise InputError("relation is not antisymmetric")
        comp = (le.astype(np.int64) @ le.astype(np.int64)) > 0
        if np.any(comp & ~le):
            raise InputError("relation is not transitive")

    @classmethod
    def from_relations(cls, elements, pairs) -> FinitePoset:
        """Reflexive-transitive closure of the generating pairs ``(a, b)`` meaning ``a <= b``."""
        elements = [str(e) for e in elements]
        idx = {e: i for i, e in enumerate(elements)}
        n = len(elements)
        le = np.eye(n, dtype=bool)
        for a, b in pairs:
            try:
                le[idx[str(a)], idx[str(b)]] = True
            except KeyError as exc:
                raise InputError(f"unknown element {exc}") from exc
        for k in range(n):
            le |= np.outer(le[:, k], le[k, :])
        return cls(elements, le)

    @classmethod
    def from_dict(cls, d: dict) -> FinitePoset:
        try:
            return cls.from_relations(d["elements"], d.get("le", []))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"malformed poset: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> FinitePoset:
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc

    @classmethod
    def chain(cls, n: int) -> FinitePoset:
        return cls.from_relations(range(n), [(i, i + 1) for i in range(n - 1)])

    def to_dict(self) -> dict:
        pairs = [[a, b] for a in self.elements for b in self.elements
                 if a != b and self.leq(a, b)]
        return {"elements": list(self.elements), "le": pairs}

    def leq(self, a, b) -> bool:
        return bool(self.le[self.index[str(a)], self.index[str(b)]])

    def __len__(self):
        return len(self.elements)

    def morphisms(self):
        return [(x, y) for x in self.elements for y in self.elements if self.leq(x, y)]


def _check_morphism(P: FinitePoset, x, y):
    if not P.leq(x, y):
        raise PreconditionError(f"no morphism {x} -> {y}")


def determinator_candidates(P: FinitePoset, x, y) -> set[str]:
    """``{c : c not<= x, c <= y}``."""
    _check_morphism(P, x, y)
    return {c for c in P.elements if not P.leq(c, x) and P.leq(c, y)}


def minimal_elements(P: FinitePoset, subset) -> set[str]:
    subset = set(map(str, subset))
    return {c for c in subset if not any(d != c and P.leq(d, c) for d in subset)}


def criterion_determines(P: FinitePoset, x, y, c) -> bool:
    """Closed form: identities always; otherwise ``c`` must be the unique minimal candidate."""
    x, y, c = str(x), str(y), str(c)
    _check_morphism(P, x, y)
    if x == y:
        return True
    mins = minimal_elements(P, determinator_candidates(P, x, y))
    return len(mins) == 1 and c in mins


def class_determined(P: FinitePoset, x, y, D) -> bool:
    """Raw definition for a class ``D``: for every ``x' <= y``,
    ``x' <= x``  iff  every ``c in D`` with ``c <= x'`` has ``c <= x``."""
    x, y = str(x), str(y)
    _check_morphism(P, x, y)
    D = [str(c) for c in D]
    for xp in P.elements:
        if not P.leq(xp, y):
            continue
        factors = P.leq(xp, x)
        composites_factor = all(P.leq(c, x) for c in D if P.leq(c, xp))
        if factors != composites_factor:
            return False
    return True


def object_determines(P: FinitePoset, x, y, c) -> bool:
    closed = criterion_determines(P, x, y, c)
    raw = class_determined(P, x, y, [c])
    if closed != raw:
        raise AssertionError(f"criterion and definition disagree at ({x}, {y}, {c})")
    return raw


def determinators(P: FinitePoset, x, y) -> list[str]:
    return [c for c in P.elements if object_determines(P, x, y, c)]


def random_poset(n: int, seed: int, density: float = 0.35) -> FinitePoset:
    """Random poset on ``n`` labelled elements from a seeded relation set.

    Pairs are drawn between positions of a random permutation, low to high,
    so the closure is always antisymmetric.
    """
    rng = np.random.default_rng(seed)
    perm = rng.permutation(n)
    pairs = [(str(perm[i]), str(perm[j])) for i in range(n) for j in range(i + 1, n)
             if rng.random() < density]
    return FinitePoset.from_relations([str(i) for i in range(n)], pairs)
