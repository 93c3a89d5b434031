"""Finite-dimensional associative algebras over F_p given by structure constants.

Elements are coordinate vectors (1-d int64 arrays) in a fixed basis
``b_0, ..., b_{n-1}``; ``c[i, j]`` holds the coordinates of ``b_i * b_j``.

The Jacobson radical is computed with Ronyai's trace-power refinement of
Dickson's trace-form criterion.  For a faithful matrix action of degree
``N`` put ``l = floor(log_p N)`` and ``I_{-1} = A``; then

    I_i = {a in I_{i-1} : g_i(a b) = 0 for all b in A},
    g_i(z) = trace(Z^(p^i)) / p^i  mod p,

where ``Z`` is any integer lift of the action matrix of ``z``.  ``I_l`` is
the radical.  When ``p > N`` this is the ordinary trace-form kernel, so no
restriction on the characteristic is needed.
"""

from __future__ import annotations

import itertools
from functools import cached_property

import numpy as np
import sympy

from . import linalg as la
from .errors import PreconditionError

EXHAUSTIVE_LIMIT = 1 << 16


class FDAlgebra:
    def __init__(self, p: int, structure: np.ndarray, unit: np.ndarray,
                 action: list[np.ndarray] | None = None):
        self.p = p
        self.c = np.asarray(structure, dtype=np.int64) % p
        self.dim = self.c.shape[0] if self.c.ndim == 3 else 0
        if self.dim:
            if self.c.shape != (self.dim, self.dim, self.dim):
                raise ValueError(f"structure constants have shape {self.c.shape}")
        else:
            self.c = np.zeros((0, 0, 0), dtype=np.int64)
        self.unit = np.asarray(unit, dtype=np.int64).reshape(self.dim) % p
        # faithful action matrices of the basis elements; left regular by default
        self._action = action

    # arithmetic

    def element(self, coords) -> np.ndarray:
        return np.asarray(coords, dtype=np.int64).reshape(self.dim) % self.p

    def basis_element(self, i: int) -> np.ndarray:
        e = np.zeros(self.dim, dtype=np.int64)
        e[i] = 1
        return e

    @property
    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    @cached_property
    def _left(self) -> np.ndarray:
        # _left[i] is the matrix of v -> b_i * v
        return np.ascontiguousarray(np.transpose(self.c, (0, 2, 1)))

    def left_matrix(self, x: np.ndarray) -> np.ndarray:
        if not self.dim:
            return la.zeros(0, 0)
        return np.tensordot(x, self._left, axes=(0, 0)) % self.p

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if not self.dim:
            return self.zero
        return (self.left_matrix(x) @ y) % self.p

    def is_associative(self) -> bool:
        for i, j, k in itertools.product(range(self.dim), repeat=3):
            bi, bj, bk = (self.basis_element(t) for t in (i, j, k))
            if not np.array_equal(self.mul(self.mul(bi, bj), bk), self.mul(bi, self.mul(bj, bk))):
                return False
        return True

    def is_unit(self) -> bool:
        return all(
            np.array_equal(self.mul(self.unit, b), b) and np.array_equal(self.mul(b, self.unit), b)
            for b in (self.basis_element(i) for i in range(self.dim))
        )

    @property
    def action(self) -> list[np.ndarray]:
        if self._action is None:
            return [self._left[i] % self.p for i in range(self.dim)]
        return self._action

    def _act(self, x: np.ndarray) -> np.ndarray:
        acts = self.action
        n = acts[0].shape[0] if acts else 0
        out = np.zeros((n, n), dtype=np.int64)
        for coef, m in zip(x, acts):
            if coef:
                out += int(coef) * m
        return out % self.p

    def product_span(self, b1: np.ndarray, b2: np.ndarray) -> np.ndarray:
        """Canonical basis of span{x y : x in span(b1), y in span(b2)} (column bases)."""
        cols = [self.mul(b1[:, i], b2[:, j]) for i in range(b1.shape[1]) for j in range(b2.shape[1])]
        if not cols:
            return la.zeros(self.dim, 0)
        return la.canonical_basis(np.column_stack(cols), self.p)

    # radical

    @cached_property
    def radical(self) -> np.ndarray:
        """Column basis (canonical) of the Jacobson radical."""
        p = self.p
        if not self.dim:
            return la.zeros(0, 0)
        acts = self.action
        n_act = acts[0].shape[0]
        levels = 0
        while p ** (levels + 1) <= n_act:
            levels += 1
        ideal = la.identity(self.dim)
        for i in range(levels + 1):
            if ideal.shape[1] == 0:
                break
            gram = np.zeros((ideal.shape[1], self.dim), dtype=np.int64)
            for k in range(ideal.shape[1]):
                ak = self._act(ideal[:, k])
                for j in range(self.dim):
                    gram[k, j] = _trace_power_functional((ak @ acts[j]) % p, p, i)
            keep = la.kernel_basis(gram.T, p)
            ideal = la.canonical_basis(la.matmul(ideal, keep, p), p) if keep.shape[1] else la.zeros(self.dim, 0)
        return ideal

    @cached_property
    def _quotient_data(self):
        rows = self.radical.T
        pivots = [int(np.nonzero(r)[0][0]) for r in rows]
        free = [i for i in range(self.dim) if i not in set(pivots)]
        return rows, pivots, free

    def reduce_mod_radical(self, x: np.ndarray) -> np.ndarray:
        """Normal form of ``x`` modulo the radical (zero on the radical's pivots)."""
        rows, pivots, _ = self._quotient_data
        x = np.array(x, dtype=np.int64) % self.p
        for r, pc in zip(rows, pivots):
            if x[pc]:
                x = (x - x[pc] * r) % self.p
        return x

    def quotient_coords(self, x: np.ndarray) -> np.ndarray:
        return self.reduce_mod_radical(x)[self._quotient_data[2]]

    def quotient_lift(self, q: np.ndarray) -> np.ndarray:
        x = self.zero.copy()
        x[self._quotient_data[2]] = q
        return x

    @property
    def semisimple_dim(self) -> int:
        return self.dim - self.radical.shape[1]

    def in_radical(self, x: np.ndarray) -> bool:
        return not np.any(self.reduce_mod_radical(x))

    def quotient_algebra(self) -> FDAlgebra:
        """The semisimple quotient by the radical, in the induced basis."""
        free = self._quotient_data[2]
        d = len(free)
        c = np.zeros((d, d, d), dtype=np.int64)
        for a, i in enumerate(free):
            for b, j in enumerate(free):
                c[a, b] = self.quotient_coords(self.mul(self.basis_element(i), self.basis_element(j)))
        return FDAlgebra(self.p, c, self.quotient_coords(self.unit))

    # idempotents

    def is_idempotent(self, e: np.ndarray) -> bool:
        return np.array_equal(self.mul(e, e), np.asarray(e) % self.p)

    def lift_idempotent(self, e0: np.ndarray, max_rounds: int = 64) -> np.ndarray:
        """Idempotent congruent to ``e0`` modulo the radical."""
        e = self.element(e0)
        if not self.in_radical((self.mul(e, e) - e) % self.p):
            raise PreconditionError("element is not idempotent modulo the radical")
        for _ in range(max_rounds):
            e2 = self.mul(e, e)
            if np.array_equal(e2, e):
                return e
            e3 = self.mul(e2, e)
            e = (3 * e2 - 2 * e3) % self.p
        raise RuntimeError("idempotent lifting did not converge")

    def _minpoly_mod_radical(self, x: np.ndarray) -> list[int]:
        """Monic minimal polynomial of ``x`` in the semisimple quotient, low degree first."""
        lx = self.left_matrix(x)
        powers = [self.quotient_coords(self.unit)]
        cur = self.unit
        while True:
            cur = (lx @ cur) % self.p
            q = self.quotient_coords(cur)
            basis = np.column_stack(powers)
            sol = la.solve_right(basis, q, self.p)
            if sol is not None:
                return [int(-s % self.p) for s in sol] + [1]
            powers.append(q)

    def _eval_poly(self, coeffs_low_first: list[int], x: np.ndarray) -> np.ndarray:
        lx = self.left_matrix(x)
        acc = self.zero.copy()
        for c in reversed(coeffs_low_first):
            acc = ((lx @ acc) + c * self.unit) % self.p
        return acc

    def _split_by_minpoly(self, x: np.ndarray) -> tuple[np.ndarray | None, bool]:
        """Try to build a nontrivial idempotent mod radical from ``x``.

        Returns ``(e, generates_field)``; the flag reports that the minimal
        polynomial is irreducible of degree equal to the quotient dimension.
        """
        t = sympy.Symbol("t")
        m = self._minpoly_mod_radical(x)
        poly = sympy.Poly(list(reversed(m)), t, modulus=self.p)
        _, factors = poly.factor_list()
        if len(factors) < 2:
            irreducible = len(factors) == 1 and factors[0][1] == 1
            return None, irreducible and poly.degree() == self.semisimple_dim
        g = factors[0][0] ** factors[0][1]
        h = sympy.Poly(1, t, modulus=self.p)
        for f, k in factors[1:]:
            h = h * f ** k
        s, _, one = h.gcdex(g)
        e_poly = (s * h).rem(poly)
        coeffs = [int(c) % self.p for c in reversed(e_poly.all_coeffs())]
        return self._eval_poly(coeffs, x), False

    def _sweep(self, seed: int = 0):
        n = self.dim
        for i in range(n):
            yield self.basis_element(i)
        for k, (i, j) in enumerate(itertools.combinations(range(n), 2)):
            if k >= 256:
                break
            yield (self.basis_element(i) + self.basis_element(j)) % self.p
        rng = np.random.default_rng(seed)
        for _ in range(256):
            yield rng.integers(0, self.p, size=n, dtype=np.int64)

    @cached_property
    def _quotient_commutative(self) -> bool:
        free = self._quotient_data[2]
        for i, j in itertools.combinations(free, 2):
            bi, bj = self.basis_element(i), self.basis_element(j)
            if not self.in_radical((self.mul(bi, bj) - self.mul(bj, bi)) % self.p):
                return False
        return True

    @cached_property
    def _idempotent_search(self) -> np.ndarray | None:
        d = self.semisimple_dim
        if self.dim == 0 or d <= 1:
            return None
        certified_field = False
        for x in self._sweep():
            e, gen = self._split_by_minpoly(x)
            if e is not None:
                return self.lift_idempotent(e)
            if gen and self._quotient_commutative:
                certified_field = True
                break
        if certified_field:
            return None
        if self.p ** d <= EXHAUSTIVE_LIMIT:
            q_unit = self.quotient_coords(self.unit)
            for q in itertools.product(range(self.p), repeat=d):
                qv = np.array(q, dtype=np.int64)
                if not qv.any() or np.array_equal(qv, q_unit):
                    continue
                x = self.quotient_lift(qv)
                if np.array_equal(self.quotient_coords(self.mul(x, x)), qv):
                    return self.lift_idempotent(x)
            return None
        raise RuntimeError("idempotent search exhausted without a decision")

    def find_nontrivial_idempotent(self) -> np.ndarray | None:
        e = self._idempotent_search
        return None if e is None else e.copy()

    def is_local(self) -> bool:
        """True iff the algebra is nonzero and its semisimple quotient is a division ring."""
        if self.dim == 0:
            return False
        return self._idempotent_search is None


def _trace_power_functional(z: np.ndarray, p: int, i: int) -> int:
    mod = p ** (i + 1)
    m = z.astype(np.int64) % p
    result = la.identity(m.shape[0])
    base = m
    k = p ** i
    while k:
        if k & 1:
            result = (result @ base) % mod
        base = (base @ base) % mod
        k >>= 1
    t = int(np.trace(result)) % mod
    pi = p ** i
    if t % pi:
        raise RuntimeError("trace power not divisible; element outside the previous ideal")
    return (t // pi) % p


def matrix_algebra(n: int, p: int) -> FDAlgebra:
    """Full matrix algebra M_n(F_p) in the basis of matrix units (row-major)."""
    d = n * n
    c = np.zeros((d, d, d), dtype=np.int64)
    for i, j, k, l in itertools.product(range(n), repeat=4):
        if j == k:
            c[i * n + j, k * n + l, i * n + l] = 1
    unit = np.zeros(d, dtype=np.int64)
    for i in range(n):
        unit[i * n + i] = 1
    return FDAlgebra(p, c, unit)


def upper_triangular_algebra(n: int, p: int) -> FDAlgebra:
    units = [(i, j) for i in range(n) for j in range(i, n)]
    idx = {u: t for t, u in enumerate(units)}
    d = len(units)
    c = np.zeros((d, d, d), dtype=np.int64)
    for (i, j), (k, l) in itertools.product(units, repeat=2):
        if j == k:
            c[idx[(i, j)], idx[(k, l)], idx[(i, l)]] = 1
    unit = np.zeros(d, dtype=np.int64)
    for i in range(n):
        unit[idx[(i, i)]] = 1
    return FDAlgebra(p, c, unit)


def product_of_fields(k: int, p: int) -> FDAlgebra:
    """F_p^k with componentwise multiplication."""
    c = np.zeros((k, k, k), dtype=np.int64)
    for i in range(k):
        c[i, i, i] = 1
    return FDAlgebra(p, c, np.ones(k, dtype=np.int64))


def group_algebra_cyclic(n: int, p: int) -> FDAlgebra:
    c = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            c[i, j, (i + j) % n] = 1
    unit = np.zeros(n, dtype=np.int64)
    unit[0] = 1
    return FDAlgebra(p, c, unit)
