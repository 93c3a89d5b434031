"""Exact dense linear algebra over a prime field F_p.

Matrices are plain ``numpy`` int64 arrays whose entries are residues in
``[0, p)``.  Every function takes the modulus explicitly.  Subspaces of
``F_p^n`` are passed around as matrices whose *columns* span them; the
functions that return subspaces return a canonical basis (the transposed
nonzero rows of the reduced row echelon form of the spanning set), so two
spans are equal iff their returned bases are identical arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# keeps n * (p-1)^2 inside int64 for matrix products up to n ~ 10^5
MAX_PRIME = 1 << 24


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if self.p >= MAX_PRIME:
            raise ValueError(f"modulus {self.p} too large (limit {MAX_PRIME})")

    def inv(self, a: int) -> int:
        return pow(int(a) % self.p, -1, self.p)


def as_matrix(data, p: int, shape: tuple[int, int] | None = None) -> np.ndarray:
    """Coerce nested lists / arrays to a reduced int64 matrix."""
    m = np.array(data, dtype=np.int64)
    if shape is not None:
        if m.size == 0:
            m = m.reshape(shape)
        elif m.shape != shape:
            raise ValueError(f"expected shape {shape}, got {m.shape}")
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    return m % p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    return (a @ b) % p


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of ``m`` over F_p and its pivot columns."""
    r = np.array(m, dtype=np.int64) % p
    rows, cols = r.shape
    pivots: list[int] = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        nz = np.nonzero(r[row:, col])[0]
        if nz.size == 0:
            continue
        k = row + int(nz[0])
        if k != row:
            r[[row, k]] = r[[k, row]]
        inv = pow(int(r[row, col]), -1, p)
        r[row] = (r[row] * inv) % p
        others = np.nonzero(r[:, col])[0]
        others = others[others != row]
        if others.size:
            r[others] = (r[others] - np.outer(r[others, col], r[row])) % p
        pivots.append(col)
        row += 1
    return r, pivots


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def kernel_basis(m: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning the null space ``{x : m x = 0}``, in canonical form."""
    rows, cols = m.shape
    if cols == 0:
        return zeros(0, 0)
    r, pivots = rref(m, p) if rows else (zeros(0, cols), [])
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = zeros(cols, len(free))
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-r[i, f]) % p
    return canonical_basis(basis, p)


def canonical_basis(span: np.ndarray, p: int) -> np.ndarray:
    """Canonical column basis of the column span of ``span``."""
    n = span.shape[0]
    if span.shape[1] == 0:
        return zeros(n, 0)
    r, pivots = rref(span.T, p)
    return np.ascontiguousarray(r[: len(pivots)].T)


def image_basis(m: np.ndarray, p: int) -> np.ndarray:
    return canonical_basis(m, p)


def left_kernel_basis(m: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning ``{y : y m = 0}``."""
    return kernel_basis(m.T, p).T


def solve_right(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """Some ``x`` with ``a @ x == b`` (mod p), or ``None`` if inconsistent."""
    if b.ndim == 1:
        b = b.reshape(-1, 1)
        x = solve_right(a, b, p)
        return None if x is None else x[:, 0]
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"row mismatch: {a.shape} vs {b.shape}")
    n = a.shape[1]
    if a.shape[0] == 0:
        return zeros(n, b.shape[1])
    aug = np.hstack([a % p, b % p])
    r, pivots = rref(aug, p)
    if pivots and pivots[-1] >= n:
        return None
    x = zeros(n, b.shape[1])
    for i, pc in enumerate(pivots):
        x[pc] = r[i, n:]
    return x


def inverse(a: np.ndarray, p: int) -> np.ndarray | None:
    n, m = a.shape
    if n != m:
        return None
    if n == 0:
        return zeros(0, 0)
    r, pivots = rref(np.hstack([a % p, identity(n)]), p)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        return None
    return np.ascontiguousarray(r[:, n:])


def in_span(basis: np.ndarray, v: np.ndarray, p: int) -> bool:
    if basis.shape[1] == 0:
        return not np.any(np.asarray(v) % p)
    return solve_right(basis, np.asarray(v, dtype=np.int64) % p, p) is not None


def subspace_contains(big: np.ndarray, small: np.ndarray, p: int) -> bool:
    if small.shape[1] == 0:
        return True
    if big.shape[0] != small.shape[0]:
        raise ValueError("ambient dimension mismatch")
    return solve_right(big, small, p) is not None


def subspace_sum(b1: np.ndarray, b2: np.ndarray, p: int) -> np.ndarray:
    if b1.shape[0] != b2.shape[0]:
        raise ValueError("ambient dimension mismatch")
    return canonical_basis(np.hstack([b1, b2]), p)


def subspace_intersection(b1: np.ndarray, b2: np.ndarray, p: int) -> np.ndarray:
    if b1.shape[0] != b2.shape[0]:
        raise ValueError("ambient dimension mismatch")
    n = b1.shape[0]
    if b1.shape[1] == 0 or b2.shape[1] == 0:
        return zeros(n, 0)
    # x = b1 u = b2 w  <=>  [b1, -b2] (u, w) = 0
    k = kernel_basis(np.hstack([b1, (-b2) % p]), p)
    return canonical_basis(matmul(b1, k[: b1.shape[1]], p), p)


def complement_basis(sub: np.ndarray, n: int, p: int) -> np.ndarray:
    """Standard basis vectors extending the span of ``sub`` to ``F_p^n``."""
    chosen: list[int] = []
    current = canonical_basis(sub, p) if sub.shape[1] else zeros(n, 0)
    r = current.shape[1]
    for i in range(n):
        if r == n:
            break
        e = zeros(n, 1)
        e[i, 0] = 1
        trial = np.hstack([current, e])
        if rank(trial, p) > r:
            current = trial
            r += 1
            chosen.append(i)
    out = zeros(n, len(chosen))
    for j, i in enumerate(chosen):
        out[i, j] = 1
    return out


def coordinates(basis: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    """Coordinates of ``v`` (columns allowed) in a basis with independent columns."""
    x = solve_right(basis, v, p)
    if x is None:
        raise ValueError("vector not in span of basis")
    return x


def matrix_power(a: np.ndarray, k: int, p: int) -> np.ndarray:
    result = identity(a.shape[0])
    base = a % p
    while k:
        if k & 1:
            result = matmul(result, base, p)
        base = matmul(base, base, p)
        k >>= 1
    return result


def block_diag(blocks: list[np.ndarray]) -> np.ndarray:
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    r = c = 0
    for b in blocks:
        out[r : r + b.shape[0], c : c + b.shape[1]] = b
        r += b.shape[0]
        c += b.shape[1]
    return out
