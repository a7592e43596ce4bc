"""Brute-force ground truth for Cayley graph spectra.

The adjacency matrix is built directly from the group law, its
characteristic polynomial is computed exactly over the integers with
Berkowitz's division-free algorithm, and integer eigenvalues are peeled off
by synthetic division.  A parallel-order cyclic Jacobi solver gives floating
eigenvalues (and eigenvectors) for the non-integral cases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .group import ConnectionSet, Element, get_group, inverse, multiply
from .spectrum import Spectrum


@dataclass(frozen=True, eq=False)
class AdjacencyMatrix:
    n: int
    vertices: tuple[Element, ...]  # sorted by (j, r)
    bits: np.ndarray

    @property
    def size(self) -> int:
        return len(self.vertices)

    def degree(self) -> int:
        return int(self.bits[0].sum()) if self.size else 0


@dataclass(frozen=True)
class CharPoly:
    coeffs: tuple[int, ...]  # highest degree first, monic

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc


def adjacency_matrix(S: ConnectionSet) -> AdjacencyMatrix:
    """``A[x, y] = 1`` iff ``x y^-1`` lies in S."""
    S.require_symmetric()
    G = get_group(S.n)
    verts = G.elements
    idx = G.index
    bits = np.zeros((G.order, G.order), dtype=np.int64)
    # x y^-1 = s  <=>  x = s y
    for y in verts:
        col = idx[y]
        for s in S.members:
            bits[idx[multiply(s, y)], col] = 1
    return AdjacencyMatrix(S.n, verts, bits)


def _as_int_rows(A) -> list[list[int]]:
    if isinstance(A, AdjacencyMatrix):
        A = A.bits
    rows = [[int(v) for v in row] for row in A]
    if any(len(r) != len(rows) for r in rows):
        raise ValueError("matrix must be square")
    return rows


def char_poly(A) -> CharPoly:
    """Exact ``det(xI - A)`` by Berkowitz's algorithm (no divisions)."""
    rows = _as_int_rows(A)
    N = len(rows)
    p = [1]
    for k in range(N):
        # A_k = [[M, C], [R, a]] with M the leading k x k block
        a = rows[k][k]
        R = rows[k][:k]
        col = [rows[i][k] for i in range(k)]
        M = [row[:k] for row in rows[:k]]
        nz = [[j for j, v in enumerate(row) if v] for row in M]
        dense = any(v not in (0, 1) for row in M for v in row)
        q = [1, -a]
        v = col
        for _ in range(k):
            q.append(-sum(r * x for r, x in zip(R, v) if r))
            if dense:
                v = [sum(m * x for m, x in zip(row, v)) for row in M]
            else:
                v = [sum(v[j] for j in js) for js in nz]
        # p <- T p where T is lower-triangular Toeplitz with first column q
        p = [sum(q[i - j] * p[j] for j in range(max(0, i - k - 1), min(i, k) + 1)) for i in range(k + 2)]
    return CharPoly(tuple(p))


def _synthetic_divide(coeffs: list[int], root: int) -> tuple[list[int], int]:
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(c + out[-1] * root)
    rem = out.pop()
    return out, rem


def integer_spectrum(p: CharPoly, degree_bound: int) -> Spectrum | None:
    """Full integer spectrum if ``p`` splits over the integers in
    ``[-degree_bound, degree_bound]``; otherwise ``None``."""
    coeffs = list(p.coeffs)
    roots: list[int] = []
    for m in range(degree_bound, -degree_bound - 1, -1):
        while len(coeffs) > 1:
            quo, rem = _synthetic_divide(coeffs, m)
            if rem:
                break
            coeffs = quo
            roots.append(m)
    if len(coeffs) > 1:
        return None
    return Spectrum.from_values(roots)


def _round_robin(m: int) -> list[list[tuple[int, int]]]:
    """Rounds of disjoint pairs covering every pair of ``range(m)`` once (m even)."""
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        rounds.append([(players[i], players[m - 1 - i]) for i in range(m // 2)])
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigh(A, tol: float = 1e-12, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and orthonormal eigenvectors of a real symmetric matrix.

    Cyclic Jacobi with a round-robin rotation schedule: each round applies
    N/2 disjoint plane rotations at once.  Sweeps stop when the Frobenius
    norm of the off-diagonal part drops below ``tol``.
    """
    a = np.array(A.bits if isinstance(A, AdjacencyMatrix) else A, dtype=float)
    N = a.shape[0]
    if a.shape != (N, N) or not np.allclose(a, a.T):
        raise ValueError("matrix must be square and symmetric")
    V = np.eye(N)
    if N < 2:
        return np.diag(a).copy(), V
    m = N + (N % 2)
    rounds = [
        [(p, q) for p, q in rnd if p < N and q < N]
        for rnd in _round_robin(m)
    ]
    off = lambda M: np.sqrt(max((M * M).sum() - (np.diag(M) ** 2).sum(), 0.0))  # noqa: E731
    for _ in range(max_sweeps):
        if off(a) < tol:
            break
        for rnd in rounds:
            P = np.array([p for p, _ in rnd])
            Q = np.array([q for _, q in rnd])
            apq = a[P, Q]
            live = np.abs(apq) > 1e-300
            if not live.any():
                continue
            P, Q, apq = P[live], Q[live], apq[live]
            theta = (a[Q, Q] - a[P, P]) / (2.0 * apq)
            t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            J = np.eye(N)
            J[P, P] = c
            J[Q, Q] = c
            J[P, Q] = s
            J[Q, P] = -s
            a = J.T @ a @ J
            V = V @ J
    w = np.diag(a).copy()
    order = np.argsort(w)
    return w[order], V[:, order]


def numeric_eigenvalues(A) -> list[float]:
    w, _ = jacobi_eigh(A)
    return [float(x) for x in w]


def oracle_spectrum(S: ConnectionSet) -> Spectrum | None:
    """Exact integer spectrum of Cay(T_{8n}, S), or None if not integral."""
    A = adjacency_matrix(S)
    return integer_spectrum(char_poly(A), len(S))


def oracle_is_integral(S: ConnectionSet) -> bool:
    return oracle_spectrum(S) is not None


def numeric_spectrum(S: ConnectionSet, tol: float = 1e-6) -> Spectrum:
    return Spectrum.from_values(numeric_eigenvalues(adjacency_matrix(S)), exact=False, tol=tol)


def left_relabel(A: AdjacencyMatrix, g: Element) -> np.ndarray:
    """Adjacency matrix with vertex ``x`` renamed ``g x``."""
    G = get_group(A.n)
    perm = [G.index[multiply(g, x)] for x in A.vertices]
    out = np.zeros_like(A.bits)
    out[np.ix_(perm, perm)] = A.bits
    return out


def right_regular_weights(A: AdjacencyMatrix, vectors: np.ndarray, row: Sequence[complex]) -> np.ndarray:
    """``v^T P v`` for each column ``v``, where ``P = sum_g conj(chi(g)) R(g)``
    (without the ``d/|G|`` factor) and ``R(g) e_x = e_{x g^-1}``.

    ``row[i]`` is the character value at ``A.vertices[i]``.
    """
    G = get_group(A.n)
    idx = G.index
    acc = np.zeros(vectors.shape[1])
    for gi, g in enumerate(A.vertices):
        gin = inverse(g)
        perm = [idx[multiply(x, gin)] for x in A.vertices]
        # sum_x v[x g^-1] v[x]
        corr = (vectors[perm, :] * vectors).sum(axis=0)
        acc += (np.conj(row[gi]) * corr).real
    return acc
