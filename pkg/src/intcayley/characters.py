"""Irreducible characters and matrix representations of T_{8n}.

All values live in Z[zeta_L] with L = 8n, using

    omega = zeta^n,  epsilon = zeta^8,  xi = zeta^4,  i = zeta^(2n),  -1 = zeta^(4n).

There are 8 linear characters ``chi_j`` and 2(n-1) characters of degree 2,
``phi_k`` and ``psi_h`` for ``k, h = 1..n-1``.  Character values come from
closed forms; the representation matrices are kept as an independent check
(their traces must reproduce the closed forms).

For odd n, ``psi_h`` sends ``b^2`` to ``(-1)^(h+1) i`` times the identity.  With
a constant ``i`` there, ``psi_h`` and ``psi_{n-h}`` coincide and the table
fails orthogonality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

from .cyclotomic import Cyclotomic, CyclotomicContext, make_context
from .group import ConnectionSet, Element, Group, get_group, multiply

KINDS = ("linear", "phi", "psi")


@dataclass(frozen=True, order=True)
class CharacterId:
    kind: str
    index: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown character kind {self.kind!r}")

    @property
    def degree(self) -> int:
        return 1 if self.kind == "linear" else 2

    def label(self) -> str:
        return {"linear": "chi", "phi": "phi", "psi": "psi"}[self.kind] + f"_{self.index}"

    def validate(self, n: int) -> None:
        hi = 7 if self.kind == "linear" else n - 1
        lo = 0 if self.kind == "linear" else 1
        if not lo <= self.index <= hi:
            raise ValueError(f"{self.label()} is out of range for n={n}")

    @classmethod
    def parse(cls, text: str) -> "CharacterId":
        name, _, idx = text.partition("_")
        kind = {"chi": "linear", "phi": "phi", "psi": "psi"}.get(name)
        if kind is None or not idx.lstrip("-").isdigit():
            raise ValueError(f"cannot parse character label {text!r}")
        return cls(kind, int(idx))


def character_ids(n: int) -> list[CharacterId]:
    ids = [CharacterId("linear", j) for j in range(8)]
    ids += [CharacterId("phi", k) for k in range(1, n)]
    ids += [CharacterId("psi", h) for h in range(1, n)]
    return ids


Terms = tuple[tuple[int, int], ...]  # ((exponent of zeta_L, coefficient), ...)


def raw_value(n: int, cid: CharacterId, r: int, m: int) -> Terms:
    """Closed-form value at ``a^r b^m`` as a short sum of powers of zeta_{8n}."""
    L = 8 * n
    half, quarter = 4 * n, 2 * n  # zeta^half = -1, zeta^quarter = i
    odd_n = n % 2 == 1

    def pair(step: int, shift: int = 0) -> Terms:
        return (((shift + step) % L, 1), ((shift - step) % L, 1))

    if cid.kind == "linear":
        j = cid.index
        if odd_n:
            return (((half * (r * j % 2) + n * m * j) % L, 1),)
        if j % 2 == 0:
            return ((n * m * j % L, 1),)
        return (((half * (r % 2) + n * m * (j - 1)) % L, 1),)

    if m % 2 == 1:
        return ()
    k = cid.index
    if cid.kind == "phi":
        if odd_n:
            shift = half * k if m == 2 else 0
            return pair(8 * k * r, shift)
        shift = (0 if k % 2 == 0 else quarter) if m == 2 else 0
        return pair(4 * k * r, shift)
    # psi
    if odd_n:
        sign = half * ((k + 1) * r % 2)
        shift = sign + ((half * (k + 1) + quarter) if m == 2 else 0)
        return pair(4 * k * r, shift)
    shift = (half if k % 2 == 0 else half + quarter) if m == 2 else 0
    return pair(4 * k * r, shift)


Matrix = list[list[Cyclotomic]]


def _generator_images(n: int, cid: CharacterId) -> tuple[list[list[int | None]], list[list[int | None]]]:
    """Images of ``a`` and ``b`` as matrices of zeta-exponents (None = 0)."""
    half, quarter = 4 * n, 2 * n
    odd_n = n % 2 == 1
    i = cid.index
    if cid.kind == "linear":
        if odd_n:
            return [[half * i]], [[n * i]]
        if i % 2 == 0:
            return [[0]], [[n * i]]
        return [[half]], [[n * (i - 1)]]
    if cid.kind == "phi":
        if odd_n:
            return [[8 * i, None], [None, -8 * i]], [[None, half * i], [0, None]]
        top = 0 if i % 2 == 0 else quarter
        return [[4 * i, None], [None, -4 * i]], [[None, top], [0, None]]
    if odd_n:
        s = half * (i + 1)
        return [[s + 4 * i, None], [None, s - 4 * i]], [[None, s], [quarter, None]]
    top = half if i % 2 == 0 else half + quarter
    return [[4 * i, None], [None, -4 * i]], [[None, top], [0, None]]


def _to_matrix(ctx: CyclotomicContext, exps: list[list[int | None]]) -> Matrix:
    return [[ctx.zero if e is None else ctx.root_of_unity(e) for e in row] for row in exps]


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    size = len(x)
    out = []
    for i in range(size):
        row = []
        for j in range(size):
            acc = None
            for k in range(size):
                if x[i][k].is_zero() or y[k][j].is_zero():
                    continue
                term = x[i][k] * y[k][j]
                acc = term if acc is None else acc + term
            row.append(acc if acc is not None else x[0][0].ctx.zero)
        out.append(row)
    return out


def mat_identity(ctx: CyclotomicContext, size: int) -> Matrix:
    return [[ctx.one if i == j else ctx.zero for j in range(size)] for i in range(size)]


def mat_power(x: Matrix, k: int) -> Matrix:
    out = mat_identity(x[0][0].ctx, len(x))
    for _ in range(k):
        out = mat_mul(out, x)
    return out


def trace(x: Matrix) -> Cyclotomic:
    acc = x[0][0]
    for i in range(1, len(x)):
        acc = acc + x[i][i]
    return acc


class CharacterTable:
    """The 2n+6 irreducible characters of T_{8n}, materialised once."""

    def __init__(self, n: int):
        self.n = n
        self.group: Group = get_group(n)
        self.ctx: CyclotomicContext = make_context(8 * n)
        self.ids: tuple[CharacterId, ...] = tuple(character_ids(n))
        self.degrees = {cid: cid.degree for cid in self.ids}
        self.position = {cid: i for i, cid in enumerate(self.ids)}
        elems = self.group.elements
        ctx = self.ctx
        self._values: list[list[Cyclotomic]] = [
            [ctx.from_exponents(raw_value(n, cid, x.r, x.j)) for x in elems]
            for cid in self.ids
        ]
        # (character, element, coefficient) integer tensor for batched sums
        self.array = np.array(
            [[v.coeffs for v in row] for row in self._values], dtype=np.int64
        )

    def __repr__(self) -> str:
        return f"CharacterTable(n={self.n})"

    def _pos(self, cid: CharacterId) -> int:
        try:
            return self.position[cid]
        except KeyError:
            cid.validate(self.n)
            raise

    def value(self, cid: CharacterId, x: Element) -> Cyclotomic:
        return self._values[self._pos(cid)][self.group.index[x]]

    def row(self, cid: CharacterId) -> list[Cyclotomic]:
        return list(self._values[self._pos(cid)])

    @cached_property
    def class_values(self) -> list[list[Cyclotomic]]:
        """Rows = characters, columns = conjugacy-class representatives."""
        reps = [c.representative for c in self.group.conjugacy_classes]
        return [[self.value(cid, x) for x in reps] for cid in self.ids]

    def counts(self, elements: Iterable[Element]) -> np.ndarray:
        """Multiplicity vector of a multiset of elements, indexed like ``group.elements``."""
        idx = self.group.index
        out = np.zeros(self.group.order, dtype=np.int64)
        for x in elements:
            out[idx[x]] += 1
        return out

    def product_counts(self, A: Iterable[Element], B: Iterable[Element]) -> np.ndarray:
        """Multiplicities of ``ab`` over all ordered pairs ``(a, b)``."""
        B = list(B)
        return self.counts(multiply(x, y) for x in A for y in B)

    def sums_from_counts(self, counts: np.ndarray) -> dict[CharacterId, Cyclotomic]:
        coeffs = np.tensordot(counts, self.array, axes=([0], [1]))
        return {
            cid: Cyclotomic(self.ctx, tuple(int(c) for c in coeffs[i]))
            for i, cid in enumerate(self.ids)
        }

    def sums(self, S: Iterable[Element]) -> dict[CharacterId, Cyclotomic]:
        return self.sums_from_counts(self.counts(S))

    def product_sums(self, A: Iterable[Element], B: Iterable[Element]) -> dict[CharacterId, Cyclotomic]:
        return self.sums_from_counts(self.product_counts(A, B))

    @lru_cache(maxsize=None)
    def generator_matrices(self, cid: CharacterId) -> tuple[Matrix, Matrix]:
        cid.validate(self.n)
        A, B = _generator_images(self.n, cid)
        return _to_matrix(self.ctx, A), _to_matrix(self.ctx, B)

    @lru_cache(maxsize=None)
    def representation_matrix(self, cid: CharacterId, x: Element) -> Matrix:
        """Image of ``x = a^r b^j`` as the product ``rho(a)^r rho(b)^j``."""
        A, B = self.generator_matrices(cid)
        return mat_mul(mat_power(A, x.r), mat_power(B, x.j))


@lru_cache(maxsize=None)
def get_table(n: int) -> CharacterTable:
    return CharacterTable(n)


def character_value(tbl: CharacterTable, cid: CharacterId, x: Element) -> Cyclotomic:
    cid.validate(tbl.n)
    return tbl.value(cid, x)


def character_sum(tbl: CharacterTable, cid: CharacterId, S: ConnectionSet | Sequence[Element]) -> Cyclotomic:
    cid.validate(tbl.n)
    acc = tbl.ctx.zero
    for x in S:
        acc = acc + tbl.value(cid, x)
    return acc


def character_sum_product(
    tbl: CharacterTable,
    cid: CharacterId,
    A: ConnectionSet | Sequence[Element],
    B: ConnectionSet | Sequence[Element],
) -> Cyclotomic:
    """Sum of ``chi(ab)`` over all ordered pairs, products counted with multiplicity."""
    cid.validate(tbl.n)
    B = list(B)
    acc = tbl.ctx.zero
    for x in A:
        for y in B:
            acc = acc + tbl.value(cid, multiply(x, y))
    return acc


def representation_matrix(n: int, cid: CharacterId, x: Element) -> Matrix:
    return get_table(n).representation_matrix(cid, x)
