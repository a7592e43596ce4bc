"""Exact arithmetic in Z[zeta_L], the ring of integers of Q(zeta_L).

Values are stored as their canonical residue modulo the L-th cyclotomic
polynomial, a coefficient tuple of length phi(L).  Two values are equal iff
their tuples are equal, and a value is a rational integer iff its residue is
constant.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import ContextMismatchError

Poly = tuple[int, ...]  # coefficients, lowest degree first


def _poly_divexact(num: list[int], den: Poly) -> list[int]:
    """Exact division by a monic polynomial."""
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for k, d in enumerate(den):
                num[i + k] -= c * d
    if any(num[:dn]):
        raise ArithmeticError("division left a remainder")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(L: int) -> Poly:
    """Phi_L, from x^L - 1 divided by Phi_d for every proper divisor d."""
    if L < 1:
        raise ValueError(f"L must be >= 1, got {L}")
    num = [-1] + [0] * (L - 1) + [1]
    for d in range(1, L):
        if L % d == 0:
            num = _poly_divexact(num, cyclotomic_polynomial(d))
    return tuple(num)


class CyclotomicContext:
    """Conductor ``L`` together with Phi_L and a table of ``x^t mod Phi_L``."""

    def __init__(self, L: int):
        if L < 1:
            raise ValueError(f"L must be >= 1, got {L}")
        self.L = L
        self.phi_L = cyclotomic_polynomial(L)
        self.degree = len(self.phi_L) - 1
        d = self.degree
        # powers[t] = x^t reduced, for 0 <= t < L
        powers: list[Poly] = []
        cur = [0] * d
        cur[0] = 1
        for _ in range(L):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for k in range(d):
                    cur[k] -= top * self.phi_L[k]
        self._powers = powers
        self.zero = Cyclotomic(self, (0,) * d)
        self.one = self.from_int(1)

    def __repr__(self) -> str:
        return f"CyclotomicContext(L={self.L})"

    def __eq__(self, other) -> bool:
        return isinstance(other, CyclotomicContext) and other.L == self.L

    def __hash__(self) -> int:
        return hash(("cyclotomic", self.L))

    def from_int(self, m: int) -> "Cyclotomic":
        coeffs = [0] * self.degree
        coeffs[0] = m
        return Cyclotomic(self, tuple(coeffs))

    def root_of_unity(self, t: int) -> "Cyclotomic":
        return Cyclotomic(self, self._powers[t % self.L])

    def from_exponents(self, terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> "Cyclotomic":
        """Reduce ``sum c * zeta^t`` over ``(t, c)`` pairs."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc = [0] * self.degree
        L = self.L
        for t, c in items:
            if c:
                for k, v in enumerate(self._powers[t % L]):
                    if v:
                        acc[k] += c * v
        return Cyclotomic(self, tuple(acc))

    def reduce(self, coeffs: Iterable[int]) -> "Cyclotomic":
        """Residue of ``sum coeffs[t] x^t`` for a coefficient list of any length."""
        return self.from_exponents(enumerate(coeffs))


@lru_cache(maxsize=None)
def make_context(L: int) -> CyclotomicContext:
    return CyclotomicContext(L)


@dataclass(frozen=True, eq=False)
class Cyclotomic:
    ctx: CyclotomicContext
    coeffs: Poly

    def _other(self, other) -> "Cyclotomic":
        if isinstance(other, int):
            return self.ctx.from_int(other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.ctx.L != self.ctx.L:
            raise ContextMismatchError(f"L={self.ctx.L} vs L={other.ctx.L}")
        return other

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.as_integer() == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.ctx.L == other.ctx.L and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.ctx.L, self.coeffs))

    def __add__(self, other) -> "Cyclotomic":
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Cyclotomic(self.ctx, tuple(x + y for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.ctx, tuple(-x for x in self.coeffs))

    def __sub__(self, other) -> "Cyclotomic":
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Cyclotomic(self.ctx, tuple(x - y for x, y in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other) -> "Cyclotomic":
        return -(self - other)

    def __mul__(self, other) -> "Cyclotomic":
        o = self._other(other)
        if o is NotImplemented:
            return o
        a = [(i, c) for i, c in enumerate(self.coeffs) if c]
        if not a:
            return self
        b = [(i, c) for i, c in enumerate(o.coeffs) if c]
        if not b:
            return o
        prod: dict[int, int] = {}
        for i, x in a:
            for k, y in b:
                prod[i + k] = prod.get(i + k, 0) + x * y
        return self.ctx.from_exponents(prod)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            raise ValueError("negative powers are not supported")
        result, base = self.ctx.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "Cyclotomic":
        """Complex conjugate (the automorphism zeta -> zeta^{-1})."""
        L = self.ctx.L
        return self.ctx.from_exponents(((-t) % L, c) for t, c in enumerate(self.coeffs) if c)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_integer(self) -> int | None:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def is_real(self) -> bool:
        return self.conj() == self

    def to_complex(self) -> complex:
        """Floating evaluation at zeta_L = exp(2 pi i / L).

        Absolute error is at most ``sum |coeffs| * 2**-50``.
        """
        L = self.ctx.L
        return sum(c * cmath.exp(2j * cmath.pi * t / L) for t, c in enumerate(self.coeffs) if c) + 0j

    def __repr__(self) -> str:
        terms = []
        for t, c in enumerate(self.coeffs):
            if not c:
                continue
            if t == 0:
                terms.append(str(c))
            else:
                z = "z" if t == 1 else f"z^{t}"
                terms.append(z if c == 1 else f"-{z}" if c == -1 else f"{c}*{z}")
        body = " + ".join(terms).replace("+ -", "- ") or "0"
        return f"<{body} ; L={self.ctx.L}>"


def conj(x: Cyclotomic) -> Cyclotomic:
    return x.conj()


def as_integer(x: Cyclotomic) -> int | None:
    return x.as_integer()


def to_complex(x: Cyclotomic) -> tuple[float, float]:
    z = x.to_complex()
    return (z.real, z.imag)


def root_of_unity(ctx: CyclotomicContext, t: int) -> Cyclotomic:
    return ctx.root_of_unity(t)
