"""Exact arithmetic and structure of the group

    T_{8n} = < a, b | a^{2n} = b^8 = e, a^n = b^4, b^{-1} a b = a^{-1} >.

Every element has a unique normal form ``a^r b^j`` with ``0 <= r < 2n`` and
``0 <= j < 4``.  Multiplication uses ``b^j a^r = a^{(-1)^j r} b^j`` and the
carry ``b^4 = a^n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Iterable, Iterator

from .errors import ContractError, NotApplicableError, ParameterMismatchError


@dataclass(frozen=True)
class Element:
    """The element ``a^r b^j`` of T_{8n}, stored in normal form."""

    n: int
    r: int
    j: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not (0 <= self.r < 2 * self.n and 0 <= self.j < 4):
            raise ValueError(
                f"({self.r}, {self.j}) is not a normal form for n={self.n}"
            )

    @classmethod
    def from_word(cls, n: int, r: int, j: int) -> "Element":
        """Normal form of ``a^r b^j`` for arbitrary integers ``r``, ``j``."""
        q, jj = divmod(j, 4)
        return cls(n, (r + q * n) % (2 * n), jj)

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __pow__(self, k: int) -> "Element":
        return power(self, k)

    def inverse(self) -> "Element":
        return inverse(self)

    @property
    def is_identity(self) -> bool:
        return self.r == 0 and self.j == 0

    def sort_key(self) -> tuple[int, int]:
        return (self.j, self.r)

    def label(self) -> str:
        parts = []
        if self.r:
            parts.append("a" if self.r == 1 else f"a^{self.r}")
        if self.j:
            parts.append("b" if self.j == 1 else f"b^{self.j}")
        return "".join(parts) or "e"

    def __repr__(self) -> str:
        return f"Element(n={self.n}, r={self.r}, j={self.j})"


def _check_same(x: Element, y: Element) -> None:
    if x.n != y.n:
        raise ParameterMismatchError(f"elements of T_{8 * x.n} and T_{8 * y.n}")


def multiply(x: Element, y: Element) -> Element:
    _check_same(x, y)
    n = x.n
    sign = 1 if x.j % 2 == 0 else -1
    r = x.r + sign * y.r
    j = x.j + y.j
    if j >= 4:
        j -= 4
        r += n
    return Element(n, r % (2 * n), j)


def inverse(x: Element) -> Element:
    n, r = x.n, x.r
    m = 2 * n
    if x.j == 0:
        return Element(n, (-r) % m, 0)
    if x.j == 1:
        return Element(n, (r + n) % m, 3)
    if x.j == 2:
        return Element(n, (n - r) % m, 2)
    return Element(n, (r + n) % m, 1)


def power(x: Element, k: int) -> Element:
    if k < 0:
        x, k = inverse(x), -k
    result = Element(x.n, 0, 0)
    base = x
    while k:
        if k & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        k >>= 1
    return result


def element_order(x: Element) -> int:
    """Smallest ``m >= 1`` with ``x^m = e``, found by iteration."""
    e = Element(x.n, 0, 0)
    y, m = x, 1
    while y != e:
        y = multiply(y, x)
        m += 1
    return m


def closed_form_order(x: Element) -> int:
    """Order of ``x`` from its normal form, without iterating.

    For ``a^i b^2`` the square is ``a^{2i+n}``, so the order is twice the
    order of that power of ``a``.  (The shortcut ``lcm(o(a^i), 4)`` agrees
    with this only for odd ``n``.)
    """
    n = x.n
    if x.j == 0:
        return 2 * n // gcd(x.r, 2 * n)
    if x.j == 2:
        return 2 * (2 * n // gcd(2 * x.r + n, 2 * n))
    return 8


@dataclass(frozen=True)
class ConjugacyClass:
    representative: Element
    members: frozenset[Element]

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: Element) -> bool:
        return x in self.members

    def label(self) -> str:
        return "[" + self.representative.label() + "]"


class Group:
    """Structure of T_{8n}: element list, conjugacy classes, subgroups."""

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"n must be a positive integer, got {n!r}")
        self.n = n
        self.order = 8 * n

    def __repr__(self) -> str:
        return f"Group(n={self.n})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Group) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("T8n", self.n))

    @property
    def identity(self) -> Element:
        return Element(self.n, 0, 0)

    @property
    def a(self) -> Element:
        return Element.from_word(self.n, 1, 0)

    @property
    def b(self) -> Element:
        return Element(self.n, 0, 1)

    def element(self, r: int, j: int) -> Element:
        return Element.from_word(self.n, r, j)

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        """All 8n elements, ordered by ``(j, r)``."""
        return tuple(
            Element(self.n, r, j) for j in range(4) for r in range(2 * self.n)
        )

    @cached_property
    def index(self) -> dict[Element, int]:
        return {x: i for i, x in enumerate(self.elements)}

    def __iter__(self) -> Iterator[Element]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def coset(self, j: int) -> frozenset[Element]:
        """The coset ``<a> b^j``."""
        j %= 4
        return frozenset(Element(self.n, r, j) for r in range(2 * self.n))

    def parity_coset(self, j: int, parity: int) -> frozenset[Element]:
        """``{a^r b^j : r = parity (mod 2)}``."""
        j %= 4
        return frozenset(
            Element(self.n, r, j) for r in range(parity % 2, 2 * self.n, 2)
        )

    def cyclic_subgroup(self, x: Element) -> frozenset[Element]:
        out = {self.identity}
        y = x
        while y not in out:
            out.add(y)
            y = multiply(y, x)
        return frozenset(out)

    @cached_property
    def conjugacy_classes(self) -> tuple[ConjugacyClass, ...]:
        """The 2n+6 classes, listed in closed form.

        Order: {e}, {a^n}, {a^r, a^-r} (1 <= r < n), {a^{even} b},
        {a^{odd} b}, {b^2}, {a^n b^2}, {a^r b^2, a^-r b^2} (1 <= r < n),
        {a^{even} b^3}, {a^{odd} b^3}.
        """
        n = self.n

        def E(r: int, j: int) -> Element:
            return Element(n, r % (2 * n), j)

        classes: list[ConjugacyClass] = []
        for j in range(4):
            if j % 2 == 0:
                members = [[E(0, j)], [E(n, j)]]
                members += [[E(r, j), E(-r, j)] for r in range(1, n)]
            else:
                members = [[E(2 * r + p, j) for r in range(n)] for p in (0, 1)]
            classes += [ConjugacyClass(m[0], frozenset(m)) for m in members]
        return tuple(classes)

    def conjugacy_classes_bruteforce(self) -> list[frozenset[Element]]:
        """Orbits ``{g x g^-1 : g in G}`` computed directly."""
        seen: set[Element] = set()
        orbits = []
        for x in self.elements:
            if x in seen:
                continue
            orbit = frozenset(multiply(multiply(g, x), inverse(g)) for g in self.elements)
            seen |= orbit
            orbits.append(orbit)
        return orbits

    @cached_property
    def class_of(self) -> dict[Element, ConjugacyClass]:
        return {x: c for c in self.conjugacy_classes for x in c.members}

    def generator_class(self, x: Element) -> frozenset[Element]:
        """``[x]``: the elements of ``<x>`` that generate ``<x>``."""
        return _generator_class(x)

    @cached_property
    def rational_atoms(self) -> tuple[frozenset[Element], ...]:
        """Blocks of the finest partition closed under conjugation and
        under passing to generator classes.

        Unions of these blocks are exactly the power-closed unions of
        conjugacy classes.
        """
        blocks: list[frozenset[Element]] = []
        seen: set[Element] = set()
        for x in self.elements:
            if x in seen:
                continue
            block = {x}
            frontier = [x]
            while frontier:
                y = frontier.pop()
                for z in self.class_of[y].members | self.generator_class(y):
                    if z not in block:
                        block.add(z)
                        frontier.append(z)
            seen |= block
            blocks.append(frozenset(block))
        return tuple(blocks)


@lru_cache(maxsize=None)
def _generator_class(x: Element) -> frozenset[Element]:
    e = Element(x.n, 0, 0)
    cyc = [e]
    y = x
    while y != e:
        cyc.append(y)
        y = multiply(y, x)
    # y generates <x> iff its order equals |<x>|
    m = len(cyc)
    return frozenset(cyc[k] for k in range(1, m) if gcd(k, m) == 1) if m > 1 else frozenset({e})


def generator_class(x: Element) -> frozenset[Element]:
    return _generator_class(x)


@lru_cache(maxsize=None)
def get_group(n: int) -> Group:
    return Group(n)


class ConnectionSet:
    """A finite identity-free subset of T_{8n}."""

    __slots__ = ("n", "members", "_hash")

    def __init__(self, n: int, members: Iterable[Element]):
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        ms = frozenset(members)
        for x in ms:
            if x.n != n:
                raise ParameterMismatchError(f"{x!r} does not belong to T_{8 * n}")
            if x.is_identity:
                raise ContractError("connection set must not contain the identity")
        self.n = n
        self.members = ms
        self._hash = hash((n, ms))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "ConnectionSet":
        return cls(n, (Element(n, r, j) for r, j in pairs))

    @property
    def group(self) -> Group:
        return get_group(self.n)

    def __iter__(self) -> Iterator[Element]:
        return iter(self.sorted())

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: Element) -> bool:
        return x in self.members

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConnectionSet):
            return NotImplemented
        return self.n == other.n and self.members == other.members

    def __hash__(self) -> int:
        return self._hash

    def __or__(self, other: "ConnectionSet") -> "ConnectionSet":
        if self.n != other.n:
            raise ParameterMismatchError("union of sets over different groups")
        return ConnectionSet(self.n, self.members | other.members)

    def __repr__(self) -> str:
        body = ", ".join(x.label() for x in self.sorted())
        return f"ConnectionSet(n={self.n}, {{{body}}})"

    def sorted(self) -> list[Element]:
        return sorted(self.members, key=Element.sort_key)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x.r, x.j) for x in self.sorted()]

    def inverse(self) -> "ConnectionSet":
        return ConnectionSet(self.n, (inverse(x) for x in self.members))

    @property
    def is_symmetric(self) -> bool:
        return all(inverse(x) in self.members for x in self.members)

    def symmetrized(self) -> "ConnectionSet":
        return ConnectionSet(self.n, self.members | {inverse(x) for x in self.members})

    def require_symmetric(self) -> None:
        if not self.is_symmetric:
            raise ContractError("connection set is not inverse-closed (S != S^-1)")


def is_power_closed(S: ConnectionSet) -> bool:
    return all(_generator_class(x) <= S.members for x in S.members)


def is_union_of_conjugacy_classes(S: ConnectionSet) -> bool:
    cls = S.group.class_of
    return all(cls[x].members <= S.members for x in S.members)


def is_in_boolean_algebra_a2(S1: ConnectionSet) -> bool:
    """Membership of ``S1 <= <a^2>`` in the Boolean algebra B(<a^2>).

    The atoms of the Boolean algebra generated by the subgroups of a cyclic
    group are its generator classes, so membership is closure under [x].
    """
    for x in S1.members:
        if x.j != 0 or x.r % 2:
            raise NotApplicableError(f"{x.label()} is not in <a^2>")
    return is_power_closed(S1)


def generates_group(S: ConnectionSet) -> bool:
    G = S.group
    reached = {G.identity}
    frontier = [G.identity]
    gens = list(S.members)
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = multiply(x, s)
            if y not in reached:
                reached.add(y)
                frontier.append(y)
    return len(reached) == G.order


def whole_group_minus_identity(n: int) -> ConnectionSet:
    G = get_group(n)
    return ConnectionSet(n, (x for x in G.elements if not x.is_identity))
