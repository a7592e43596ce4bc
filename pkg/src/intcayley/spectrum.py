"""Spectra of Cayley graphs over T_{8n} from the character table, and the
three integrality criteria (character conditions, Boolean algebra of <a^2>,
normal connection sets).

Each linear character ``chi`` gives one eigenvalue ``chi(S)``.  Each degree-2
character gives the two roots of

    x^2 - p x + (p^2 - q) / 2,    p = chi(S),  q = chi(S^2),

and each root occurs twice.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .characters import CharacterId, CharacterTable, get_table
from .cyclotomic import Cyclotomic, make_context
from .errors import ContractError, NotApplicableError
from .group import (
    ConnectionSet,
    Element,
    generator_class,
    get_group,
    is_in_boolean_algebra_a2,
    is_power_closed,
    is_union_of_conjugacy_classes,
)

Number = int | float


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset as ``(value, multiplicity)`` pairs, descending."""

    entries: tuple[tuple[Number, int], ...]
    exact: bool

    @classmethod
    def from_values(cls, values: Iterable[Number], exact: bool | None = None, tol: float = 1e-9) -> "Spectrum":
        values = list(values)
        if exact is None:
            exact = all(isinstance(v, int) for v in values)
        if exact:
            counts = Counter(int(v) for v in values)
            return cls(tuple(sorted(counts.items(), key=lambda e: -e[0])), True)
        merged: list[list] = []
        for v in sorted((float(v) for v in values), reverse=True):
            if merged and abs(merged[-1][0] - v) <= tol:
                merged[-1][1] += 1
            else:
                merged.append([v, 1])
        return cls(tuple((v, m) for v, m in merged), False)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "Spectrum":
        """Exact spectrum from ``(eigenvalue, multiplicity)`` pairs; repeated values merge."""
        counts: Counter[int] = Counter()
        for v, m in pairs:
            counts[v] += m
        return cls.from_values(v for v, m in counts.items() for _ in range(m))

    def values(self) -> list[Number]:
        return [v for v, m in self.entries for _ in range(m)]

    def total(self) -> int:
        return sum(m for _, m in self.entries)

    def as_dict(self) -> dict[Number, int]:
        return dict(self.entries)

    def close_to(self, other: "Spectrum", tol: float = 1e-6) -> bool:
        a, b = self.values(), other.values()
        return len(a) == len(b) and all(abs(x - y) <= tol for x, y in zip(a, b))

    def to_json(self) -> dict:
        return {
            "exact": self.exact,
            "entries": [{"value": v, "multiplicity": m} for v, m in self.entries],
        }

    def __str__(self) -> str:
        def fmt(v):
            return str(v) if isinstance(v, int) else f"{v:.10g}"

        parts = [f"[{fmt(v)}]" + (f"^{m}" if m > 1 else "") for v, m in self.entries]
        return "{" + ", ".join(parts) + "}"


@dataclass
class IntegralityVerdict:
    integral: bool
    method: str
    failures: list[tuple[str, str]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "integral": self.integral,
            "method": self.method,
            "failures": [{"condition": c, "subject": s} for c, s in self.failures],
        }


@dataclass
class Discriminants:
    phi: dict[int, int | None]
    psi: dict[int, int | None]
    failures: list[tuple[str, str]] = field(default_factory=list)


def is_perfect_square(m: int) -> bool:
    return m >= 0 and math.isqrt(m) ** 2 == m


def split_connection_set(S: ConnectionSet) -> tuple[ConnectionSet, ConnectionSet]:
    """``S1`` = part in <a> u <a>b^2, ``S2`` = part in <a>b u <a>b^3."""
    s1 = [x for x in S.members if x.j % 2 == 0]
    s2 = [x for x in S.members if x.j % 2 == 1]
    return ConnectionSet(S.n, s1), ConnectionSet(S.n, s2)


def _table(tbl: CharacterTable | None, S: ConnectionSet) -> CharacterTable:
    if tbl is None:
        return get_table(S.n)
    if tbl.n != S.n:
        raise ContractError(f"table for n={tbl.n} used with a set for n={S.n}")
    return tbl


def quadratic_roots(p: Cyclotomic, q: Cyclotomic) -> tuple[Number, Number]:
    """Roots of ``x^2 - p x + (p^2 - q)/2``; integers when exactly integral."""
    pi, qi = p.as_integer(), q.as_integer()
    if pi is not None and qi is not None:
        disc = 2 * qi - pi * pi
        if is_perfect_square(disc):
            d = math.isqrt(disc)
            return (pi + d) // 2, (pi - d) // 2
    pf, qf = p.to_complex().real, q.to_complex().real
    disc_f = max(2 * qf - pf * pf, 0.0)
    root = math.sqrt(disc_f)
    return (pf + root) / 2, (pf - root) / 2


def character_eigenvalues(tbl: CharacterTable | None, S: ConnectionSet) -> dict[CharacterId, tuple[Number, ...]]:
    """Eigenvalues attached to each irreducible character (each repeated ``degree`` times in the spectrum)."""
    S.require_symmetric()
    tbl = _table(tbl, S)
    p = tbl.sums(S.members)
    q = tbl.product_sums(S.members, S.members)
    out: dict[CharacterId, tuple[Number, ...]] = {}
    for cid in tbl.ids:
        if cid.degree == 1:
            v = p[cid].as_integer()
            out[cid] = (v if v is not None else p[cid].to_complex().real,)
        else:
            out[cid] = quadratic_roots(p[cid], q[cid])
    return out


def compute_spectrum(tbl: CharacterTable | None, S: ConnectionSet) -> Spectrum:
    per_char = character_eigenvalues(tbl, S)
    values = [v for cid, roots in per_char.items() for v in roots for _ in range(cid.degree)]
    return Spectrum.from_values(values)


def _theorem3_sums(tbl: CharacterTable, S: ConnectionSet):
    S1, S2 = split_connection_set(S)
    p_all = tbl.sums(S.members)
    p1 = tbl.sums(S1.members)
    q11 = tbl.product_sums(S1.members, S1.members)
    q22 = tbl.product_sums(S2.members, S2.members)
    q = {cid: q11[cid] + q22[cid] for cid in tbl.ids}
    return p_all, p1, q


def discriminants(tbl: CharacterTable | None, S: ConnectionSet) -> Discriminants:
    """``2(chi(S1^2) + chi(S2^2)) - chi(S1)^2`` for every degree-2 character."""
    S.require_symmetric()
    tbl = _table(tbl, S)
    _, p1, q = _theorem3_sums(tbl, S)
    out = Discriminants(phi={}, psi={})
    for cid in tbl.ids:
        if cid.degree == 1:
            continue
        name = cid.label()
        pi, qi = p1[cid].as_integer(), q[cid].as_integer()
        delta = None
        if pi is None:
            out.failures.append((f"{cid.kind}(S1) is an integer", name))
        elif qi is None:
            out.failures.append((f"{cid.kind}(S1^2)+{cid.kind}(S2^2) is an integer", name))
        else:
            delta = 2 * qi - pi * pi
        getattr(out, cid.kind)[cid.index] = delta
    return out


def check_integral_theorem3(tbl: CharacterTable | None, S: ConnectionSet) -> IntegralityVerdict:
    S.require_symmetric()
    tbl = _table(tbl, S)
    p_all, p1, q = _theorem3_sums(tbl, S)
    failures: list[tuple[str, str]] = []
    for cid in tbl.ids:
        name = cid.label()
        if cid.degree == 1:
            if p_all[cid].as_integer() is None:
                failures.append(("(1) chi_j(S) is an integer", name))
            continue
        lo, hi = ("(2)", "(3)") if cid.kind == "phi" else ("(4)", "(5)")
        sym = cid.kind
        pi, qi = p1[cid].as_integer(), q[cid].as_integer()
        if pi is None:
            failures.append((f"{lo} {sym}(S1) is an integer", name))
        elif qi is None:
            failures.append((f"{lo} {sym}(S1^2)+{sym}(S2^2) is an integer", name))
        elif not is_perfect_square(2 * qi - pi * pi):
            failures.append((f"{hi} Delta_{sym}(S) is a perfect square", name))
    return IntegralityVerdict(not failures, "theorem3", failures)


def check_integral_theorem4(tbl: CharacterTable | None, S: ConnectionSet) -> IntegralityVerdict:
    """Criterion for ``S1 <= <a^2>``; raises NotApplicableError for other shapes."""
    S.require_symmetric()
    tbl = _table(tbl, S)
    S1, S2 = split_connection_set(S)
    bad = [x for x in S1.members if x.j != 0 or x.r % 2]
    if bad:
        raise NotApplicableError(
            "S1 is not contained in <a^2> (contains " + ", ".join(x.label() for x in sorted(bad, key=Element.sort_key)) + ")"
        )
    failures: list[tuple[str, str]] = []
    if not is_in_boolean_algebra_a2(S1):
        failures.append(("(1) S1 in B(<a^2>)", "S1"))
    p_all = tbl.sums(S.members)
    p1 = tbl.sums(S1.members)
    q22 = tbl.product_sums(S2.members, S2.members)
    for cid in tbl.ids:
        name = cid.label()
        if cid.degree == 1:
            if p_all[cid].as_integer() is None:
                failures.append(("(2) chi_j(S) is an integer", name))
            continue
        if cid.kind == "phi" and p1[cid].as_integer() is None:
            failures.append(("(2) phi_k(S1) is an integer", name))
            continue
        twice = (q22[cid] * 2).as_integer()
        if twice is None or not is_perfect_square(twice):
            failures.append((f"(3) 2{cid.kind}(S2^2) is a perfect square", name))
    return IntegralityVerdict(not failures, "theorem4", failures)


def s2_options(n: int) -> list[frozenset[Element]]:
    """Admissible ``S2`` parts of an integral normal connection set."""
    G = get_group(n)
    full = G.coset(1) | G.coset(3)
    if n % 2 == 1:
        return [frozenset(), full]
    even = G.parity_coset(1, 0) | G.parity_coset(3, 0)
    odd = G.parity_coset(1, 1) | G.parity_coset(3, 1)
    return [frozenset(), even, odd, full]


def check_integral_theorem5(tbl: CharacterTable | None, S: ConnectionSet) -> IntegralityVerdict:
    """Criterion for normal S: integral iff power-closed.

    The structural description (S1 a union of generator classes, S2 from
    :func:`s2_options`) is evaluated independently and must agree.
    """
    S.require_symmetric()
    if not is_union_of_conjugacy_classes(S):
        raise NotApplicableError("S is not a union of conjugacy classes")
    S1, S2 = split_connection_set(S)
    failures: list[tuple[str, str]] = []
    seen: set[frozenset[Element]] = set()
    for x in S.sorted():
        gc = generator_class(x)
        if gc in seen:
            continue
        seen.add(gc)
        if not gc <= S.members:
            failures.append(("power-closed", x.label()))
    verdict = is_power_closed(S)

    s1_ok = all(generator_class(x) <= S1.members for x in S1.members)
    s2_ok = S2.members in s2_options(S.n)
    if verdict != (s1_ok and s2_ok):
        raise RuntimeError(
            f"power-closure ({verdict}) and structural form ({s1_ok and s2_ok}) disagree for {S!r}"
        )
    return IntegralityVerdict(verdict, "theorem5", failures)


@dataclass
class Enumeration:
    sets: list[ConnectionSet]
    truncated: bool


def normal_s1_atoms(n: int) -> list[frozenset[Element]]:
    """Blocks of <a> u <a>b^2 (minus e) closed under conjugation and [x]."""
    G = get_group(n)
    atoms = [blk for blk in G.rational_atoms if next(iter(blk)).j % 2 == 0]
    return [blk for blk in atoms if G.identity not in blk]


def enumerate_integral_normal(n: int, limit: int | None = None) -> Enumeration:
    """All nonempty integral normal connection sets, in a deterministic order.

    ``S1`` ranges over unions of :func:`normal_s1_atoms`, ``S2`` over
    :func:`s2_options`.  Stops after ``limit`` sets and flags truncation.
    """
    atoms = normal_s1_atoms(n)
    menu = s2_options(n)
    seen: set[tuple] = set()
    out: list[ConnectionSet] = []
    for mask in range(1 << len(atoms)):
        s1 = frozenset().union(*(a for i, a in enumerate(atoms) if mask >> i & 1))
        for s2 in menu:
            members = s1 | s2
            if not members:
                continue
            key = tuple(sorted((x.j, x.r) for x in members))
            if key in seen:
                continue
            if limit is not None and len(out) >= limit:
                return Enumeration(out, True)
            seen.add(key)
            out.append(ConnectionSet(n, members))
    return Enumeration(out, False)


def circulant_spectrum(m: int, exponents: Iterable[int]) -> Spectrum:
    """Spectrum of Cay(Z_m, exponents): ``sum_s zeta_m^(k s)`` for k = 0..m-1."""
    exps = set(exponents)
    if any(not 1 <= s < m for s in exps):
        raise ContractError("exponents must lie in 1..m-1")
    if any((-s) % m not in exps for s in exps):
        raise ContractError("exponent set must be closed under negation mod m")
    ctx = make_context(m)
    values: list[Number] = []
    for k in range(m):
        lam = ctx.from_exponents((k * s, 1) for s in exps)
        v = lam.as_integer()
        values.append(v if v is not None else lam.to_complex().real)
    exact = all(isinstance(v, int) for v in values)
    return Spectrum.from_values(values, exact=exact)


def corollary_sets(n: int) -> dict[str, ConnectionSet]:
    """The three connected integral families, keyed by name."""
    G = get_group(n)
    a2 = [G.element(2 * r, 0) for r in range(1, n)]
    S2 = G.coset(1) | G.coset(3)
    return {
        "a2-coset2": ConnectionSet(n, set(a2) | G.coset(2) | S2),
        "a2-only": ConnectionSet(n, set(a2) | S2),
        "b2-class": ConnectionSet(n, {G.element(0, 2), G.element(n, 2)} | S2),
    }


def corollary_spectra(n: int) -> dict[str, Spectrum]:
    """Closed-form spectra of the sets from :func:`corollary_sets`."""
    return {
        "a2-coset2": Spectrum.from_pairs([(7 * n - 1, 1), (-n - 1, 3), (n - 1, 4), (-1, 8 * (n - 1))]),
        "a2-only": Spectrum.from_pairs([(-3 * n - 1, 1), (5 * n - 1, 1), (n - 1, 6), (-1, 8 * (n - 1))]),
        "b2-class": Spectrum.from_pairs([(-4 * n + 2, 1), (4 * n + 2, 1), (2, 2 * n - 2), (-2, 2 * n), (0, 4 * n)]),
    }


def symmetric_orbits(n: int) -> list[frozenset[Element]]:
    """Inverse-pair orbits ``{x, x^-1}`` of the non-identity elements."""
    G = get_group(n)
    seen: set[Element] = set()
    out = []
    for x in G.elements:
        if x.is_identity or x in seen:
            continue
        orb = frozenset({x, x.inverse()})
        seen |= orb
        out.append(orb)
    return out


def all_symmetric_sets(n: int) -> Iterable[ConnectionSet]:
    orbits = symmetric_orbits(n)
    for bits in product((0, 1), repeat=len(orbits)):
        if any(bits):
            yield ConnectionSet(n, frozenset().union(*(o for o, b in zip(orbits, bits) if b)))


def random_symmetric_set(n: int, rng) -> ConnectionSet:
    """Uniform draw from nonempty symmetric identity-free subsets."""
    orbits = symmetric_orbits(n)
    while True:
        chosen = [o for o in orbits if rng.random() < 0.5]
        if chosen:
            return ConnectionSet(n, frozenset().union(*chosen))


def check_all(tbl: CharacterTable | None, S: ConnectionSet) -> dict[str, IntegralityVerdict | None]:
    """Run every criterion; ``None`` marks a criterion that does not apply."""
    out: dict[str, IntegralityVerdict | None] = {"theorem3": check_integral_theorem3(tbl, S)}
    for name, fn in (("theorem4", check_integral_theorem4), ("theorem5", check_integral_theorem5)):
        try:
            out[name] = fn(tbl, S)
        except NotApplicableError:
            out[name] = None
    return out
