"""End-to-end acceptance checks, one test per criterion.

Each test records a single PASS/FAIL line, echoed in the terminal summary.
"""

import time
from itertools import combinations

import numpy as np
import pytest

from intcayley.characters import get_table, mat_mul
from intcayley.cyclotomic import make_context
from intcayley.group import (
    ConnectionSet,
    generator_class,
    get_group,
    is_power_closed,
    multiply,
)
from intcayley.oracle import adjacency_matrix, jacobi_eigh, oracle_spectrum, right_regular_weights
from intcayley.spectrum import (
    Spectrum,
    all_symmetric_sets,
    check_integral_theorem3,
    compute_spectrum,
    corollary_sets,
    enumerate_integral_normal,
    random_symmetric_set,
)

N_RANGE = range(1, 9)


def family_check(name: str, closed_form) -> tuple[bool, list[str]]:
    bad = []
    for n in N_RANGE:
        S = corollary_sets(n)[name]
        want = Spectrum.from_pairs(closed_form(n))
        by_char = compute_spectrum(get_table(n), S)
        by_oracle = oracle_spectrum(S)
        if by_char != want or by_oracle != want:
            bad.append(f"n={n}: character {by_char}, oracle {by_oracle}, expected {want}")
    return not bad, bad


def test_criterion_1_dense_family(acceptance):
    start = time.perf_counter()
    ok, bad = family_check("a2-coset2", lambda n: [(7 * n - 1, 1), (-n - 1, 3), (n - 1, 4), (-1, 8 * (n - 1))])
    elapsed = time.perf_counter() - start
    acceptance(
        1,
        "{7n-1, (-n-1)^3, (n-1)^4, (-1)^(8(n-1))} for n=1..8, both methods, < 10 s",
        ok and elapsed < 10,
        f"{elapsed:.2f} s" + ("; " + "; ".join(bad) if bad else ""),
    )


def test_criterion_2_subgroup_family(acceptance):
    ok, bad = family_check("a2-only", lambda n: [(-3 * n - 1, 1), (5 * n - 1, 1), (n - 1, 6), (-1, 8 * (n - 1))])
    acceptance(2, "{-3n-1, 5n-1, (n-1)^6, (-1)^(8(n-1))} for n=1..8, both methods", ok, "; ".join(bad))


def test_criterion_3_b2_class_family(acceptance):
    ok, bad = family_check(
        "b2-class", lambda n: [(-4 * n + 2, 1), (4 * n + 2, 1), (2, 2 * n - 2), (-2, 2 * n), (0, 4 * n)]
    )
    acceptance(3, "{-4n+2, 4n+2, 2^(2n-2), (-2)^(2n), 0^(4n)} for n=1..8, both methods", ok, "; ".join(bad))


def test_criterion_4_character_criterion_vs_oracle(acceptance, rng):
    checked, mismatches = {}, []

    def compare(S):
        got = check_integral_theorem3(None, S).integral
        truth = oracle_spectrum(S) is not None
        if got != truth:
            mismatches.append((S, got, truth))

    exhaustive = list(all_symmetric_sets(2))
    for S in exhaustive:
        compare(S)
    checked[2] = len(exhaustive)
    for n in (3, 4):
        for _ in range(500):
            compare(random_symmetric_set(n, rng))
        checked[n] = 500
    detail = ", ".join(f"n={n}: {c} sets" for n, c in checked.items())
    if mismatches:
        detail += f"; {len(mismatches)} mismatches, first {mismatches[0]}"
    acceptance(4, "character criterion agrees with oracle (exhaustive n=2, sampled n=3,4)", not mismatches and checked[2] == 511, detail)


def normal_power_closed_sets(n: int) -> set[ConnectionSet]:
    G = get_group(n)
    classes = [c.members for c in G.conjugacy_classes if G.identity not in c.members]
    out = set()
    for mask in range(1, 1 << len(classes)):
        members = frozenset().union(*(c for i, c in enumerate(classes) if mask >> i & 1))
        S = ConnectionSet(n, members)
        if S.is_symmetric and is_power_closed(S):
            out.add(S)
    return out


def test_criterion_5_normal_enumeration(acceptance):
    problems = []
    sizes = {}
    for n in (2, 3):
        enum = enumerate_integral_normal(n)
        emitted = set(enum.sets)
        if enum.truncated or len(emitted) != len(enum.sets):
            problems.append(f"n={n}: truncated or duplicated output")
        for S in enum.sets:
            if oracle_spectrum(S) is None:
                problems.append(f"n={n}: oracle rejects {S!r}")
        brute = normal_power_closed_sets(n)
        if emitted != brute:
            problems.append(f"n={n}: {len(emitted - brute)} extra, {len(brute - emitted)} missing")
        sizes[n] = len(emitted)
    acceptance(
        5,
        "enumeration = symmetric power-closed unions of classes, all oracle-integral (n=2,3)",
        not problems,
        ", ".join(f"n={n}: {k} sets" for n, k in sizes.items()) + ("; " + "; ".join(problems) if problems else ""),
    )


def test_criterion_6_character_table(acceptance):
    problems = []
    for n in range(1, 9):
        tbl = get_table(n)
        rows = [tbl.row(cid) for cid in tbl.ids]
        conj_rows = [[v.conj() for v in row] for row in rows]
        for i in range(len(rows)):
            for j in range(i, len(rows)):
                total = tbl.ctx.zero
                for x, y in zip(rows[i], conj_rows[j]):
                    total = total + x * y
                if total != (8 * n if i == j else 0):
                    problems.append(f"orthogonality n={n} ({tbl.ids[i].label()}, {tbl.ids[j].label()})")
    pairs = 0
    for n in range(1, 5):
        tbl = get_table(n)
        els = tbl.group.elements
        for cid in tbl.ids:
            rep = {x: tbl.representation_matrix(cid, x) for x in els}
            for x in els:
                for y in els:
                    pairs += 1
                    if rep[multiply(x, y)] != mat_mul(rep[x], rep[y]):
                        problems.append(f"homomorphism n={n} {cid.label()} {x!r} {y!r}")
    for n in range(1, 13):
        if sum(d * d for d in get_table(n).degrees.values()) != 8 * n:
            problems.append(f"degree sum n={n}")
    acceptance(
        6,
        "orthogonality (n<=8), homomorphism (exhaustive n<=4), sum of squared degrees (n<=12)",
        not problems,
        f"{pairs} homomorphism checks" + ("; " + "; ".join(problems[:3]) if problems else ""),
    )


def test_criterion_7_square_identity_on_a2(acceptance):
    problems, count = [], 0
    for n in range(2, 9):
        tbl = get_table(n)
        G = tbl.group
        atoms = sorted({generator_class(G.element(2 * s, 0)) for s in range(n)}, key=lambda a: min(x.r for x in a))
        for size in range(1, len(atoms) + 1):
            for combo in combinations(atoms, size):
                T = frozenset().union(*combo)
                assert T == frozenset(x.inverse() for x in T)
                p, q = tbl.sums(T), tbl.product_sums(T, T)
                count += 1
                for cid in tbl.ids[8:]:
                    if q[cid] * 2 != p[cid] * p[cid]:
                        problems.append(f"n={n} {cid.label()} T={sorted(x.r for x in T)}")
    acceptance(7, "2 chi(T^2) = chi(T)^2 for degree-2 chi, unions of atoms T of <a^2>, n=2..8", not problems, f"{count} sets" + ("; " + "; ".join(problems[:3]) if problems else ""))


def test_criterion_8_root_sums(acceptance):
    problems = []
    for n in range(1, 13):
        ctx = make_context(8 * n)
        xi = lambda e: ctx.root_of_unity(4 * e)  # noqa: E731
        eps = lambda e: ctx.root_of_unity(8 * e)  # noqa: E731

        def total(terms):
            acc = ctx.zero
            for t in terms:
                acc = acc + t
            return acc

        if total(xi(j) for j in range(1, 2 * n)) != -1 or total(xi(j) + xi(-j) for j in range(1, 2 * n)) != -2:
            problems.append(f"xi full sums n={n}")
        for l in range(2, 2 * n, 2):
            if total(xi(l * j) for j in range(1, n)) != -1 or total(xi(l * j) + xi(-l * j) for j in range(1, n)) != -2:
                problems.append(f"xi even multiple n={n} l={l}")
        if n == 1:
            continue  # epsilon = 1 when n = 1
        for top in (n, 2 * n):
            if total(eps(j) for j in range(1, top)) != -1 or total(eps(j) + eps(-j) for j in range(1, top)) != -2:
                problems.append(f"epsilon sums n={n} top={top}")
        for l in range(2, 2 * n, 2):
            if l % n == 0:
                continue  # epsilon^l = 1
            if total(eps(l * j) for j in range(1, n)) != -1 or total(eps(l * j) + eps(-l * j) for j in range(1, n)) != -2:
                problems.append(f"epsilon even multiple n={n} l={l}")
    acceptance(8, "root-of-unity sum identities in Z[zeta_8n], n<=12", not problems, "; ".join(problems[:3]))


def test_criterion_9_power_sums_from_eigenvectors(acceptance, rng):
    worst = 0.0
    for n in (2, 3, 4):
        tbl = get_table(n)
        order = 8 * n
        complex_rows = {cid: np.array([v.to_complex() for v in tbl.row(cid)]) for cid in tbl.ids}
        for _ in range(100):
            S = random_symmetric_set(n, rng)
            A = adjacency_matrix(S)
            lam, V = jacobi_eigh(A)
            p, q = tbl.sums(S), tbl.product_sums(S, S)
            for cid in tbl.ids:
                d = cid.degree
                w = right_regular_weights(A, V, complex_rows[cid]) * d / order
                worst = max(worst, abs(w.sum() - d * d))
                for t, target in ((1, p[cid]), (2, q[cid])):
                    got = float((w * lam**t).sum()) / d
                    worst = max(worst, abs(got - target.to_complex().real))
    acceptance(9, "per-character power sums t=1,2 from numeric eigenpairs, 100 sets each n=2,3,4", worst <= 1e-6, f"max deviation {worst:.2e}")
