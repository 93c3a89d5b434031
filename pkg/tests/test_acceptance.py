"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line (collected into the pytest summary).
Run directly with ``python3 tests/test_acceptance.py`` to print the lines only.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import pytest

from detmorph import linalg as la
from detmorph.ar import dualize, indec_injective, indec_projective, nakayama_object, tau
from detmorph.determined import (GammaSubmodule, almost_split_ending_at, check_auslander_claim,
                                 construct_determined, decide_right_determined, image_hom, knit_ar_quiver,
                                 is_right_determined, minimal_determinator, sufficient_determinator)
from detmorph.errors import DeterminatorAssertionError
from detmorph.oracle import (all_isomorphic, enumerate_test_modules, projective_points,
                             random_morphism, random_representation, refute_determination,
                             satisfies_composite_condition)
from detmorph.poset import (FinitePoset, class_determined, criterion_determines, determinators,
                            random_poset)
from detmorph.quiver import Arrow, BoundQuiverAlgebra, Quiver, linear_algebra
from detmorph.rep import (Representation, add_member, annihilator_basis, direct_sum, end_algebra,
                          hom_space, is_isomorphic, is_right_minimal,
                          right_minimalize, solve_factorization, sum_morphism)

P = 5


@dataclass
class Outcome:
    ok: bool
    detail: str
    seconds: float = 0.0
    budget: float | None = None
    morphisms: list = field(default_factory=list, repr=False)

    def line(self, number: int, title: str) -> str:
        timing = f"{self.seconds:.1f}s" + (f" (budget {self.budget:.0f}s)" if self.budget else "")
        return f"[{'PASS' if self.ok else 'FAIL'}] {number}. {title}: {self.detail}; {timing}"


def timed(budget: float | None = None):
    def wrap(fn):
        @lru_cache(maxsize=None)
        def run() -> Outcome:
            t0 = time.perf_counter()
            out = fn()
            out.seconds = time.perf_counter() - t0
            out.budget = budget
            if budget is not None and out.seconds > budget:
                out.ok = False
                out.detail += " [over time budget]"
            return out
        return run
    return wrap


# helpers

def interval(alg: BoundQuiverAlgebra, i: int, j: int) -> Representation:
    """Indecomposable of the linear quiver supported on vertices i..j."""
    n = len(alg.vertices)
    dims = {str(v): int(i <= v <= j) for v in range(1, n + 1)}
    maps = {f"a{v}": np.array([[1]] if (i <= v and v + 1 <= j) else np.zeros((dims[str(v + 1)], dims[str(v)])),
                              dtype=np.int64)
            for v in range(1, n)}
    return Representation(alg, dims, maps)


@lru_cache(maxsize=None)
def linear(n: int) -> BoundQuiverAlgebra:
    return linear_algebra(n, P)


def intervals(n: int) -> dict[tuple[int, int], Representation]:
    alg = linear(n)
    return {(i, j): interval(alg, i, j) for i in range(1, n + 1) for j in range(i, n + 1)}


def small_subspaces(m: int, p: int) -> list[np.ndarray]:
    """Every subspace of F_p^m (canonical bases), for small m."""
    seen: dict[bytes, np.ndarray] = {}
    vectors = [np.array(v, dtype=np.int64) for v in itertools.product(range(p), repeat=m)]
    for k in range(m + 1):
        for combo in itertools.combinations(vectors, k):
            basis = np.column_stack(combo) if combo else la.zeros(m, 0)
            canon = la.canonical_basis(basis, p) if m else la.zeros(0, 0)
            seen.setdefault(canon.tobytes() + bytes([canon.shape[1]]), canon)
    return list(seen.values())


def isomorphic_morphisms(f, g) -> bool:
    phi = solve_factorization(g, f)
    psi = solve_factorization(f, g)
    return phi is not None and psi is not None and (psi @ phi).is_isomorphism() and (phi @ psi).is_isomorphism()


_SUFFICIENT_CHECKS = {"count": 0, "trips": []}


def check_sufficient(a) -> None:
    _SUFFICIENT_CHECKS["count"] += 1
    try:
        sufficient_determinator(a)
    except DeterminatorAssertionError as exc:
        _SUFFICIENT_CHECKS["trips"].append(exc)


# criteria

@timed(budget=60)
def criterion_uniqueness() -> Outcome:
    cases = failures = 0
    made = []
    for n in (2, 3):
        inds = list(intervals(n).values())
        for C, Y in itertools.product(inds, repeat=2):
            space = hom_space(C, Y)
            for basis in small_subspaces(space.dim, P):
                H = GammaSubmodule(C, Y, basis, space)
                if not H.is_closed():
                    continue
                cases += 1
                alpha = construct_determined(C, Y, H)
                other = construct_determined(C, Y, H, functional_seed=cases)
                ok = (is_right_minimal(alpha) and image_hom(C, alpha, space) == H
                      and is_right_minimal(other) and image_hom(C, other, space) == H
                      and isomorphic_morphisms(alpha, other))
                failures += not ok
                made.append(alpha)
    for a in made:
        check_sufficient(a)
    return Outcome(failures == 0 and cases > 0, f"{cases} (C,Y,H) cases over A2/A3, {failures} failures",
                   morphisms=made)


@timed(budget=120)
def criterion_ar_quiver() -> Outcome:
    problems = []
    summary = []
    for n in (2, 3, 4):
        ints = intervals(n)
        q = knit_ar_quiver(linear(n))
        known, arrows = q.vertices, q.arrows
        for t, Z in enumerate(known):
            res = almost_split_ending_at(Z)
            if res.kernel is not None:
                if not res.morphism.is_epi():
                    problems.append("non-epi almost split map")
                if is_isomorphic(res.kernel, tau(Z)) is None or q.tau[t] is None:
                    problems.append("kernel differs from tau")
            check_sufficient(res.morphism)
        label = {}
        for idx, m in enumerate(known):
            match = [ij for ij, r in ints.items() if is_isomorphic(m, r) is not None]
            if len(match) != 1:
                problems.append(f"A{n}: unrecognized indecomposable {m.dim_vector}")
                continue
            label[idx] = match[0]
        got = {(label[s], label[t]) for s, t in arrows if s in label and t in label}
        expected = {((i + 1, j), (i, j)) for (i, j) in ints if i < j} | \
                   {((i, j), (i, j - 1)) for (i, j) in ints if i < j}
        if len(known) != n * (n + 1) // 2:
            problems.append(f"A{n}: {len(known)} indecomposables")
        if got != expected or len(arrows) != n * (n - 1):
            problems.append(f"A{n}: arrow set mismatch")
        for (i, j), Z in ints.items():
            if j < n and is_isomorphic(tau(Z), ints[(i + 1, j + 1)]) is None:
                problems.append(f"A{n}: tau[{i},{j}] wrong")
        summary.append(f"A{n}: {len(known)} vertices, {len(arrows)} arrows")
    return Outcome(not problems, "; ".join(summary) + (f"; problems: {problems}" if problems else ""))


@timed(budget=300)
def criterion_oracle_consistency() -> Outcome:
    alg = linear(2)
    inds = list(intervals(2).values())
    family = enumerate_test_modules(alg, {"1": 2, "2": 2})
    checked = negatives = contradictions = 0
    morphisms = []
    for X, Y in itertools.product(inds, repeat=2):
        for a in projective_points(X, Y):
            morphisms.append(a)
            for C in inds:
                checked += 1
                report = decide_right_determined(a, C)
                found = refute_determination(a, C, family)
                if report.verdict:
                    contradictions += found is not None
                else:
                    negatives += 1
                    w = report.witness
                    witness_ok = (satisfies_composite_condition(w, a, C)
                                  and solve_factorization(a, w) is None)
                    contradictions += (found is None) or not witness_ok
    for a in morphisms:
        check_sufficient(a)
    return Outcome(contradictions == 0,
                   f"{checked} (a,C) pairs, {negatives} negative verdicts all refuted by the oracle, "
                   f"{contradictions} contradictions, family of {len(family)} modules",
                   morphisms=morphisms)


def _suite4_morphisms(count: int = 20):
    alg = linear(3)
    out = []
    seed = 0
    while len(out) < count:
        rng = np.random.default_rng(seed)
        X = random_representation(alg, {v: int(rng.integers(0, 3)) for v in alg.vertices}, 2 * seed)
        Y = random_representation(alg, {v: int(rng.integers(0, 3)) for v in alg.vertices}, 2 * seed + 1)
        if hom_space(X, Y).dim:
            out.append(random_morphism(X, Y, seed))
        seed += 1
    return out


@timed(budget=300)
def criterion_minimal_determinator() -> Outcome:
    inds = list(intervals(3).values())
    tests = inds + [direct_sum([a, b]).module for a, b in itertools.combinations(inds, 2)]
    morphisms = _suite4_morphisms()
    bad_order = bad_add = 0
    sizes = []
    for a in morphisms:
        base = minimal_determinator(a)
        sizes.append(len(base))
        for s in (1, 2, 3):
            if not all_isomorphic(base, minimal_determinator(a, order_seed=s)):
                bad_order += 1
        base_mod = direct_sum(base, a.algebra).module if base else None
        for Cp in tests:
            lhs = is_right_determined(a, Cp)
            rhs = True if base_mod is None else add_member(base_mod, Cp)
            bad_add += lhs != rhs
        check_sufficient(a)
    return Outcome(bad_order == 0 and bad_add == 0,
                   f"{len(morphisms)} morphisms, determinator sizes {sorted(set(sizes))}, "
                   f"{bad_order} order mismatches, {bad_add} add-criterion mismatches over {len(tests)} test objects",
                   morphisms=morphisms)


@timed()
def criterion_safe_determinator() -> Outcome:
    for fn in (criterion_uniqueness, criterion_ar_quiver, criterion_oracle_consistency,
               criterion_minimal_determinator):
        fn()
    trips = _SUFFICIENT_CHECKS["trips"]
    return Outcome(not trips and _SUFFICIENT_CHECKS["count"] > 0,
                   f"{_SUFFICIENT_CHECKS['count']} runtime checks, {len(trips)} trips")


@timed(budget=60)
def criterion_posets() -> Outcome:
    triples = mismatches = 0
    for seed in range(200):
        n = seed % 6 + 1
        Pp = random_poset(n, seed)
        for x, y in Pp.morphisms():
            for c in Pp.elements:
                triples += 1
                mismatches += criterion_determines(Pp, x, y, c) != class_determined(Pp, x, y, [c])
    chain = FinitePoset.chain(10)
    chain_ok = all(
        (determinators(chain, x, y) == [str(int(x) + 1)]) if x != y else len(determinators(chain, x, y)) == 10
        for x, y in chain.morphisms())
    return Outcome(mismatches == 0 and chain_ok,
                   f"{triples} (x<=y, c) triples on 200 posets, {mismatches} mismatches; "
                   f"10-chain successor rule {'holds' if chain_ok else 'fails'}")


def random_bound_quiver(seed: int) -> BoundQuiverAlgebra:
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 5))
    vs = [str(i) for i in range(1, n + 1)]
    arrows = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for _ in range(int(rng.choice([0, 1, 1, 2]))):
                arrows.append(Arrow(f"b{len(arrows)}", str(i), str(j)))
    if not arrows:
        arrows.append(Arrow("b0", "1", "2"))
    rels = [[a.name, b.name] for a in arrows for b in arrows
            if a.target == b.source and rng.random() < 0.4]
    return BoundQuiverAlgebra(Quiver(vs, arrows), rels, P)


@timed()
def criterion_structural() -> Outcome:
    failures = []
    nu_checks = 0
    for seed in range(10):
        alg = random_bound_quiver(seed)
        for v in alg.vertices:
            nu_checks += 1
            Pv = indec_projective(alg, v)
            if is_isomorphic(nakayama_object(Pv), indec_injective(alg, v)) is None:
                failures.append(f"nu P({v}) seed {seed}")
            if not tau(Pv).is_zero():
                failures.append(f"tau P({v}) seed {seed}")
            for M in (Pv, indec_injective(alg, v)):
                if is_isomorphic(dualize(dualize(M)), M) is None:
                    failures.append(f"DD seed {seed}")
    rm_checks = 0
    for seed in range(50):
        alg = linear(3)
        rng = np.random.default_rng(1000 + seed)
        X0 = random_representation(alg, {v: int(rng.integers(0, 3)) for v in alg.vertices}, 3 * seed)
        X = direct_sum([X0, X0]).module
        Y = random_representation(alg, {v: int(rng.integers(0, 3)) for v in alg.vertices}, 3 * seed + 1)
        f = random_morphism(X, Y, seed)
        if is_isomorphic(dualize(dualize(X)), X) is None:
            failures.append(f"DD random seed {seed}")
        rm = right_minimalize(f)
        rm_checks += 1
        Xm = rm.morphism.source
        if not (f @ rm.complement_inclusion).is_zero():
            failures.append(f"complement not killed, seed {seed}")
        if not sum_morphism([rm.inclusion, rm.complement_inclusion]).is_isomorphism():
            failures.append(f"splitting not iso, seed {seed}")
        if not Xm.is_zero():
            A, space = end_algebra(Xm)
            if not all(A.in_radical(space.coords(phi)) for phi in annihilator_basis(rm.morphism)):
                failures.append(f"annihilator outside radical, seed {seed}")
    return Outcome(not failures,
                   f"{nu_checks} vertices on 10 quivers (nu P = I, tau P = 0, DD = id), "
                   f"{rm_checks} right-minimalizations checked in rad End"
                   + (f"; failures: {failures[:5]}" if failures else ""))


@timed()
def criterion_claim() -> Outcome:
    morphisms = criterion_oracle_consistency().morphisms + criterion_minimal_determinator().morphisms
    agree = disagree = strictly_larger = 0
    for a in morphisms:
        r = check_auslander_claim(a)
        if r.auslander_claim_agrees:
            agree += 1
            strictly_larger += bool(r.details["claimStrictlyLarger"])
        else:
            disagree += 1
    return Outcome(agree + disagree == len(morphisms),
                   f"{len(morphisms)} morphisms: claim sufficient for {agree} "
                   f"({strictly_larger} with redundant summands), insufficient for {disagree}")


CRITERIA = [
    (1, "uniqueness of determined morphisms", criterion_uniqueness),
    (2, "almost split maps and AR quivers of A2-A4", criterion_ar_quiver),
    (3, "decision vs oracle on A2", criterion_oracle_consistency),
    (4, "minimal determinators on A3", criterion_minimal_determinator),
    (5, "safe determinator never trips", criterion_safe_determinator),
    (6, "poset criterion vs definition", criterion_posets),
    (7, "structural identities", criterion_structural),
    (8, "Auslander claim experiment", criterion_claim),
]


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn, record_acceptance):
    out = fn()
    record_acceptance(out.line(number, title))
    assert out.ok, out.detail


if __name__ == "__main__":
    for number, title, fn in CRITERIA:
        print(fn().line(number, title), flush=True)
