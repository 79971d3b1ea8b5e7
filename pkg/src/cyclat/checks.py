"""Named structural verifications, runnable from the CLI or tests.

Each check reproduces one finite claim about the order at a given n and
returns a CheckReport.  Exhaustive scans are used whenever the element
count allows; otherwise sampling is seeded and reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from math import factorial
from typing import Callable

from cyclat import affine, oracle, poset, vectors
from cyclat.errors import QuadNotFlippableError, UnknownCheckError
from cyclat.perm import CircularPermutation, all_cycles
from cyclat.poset import build
from cyclat.vectors import AdmittedVector

_SEED = 283465


@dataclass
class CheckReport:
    check: str
    n: int
    passed: bool
    witness: dict | None
    elapsed: float

    def to_payload(self) -> dict:
        payload = {"check": self.check, "n": self.n, "pass": self.passed,
                   "elapsed": round(self.elapsed, 3)}
        if self.witness is not None:
            payload["witness"] = self.witness
        return payload

    def human(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  witness: {self.witness}" if self.witness else ""
        return f"[{status}] {self.check} n={self.n} ({self.elapsed:.2f}s){extra}"


def _check_grading(n: int) -> tuple[bool, dict | None]:
    report = poset.grading_report(n)
    ok = report.pop("pass")
    return ok, None if ok else report


def _check_eulerian(n: int) -> tuple[bool, dict | None]:
    report = poset.verify_descent_distribution(n)
    ok = report.pop("pass")
    closed_form = poset.eulerian(n, 1) == 2 ** n - n - 1 if n >= 1 else True
    scan = oracle.descents_by_scan(n)
    ok = ok and closed_form and scan == report["eulerian_row"]
    return ok, None if ok else report


def _check_mobius(n: int) -> tuple[bool, dict | None]:
    diagram = build(n)
    for x in range(len(diagram.nodes)):
        for y, value in poset.mobius_from(diagram, x).items():
            if value not in (-1, 0, 1):
                return False, {"x": diagram.nodes[x].as_text(),
                               "y": diagram.nodes[y].as_text(),
                               "mu": value}
    return True, None


def _check_lattice(n: int) -> tuple[bool, dict | None]:
    """join/meet recursions against bound search over the cover closure."""
    diagram = build(n)
    closure = oracle.order_by_closure(diagram)
    rev = {v: t for t, v in enumerate(diagram.vecs)}
    size = len(diagram.nodes)
    if size <= 120:
        pairs = [(x, y) for x in range(size) for y in range(size)]
    else:
        rng = random.Random(_SEED)
        pairs = [(rng.randrange(size), rng.randrange(size))
                 for _ in range(10_000)]
    for x, y in pairs:
        u = AdmittedVector(n, diagram.vecs[x])
        v = AdmittedVector(n, diagram.vecs[y])
        if oracle.join_by_search(closure, x, y) != rev[vectors.join(u, v).flat]:
            return False, {"op": "join", "pair": [diagram.nodes[x].as_text(),
                                                  diagram.nodes[y].as_text()]}
        if oracle.meet_by_search(closure, x, y) != rev[vectors.meet(u, v).flat]:
            return False, {"op": "meet", "pair": [diagram.nodes[x].as_text(),
                                                  diagram.nodes[y].as_text()]}
    return True, {"pairs": len(pairs)}


def _check_semidistributive(n: int) -> tuple[bool, dict | None]:
    report = poset.check_semidistributive(build(n))
    return report["pass"], report["witness"]


def _check_modularity(n: int) -> tuple[bool, dict | None]:
    report = poset.check_modular(build(n))
    expected_modular = n <= 4
    ok = report["modular"] == expected_modular
    if n == 5 and ok:
        # the canonical witness quadruple must violate rank additivity
        u = vectors.cycle_to_vector(CircularPermutation.from_text("(1,4,2,3,5)"))
        v = vectors.cycle_to_vector(CircularPermutation.from_text("(1,3,4,2,5)"))
        lo, hi = vectors.meet(u, v), vectors.join(u, v)
        quad = {
            "x": "(1,4,2,3,5)", "y": "(1,3,4,2,5)",
            "meet": vectors.vector_to_cycle(lo).as_text(),
            "join": vectors.vector_to_cycle(hi).as_text(),
            "ranks": [u.rank, v.rank, lo.rank, hi.rank],
        }
        ok = (quad["meet"] == "(1,4,2,5,3)" and quad["join"] == "(1,3,5,4,2)"
              and quad["ranks"] == [4, 4, 3, 6])
        return ok, quad
    return ok, report["witness"]


def _check_young(n: int) -> tuple[bool, dict | None]:
    from math import comb
    k = min(n // 2, comb(n, 3))  # truncation depth cannot exceed the top rank
    report = poset.check_young_limit(n, k)
    ok = report.pop("pass")
    return ok, report if not ok else {"k": k, "rank_sizes": report["rank_sizes"]}


def _sample_vectors(n: int, count: int, rng: random.Random) -> list[AdmittedVector]:
    out = []
    for _ in range(count):
        rest = list(range(2, n + 1))
        rng.shuffle(rest)
        out.append(vectors.cycle_to_vector(CircularPermutation((1, *rest))))
    return out


def _check_triangulation(n: int) -> tuple[bool, dict | None]:
    if n < 3:
        return True, {"triangulations": 0, "vectors": 0}
    rng = random.Random(_SEED)
    if factorial(n - 1) <= 24:
        vecs = [AdmittedVector(n, flat) for flat in oracle.enumerate_admitted(n)]
    else:
        vecs = _sample_vectors(n, 500, rng)
    tris = vectors.all_triangulations(n)
    for v in vecs:
        target = v[1, n]
        for t in tris:
            if vectors.triangulation_sum(v, t) != target:
                return False, {"vector": v.rows(), "triangles": sorted(t.triangles)}
    # flips preserve the sum
    quads = list(combinations(range(1, n + 1), 4))
    for t in tris:
        for q in quads:
            try:
                flipped = vectors.mutate(t, q)
            except QuadNotFlippableError:
                continue
            for v in vecs[:20]:
                if vectors.triangulation_sum(v, flipped) != v[1, n]:
                    return False, {"flip": list(q)}
    return True, {"triangulations": len(tris), "vectors": len(vecs)}


def _check_interval(n: int) -> tuple[bool, dict | None]:
    sigmas = list(all_cycles(n))
    vecs = [vectors.cycle_to_vector(s) for s in sigmas]
    wins = [affine.window_of_vector(v) for v in vecs]
    for s, v, w in zip(sigmas, vecs, wins):
        if affine.vector_of_window(w) != v:
            return False, {"stage": "window roundtrip", "cycle": s.as_text()}
        if vectors.vector_to_cycle(v) != s:
            return False, {"stage": "vector roundtrip", "cycle": s.as_text()}
        if affine.project(w) != s:
            return False, {"stage": "projection", "cycle": s.as_text()}
        if not (s.rank == v.rank == affine.length(w)):
            return False, {"stage": "grading", "cycle": s.as_text()}
    for a in range(len(sigmas)):
        for b in range(len(sigmas)):
            if (vecs[a] <= vecs[b]) != affine.weak_leq(wins[a], wins[b]):
                return False, {"stage": "order embedding",
                               "pair": [sigmas[a].as_text(), sigmas[b].as_text()]}
    return True, None


def _random_chain(diagram, lo: int, hi: int, rng: random.Random):
    chain = []
    current = lo
    while current != hi:
        options = [(label, up) for l2, up, label in diagram.edges
                   if l2 == current and diagram.leq(up, hi)]
        label, current = rng.choice(options)
        chain.append(label)
    return chain


def _all_chains(diagram, lo: int, hi: int):
    if lo == hi:
        yield []
        return
    for l2, up, label in diagram.edges:
        if l2 == lo and diagram.leq(up, hi):
            for rest in _all_chains(diagram, up, hi):
                yield [label] + rest


def _check_alpha(n: int) -> tuple[bool, dict | None]:
    diagram = build(n)
    chain = poset.maximal_chain(diagram)
    result = poset.path_conjugator(diagram.nodes[diagram.bottom], chain)
    if result.alpha != poset.conjugator_formula(n):
        return False, {"stage": "maximal chain",
                       "alpha": list(result.alpha),
                       "expected": list(poset.conjugator_formula(n))}
    size = len(diagram.nodes)
    if size <= 6:
        pairs = [(x, y) for x in range(size) for y in range(size)
                 if x != y and diagram.leq(x, y)]
        for x, y in pairs:
            alphas = {poset.path_conjugator(diagram.nodes[x], c).alpha
                      for c in _all_chains(diagram, x, y)}
            if len(alphas) != 1:
                return False, {"stage": "chain independence",
                               "pair": [diagram.nodes[x].as_text(),
                                        diagram.nodes[y].as_text()]}
    else:
        rng = random.Random(_SEED)
        for _ in range(1000):
            x = rng.randrange(size)
            above = [y for y in range(size) if y != x and diagram.leq(x, y)]
            if not above:
                continue
            y = rng.choice(above)
            c1 = _random_chain(diagram, x, y, rng)
            c2 = _random_chain(diagram, x, y, rng)
            r1 = poset.path_conjugator(diagram.nodes[x], c1)
            r2 = poset.path_conjugator(diagram.nodes[x], c2)
            if r1.alpha != r2.alpha or r1.target != r2.target:
                return False, {"stage": "chain independence",
                               "pair": [diagram.nodes[x].as_text(),
                                        diagram.nodes[y].as_text()]}
    return True, None


CHECKS: dict[str, Callable[[int], tuple[bool, dict | None]]] = {
    "grading": _check_grading,
    "eulerian": _check_eulerian,
    "lattice": _check_lattice,
    "mobius": _check_mobius,
    "semidistributive": _check_semidistributive,
    "modularity": _check_modularity,
    "young": _check_young,
    "triangulation": _check_triangulation,
    "interval": _check_interval,
    "alpha": _check_alpha,
}


def run_check(name: str, n: int) -> CheckReport:
    if name not in CHECKS:
        raise UnknownCheckError(
            f"unknown check {name!r}; available: {', '.join(sorted(CHECKS))}")
    start = time.perf_counter()
    passed, witness = CHECKS[name](n)
    return CheckReport(name, n, passed, witness, time.perf_counter() - start)


def run_all(n: int) -> list[CheckReport]:
    return [run_check(name, n) for name in CHECKS]
