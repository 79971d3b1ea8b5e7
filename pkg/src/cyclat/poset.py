"""The full order on circular permutations of a given order.

`build` materializes the labelled Hasse diagram (bottom-up breadth-first
search over covers, deduplicated on canonical words); everything else
queries it: rank grading, Eulerian cover statistics, the Moebius
function, semidistributivity and modularity scans, rank truncations
against the partition order, and conjugating permutations of upward
paths.  Node indexing is lexicographic on canonical words, so exports
are byte-for-byte reproducible regardless of worker count.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, Sequence

from cyclat import kernels
from cyclat.errors import (
    CapExceededError,
    CyclatError,
    NotAChainError,
    NotComparableError,
)
from cyclat.perm import CircularPermutation, DescentLabel, Word, all_cycles

DEFAULT_MAX_N = 9
_ENV_CAP = "CYCLAT_MAX_N"


def enumeration_cap() -> int:
    """Largest order `build` accepts; override with CYCLAT_MAX_N.

    Memory grows like (n-1)! nodes times O(n^2) ints per node; the default
    cap of 9 keeps the diagram around 40320 nodes.
    """
    raw = os.environ.get(_ENV_CAP)
    return int(raw) if raw else DEFAULT_MAX_N


class Comparison(Enum):
    LT = "LT"
    GT = "GT"
    EQ = "EQ"
    INCOMPARABLE = "INCOMPARABLE"


def compare(sigma: CircularPermutation, tau: CircularPermutation) -> Comparison:
    """Order comparison through the componentwise order of the vectors."""
    if sigma.n != tau.n:
        raise NotComparableError(f"mixed orders {sigma.n} and {tau.n}")
    u = kernels.word_vector(sigma.canon)
    v = kernels.word_vector(tau.canon)
    if u == v:
        return Comparison.EQ
    le = kernels.leq_flat(u, v)
    ge = kernels.leq_flat(v, u)
    if le:
        return Comparison.LT
    if ge:
        return Comparison.GT
    return Comparison.INCOMPARABLE


@dataclass
class HasseDiagram:
    """Labelled cover graph of the order for one n.

    nodes are sorted lexicographically on canonical words; edges are
    (lower index, upper index, label) triples, sorted; ranks[i] grades
    node i.  Derived adjacency is computed once and never mutated.
    """

    n: int
    nodes: tuple[CircularPermutation, ...]
    edges: tuple[tuple[int, int, DescentLabel], ...]
    ranks: tuple[int, ...]
    index: dict[Word, int] = field(init=False, compare=False, repr=False)
    vecs: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)
    up: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)
    down: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        self.index = {s.canon: t for t, s in enumerate(self.nodes)}
        self.vecs = tuple(kernels.word_vector(s.canon) for s in self.nodes)
        up = [[] for _ in self.nodes]
        down = [[] for _ in self.nodes]
        for lo, hi, _ in self.edges:
            up[lo].append(hi)
            down[hi].append(lo)
        self.up = tuple(tuple(sorted(t)) for t in up)
        self.down = tuple(tuple(sorted(t)) for t in down)

    def node_id(self, sigma: CircularPermutation) -> int:
        return self.index[sigma.canon]

    def leq(self, x: int, y: int) -> bool:
        return kernels.leq_flat(self.vecs[x], self.vecs[y])

    @property
    def bottom(self) -> int:
        return self.index[CircularPermutation.smallest(self.n).canon]

    @property
    def top(self) -> int:
        return self.index[CircularPermutation.largest(self.n).canon]


def _expand(words: Sequence[Word], workers: int):
    if workers <= 1 or len(words) < 64:
        return [kernels.word_covers_up(w) for w in words]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(kernels.word_covers_up, words, chunksize=64))


def build(n: int, workers: int = 1) -> HasseDiagram:
    """Materialize the diagram by breadth-first search from (1, 2, ..., n).

    The result is identical for every worker count: each layer is expanded
    into a set and the final node order is sorted.
    """
    cap = enumeration_cap()
    if n > cap:
        raise CapExceededError(
            f"order {n} exceeds the cap {cap}; raise {_ENV_CAP} to override")
    if n < 1:
        raise CapExceededError(f"order must be >= 1, got {n}")
    bottom = tuple(range(1, n + 1))
    seen: set[Word] = {bottom}
    frontier: list[Word] = [bottom]
    edge_set: set[tuple[Word, Word, tuple[int, int]]] = set()
    while frontier:
        nxt: set[Word] = set()
        for word, covers in zip(frontier, _expand(frontier, workers)):
            for r, s, upper in covers:
                edge_set.add((word, upper, (r, s)))
                if upper not in seen:
                    nxt.add(upper)
        seen.update(nxt)
        frontier = sorted(nxt)
    words = sorted(seen)
    index = {w: t for t, w in enumerate(words)}
    nodes = tuple(CircularPermutation(w) for w in words)
    edges = tuple(sorted((index[a], index[b], DescentLabel(r, s))
                         for a, b, (r, s) in edge_set))
    ranks = tuple(kernels.word_rank(w) for w in words)
    assert len(nodes) == factorial(n - 1)
    return HasseDiagram(n, nodes, edges, ranks)


@lru_cache(maxsize=None)
def eulerian(n: int, k: int) -> int:
    """Eulerian number a(n, k): permutations of S_n with k descents.

    a(n, k) = (k+1) a(n-1, k) + (n-k) a(n-1, k-1); a(n, 0) = 1; a(0, k) = 0
    for k >= 1.
    """
    if n < 0 or k < 0:
        return 0
    if k == 0:
        return 1
    if n == 0:
        return 0
    return (k + 1) * eulerian(n - 1, k) + (n - k) * eulerian(n - 1, k - 1)


def eulerian_row(n: int) -> tuple[int, ...]:
    return tuple(eulerian(n, k) for k in range(max(n, 1)))


def descent_histogram(n: int) -> dict[int, int]:
    """Histogram of large-circular-descent counts over cycles in S_{n+1}."""
    hist: dict[int, int] = {}
    for sigma in all_cycles(n + 1):
        d = kernels.descent_count(sigma.canon)
        hist[d] = hist.get(d, 0) + 1
    return hist


def verify_descent_distribution(n: int) -> dict:
    """Check the cover statistics of the order on cycles in S_{n+1}.

    The descent histogram must equal the Eulerian row a(n, .); the number
    of elements with k covers above, read off the built diagram, must be
    a(n, k) as well; the edge total must be sum k * a(n, k).
    """
    row = {k: eulerian(n, k) for k in range(max(n, 1)) if eulerian(n, k)}
    hist = descent_histogram(n)
    diagram = build(n + 1)
    updeg: dict[int, int] = {}
    for t in range(len(diagram.nodes)):
        d = len(diagram.up[t])
        updeg[d] = updeg.get(d, 0) + 1
    edge_total = sum(k * a for k, a in row.items())
    ok = hist == row and updeg == row and len(diagram.edges) == edge_total
    return {
        "n": n,
        "pass": ok,
        "eulerian_row": row,
        "descent_histogram": hist,
        "cover_histogram": updeg,
        "edges": len(diagram.edges),
        "expected_edges": edge_total,
    }


def interval(diagram: HasseDiagram, x: int, y: int) -> list[int]:
    """Node ids z with x <= z <= y, sorted by rank then id."""
    if not diagram.leq(x, y):
        raise NotComparableError(f"{diagram.nodes[x]} is not below {diagram.nodes[y]}")
    members = [z for z in range(len(diagram.nodes))
               if diagram.leq(x, z) and diagram.leq(z, y)]
    members.sort(key=lambda z: (diagram.ranks[z], z))
    return members


def _mobius_over(diagram: HasseDiagram, members: list[int]) -> dict[int, int]:
    # members: x first, then the elements above it in rank order
    mu: dict[int, int] = {}
    for t, z in enumerate(members):
        if t == 0:
            mu[z] = 1
        else:
            mu[z] = -sum(mu[w] for w in members[:t] if diagram.leq(w, z))
    return mu


def mobius(diagram: HasseDiagram, x: int, y: int) -> int:
    """Moebius function of the closed interval [x, y]."""
    return _mobius_over(diagram, interval(diagram, x, y))[y]


def mobius_from(diagram: HasseDiagram, x: int) -> dict[int, int]:
    """mu(x, y) for every y above x, in one accumulation pass."""
    above = [z for z in range(len(diagram.nodes)) if diagram.leq(x, z)]
    above.sort(key=lambda z: (diagram.ranks[z], z))
    return _mobius_over(diagram, above)


def _lattice_tables(diagram: HasseDiagram):
    size = len(diagram.nodes)
    rev = {v: t for t, v in enumerate(diagram.vecs)}
    n = diagram.n
    joins = [[0] * size for _ in range(size)]
    meets = [[0] * size for _ in range(size)]
    for a in range(size):
        va = diagram.vecs[a]
        for b in range(a, size):
            vb = diagram.vecs[b]
            j = rev[kernels.join_flat(n, va, vb)]
            m = rev[kernels.meet_flat(n, va, vb)]
            joins[a][b] = joins[b][a] = j
            meets[a][b] = meets[b][a] = m
    return joins, meets


def check_semidistributive(diagram: HasseDiagram) -> dict:
    """Scan all triples for the two semidistributivity implications."""
    joins, meets = _lattice_tables(diagram)
    found = kernels.sd_scan(tuple(tuple(row) for row in joins),
                            tuple(tuple(row) for row in meets))
    witness = None
    if found is not None:
        x, y, z, law = found
        witness = {"law": law,
                   "x": diagram.nodes[x].as_text(),
                   "y": diagram.nodes[y].as_text(),
                   "z": diagram.nodes[z].as_text()}
    return {"n": diagram.n, "pass": witness is None, "witness": witness}


def check_modular(diagram: HasseDiagram) -> dict:
    """Rank-additivity scan: rank x + rank y = rank meet + rank join.

    Returns the first violating quadruple, if any, as a witness.
    """
    size = len(diagram.nodes)
    n = diagram.n
    rev = {v: t for t, v in enumerate(diagram.vecs)}
    witness = None
    for x in range(size):
        for y in range(x + 1, size):
            m = rev[kernels.meet_flat(n, diagram.vecs[x], diagram.vecs[y])]
            j = rev[kernels.join_flat(n, diagram.vecs[x], diagram.vecs[y])]
            if diagram.ranks[x] + diagram.ranks[y] != diagram.ranks[m] + diagram.ranks[j]:
                witness = {
                    "x": diagram.nodes[x].as_text(),
                    "y": diagram.nodes[y].as_text(),
                    "meet": diagram.nodes[m].as_text(),
                    "join": diagram.nodes[j].as_text(),
                    "ranks": [diagram.ranks[x], diagram.ranks[y],
                              diagram.ranks[m], diagram.ranks[j]],
                }
                return {"n": n, "modular": False, "witness": witness}
    return {"n": n, "modular": True, "witness": None}


# --- rank truncations and the partition order ---------------------------

Partition = tuple[int, ...]


def partitions_up_to(k: int) -> list[Partition]:
    """All partitions of weight <= k, sorted by (weight, lex)."""

    def parts(total: int, largest: int) -> Iterable[Partition]:
        if total == 0:
            yield ()
            return
        for first in range(min(total, largest), 0, -1):
            for rest in parts(total - first, first):
                yield (first,) + rest

    out: list[Partition] = []
    for w in range(k + 1):
        out.extend(sorted(parts(w, w)))
    return out


def partition_leq(lam: Partition, mu: Partition) -> bool:
    """Containment of Young diagrams."""
    if len(lam) > len(mu):
        return False
    return all(a <= b for a, b in zip(lam, mu))


@dataclass
class SubPoset:
    """A finite poset given by explicit elements and comparability."""

    labels: tuple[str, ...]
    ranks: tuple[int, ...]
    leq: tuple[tuple[bool, ...], ...]

    def rank_sizes(self) -> dict[int, int]:
        sizes: dict[int, int] = {}
        for r in self.ranks:
            sizes[r] = sizes.get(r, 0) + 1
        return sizes


def truncate(diagram: HasseDiagram, k: int) -> SubPoset:
    """The subposet of elements of rank <= k."""
    ids = [t for t in range(len(diagram.nodes)) if diagram.ranks[t] <= k]
    return SubPoset(
        labels=tuple(diagram.nodes[t].as_text() for t in ids),
        ranks=tuple(diagram.ranks[t] for t in ids),
        leq=tuple(tuple(diagram.leq(a, b) for b in ids) for a in ids),
    )


def young_truncation(k: int) -> SubPoset:
    """Partitions of weight <= k under containment."""
    ps = partitions_up_to(k)
    return SubPoset(
        labels=tuple(str(list(p)) for p in ps),
        ranks=tuple(sum(p) for p in ps),
        leq=tuple(tuple(partition_leq(a, b) for b in ps) for a in ps),
    )


def shuffle_partition(sigma: CircularPermutation, rank: int) -> Partition:
    """The partition encoding a low-rank circular permutation.

    Valid for rank <= n/2: exactly one rotation of the cycle keeps both
    letter blocks {1.. n/2} and {n/2+1 .. n} increasing while its
    statistic (for each small letter, the count of large letters to its
    right) sums to the rank; that statistic, weakly decreasing, is the
    partition.
    """
    n = sigma.n
    half = n // 2
    low = set(range(1, half + 1))
    found = []
    word = sigma.canon
    for t in range(n):
        rot = word[t:] + word[:t]
        lows = [a for a in rot if a in low]
        highs = [a for a in rot if a not in low]
        if lows != sorted(lows) or highs != sorted(highs):
            continue
        stat = []
        for a in range(1, half + 1):
            p = rot.index(a)
            stat.append(sum(1 for b in rot[p + 1:] if b not in low))
        if sum(stat) != rank or any(x < y for x, y in zip(stat, stat[1:])):
            continue
        found.append(tuple(x for x in stat if x))
    if len(found) != 1:
        raise CyclatError(
            f"{sigma} has {len(found)} shuffle encodings at rank {rank}")
    return found[0]


def check_young_limit(n: int, k: int) -> dict:
    """Rank-<=k truncation against the partition order (needs n >= 2k).

    The shuffle statistic must biject the truncation onto partitions of
    weight <= k and carry the order to containment.
    """
    if n < 2 * k:
        raise CyclatError(f"need n >= 2k, got n={n}, k={k}")
    diagram = build(n)
    ids = [t for t in range(len(diagram.nodes)) if diagram.ranks[t] <= k]
    encoding = {t: shuffle_partition(diagram.nodes[t], diagram.ranks[t])
                for t in ids}
    target = set(partitions_up_to(k))
    bijective = (len(set(encoding.values())) == len(ids)
                 and set(encoding.values()) == target)
    order_ok = all(
        diagram.leq(a, b) == partition_leq(encoding[a], encoding[b])
        for a in ids for b in ids)
    sizes = {r: sum(1 for t in ids if diagram.ranks[t] == r)
             for r in range(k + 1)}
    return {
        "n": n,
        "k": k,
        "pass": bijective and order_ok,
        "rank_sizes": sizes,
        "partition_counts": {w: sum(1 for p in target if sum(p) == w)
                             for w in range(k + 1)},
    }


# --- conjugating permutation of an upward path ---------------------------


@dataclass(frozen=True)
class PathConjugator:
    """alpha with target = alpha o source o alpha^{-1}, as a word."""

    alpha: Word
    source: CircularPermutation
    target: CircularPermutation


def path_conjugator(
    sigma: CircularPermutation, chain: Sequence[DescentLabel]
) -> PathConjugator:
    """Multiply the chain's transpositions right-to-left from `sigma`.

    Each label must be a large circular descent of the current element
    (so the chain is an upward path in the diagram); the result depends
    only on the endpoints.
    """
    current = sigma
    alpha = list(range(sigma.n + 1))  # alpha[x] = image of x; slot 0 unused
    for label in chain:
        steps = {(r, s): word for r, s, word in kernels.word_covers_up(current.canon)}
        key = label.as_pair()
        if key not in steps:
            raise NotAChainError(
                f"({label.r},{label.s}) is not a large circular descent "
                f"of {current}")
        current = CircularPermutation(steps[key])
        r, s = key
        for x in range(1, sigma.n + 1):
            if alpha[x] == r:
                alpha[x] = s
            elif alpha[x] == s:
                alpha[x] = r
    return PathConjugator(tuple(alpha[1:]), sigma, current)


def maximal_chain(diagram: HasseDiagram) -> list[DescentLabel]:
    """One saturated chain from bottom to top (first label at each step)."""
    chain = []
    t = diagram.bottom
    while diagram.up[t]:
        lo, hi, label = next(e for e in diagram.edges if e[0] == t)
        chain.append(label)
        t = hi
    return chain


def conjugator_formula(n: int) -> Word:
    """Expected conjugator of a bottom-to-top path: the reversal word for
    odd n, its half-shifted variant for even n."""
    if n % 2 == 1:
        return tuple(range(n, 0, -1))
    half = n // 2
    return tuple(range(half, 0, -1)) + tuple(range(n, half, -1))


# --- exports -------------------------------------------------------------


def to_dot(diagram: HasseDiagram) -> str:
    """Deterministic Graphviz rendering with same-rank grouping."""
    lines = [f"digraph CP{diagram.n} {{", "  rankdir=BT;", "  node [shape=box];"]
    for t, sigma in enumerate(diagram.nodes):
        lines.append(f'  n{t} [label="{sigma.as_text()}"];')
    for r in sorted(set(diagram.ranks)):
        ids = "; ".join(f"n{t}" for t in range(len(diagram.nodes))
                        if diagram.ranks[t] == r)
        lines.append(f"  {{ rank=same; {ids}; }}")
    for lo, hi, label in diagram.edges:
        lines.append(f'  n{lo} -> n{hi} [label="({label.r},{label.s})"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(diagram: HasseDiagram) -> str:
    """Deterministic JSON rendering: nodes, ranks, labelled edges."""
    payload = {
        "n": diagram.n,
        "nodes": [sigma.as_text() for sigma in diagram.nodes],
        "ranks": list(diagram.ranks),
        "edges": [[lo, hi, [label.r, label.s]]
                  for lo, hi, label in diagram.edges],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def grading_report(n: int) -> dict:
    """Node count, rank image, and per-edge rank increments of build(n)."""
    diagram = build(n)
    image = sorted(set(diagram.ranks))
    increments_ok = all(diagram.ranks[hi] == diagram.ranks[lo] + 1
                        for lo, hi, _ in diagram.edges)
    bottoms = [t for t in range(len(diagram.nodes)) if not diagram.down[t]]
    tops = [t for t in range(len(diagram.nodes)) if not diagram.up[t]]
    ok = (len(diagram.nodes) == factorial(n - 1)
          and image == list(range(comb(n, 3) + 1))
          and increments_ok and len(bottoms) == 1 and len(tops) == 1)
    return {
        "n": n,
        "pass": ok,
        "nodes": len(diagram.nodes),
        "expected_nodes": factorial(n - 1),
        "max_rank": image[-1],
        "expected_max_rank": comb(n, 3),
        "rank_image_complete": image == list(range(comb(n, 3) + 1)),
        "unit_increments": increments_ok,
        "bottoms": len(bottoms),
        "tops": len(tops),
    }
