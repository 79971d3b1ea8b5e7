"""Brute-force reference implementations.

Everything here recomputes a quantity from its bare definition, sharing
no code with the module it cross-checks: the order is taken as the
reflexive-transitive closure of the cover graph, bounds are found by
search over that closure, descents are counted through the cycle's
successor map, affine lengths by direct pair enumeration and by
breadth-first search over generator applications.  Slow on purpose;
used by the test suite and the `check` command.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from cyclat.errors import NotALatticeError
from cyclat.poset import HasseDiagram


@dataclass(frozen=True)
class ClosureOrder:
    """Reachability of the cover relation, as one bitmask per node."""

    above: tuple[int, ...]   # above[x] has bit y set iff x <= y
    ranks: tuple[int, ...]

    def leq(self, x: int, y: int) -> bool:
        return bool(self.above[x] >> y & 1)


def order_by_closure(diagram: HasseDiagram) -> ClosureOrder:
    """The order as the reflexive-transitive closure of the edges."""
    size = len(diagram.nodes)
    succ = [[] for _ in range(size)]
    for lo, hi, _ in diagram.edges:
        succ[lo].append(hi)
    above = [0] * size
    for x in sorted(range(size), key=lambda t: -diagram.ranks[t]):
        mask = 1 << x
        for y in succ[x]:
            mask |= above[y]
        above[x] = mask
    return ClosureOrder(tuple(above), diagram.ranks)


def join_by_search(closure: ClosureOrder, x: int, y: int) -> int:
    """Minimum of the common upper bounds; unique for this order."""
    common = closure.above[x] & closure.above[y]
    if not common:
        raise NotALatticeError(f"nodes {x} and {y} have no upper bound")
    candidates = [z for z in _bits(common)]
    best = min(candidates, key=lambda z: (closure.ranks[z], z))
    if not all(closure.leq(best, z) for z in candidates):
        raise NotALatticeError(f"no least upper bound for {x}, {y}")
    return best


def meet_by_search(closure: ClosureOrder, x: int, y: int) -> int:
    """Maximum of the common lower bounds; unique for this order."""
    size = len(closure.above)
    candidates = [z for z in range(size)
                  if closure.leq(z, x) and closure.leq(z, y)]
    if not candidates:
        raise NotALatticeError(f"nodes {x} and {y} have no lower bound")
    best = max(candidates, key=lambda z: (closure.ranks[z], -z))
    if not all(closure.leq(z, best) for z in candidates):
        raise NotALatticeError(f"no greatest lower bound for {x}, {y}")
    return best


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mobius_by_chain_count(closure: ClosureOrder, x: int, y: int) -> int:
    """Moebius value as the alternating sum over all chains from x to y.

    Enumerates every chain x = z0 < z1 < ... < zk = y explicitly and adds
    (-1)^k; exponential, only for small intervals.
    """
    if not closure.leq(x, y):
        raise NotALatticeError(f"{x} is not below {y}")
    members = [z for z in range(len(closure.above))
               if closure.leq(x, z) and closure.leq(z, y)]

    def walk(z: int, sign: int) -> int:
        if z == y:
            return sign
        return sum(walk(w, -sign) for w in members
                   if w != z and closure.leq(z, w))

    return walk(x, 1)


def descents_by_scan(n: int) -> dict[int, int]:
    """Histogram of large-circular-descent counts over cycles in S_{n+1},
    counted through the successor map of each cycle."""
    hist: dict[int, int] = {}
    m = n + 1
    for rest in permutations(range(2, m + 1)):
        word = (1,) + rest
        pred = {}
        for t, a in enumerate(word):
            pred[word[(t + 1) % m]] = a
        count = sum(1 for b in range(1, m + 1) if pred[b] > b + 1)
        hist[count] = hist.get(count, 0) + 1
    return hist


def enumerate_admitted(n: int) -> list[tuple[int, ...]]:
    """All flat admitted vectors of order n, by bounded product search.

    Any admitted entry satisfies v[i,j] <= j - i - 1 (induction on j - i
    from the defining inequalities), so the search space is finite.
    """
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    pos = {p: t for t, p in enumerate(pairs)}
    ranges = [range(j - i) if j - i >= 2 else range(1) for i, j in pairs]
    out = []
    for flat in product(*ranges):
        ok = True
        for i, j, k in combinations(range(1, n + 1), 3):
            d = flat[pos[i, k]] - flat[pos[i, j]] - flat[pos[j, k]]
            if d != 0 and d != 1:
                ok = False
                break
        if ok:
            out.append(flat)
    return out


def affine_length_by_enumeration(entries: tuple[int, ...]) -> int:
    """Inversion count of the window by direct enumeration of pairs
    (i, j), i < j <= i + n * bound, on the periodic extension."""
    n = len(entries)

    def f(x: int) -> int:
        p = (x - 1) % n
        return entries[p] + (x - 1 - p)

    bound = (max(entries) - min(entries)) // n + 2
    return sum(1
               for i in range(1, n + 1)
               for j in range(i + 1, i + n * bound + 1)
               if f(i) > f(j))


def generator_ball(n: int, depth: int) -> dict[tuple[int, ...], int]:
    """Every window reachable from the identity by at most `depth` left
    generator applications, mapped to its breadth-first distance."""
    start = tuple(range(1, n + 1))
    dist = {start: 0}
    frontier = [start]
    for d in range(1, depth + 1):
        nxt = []
        for win in frontier:
            for k in range(n):
                new = list(win)
                for t, a in enumerate(new):
                    if a % n == (k + 1) % n:
                        new[t] = a - 1
                    elif a % n == k % n:
                        new[t] = a + 1
                cand = tuple(new)
                if cand not in dist:
                    dist[cand] = d
                    nxt.append(cand)
        frontier = nxt
    return dist
