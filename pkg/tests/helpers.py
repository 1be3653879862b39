"""Shared fixtures and independent brute-force oracles for the test suite.

Everything here is deliberately naive: the oracles enumerate rather than
reason, so they check the package instead of mirroring it.
"""

from __future__ import annotations

import itertools

from ent2 import Graph, GlueGraph, build_graph


def cycle_graph(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return build_graph(k, [(i, i + 1) for i in range(k - 1)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(k: int) -> Graph:
    return build_graph(k, list(itertools.combinations(range(k), 2)))


def diamond_graph() -> Graph:
    # 4-cycle plus one chord
    return build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])


def threec_graph() -> Graph:
    # triangle with a pendant on every corner
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def ac_graph() -> Graph:
    # square with pendants on two adjacent corners
    return build_graph(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 5)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def all_pairs(n: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(n), 2))


def graph_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    """Graph on n vertices whose edge set is the bit mask over `pairs`.

    Builds the frozen dataclass directly; `pairs` comes sorted, so each
    adjacency list stays sorted without extra work.
    """
    adjacency: list[list[int]] = [[] for _ in range(n)]
    m = 0
    bit = 0
    while mask:
        if mask & 1:
            u, v = pairs[bit]
            adjacency[u].append(v)
            adjacency[v].append(u)
            m += 1
        mask >>= 1
        bit += 1
    return Graph(n=n, adjacency=tuple(map(tuple, adjacency)), m=m)


def all_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = all_pairs(n)
    for mask in range(1 << len(pairs)):
        yield graph_from_mask(n, pairs, mask)


def count_graphs(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def brute_cycle_over(g: Graph, bound: int) -> bool:
    """True iff g has a simple cycle on more than `bound` vertices.

    Plain path enumeration anchored at each cycle's smallest vertex; fine up
    to n around 9.
    """
    adj = g.adjacency
    path: list[int] = []
    on_path = [False] * g.n

    def extend(anchor: int, v: int) -> bool:
        path.append(v)
        on_path[v] = True
        found = False
        for w in adj[v]:
            if w == anchor:
                if len(path) > bound and len(path) >= 3:
                    found = True
            elif w > anchor and not on_path[w]:
                found = extend(anchor, w)
            if found:
                break
        path.pop()
        on_path[v] = False
        return found

    return any(extend(s, s) for s in range(g.n))


def all_cycle_masks(n: int, pairs: list[tuple[int, int]], least: int) -> dict[int, list[int]]:
    """Edge masks of every simple cycle on at least `least` vertices, keyed
    by cycle length. Enumerates one orientation per cycle."""
    index = {p: i for i, p in enumerate(pairs)}
    out: dict[int, list[int]] = {}
    for size in range(max(least, 3), n + 1):
        masks = []
        for subset in itertools.combinations(range(n), size):
            first = subset[0]
            for perm in itertools.permutations(subset[1:]):
                if perm[0] > perm[-1]:
                    continue  # mirror image, already counted
                cyc = (first,) + perm
                mask = 0
                for i, u in enumerate(cyc):
                    v = cyc[(i + 1) % size]
                    mask |= 1 << index[(u, v) if u < v else (v, u)]
                masks.append(mask)
        out[size] = masks
    return out


def isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by degree-guided backtracking; fine up to n
    around 9."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    n = g1.n
    d1 = [len(a) for a in g1.adjacency]
    d2 = [len(a) for a in g2.adjacency]
    if sorted(d1) != sorted(d2):
        return False
    a1 = [set(a) for a in g1.adjacency]
    a2 = [set(a) for a in g2.adjacency]
    order = sorted(range(n), key=lambda v: -d1[v])
    image = [-1] * n
    used = [False] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or d1[v] != d2[w]:
                continue
            if any((u in a1[v]) != (image[u] in a2[w]) for u in order[:i]):
                continue
            image[v] = w
            used[w] = True
            if place(i + 1):
                return True
            used[w] = False
            image[v] = -1
        return False

    return place(0)


def zeta2_member_brute(gg: GlueGraph) -> bool:
    """Membership in the decomposable class, straight from the closure
    definition: base shapes plus point merges, memoized on (vertices, glue).

    The empty graph is not in the class here; the package treats it as
    trivially decomposable by convention, so callers skip n = 0.
    """
    g = gg.graph
    adj = [frozenset(a) for a in g.adjacency]
    memo: dict[tuple[frozenset, frozenset], bool] = {}

    def parts_of(vs: set[int]) -> list[frozenset]:
        left = set(vs)
        parts = []
        while left:
            seed = left.pop()
            stack = [seed]
            part = {seed}
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if w in left:
                        left.remove(w)
                        part.add(w)
                        stack.append(w)
            parts.append(frozenset(part))
        return parts

    def member(vs: frozenset, gl: frozenset) -> bool:
        if len(vs) == 1:
            return gl == vs
        key = (vs, gl)
        if key in memo:
            return memo[key]
        # base: two hubs, every other vertex adjacent to exactly both
        ok = len(gl) == 2 and all(adj[c] & vs == gl for c in vs - gl)
        if not ok:
            for z in gl:
                parts = parts_of(set(vs) - {z})
                if len(parts) < 2:
                    continue
                head, rest = parts[0], parts[1:]
                for pick in range(1 << len(rest)):
                    one = set(head)
                    two: set[int] = set()
                    for i, p in enumerate(rest):
                        (one if pick >> i & 1 else two).update(p)
                    if not two:
                        continue
                    lv = frozenset(one | {z})
                    rv = frozenset(two | {z})
                    if member(lv, gl & lv) and member(rv, gl & rv):
                        ok = True
                        break
                if ok:
                    break
        memo[key] = ok
        return ok

    return member(frozenset(range(g.n)), frozenset(gg.glue))
