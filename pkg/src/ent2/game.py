"""Exact entanglement via the cops-and-thief game.

A position is (v, C, turn) where v is the thief's vertex and C the set of at
most k cop vertices. The thief chooses the start, then cops either skip, add
a cop on v (when there is room), or move a placed cop onto v; the thief must
answer by following an arc to a cop-free vertex, and loses when it cannot.
Cops win a play iff it is finite, so the cops' winning region is the least
fixpoint of backward propagation from the stuck positions, computed here with
predecessor lists and successor counters in O(positions + transitions).

Intended for small graphs (the solver enumerates all cop sets); no
performance claims beyond roughly n <= 16, k <= 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .graphs import DiGraph, Graph, connected_components, degree, dfs_twbe, symmetrize

COPS = 0
THIEF = 1

WINNER_COPS = "cops"
WINNER_THIEF = "thief"


@dataclass(frozen=True, slots=True)
class GamePosition:
    """Thief on `vertex`, cops on `cops`, `turn` in {COPS, THIEF} to move."""

    vertex: int
    cops: frozenset[int]
    turn: int


class GameResult:
    """Solved game for a fixed cop budget k.

    cops_win_game is True iff every thief starting choice (v, {}, COPS) is
    cops-won. winner_map materializes {GamePosition: winner} lazily; winner()
    answers point queries without building the full map.
    """

    def __init__(self, k: int, n: int, masks: list[int], mask_index: dict[int, int], win: bytearray, cops_win_game: bool):
        self.k = k
        self.cops_win_game = cops_win_game
        self._n = n
        self._masks = masks
        self._mask_index = mask_index
        self._win = win
        self._map: Optional[dict[GamePosition, str]] = None

    def winner(self, pos: GamePosition) -> str:
        mask = 0
        for c in pos.cops:
            mask |= 1 << c
        mi = self._mask_index.get(mask)
        if mi is None or not (0 <= pos.vertex < self._n) or pos.turn not in (COPS, THIEF):
            raise ValueError(f"position {pos} is not a position of this game")
        pid = ((mi * self._n + pos.vertex) << 1) | pos.turn
        return WINNER_COPS if self._win[pid] else WINNER_THIEF

    @property
    def winner_map(self) -> dict[GamePosition, str]:
        if self._map is None:
            out: dict[GamePosition, str] = {}
            n = self._n
            for mi, mask in enumerate(self._masks):
                cops = frozenset(b for b in range(n) if (mask >> b) & 1)
                base = (mi * n) << 1
                for v in range(n):
                    pid = base + (v << 1)
                    out[GamePosition(v, cops, COPS)] = WINNER_COPS if self._win[pid] else WINNER_THIEF
                    out[GamePosition(v, cops, THIEF)] = WINNER_COPS if self._win[pid | 1] else WINNER_THIEF
            self._map = out
        return self._map


def solve_game(g: Union[Graph, DiGraph], k: int) -> GameResult:
    """Solve the k-cop game on g (undirected graphs are symmetrized)."""
    if k < 0:
        raise ValueError(f"cop budget must be nonnegative, got {k}")
    dg = symmetrize(g) if isinstance(g, Graph) else g
    n = dg.n
    if n == 0:
        # no starting vertex for the thief
        return GameResult(k, 0, [0], {0: 0}, bytearray(2), True)
    adj = dg.out_adjacency

    masks = [0]
    for size in range(1, min(k, n) + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for b in combo:
                mask |= 1 << b
            masks.append(mask)
    mask_index = {mask: mi for mi, mask in enumerate(masks)}

    npos = (len(masks) * n) << 1
    preds: list[list[int]] = [[] for _ in range(npos)]
    pending = [0] * npos  # unresolved successor count, thief positions only
    win = bytearray(npos)
    queue: list[int] = []

    for mi, mask in enumerate(masks):
        base = (mi * n) << 1
        popc = mask.bit_count()
        for v in range(n):
            pid_cops = base + (v << 1)
            pid_thief = pid_cops | 1

            moves = [u for u in adj[v] if not (mask >> u) & 1]
            if not moves:
                win[pid_thief] = 1
                queue.append(pid_thief)
            else:
                pending[pid_thief] = len(moves)
                for u in moves:
                    preds[((mi * n + u) << 1)].append(pid_thief)

            opts = {mask}
            if (mask >> v) & 1 or popc < k:
                opts.add(mask | (1 << v))
            rest = mask
            while rest:
                bit = rest & -rest
                rest ^= bit
                opts.add((mask ^ bit) | (1 << v))
            for mask2 in opts:
                preds[((mask_index[mask2] * n + v) << 1) | 1].append(pid_cops)

    head = 0
    while head < len(queue):
        p = queue[head]
        head += 1
        for q in preds[p]:
            if win[q]:
                continue
            if q & 1:
                pending[q] -= 1
                if pending[q]:
                    continue
            win[q] = 1
            queue.append(q)

    cops_win = all(win[(v << 1)] for v in range(n))  # mask index 0 is the empty cop set
    return GameResult(k, n, masks, mask_index, win, cops_win)


def entanglement(g: Union[Graph, DiGraph]) -> int:
    """Least cop budget k with which the cops win from every start."""
    n = g.n
    for k in range(0, n + 1):
        if solve_game(g, k).cops_win_game:
            return k
    raise AssertionError("n cops always win")


@dataclass(frozen=True, slots=True)
class StarWitness:
    """Why a graph has entanglement above one: a 3-edge path or a cycle."""

    kind: str  # "path" or "cycle"
    vertices: tuple[int, ...]


def entanglement_leq1_undirected(g: Graph) -> tuple[bool, Optional[StarWitness]]:
    """Entanglement <= 1 iff the graph is a disjoint union of stars.

    On failure returns a witness: a cycle, or a path with 3 edges.
    """
    for comp in connected_components(g):
        size = len(comp)
        if size <= 2:
            continue
        centers = [v for v in comp if degree(g, v) >= 2]
        if len(centers) == 1 and degree(g, centers[0]) == size - 1:
            continue
        m_comp = sum(degree(g, v) for v in comp) // 2
        if m_comp >= size:
            twbe = dfs_twbe(g, comp[0])
            d, a = twbe.back_edges[0]
            cyc = [d]
            x = d
            while twbe.tree_parent[x] != a:
                x = twbe.tree_parent[x]
                cyc.append(x)
            cyc.append(a)
            cyc.reverse()
            return False, StarWitness("cycle", tuple(cyc))
        # a tree that is not a star has an edge joining two branch vertices
        for x in comp:
            if degree(g, x) < 2:
                continue
            for y in g.adjacency[x]:
                if y > x and degree(g, y) >= 2:
                    u = next(w for w in g.adjacency[x] if w != y)
                    w = next(z for z in g.adjacency[y] if z != x)
                    return False, StarWitness("path", (u, x, y, w))
        raise AssertionError("non-star tree component without adjacent branch vertices")
    return True, None


def entanglement_leq1_directed(dg: DiGraph) -> bool:
    """Entanglement <= 1 iff every strongly connected component has a vertex
    whose removal leaves that component acyclic."""
    for scc in _strongly_connected_components(dg):
        if len(scc) == 1:
            continue  # removing the only vertex always works
        members = set(scc)
        if not any(_acyclic_without(dg, members, v) for v in scc):
            return False
    return True


def _acyclic_without(dg: DiGraph, members: set[int], removed: int) -> bool:
    """Kahn check on the subgraph induced by members minus one vertex."""
    keep = [v for v in members if v != removed]
    indeg = {v: 0 for v in keep}
    for u in keep:
        for w in dg.out_adjacency[u]:
            if w != removed and w in indeg:
                indeg[w] += 1
    ready = [v for v in keep if indeg[v] == 0]
    seen = 0
    while ready:
        u = ready.pop()
        seen += 1
        for w in dg.out_adjacency[u]:
            if w != removed and w in indeg:
                indeg[w] -= 1
                if indeg[w] == 0:
                    ready.append(w)
    return seen == len(keep)


def _strongly_connected_components(dg: DiGraph) -> list[list[int]]:
    """Tarjan SCC, iterative."""
    n = dg.n
    adj = dg.out_adjacency
    disc = [-1] * n
    low = [0] * n
    on_stack = bytearray(n)
    comp_stack: list[int] = []
    sccs: list[list[int]] = []
    time = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        stack = [[root, 0]]
        disc[root] = low[root] = time
        time += 1
        comp_stack.append(root)
        on_stack[root] = 1
        while stack:
            top = stack[-1]
            v = top[0]
            nbrs = adj[v]
            i = top[1]
            if i < len(nbrs):
                top[1] = i + 1
                w = nbrs[i]
                if disc[w] < 0:
                    disc[w] = low[w] = time
                    time += 1
                    comp_stack.append(w)
                    on_stack[w] = 1
                    stack.append([w, 0])
                elif on_stack[w] and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                stack.pop()
                if stack and low[v] < low[stack[-1][0]]:
                    low[stack[-1][0]] = low[v]
                if low[v] == disc[v]:
                    scc = []
                    while True:
                        w = comp_stack.pop()
                        on_stack[w] = 0
                        scc.append(w)
                        if w == v:
                            break
                    sccs.append(scc)
    return sccs
