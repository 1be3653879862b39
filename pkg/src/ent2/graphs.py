"""Graph containers and deterministic traversals.

Undirected graphs are simple (no self-loops, no duplicate edges) with dense
0-based vertex ids and sorted adjacency. Directed graphs allow self-loops.
All traversals visit neighbors in adjacency order and are iterative, so they
are safe on inputs with millions of vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


class GraphError(ValueError):
    """Edge input violates well-formedness (range, self-loop, duplicate)."""


class GraphFormatError(GraphError):
    """Graph text cannot be parsed; carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    adjacency[v] is the sorted tuple of neighbors of v; every edge appears in
    both endpoint lists. m counts undirected edges.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.adjacency[u]
        lo, hi = 0, len(nbrs)
        while lo < hi:
            mid = (lo + hi) // 2
            if nbrs[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(nbrs) and nbrs[lo] == v


@dataclass(frozen=True, slots=True)
class DiGraph:
    """Directed graph on vertices 0..n-1; self-loops permitted.

    out_adjacency[v] is the sorted tuple of successors of v. m counts arcs.
    """

    n: int
    out_adjacency: tuple[tuple[int, ...], ...]
    m: int


@dataclass(frozen=True, slots=True)
class TwBE:
    """DFS tree with back edges for the component of root.

    tree_parent and depth are None outside the root's component. Back edges
    are (descendant, ancestor) pairs; the ancestor is always proper and not
    the parent, so depth[d] - depth[a] >= 2 and every back-edge cycle has
    length at least 3. vertex_order is discovery order.
    """

    root: int
    tree_parent: tuple[Optional[int], ...]
    depth: tuple[Optional[int], ...]
    back_edges: tuple[tuple[int, int], ...]
    vertex_order: tuple[int, ...]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build an undirected Graph.

    Raises GraphError naming the offending pair on an out-of-range endpoint,
    a self-loop, or a duplicate edge (in either orientation).
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    m = 0
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphError(f"duplicate edge ({key[0]}, {key[1]})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
        m += 1
    for lst in adj:
        lst.sort()
    return Graph(n=n, adjacency=tuple(map(tuple, adj)), m=m)


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> DiGraph:
    """Validate and build a DiGraph. Self-loops are legal, duplicates are not."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen: set[tuple[int, int]] = set()
    m = 0
    for u, v in arcs:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"arc ({u}, {v}) out of range for n={n}")
        if (u, v) in seen:
            raise GraphError(f"duplicate arc ({u}, {v})")
        seen.add((u, v))
        adj[u].append(v)
        m += 1
    for lst in adj:
        lst.sort()
    return DiGraph(n=n, out_adjacency=tuple(map(tuple, adj)), m=m)


def symmetrize(g: Graph) -> DiGraph:
    """Embed an undirected graph as a digraph with both arc orientations."""
    return DiGraph(n=g.n, out_adjacency=g.adjacency, m=2 * g.m)


def degree(g: Graph, v: int) -> int:
    """Number of neighbors of v."""
    return len(g.adjacency[v])


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by `vertices`, plus the old-id -> new-id mapping.

    New ids are assigned in ascending order of old ids.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    mapping = {old: new for new, old in enumerate(keep)}
    edges = []
    for old in keep:
        u = mapping[old]
        for w in g.adjacency[old]:
            if w > old and w in mapping:
                edges.append((u, mapping[w]))
    return build_graph(len(keep), edges), mapping


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Connected components as sorted vertex tuples, ordered by smallest member.

    The empty graph has no components.
    """
    n = g.n
    seen = bytearray(n)
    comps: list[tuple[int, ...]] = []
    adj = g.adjacency
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    stack.append(w)
        comp.sort()
        comps.append(tuple(comp))
    return comps


def dfs_twbe(g: Graph, root: int) -> TwBE:
    """Depth-first tree with back edges, restricted to root's component.

    Neighbors are expanded in adjacency order. Each non-tree edge is reported
    once, from its descendant endpoint.
    """
    n = g.n
    if not (0 <= root < n):
        raise GraphError(f"root {root} out of range for n={n}")
    adj = g.adjacency
    parent: list[Optional[int]] = [None] * n
    depth: list[Optional[int]] = [None] * n
    disc = [-1] * n
    order = [root]
    back: list[tuple[int, int]] = []
    disc[root] = 0
    depth[root] = 0
    time = 1
    stack = [[root, 0]]
    while stack:
        top = stack[-1]
        v = top[0]
        nbrs = adj[v]
        i = top[1]
        dv = depth[v]
        if i < len(nbrs):
            top[1] = i + 1
            w = nbrs[i]
            if disc[w] < 0:
                disc[w] = time
                time += 1
                parent[w] = v
                depth[w] = dv + 1
                order.append(w)
                stack.append([w, 0])
            elif w != parent[v] and disc[w] < disc[v]:
                back.append((v, w))
        else:
            stack.pop()
    return TwBE(
        root=root,
        tree_parent=tuple(parent),
        depth=tuple(depth),
        back_edges=tuple(back),
        vertex_order=tuple(order),
    )


def parse_graph(text: str) -> Graph:
    """Parse the graph text format.

    Line 1 is `n m`; the next m non-comment lines are `u v` edges. Lines
    starting with `#` and blank lines are ignored. Errors carry the 1-based
    line number of the offending line.
    """
    header: Optional[tuple[int, int, int]] = None  # (n, m, line_no)
    edges: list[tuple[int, int]] = []
    edge_seen: set[tuple[int, int]] = set()
    last_line = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphFormatError(line_no, f"expected header 'n m', got {raw!r}")
            try:
                n, m = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphFormatError(line_no, f"expected integers in header, got {raw!r}") from None
            if n < 0 or m < 0:
                raise GraphFormatError(line_no, f"header values must be nonnegative, got {raw!r}")
            header = (n, m, line_no)
            continue
        n, m, _ = header
        if len(edges) >= m:
            raise GraphFormatError(line_no, f"more than the declared {m} edge lines")
        if len(fields) != 2:
            raise GraphFormatError(line_no, f"expected edge 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(line_no, f"expected integer endpoints, got {raw!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(line_no, f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphFormatError(line_no, f"edge ({u}, {v}) is a self-loop")
        key = (u, v) if u < v else (v, u)
        if key in edge_seen:
            raise GraphFormatError(line_no, f"duplicate edge ({key[0]}, {key[1]})")
        edge_seen.add(key)
        edges.append((u, v))
    if header is None:
        raise GraphFormatError(last_line or 1, "missing 'n m' header line")
    n, m, header_line = header
    if len(edges) != m:
        raise GraphFormatError(last_line or header_line, f"expected {m} edge lines, found {len(edges)}")
    return build_graph(n, edges)


def parse_digraph(text: str) -> DiGraph:
    """Parse the graph text format with each line `u v` read as an arc u -> v."""
    header: Optional[tuple[int, int]] = None
    arcs: list[tuple[int, int]] = []
    arc_seen: set[tuple[int, int]] = set()
    last_line = 0
    declared = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        last_line = line_no
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphFormatError(line_no, f"expected header 'n m', got {raw!r}")
            try:
                n, declared = int(fields[0]), int(fields[1])
            except ValueError:
                raise GraphFormatError(line_no, f"expected integers in header, got {raw!r}") from None
            if n < 0 or declared < 0:
                raise GraphFormatError(line_no, f"header values must be nonnegative, got {raw!r}")
            header = (n, declared)
            continue
        n, _ = header
        if len(arcs) >= declared:
            raise GraphFormatError(line_no, f"more than the declared {declared} arc lines")
        if len(fields) != 2:
            raise GraphFormatError(line_no, f"expected arc 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(line_no, f"expected integer endpoints, got {raw!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(line_no, f"arc ({u}, {v}) out of range for n={n}")
        if (u, v) in arc_seen:
            raise GraphFormatError(line_no, f"duplicate arc ({u}, {v})")
        arc_seen.add((u, v))
        arcs.append((u, v))
    if header is None:
        raise GraphFormatError(last_line or 1, "missing 'n m' header line")
    if len(arcs) != header[1]:
        raise GraphFormatError(last_line or 1, f"expected {header[1]} arc lines, found {len(arcs)}")
    return build_digraph(header[0], arcs)


def format_graph(g: Graph) -> str:
    """Render a graph in the text format; output re-parses to an equal graph."""
    lines = [f"{g.n} {g.m}"]
    for u in range(g.n):
        for v in g.adjacency[u]:
            if u < v:
                lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def format_digraph(dg: DiGraph) -> str:
    """Render a digraph in the text format, one line per arc."""
    lines = [f"{dg.n} {dg.m}"]
    for u in range(dg.n):
        for v in dg.out_adjacency[u]:
            lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def biconnected_components(g: Graph) -> tuple[list[list[tuple[int, int]]], set[int]]:
    """Biconnected components as edge lists, plus the articulation set.

    Isolated vertices yield no component here; callers that need singleton
    components add them from the degree-0 vertices. Iterative, O(n + m).
    """
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    blocks: list[list[tuple[int, int]]] = []
    arts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    push_edge = edge_stack.append
    for root in range(n):
        if disc[root] >= 0 or not adj[root]:
            continue
        disc[root] = low[root] = 0
        time = 1
        root_children = 0
        stack = [(root, iter(adj[root]))]
        stack_push = stack.append
        while stack:
            v, it = stack[-1]
            dv = disc[v]
            pv = parent[v]
            for w in it:
                dw = disc[w]
                if dw < 0:
                    parent[w] = v
                    disc[w] = low[w] = time
                    time += 1
                    push_edge((v, w))
                    stack_push((w, iter(adj[w])))
                    break
                if w != pv and dw < dv:
                    push_edge((v, w))
                    if dw < low[v]:
                        low[v] = dw
            else:
                stack.pop()
                if pv < 0:
                    continue
                lv = low[v]
                if lv < low[pv]:
                    low[pv] = lv
                if lv >= disc[pv]:
                    # edges above (pv, v) form one block
                    block = []
                    cut = (pv, v)
                    while True:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == cut:
                            break
                    blocks.append(block)
                    if pv == root:
                        root_children += 1
                    else:
                        arts.add(pv)
        if root_children >= 2:
            arts.add(root)
    return blocks, arts


def _block_vertex_sets(g: Graph) -> tuple[list[list[int]], set[int]]:
    """Biconnected components as vertex lists, plus the articulation set.

    Same traversal as biconnected_components but stacks vertices instead of
    edges: when a child v of pv satisfies low[v] >= disc[pv], the vertices
    stacked after v (inclusive) plus pv are exactly one block. Skipping the
    per-edge stack keeps the constant factor down on large inputs.
    """
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    blocks: list[list[int]] = []
    arts: set[int] = set()
    vstack: list[int] = []
    push_vertex = vstack.append
    pop_vertex = vstack.pop
    for root in range(n):
        if disc[root] >= 0 or not adj[root]:
            continue
        disc[root] = low[root] = 0
        time = 1
        root_children = 0
        vstack.clear()
        push_vertex(root)
        stack = [(root, iter(adj[root]))]
        stack_push = stack.append
        while stack:
            v, it = stack[-1]
            dv = disc[v]
            pv = parent[v]
            for w in it:
                dw = disc[w]
                if dw < 0:
                    parent[w] = v
                    disc[w] = low[w] = time
                    time += 1
                    push_vertex(w)
                    stack_push((w, iter(adj[w])))
                    break
                if w != pv and dw < dv and dw < low[v]:
                    low[v] = dw
            else:
                stack.pop()
                if pv < 0:
                    continue
                lv = low[v]
                if lv < low[pv]:
                    low[pv] = lv
                if lv >= disc[pv]:
                    block = [pv]
                    while True:
                        x = pop_vertex()
                        block.append(x)
                        if x == v:
                            break
                    blocks.append(block)
                    if pv == root:
                        root_children += 1
                    else:
                        arts.add(pv)
        if root_children >= 2:
            arts.add(root)
    return blocks, arts
