"""Two linear-time deciders for entanglement <= 2 on undirected graphs.

The superstructure decider splits the graph into biconnected components plus
isolated vertices, checks that every piece is a molecule (theta or single
vertex), and reassembles an explicit decomposition certificate along the
block-cut forest. A density gate rejects graphs with too many edges before
any structural work, which keeps the whole pass linear.

The traversal decider first rules out simple cycles longer than 4, then
walks each component from a vertex of degree other than 2, growing the set
of glue points. Around a pivot, degree-2 neighbors are consumed as spokes
(their far endpoints become glue), and each remaining unvisited neighbor
claims itself and its unvisited neighbors; any overlap between these claims
is exactly a forbidden pattern, so the walk rejects on first contact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Union

from .algebra import Certificate, Eta, LegalCollapse, Molecule
from .graphs import Graph, _block_vertex_sets, build_graph, connected_components
from .patterns import LongCycle, find_long_cycle


@dataclass(frozen=True, slots=True)
class Superstructure:
    """Biconnected blocks and isolated vertices, with the block-cut forest."""

    articulations: frozenset
    components: tuple  # sorted vertex tuples, ordered by smallest edge
    forest_edges: tuple  # (articulation vertex, component index)


def superstructure(g: Graph) -> Superstructure:
    n = g.n
    adj = g.adjacency
    blocks, arts = _block_vertex_sets(g)
    comps = []
    keys = []
    mark = [-1] * n
    for ep, vs in enumerate(blocks):
        vs.sort()
        comps.append(tuple(vs))
        for w in vs:
            mark[w] = ep
        # deterministic order: the smallest edge inside the component (edges
        # belong to exactly one component, so keys never collide)
        a = vs[0]
        for w in adj[a]:
            if mark[w] == ep:
                keys.append(a * n + w)
                break
    for v in range(n):
        if not adj[v]:  # only degree-0 vertices sit outside every block
            comps.append((v,))
            keys.append(v * n + v)
    order = sorted(range(len(comps)), key=keys.__getitem__)
    components = tuple(comps[i] for i in order)
    is_art = bytearray(n)
    for a in arts:
        is_art[a] = 1
    forest = []
    for ci, comp in enumerate(components):
        for v in comp:
            if is_art[v]:
                forest.append((v, ci))
    return Superstructure(
        articulations=frozenset(arts),
        components=components,
        forest_edges=tuple(forest),
    )


def is_molecule(component: tuple, articulations: frozenset, g: Graph) -> tuple[bool, Optional[Union[Eta, Molecule]]]:
    """Decide whether one superstructure component is a molecule, and name
    it. Hubs are the vertices of degree other than 2 in the full graph plus
    the articulation points; at most two may exist and every other vertex
    must be adjacent to both."""
    if len(component) == 1:
        return True, Eta(vertex=component[0])
    adj = g.adjacency
    if len(component) == 2:
        # a two-vertex block is a single edge, and both endpoints are hubs
        a, b = component
        if not g.has_edge(a, b):
            return False, None
        return True, Molecule(eps=1, hub_a=a, hub_b=b, deads=())
    dset = []  # stays sorted because component is sorted
    for v in component:
        if len(adj[v]) != 2 or v in articulations:
            dset.append(v)
            if len(dset) > 2:
                return False, None
    if len(dset) < 2:
        # bare triangle or square (hub choice must cover the one hub, if any)
        if len(component) == 3:
            a = dset[0] if dset else component[0]
            rest = [v for v in component if v != a]
            b, c = rest
            if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
                hub_a, hub_b = (a, b) if a < b else (b, a)
                return True, Molecule(eps=1, hub_a=hub_a, hub_b=hub_b, deads=(c,))
            return False, None
        if len(component) == 4:
            a = dset[0] if dset else component[0]
            opposite = [v for v in component if v != a and not g.has_edge(a, v)]
            if len(opposite) != 1:
                return False, None
            b = opposite[0]
            deads = tuple(sorted(v for v in component if v != a and v != b))
            if all(g.has_edge(c, a) and g.has_edge(c, b) for c in deads):
                hub_a, hub_b = (a, b) if a < b else (b, a)
                return True, Molecule(eps=0, hub_a=hub_a, hub_b=hub_b, deads=deads)
            return False, None
        return False, None
    hub_a, hub_b = dset
    pair = (hub_a, hub_b)
    deads = []
    # every non-hub has degree exactly 2, so adjacency == both hubs exactly
    for v in component:
        if v == hub_a or v == hub_b:
            continue
        if adj[v] != pair:
            return False, None
        deads.append(v)
    eps = 1 if g.has_edge(hub_a, hub_b) else 0
    if not deads and not eps:
        return False, None  # unreachable: a 2-vertex block is an edge
    return True, Molecule(eps=eps, hub_a=hub_a, hub_b=hub_b, deads=tuple(deads))


@dataclass(frozen=True, slots=True)
class RejectEdgeBound:
    """Too many edges for entanglement 2 (density gate)."""

    n: int
    m: int


@dataclass(frozen=True, slots=True)
class RejectComponent:
    """A superstructure component that is not a molecule."""

    vertices: tuple


@dataclass(frozen=True, slots=True)
class SuperstructureDecision:
    accepted: bool
    certificate: Optional[Certificate]
    reject: Optional[Union[RejectEdgeBound, RejectComponent]]


def decide_superstructure(g: Graph) -> SuperstructureDecision:
    """Entanglement <= 2 iff every superstructure component is a molecule;
    accepts with a decomposition certificate. Linear in the graph size."""
    if g.n > 0 and g.m >= 3 * g.n:
        return SuperstructureDecision(False, None, RejectEdgeBound(n=g.n, m=g.m))
    ss = superstructure(g)
    mols = []
    for comp in ss.components:
        ok, mol = is_molecule(comp, ss.articulations, g)
        if not ok:
            return SuperstructureDecision(False, None, RejectComponent(vertices=comp))
        mols.append(mol)
    return SuperstructureDecision(True, _assemble_certificate(ss, mols), None)


def _assemble_certificate(ss: Superstructure, mols: list) -> Optional[Certificate]:
    """Fold the molecules along the block-cut forest; trees of the forest
    are then chained with edgeless two-hub molecules as bridges."""
    ncomp = len(ss.components)
    if ncomp == 0:
        return None
    arts = sorted(ss.articulations)
    art_node = {a: ncomp + i for i, a in enumerate(arts)}
    total = ncomp + len(arts)
    fadj: list[list[int]] = [[] for _ in range(total)]
    for a, ci in ss.forest_edges:
        ai = art_node[a]
        fadj[ai].append(ci)
        fadj[ci].append(ai)
    for lst in fadj:
        lst.sort()
    visited = bytearray(total)
    parent = [-2] * total  # -2 outside any processed tree, -1 at a root
    cert_at: list = [None] * total
    tree_certs = []
    tree_reps = []
    for start in range(ncomp):
        if visited[start]:
            continue
        nodes = [start]
        visited[start] = 1
        qi = 0
        while qi < len(nodes):
            for y in fadj[nodes[qi]]:
                if not visited[y]:
                    visited[y] = 1
                    nodes.append(y)
            qi += 1
        root = start
        for x in nodes:
            if x >= ncomp and (root < ncomp or x < root):
                root = x  # smallest articulation of the tree, if any
        parent[root] = -1
        order = [root]
        qi = 0
        while qi < len(order):
            x = order[qi]
            qi += 1
            for y in fadj[x]:
                if parent[y] == -2:
                    parent[y] = x
                    order.append(y)
        for x in reversed(order):
            px = parent[x]
            if x < ncomp:
                acc: Certificate = mols[x]
                for y in fadj[x]:
                    if y != px:
                        acc = LegalCollapse(point=arts[y - ncomp], left=acc, right=cert_at[y])
            else:
                a = arts[x - ncomp]
                acc = None
                for y in fadj[x]:
                    if y != px:
                        acc = cert_at[y] if acc is None else LegalCollapse(point=a, left=acc, right=cert_at[y])
            cert_at[x] = acc
        tree_certs.append(cert_at[root])
        if root >= ncomp:
            rep = arts[root - ncomp]
        else:
            mol = mols[start]
            rep = mol.vertex if isinstance(mol, Eta) else mol.hub_a
        tree_reps.append(rep)
    acc = tree_certs[0]
    anchor = tree_reps[0]
    for cert, rep in zip(tree_certs[1:], tree_reps[1:]):
        bridge = Molecule(eps=0, hub_a=anchor, hub_b=rep, deads=())
        acc = LegalCollapse(point=rep, left=LegalCollapse(point=anchor, left=acc, right=bridge), right=cert)
    return acc


@dataclass(frozen=True, slots=True)
class GlueOverlap:
    """Two glue-point claims met at `vertex` while expanding `pivot`."""

    pivot: int
    vertex: int


@dataclass(frozen=True, slots=True)
class TraversalDecision:
    accepted: bool
    reject: Optional[Union[LongCycle, GlueOverlap]]


def decide_glue_traversal(g: Graph) -> TraversalDecision:
    """Entanglement <= 2 by glue-point traversal: reject long cycles, then
    walk glue points outward from a degree-unequal-2 root per component.
    Linear in the graph size."""
    lc = find_long_cycle(g, 4)
    if lc is not None:
        return TraversalDecision(False, lc)
    adj = g.adjacency
    color = bytearray(g.n)
    stamp = [0] * g.n
    kind = bytearray(g.n)  # per-epoch: 1 spoke-glue, 2 branch, 3 satellite
    epoch = 0
    for comp in connected_components(g):
        root = -1
        for v in comp:
            if len(adj[v]) != 2:
                root = v
                break
        if root < 0:
            # a bare cycle; it is short (no long cycle survived), so fine
            for v in comp:
                color[v] = 1
            continue
        stack = [root]
        while stack:
            v = stack.pop()
            if color[v]:
                continue
            color[v] = 1
            epoch += 1
            glues = []
            for x in adj[v]:
                if color[x] == 0 and len(adj[x]) == 2:
                    color[x] = 1  # spoke consumed; its far end is glue
                    ax = adj[x]
                    y = ax[1] if ax[0] == v else ax[0]
                    if stamp[y] != epoch:
                        stamp[y] = epoch
                        kind[y] = 1
                        glues.append(y)
            for x in adj[v]:
                if color[x] == 0 and len(adj[x]) != 2:
                    if stamp[x] == epoch:
                        if kind[x] == 1:
                            continue  # already glued through a spoke
                        return TraversalDecision(False, GlueOverlap(pivot=v, vertex=x))
                    stamp[x] = epoch
                    kind[x] = 2
                    for y in adj[x]:
                        if color[y] == 0:
                            if stamp[y] == epoch:
                                return TraversalDecision(False, GlueOverlap(pivot=v, vertex=y))
                            stamp[y] = epoch
                            kind[y] = 3
                    glues.append(x)
            for i in range(len(glues) - 1, -1, -1):
                stack.append(glues[i])
    return TraversalDecision(True, None)


@dataclass(frozen=True, slots=True)
class GlueFamily:
    """Definitional glue-point claims around one pivot, untouched by
    traversal state: far ends of spokes, branch vertices, and each branch's
    satellite tuple."""

    s2: tuple
    sn2: tuple
    satellites: tuple


def glue_family(g: Graph, v: int) -> tuple[GlueFamily, bool]:
    """The claims around v and whether they are pairwise disjoint (counted
    as an indexed family: repeated satellite sets do overlap)."""
    adj = g.adjacency
    s2 = set()
    sn2 = []
    sats = []
    for x in adj[v]:
        ax = adj[x]
        if len(ax) == 2:
            s2.add(ax[1] if ax[0] == v else ax[0])
        else:
            sn2.append(x)
            sats.append(tuple(y for y in ax if y != v))
    total = len(s2) + sum(1 + len(s) for s in sats)
    union = set(s2)
    for x, s in zip(sn2, sats):
        union.add(x)
        union.update(s)
    fam = GlueFamily(s2=tuple(sorted(s2)), sn2=tuple(sn2), satellites=tuple(sats))
    return fam, total == len(union)


def generate_zeta2(seed: int, molecules: int, max_dead: int = 6) -> tuple[Graph, Optional[Certificate]]:
    """Random member of the decomposable class with its certificate: theta
    molecules collapsed one by one at uniformly chosen glue points. Fresh
    vertex ids stay dense, so the certificate evaluates to the graph."""
    if molecules < 0:
        raise ValueError(f"molecule count must be nonnegative, got {molecules}")
    if max_dead < 0:
        raise ValueError(f"max dead count must be nonnegative, got {max_dead}")
    rng = random.Random(seed)
    shapes = [(e, d) for e in (0, 1) for d in range(max_dead + 1) if (e, d) != (0, 1)]
    cert: Optional[Certificate] = None
    glue_pool: list[int] = []
    nxt = 0
    edges = []
    for _ in range(molecules):
        eps, n_dead = shapes[rng.randrange(len(shapes))]
        if cert is None:
            a = nxt
            b = nxt + 1
            deads = tuple(range(nxt + 2, nxt + 2 + n_dead))
            nxt += 2 + n_dead
            mol = Molecule(eps=eps, hub_a=a, hub_b=b, deads=deads)
            cert = mol
            glue_pool.append(a)
            glue_pool.append(b)
        else:
            a = glue_pool[rng.randrange(len(glue_pool))]
            b = nxt
            deads = tuple(range(nxt + 1, nxt + 1 + n_dead))
            nxt += 1 + n_dead
            mol = Molecule(eps=eps, hub_a=a, hub_b=b, deads=deads)
            cert = LegalCollapse(point=a, left=cert, right=mol)
            glue_pool.append(b)
        if eps:
            edges.append((min(mol.hub_a, mol.hub_b), max(mol.hub_a, mol.hub_b)))
        for c in mol.deads:
            edges.append((min(mol.hub_a, c), max(mol.hub_a, c)))
            edges.append((min(mol.hub_b, c), max(mol.hub_b, c)))
    return build_graph(nxt, edges), cert
