"""Algebraic decomposition certificates for graphs of entanglement <= 2.

The building blocks are molecules: a theta molecule has two hub vertices, an
optional hub-hub edge, and any number of dead vertices adjacent to exactly
both hubs; its glue points are the hubs. A single-vertex molecule (eta) is
its own glue point. A legal collapse merges two vertex-disjoint parts at one
shared glue vertex, and the glue set of the result is the union of the glue
sets. A graph has entanglement <= 2 iff it is the value of such a
certificate (with every vertex id used exactly once).

Certificates carry explicit vertex ids and serialize to a bracketed text
form, e.g. "(collapse 1 (theta 1 0 0 1 []) (theta 1 0 1 2 []))" for a path
on vertices 0, 1, 2. Evaluation, verification, parsing and formatting are
all iterative: certificate chains can be millions of nodes deep.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .graphs import Graph, build_graph


class CertificateError(ValueError):
    """A certificate is malformed or violates a collapse legality rule."""


@dataclass(frozen=True, slots=True)
class GlueGraph:
    """A graph together with its distinguished glue vertices."""

    graph: Graph
    glue: frozenset


class Eta(NamedTuple):
    """Single-vertex molecule; the vertex itself is the glue point."""

    vertex: int


class Molecule(NamedTuple):
    """Theta molecule: hubs a and b, eps in {0,1} for the hub-hub edge, and
    dead vertices adjacent to exactly both hubs. Glue points are the hubs.

    Certificate nodes are plain named tuples so that million-node chains
    stay cheap; structural validation happens when a certificate is parsed
    or evaluated, not at construction.
    """

    eps: int
    hub_a: int
    hub_b: int
    deads: tuple[int, ...]


class LegalCollapse(NamedTuple):
    """Merge of two parts sharing exactly the glue vertex `point`."""

    point: int
    left: "Certificate"
    right: "Certificate"


Certificate = Union[Eta, Molecule, LegalCollapse]


def _validate_molecule(mol: Molecule) -> None:
    if mol.eps not in (0, 1):
        raise CertificateError(f"eps must be 0 or 1, got {mol.eps}")
    ids = (mol.hub_a, mol.hub_b) + mol.deads
    if min(ids) < 0:
        raise CertificateError("negative vertex id in molecule")
    if len(set(ids)) != len(ids):
        raise CertificateError(f"molecule vertices are not distinct: {ids}")


def make_molecule(eps: int, n_dead: int) -> GlueGraph:
    """Standalone theta molecule as a glue graph: hubs 0 and 1 (the glue
    points), dead vertices 2..n_dead+1, so deg(hub) = eps + n_dead."""
    if n_dead < 0:
        raise ValueError(f"dead count must be nonnegative, got {n_dead}")
    mol = Molecule(eps=eps, hub_a=0, hub_b=1, deads=tuple(range(2, 2 + n_dead)))
    vset, eset, glue = _molecule_raw(mol)
    return GlueGraph(graph=build_graph(len(vset), sorted(eset)), glue=frozenset(glue))


def _molecule_raw(mol: Molecule) -> tuple[set, set, set]:
    _validate_molecule(mol)
    a, b = mol.hub_a, mol.hub_b
    vset = {a, b}
    eset = set()
    if mol.eps:
        eset.add((a, b) if a < b else (b, a))
    for c in mol.deads:
        vset.add(c)
        eset.add((a, c) if a < c else (c, a))
        eset.add((b, c) if b < c else (c, b))
    return vset, eset, {a, b}


def _merge(point: int, left: tuple[set, set, set], right: tuple[set, set, set]) -> tuple[set, set, set]:
    lv, le, lg = left
    rv, re_, rg = right
    if point not in lg or point not in rg:
        raise CertificateError(f"collapse point {point} is not a glue vertex on both sides")
    small, big = (lv, rv) if len(lv) <= len(rv) else (rv, lv)
    for x in small:
        if x != point and x in big:
            raise CertificateError(f"collapsed parts share vertex {x} besides the collapse point {point}")
    # union smaller into bigger per field; chains stay near-linear
    if len(lv) < len(rv):
        rv |= lv
        re_ |= le
        rg |= lg
        return rv, re_, rg
    lv |= rv
    le |= re_
    lg |= rg
    return lv, le, lg


def _evaluate_raw(cert: Certificate) -> tuple[set, set, set]:
    """Vertex set, edge set and glue set of a certificate, checking every
    collapse for legality. Raises CertificateError on violation."""
    stack: list[tuple[Certificate, bool]] = [(cert, False)]
    values: list[tuple[set, set, set]] = []
    while stack:
        node, ready = stack.pop()
        if isinstance(node, Eta):
            if node.vertex < 0:
                raise CertificateError(f"negative vertex id {node.vertex}")
            values.append(({node.vertex}, set(), {node.vertex}))
        elif isinstance(node, Molecule):
            values.append(_molecule_raw(node))
        elif isinstance(node, LegalCollapse):
            if ready:
                right = values.pop()
                left = values.pop()
                values.append(_merge(node.point, left, right))
            else:
                stack.append((node, True))
                stack.append((node.right, False))
                stack.append((node.left, False))
        else:
            raise CertificateError(f"unknown certificate node: {node!r}")
    if len(values) != 1:
        raise AssertionError("certificate evaluation lost track of its parts")
    return values[0]


def evaluate_certificate(cert: Optional[Certificate]) -> GlueGraph:
    """Build the glue graph a certificate denotes. Vertex ids must be dense
    (exactly 0..n-1)."""
    if cert is None:
        return GlueGraph(graph=build_graph(0, []), glue=frozenset())
    vset, eset, glue = _evaluate_raw(cert)
    n = len(vset)
    if vset != set(range(n)):
        raise CertificateError("certificate vertex ids are not dense 0..n-1")
    return GlueGraph(graph=build_graph(n, sorted(eset)), glue=frozenset(glue))


def verify_certificate(cert: Optional[Certificate], g: Graph) -> tuple[bool, Optional[str]]:
    """Check that a certificate is internally legal and denotes exactly g."""
    if cert is None:
        if g.n == 0:
            return True, None
        return False, "vertex-set mismatch: empty certificate for a nonempty graph"
    try:
        vset, eset, _ = _evaluate_raw(cert)
    except CertificateError as exc:
        return False, str(exc)
    if vset != set(range(g.n)):
        return False, "vertex-set mismatch"
    if eset != set(g.edges()):
        return False, "edge-set mismatch"
    return True, None


def collapse(g1: Graph, a1: int, g2: Graph, a2: int) -> tuple[Graph, dict, dict]:
    """Disjoint union of g1 and g2 with a1 and a2 identified. Returns the
    result and the vertex maps of both operands into it (g1 keeps its ids)."""
    if not 0 <= a1 < g1.n or not 0 <= a2 < g2.n:
        raise ValueError("collapse vertex out of range")
    map1 = {v: v for v in range(g1.n)}
    map2 = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == a2:
            map2[v] = a1
        else:
            map2[v] = nxt
            nxt += 1
    edges = list(g1.edges())
    for u, v in g2.edges():
        mu, mv = map2[u], map2[v]
        edges.append((mu, mv) if mu < mv else (mv, mu))
    return build_graph(nxt, edges), map1, map2


def legal_collapse(gg1: GlueGraph, z1: int, gg2: GlueGraph, z2: int) -> GlueGraph:
    """Collapse two glue graphs at glue vertices z1, z2; glue accumulates."""
    if z1 not in gg1.glue:
        raise CertificateError(f"{z1} is not a glue vertex of the left part")
    if z2 not in gg2.glue:
        raise CertificateError(f"{z2} is not a glue vertex of the right part")
    merged, map1, map2 = collapse(gg1.graph, z1, gg2.graph, z2)
    glue = {map1[v] for v in gg1.glue} | {map2[v] for v in gg2.glue}
    return GlueGraph(graph=merged, glue=frozenset(glue))


@dataclass(frozen=True, slots=True)
class DerivedGraph:
    """The relation induced on the glue points: an edge when two glue points
    are adjacent or share a non-glue common neighbor. non_glue records, per
    vertex outside the glue set, its neighbor count and whether every
    neighbor is a glue point."""

    edges: frozenset
    non_glue: tuple  # (vertex, neighbor count, all neighbors glue) triples


def derived_graph(gg: GlueGraph) -> DerivedGraph:
    glue = gg.glue
    adj = gg.graph.adjacency
    edges = set()
    non_glue = []
    for v in range(gg.graph.n):
        nbrs = adj[v]
        if v in glue:
            for x in nbrs:
                if x > v and x in glue:
                    edges.add((v, x))
            continue
        all_glue = all(x in glue for x in nbrs)
        non_glue.append((v, len(nbrs), all_glue))
        if len(nbrs) == 2 and all_glue:
            p, q = nbrs
            edges.add((p, q) if p < q else (q, p))
    return DerivedGraph(edges=frozenset(edges), non_glue=tuple(non_glue))


def is_zeta2_glue(gg: GlueGraph) -> tuple[bool, Optional[str]]:
    """Glue-graph membership test: every non-glue vertex must be dead-shaped
    (exactly two neighbors, both glue) and the derived graph on the glue
    points must be a forest."""
    dg = derived_graph(gg)
    for v, count, all_glue in dg.non_glue:
        if count != 2:
            return False, f"non-glue vertex {v} has {count} neighbors, not 2"
        if not all_glue:
            return False, f"non-glue vertex {v} has a non-glue neighbor"
    parent = {v: v for v in gg.glue}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in sorted(dg.edges):
        ru, rv = find(u), find(v)
        if ru == rv:
            return False, f"derived graph has a cycle through the edge {u}-{v}"
        parent[ru] = rv
    return True, None


def format_certificate(cert: Optional[Certificate]) -> str:
    """Bracketed text form; empty string for the empty certificate."""
    if cert is None:
        return ""
    out: list[str] = []
    stack: list = [cert]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
        elif isinstance(item, Eta):
            out.append(f"(eta {item.vertex})")
        elif isinstance(item, Molecule):
            deads = " ".join(str(c) for c in item.deads)
            out.append(f"(theta {item.eps} {len(item.deads)} {item.hub_a} {item.hub_b} [{deads}])")
        elif isinstance(item, LegalCollapse):
            out.append(f"(collapse {item.point} ")
            stack.append(")")
            stack.append(item.right)
            stack.append(" ")
            stack.append(item.left)
        else:
            raise CertificateError(f"unknown certificate node: {item!r}")
    return "".join(out)


def parse_certificate(text: str) -> Optional[Certificate]:
    """Parse the bracketed text form; empty or whitespace-only text is the
    empty certificate."""
    for ch in "()[]":
        text = text.replace(ch, f" {ch} ")
    tokens = text.split()
    if not tokens:
        return None
    pos = 0

    def take() -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise CertificateError("unexpected end of certificate text")
        tok = tokens[pos]
        pos += 1
        return tok

    def expect(want: str) -> None:
        tok = take()
        if tok != want:
            raise CertificateError(f"expected {want!r}, got {tok!r}")

    def take_int() -> int:
        tok = take()
        try:
            return int(tok)
        except ValueError:
            raise CertificateError(f"expected an integer, got {tok!r}") from None

    frames: list[list] = []  # [collapse point, left child or None]
    while True:
        expect("(")
        head = take()
        if head == "collapse":
            frames.append([take_int(), None])
            continue
        if head == "eta":
            node: Certificate = Eta(vertex=take_int())
            expect(")")
            if node.vertex < 0:
                raise CertificateError(f"negative vertex id {node.vertex}")
        elif head == "theta":
            eps = take_int()
            n_dead = take_int()
            a = take_int()
            b = take_int()
            expect("[")
            deads = []
            while True:
                tok = take()
                if tok == "]":
                    break
                try:
                    deads.append(int(tok))
                except ValueError:
                    raise CertificateError(f"expected an integer, got {tok!r}") from None
            expect(")")
            if len(deads) != n_dead:
                raise CertificateError(f"theta lists {len(deads)} dead vertices but declares {n_dead}")
            node = Molecule(eps=eps, hub_a=a, hub_b=b, deads=tuple(deads))
            _validate_molecule(node)
        else:
            raise CertificateError(f"unknown certificate form {head!r}")
        while frames:
            frame = frames[-1]
            if frame[1] is None:
                frame[1] = node
                break
            expect(")")
            node = LegalCollapse(point=frame[0], left=frame[1], right=node)
            frames.pop()
        else:
            if pos != len(tokens):
                raise CertificateError("trailing text after certificate")
            return node
