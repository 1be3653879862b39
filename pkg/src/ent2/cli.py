"""Command-line interface.

Subcommands: decide (linear recognition of entanglement <= 2), entanglement
(exact value by game solving, small graphs), check (the three structural
conditions with witnesses), decompose (emit a decomposition certificate),
superstructure (articulation points and biconnected components), verify
(check a certificate against a graph), gen (sample graphs), and crosscheck
(agreement between all deciders and the game oracle).

Exit codes: 0 for yes/valid/agreement, 1 for no/invalid/disagreement, 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Optional

from .algebra import (
    CertificateError,
    format_certificate,
    make_molecule,
    parse_certificate,
    verify_certificate,
)
from .decider import (
    decide_glue_traversal,
    decide_superstructure,
    generate_zeta2,
    superstructure,
)
from .game import entanglement, solve_game
from .graphs import (
    Graph,
    GraphFormatError,
    build_graph,
    format_digraph,
    format_graph,
    parse_digraph,
    parse_graph,
)
from .patterns import (
    LongCycle,
    SquareAC,
    Triangle3C,
    check_conditions,
    find_3c_violation,
    find_ac_violation,
    find_long_cycle,
)

GAME_SIZE_LIMIT = 16


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        _write_text(out, text)


def _witness_parts(witness, g: Graph) -> tuple[str, str]:
    """Split a structural witness into (kind, payload), re-validating it
    against the graph first; printing an invalid witness is a bug."""
    if isinstance(witness, LongCycle):
        vs = witness.vertices
        assert len(vs) >= 5 and len(set(vs)) == len(vs)
        assert all(g.has_edge(vs[i - 1], vs[i]) for i in range(len(vs)))
        return "long-cycle", " ".join(str(v) for v in vs)
    if isinstance(witness, Triangle3C):
        a, b, c = witness.vertices
        assert len({a, b, c}) == 3
        assert g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
        assert all(len(g.adjacency[v]) >= 3 for v in (a, b, c))
        return "triangle", f"{a} {b} {c}"
    if isinstance(witness, SquareAC):
        vs = witness.vertices
        u, v = witness.pair
        assert len(set(vs)) == 4
        assert all(g.has_edge(vs[i - 1], vs[i]) for i in range(4))
        assert {u, v} in ({vs[i - 1], vs[i]} for i in range(4))
        assert len(g.adjacency[u]) > 2 and len(g.adjacency[v]) > 2
        return "square", " ".join(str(x) for x in vs) + f" pair {u} {v}"
    raise AssertionError(f"unknown witness {witness!r}")


def _structural_witness_line(g: Graph) -> str:
    """Witness line for a rejected graph, derived from the failing condition
    (the deciders' internal reject reasons are less descriptive)."""
    verdict = check_conditions(g)
    assert verdict.witness is not None, "rejected graph passes all conditions"
    kind, payload = _witness_parts(verdict.witness, g)
    return f"{kind}: {payload}"


def _cmd_decide(args) -> int:
    g = parse_graph(_read_text(args.graph))
    if args.method == "superstructure":
        accepted = decide_superstructure(g).accepted
    elif args.method == "traversal":
        accepted = decide_glue_traversal(g).accepted
    else:
        verdict = check_conditions(g)
        accepted = verdict.cs_ok and verdict.no3c_ok and verdict.noac_ok
    if accepted:
        print("YES")
        return 0
    print("NO")
    print(_structural_witness_line(g))
    return 1


def _cmd_entanglement(args) -> int:
    if args.directed:
        g = parse_digraph(_read_text(args.graph))
    else:
        g = parse_graph(_read_text(args.graph))
    if g.n > GAME_SIZE_LIMIT and not args.force:
        print(
            f"error: {g.n} vertices exceed the game-solver limit of "
            f"{GAME_SIZE_LIMIT}; pass --force to try anyway",
            file=sys.stderr,
        )
        return 2
    if args.max_k is not None:
        for k in range(args.max_k + 1):
            if solve_game(g, k).cops_win_game:
                print(k)
                return 0
        print(f"> {args.max_k}")
        return 1
    print(entanglement(g))
    return 0


def _cmd_check(args) -> int:
    g = parse_graph(_read_text(args.graph))
    lc = find_long_cycle(g, 4)
    tri = find_3c_violation(g)
    sq = find_ac_violation(g)

    def report(label: str, witness) -> None:
        if witness is None:
            print(f"{label}: ok")
        else:
            kind, payload = _witness_parts(witness, g)
            print(f"{label}: FAIL {kind} {payload}")

    report("CS", lc)
    report("No-3C", tri)
    report("No-AC", sq)
    return 0 if lc is None and tri is None and sq is None else 1


def _cmd_decompose(args) -> int:
    g = parse_graph(_read_text(args.graph))
    decision = decide_superstructure(g)
    if not decision.accepted:
        print(_structural_witness_line(g), file=sys.stderr)
        return 1
    text = format_certificate(decision.certificate)
    _emit(text + "\n" if text else "", args.out)
    return 0


def _cmd_superstructure(args) -> int:
    g = parse_graph(_read_text(args.graph))
    ss = superstructure(g)
    arts = " ".join(str(a) for a in sorted(ss.articulations))
    print("articulations:" + (" " + arts if arts else ""))
    for comp in ss.components:
        print("component: " + " ".join(str(v) for v in comp))
    return 0


def _cmd_verify(args) -> int:
    try:
        cert = parse_certificate(_read_text(args.certificate))
    except CertificateError as exc:
        print(f"certificate error: {exc}", file=sys.stderr)
        return 2
    g = parse_graph(_read_text(args.graph))
    ok, reason = verify_certificate(cert, g)
    if ok:
        print("VALID")
        return 0
    print(f"INVALID {reason}")
    return 1


def _cmd_gen(args) -> int:
    if args.kind == "cycle":
        if args.size < 3:
            print("error: a cycle needs at least 3 vertices", file=sys.stderr)
            return 2
        n = args.size
        g = build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    elif args.kind == "star":
        if args.size < 1:
            print("error: a star needs at least 1 leaf", file=sys.stderr)
            return 2
        g = build_graph(args.size + 1, [(0, i) for i in range(1, args.size + 1)])
    elif args.kind == "theta":
        if args.eps not in (0, 1) or args.deads < 0:
            print("error: theta takes eps in {0,1} and a nonnegative dead count", file=sys.stderr)
            return 2
        g = make_molecule(args.eps, args.deads).graph
    elif args.kind == "threec":
        g = build_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
    elif args.kind == "ac":
        g = build_graph(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 5)])
    else:  # zeta2
        g, _ = generate_zeta2(args.seed, args.molecules, args.max_dead)
    _emit(format_graph(g), args.out)
    return 0


def sample_mixed_graph(rng: random.Random, n: int) -> Graph:
    """Random graph mixing sparse noise with planted patterns (long cycles,
    triangles with pendants, squares with pendants, decomposable cores), so
    agreement checks see both members and near-members of the class."""
    edges = set()

    def add(u: int, v: int) -> None:
        if u != v:
            edges.add((u, v) if u < v else (v, u))

    if n < 2:
        return build_graph(n, [])
    mode = rng.randrange(6)
    if mode in (0, 5):
        p = (2.5 if mode == 0 else 1.2) / n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    add(u, v)
    elif mode == 1:
        vs = rng.sample(range(n), min(6, n))
        if len(vs) >= 3:
            add(vs[0], vs[1])
            add(vs[1], vs[2])
            add(vs[0], vs[2])
            for i in range(3, len(vs)):
                add(vs[i - 3], vs[i])
        for _ in range(n // 2):
            add(rng.randrange(n), rng.randrange(n))
    elif mode == 2:
        vs = rng.sample(range(n), min(6, n))
        if len(vs) >= 4:
            add(vs[0], vs[1])
            add(vs[1], vs[2])
            add(vs[2], vs[3])
            add(vs[3], vs[0])
            if len(vs) >= 5:
                add(vs[0], vs[4])
            if len(vs) >= 6:
                add(vs[1], vs[5])
        for _ in range(n // 2):
            add(rng.randrange(n), rng.randrange(n))
    elif mode == 3 and n >= 5:
        length = rng.randrange(5, min(8, n) + 1)
        vs = rng.sample(range(n), length)
        for i in range(length):
            add(vs[i], vs[(i + 1) % length])
        for _ in range(n // 3):
            add(rng.randrange(n), rng.randrange(n))
    else:
        base, _ = generate_zeta2(rng.randrange(1 << 30), max(1, n // 5), min(3, n - 2))
        spots = rng.sample(range(n), base.n)
        for u, v in base.edges():
            add(spots[u], spots[v])
        if rng.random() < 0.5:
            add(rng.randrange(n), rng.randrange(n))
    return build_graph(n, sorted(edges))


def _agreement(g: Graph) -> tuple[Optional[bool], list[str]]:
    """Run every decider plus the game oracle; return the common verdict and
    the per-method answers (for reporting a mismatch)."""
    sup = decide_superstructure(g).accepted
    trav = decide_glue_traversal(g).accepted
    verdict = check_conditions(g)
    cond = verdict.cs_ok and verdict.no3c_ok and verdict.noac_ok
    ent = entanglement(g)
    game = ent <= 2
    answers = [
        f"superstructure={'YES' if sup else 'NO'}",
        f"traversal={'YES' if trav else 'NO'}",
        f"conditions={'YES' if cond else 'NO'}",
        f"game={ent}",
    ]
    agreed = sup == trav == cond == game
    return (sup if agreed else None), answers


def _all_graphs(n: int):
    """Every labeled graph on n vertices, lexicographic by edge mask."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for mask in range(1 << len(pairs)):
        yield build_graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def _cmd_crosscheck(args) -> int:
    if args.max_n > 12:
        print("error: refusing --max-n above 12 (the game blows up)", file=sys.stderr)
        return 2
    if args.max_n < 0 or args.samples < 0:
        print("error: --max-n and --samples must be nonnegative", file=sys.stderr)
        return 2
    rng = random.Random(args.seed)
    checked = 0
    accepted = 0

    def run_one(g: Graph, origin: str) -> Optional[int]:
        nonlocal checked, accepted
        common, answers = _agreement(g)
        if common is None:
            print(f"MISMATCH on a {origin} graph: " + " ".join(answers))
            sys.stdout.write(format_graph(g))
            return 1
        checked += 1
        if common:
            accepted += 1
        return None

    for n in range(min(args.max_n, 6) + 1):
        for g in _all_graphs(n):
            if run_one(g, f"n={n} exhaustive") is not None:
                return 1
    for _ in range(args.samples):
        n = rng.randrange(1, args.max_n + 1) if args.max_n >= 1 else 0
        g = sample_mixed_graph(rng, n)
        if run_one(g, "sampled") is not None:
            return 1
    print(f"accepted {accepted}, rejected {checked - accepted}")
    print(f"{checked} graphs, ALL AGREE")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ent2",
        description="Recognize graphs of entanglement at most two, solve the "
        "underlying game exactly on small graphs, and work with "
        "decomposition certificates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="linear yes/no decision for entanglement <= 2")
    p.add_argument("graph", help="graph file (header 'n m', one edge per line)")
    p.add_argument(
        "--method",
        choices=("superstructure", "traversal", "conditions"),
        default="superstructure",
    )
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("entanglement", help="exact entanglement by game solving")
    p.add_argument("graph")
    p.add_argument("--directed", action="store_true", help="read arcs instead of edges")
    p.add_argument("--max-k", type=int, default=None, help="stop after this many cops")
    p.add_argument("--force", action="store_true", help="ignore the size limit")
    p.set_defaults(func=_cmd_entanglement)

    p = sub.add_parser("check", help="report the three structural conditions")
    p.add_argument("graph")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("decompose", help="emit a decomposition certificate")
    p.add_argument("graph")
    p.add_argument("--out", default=None, help="write the certificate here instead of stdout")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser(
        "superstructure", help="print articulation points and biconnected components"
    )
    p.add_argument("graph")
    p.set_defaults(func=_cmd_superstructure)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="write a sample graph")
    gen_sub = p.add_subparsers(dest="kind", required=True)
    q = gen_sub.add_parser("cycle", help="cycle on N vertices")
    q.add_argument("size", type=int)
    q = gen_sub.add_parser("star", help="star with N leaves")
    q.add_argument("size", type=int)
    q = gen_sub.add_parser("theta", help="two hubs, EPS hub edge, N shared neighbors")
    q.add_argument("eps", type=int)
    q.add_argument("deads", type=int)
    gen_sub.add_parser("threec", help="triangle with a pendant on every corner")
    gen_sub.add_parser("ac", help="square with pendants on two adjacent corners")
    q = gen_sub.add_parser("zeta2", help="random decomposable graph")
    q.add_argument("--molecules", type=int, default=8)
    q.add_argument("--max-dead", type=int, default=4)
    q.add_argument("--seed", type=int, default=0)
    for q2 in gen_sub.choices.values():
        q2.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("crosscheck", help="agreement of all deciders and the game")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_crosscheck)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console() -> None:
    sys.exit(main())
