"""Extremal and test-family generators, plus exhaustive small-graph enumeration.

Enumeration emits exactly one representative per isomorphism class, using
the lexicographically minimal adjacency bit-string (graph6 bit order) as
the canonical form.  The permutation search caps enumeration at n = 8;
larger corpora are an ingestion concern.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional

from .graphs import Graph, GraphError, blocks, connectivity_cut, is_connected

_LCG_MUL, _LCG_ADD, _LCG_MOD = 1103515245, 12345, 1 << 31


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: tuple = ()
    seed: int = 1


def gen_k5_block_tree(b: int, shape_seed: int = 1) -> Graph:
    """Connected graph with b blocks, each a K5: n = 4b+1, e = 10b = 5(n-1)/2.

    The shape seed drives a linear-congruential choice of which existing
    vertex each new block attaches to, so a fixed (b, seed) is reproducible.
    """
    if b < 1:
        raise GraphError("gen_k5_block_tree requires b >= 1")
    edges = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    n = 5
    state = shape_seed % _LCG_MOD
    for _ in range(b - 1):
        state = (_LCG_MUL * state + _LCG_ADD) % _LCG_MOD
        attach = state % n
        fresh = list(range(n, n + 4))
        group = [attach] + fresh
        edges += [(u, v) for i, u in enumerate(group) for v in group[i + 1 :]]
        n += 4
    return Graph.build(n, edges)


def complete_graph(n: int) -> Graph:
    return Graph.build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.build(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.build(n, [(i, (i + 1) % n) for i in range(n)])


def theta_graph(a: int, b: int, c: int) -> Graph:
    """Two branch vertices (0 and 1) joined by paths of lengths a, b, c."""
    lens = (a, b, c)
    if min(lens) < 1 or sum(1 for x in lens if x == 1) > 1:
        raise GraphError(f"invalid theta path lengths {lens}")
    edges = []
    nxt = 2
    for length in lens:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.build(nxt, edges)


def wheel_graph(rim: int) -> Graph:
    """Hub vertex 0 plus a rim cycle on 1..rim."""
    if rim < 3:
        raise GraphError("wheel rim needs at least 3 vertices")
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.build(rim + 1, edges)


def prism_graph() -> Graph:
    edges = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    return Graph.build(6, edges)


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.build(10, edges)


_FAMILIES = {
    "k5-block-tree": lambda spec: gen_k5_block_tree(spec.params[0], spec.seed),
    "complete": lambda spec: complete_graph(spec.params[0]),
    "complete-bipartite": lambda spec: complete_bipartite(*spec.params[:2]),
    "cycle": lambda spec: cycle_graph(spec.params[0]),
    "theta": lambda spec: theta_graph(*spec.params[:3]),
    "wheel": lambda spec: wheel_graph(spec.params[0]),
    "prism": lambda spec: prism_graph(),
    "petersen": lambda spec: petersen_graph(),
}


def gen_named(spec: GeneratorSpec) -> Graph:
    if spec.family not in _FAMILIES:
        raise GraphError(f"unknown family {spec.family!r}")
    try:
        return _FAMILIES[spec.family](spec)
    except (IndexError, TypeError) as exc:
        raise GraphError(f"bad parameters {spec.params} for {spec.family}") from exc


# ---------------------------------------------------------------------------
# canonical form and exhaustive enumeration

_INF_COL = 1 << 40


def canonical_columns(g: Graph) -> tuple:
    """Lexicographically minimal adjacency bit-string over all permutations.

    Returned as one integer per upper-triangle column (graph6 bit order):
    column j holds bits adj(p_0, p_j) .. adj(p_{j-1}, p_j), first bit most
    significant.  Branch-and-bound over permutations with tightening bound.
    """
    n = g.n
    bits = [0] * n
    for u, v in g.edges:
        bits[u] |= 1 << v
        bits[v] |= 1 << u
    if n <= 1:
        return ()
    best = [_INF_COL] * (n - 1)
    perm = [0] * n
    used = [False] * n

    def dfs(pos):
        cands = []
        for v in range(n):
            if used[v]:
                continue
            c = 0
            bv = bits[v]
            for i in range(pos):
                c = (c << 1) | ((bv >> perm[i]) & 1)
            cands.append((c, v))
        cands.sort()
        for c, v in cands:
            if c > best[pos - 1]:
                break
            if c < best[pos - 1]:
                best[pos - 1] = c
                for j in range(pos, n - 1):
                    best[j] = _INF_COL
            if pos == n - 1:
                continue
            used[v] = True
            perm[pos] = v
            dfs(pos + 1)
            used[v] = False

    for v0 in range(n):
        perm[0] = v0
        used[v0] = True
        dfs(1)
        used[v0] = False
    return tuple(best)


def graph_from_columns(n: int, cols: tuple) -> Graph:
    edges = []
    for j in range(1, n):
        c = cols[j - 1]
        for i in range(j):
            if (c >> (j - 1 - i)) & 1:
                edges.append((i, j))
    return Graph.build(n, edges)


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_columns(a) == canonical_columns(b)


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple:
    """Canonical column tuples of all unlabeled graphs of order n."""
    if n == 0:
        return ((),)
    if n == 1:
        return ((),)
    seen = set()
    for cols in _all_graphs(n - 1):
        parent = graph_from_columns(n - 1, cols)
        base = list(parent.edges)
        for mask in range(1 << (n - 1)):
            extra = [(i, n - 1) for i in range(n - 1) if (mask >> i) & 1]
            g = Graph.build(n, base + extra)
            seen.add(canonical_columns(g))
    return tuple(sorted(seen))


def _passes(g: Graph, tag: Optional[str]) -> bool:
    if tag is None:
        return True
    if tag == "connected":
        return is_connected(g)
    if tag.startswith("min-degree-"):
        d = int(tag.rsplit("-", 1)[1])
        return all(g.degree(v) >= d for v in g.vertices)
    if tag == "3-connected":
        return g.n > 3 and is_connected(g) and connectivity_cut(g, 3) is None
    if tag == "density":
        return 2 * g.e >= 5 * (g.n - 1)
    raise GraphError(f"unknown filter tag {tag!r}")


def enumerate_small(n: int, filter_tag: Optional[str] = None) -> Iterator[Graph]:
    """One representative per isomorphism class of order n, optionally filtered.

    Guarded at n <= 8 (permutation-based canonical form); larger corpora
    must be ingested from graph6 files instead.
    """
    if n > 8:
        raise GraphError("enumerate_small is guarded at n <= 8")
    if n < 0:
        raise GraphError("negative order")
    for cols in _all_graphs(n):
        g = graph_from_columns(n, cols)
        if _passes(g, filter_tag):
            yield g


def is_k5_block_tree(g: Graph) -> bool:
    """True iff g is connected and every block is a K5 (K1 counts trivially)."""
    if g.n == 0 or not is_connected(g):
        return False
    if g.n == 1:
        return True
    return all(b.is_k5() for b in blocks(g).blocks)
