"""Independent brute-force ground truth.

Everything here is exhaustive by design: guarded enumeration of simple
cycles and simple x-y paths, plus certificate types and their validator.
The guard raises instead of timing out, so callers get deterministic
behavior in CI.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graphs import Cycle, Graph, GraphError, Path

DEFAULT_GUARD = 14


class GuardExceeded(RuntimeError):
    """Input exceeds the enumeration guard; refuse instead of best-effort."""


@dataclass(frozen=True)
class CyclePairCertificate:
    """Two cycles of consecutive even lengths in the same host graph."""

    c1: Cycle
    c2: Cycle

    @staticmethod
    def make(a: Cycle, b: Cycle) -> "CyclePairCertificate":
        a, b = sorted((a.canonical(), b.canonical()), key=lambda c: (c.length, c.vertices))
        return CyclePairCertificate(a, b)

    @property
    def lengths(self) -> tuple:
        return (self.c1.length, self.c2.length)


@dataclass(frozen=True)
class PathPairCertificate:
    """Two x-y paths whose lengths differ by two, avoiding the edge xy."""

    x: int
    y: int
    p1: Path
    p2: Path

    @staticmethod
    def make(x: int, y: int, a: Path, b: Path) -> "PathPairCertificate":
        a, b = sorted((a, b), key=lambda p: p.length)
        if a.start != x:
            a = a.reverse()
        if b.start != x:
            b = b.reverse()
        return PathPairCertificate(x, y, a, b)

    @property
    def lengths(self) -> tuple:
        return (self.p1.length, self.p2.length)


@dataclass(frozen=True)
class NearLengthPair:
    """Two cycles of lengths differing by one or two (Bondy-Vince support)."""

    c1: Cycle
    c2: Cycle

    @property
    def lengths(self) -> tuple:
        return (self.c1.length, self.c2.length)


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    e: int
    lengths: frozenset
    representatives: dict  # length -> Cycle
    guard: int


def _check_guard(g: Graph, size_guard: int):
    if g.n > size_guard:
        raise GuardExceeded(f"order {g.n} exceeds enumeration guard {size_guard}")


def simple_cycles(g: Graph):
    """Yield every simple cycle exactly once.

    Canonicalization: the root is the smallest vertex of the cycle and the
    second vertex is smaller than the last, so each cycle appears in exactly
    one orientation.
    """
    for root in g.vertices:
        path = [root]
        on_path = {root}

        def extend():
            v = path[-1]
            for w in g.adj[v]:
                if w <= root or w in on_path:
                    if w == root and len(path) >= 3 and path[1] < path[-1]:
                        yield tuple(path)
                    continue
                path.append(w)
                on_path.add(w)
                yield from extend()
                path.pop()
                on_path.remove(w)

        yield from extend()


def cycle_spectrum(g: Graph, size_guard: int = DEFAULT_GUARD) -> SpectrumReport:
    """Exact set of simple-cycle lengths, with a representative per length."""
    _check_guard(g, size_guard)
    reps: dict = {}
    for vs in simple_cycles(g):
        k = len(vs)
        if k not in reps or vs < reps[k]:
            reps[k] = vs
    representatives = {k: Cycle(g, vs).canonical() for k, vs in sorted(reps.items())}
    return SpectrumReport(
        n=g.n,
        e=g.e,
        lengths=frozenset(representatives),
        representatives=representatives,
        guard=size_guard,
    )


def find_consecutive_even_pair_bf(
    g: Graph, size_guard: int = DEFAULT_GUARD
) -> Optional[CyclePairCertificate]:
    """Certificate for the smallest {2m, 2m+2} pair in the spectrum, if any."""
    spec = cycle_spectrum(g, size_guard)
    for m in sorted(spec.lengths):
        if m % 2 == 0 and m + 2 in spec.lengths:
            return CyclePairCertificate.make(
                spec.representatives[m], spec.representatives[m + 2]
            )
    return None


def xy_path_lengths(g: Graph, x: int, y: int, size_guard: int = DEFAULT_GUARD) -> dict:
    """All achievable simple x-y path lengths, as {length: representative}."""
    if x == y:
        raise GraphError("xy_path_lengths requires distinct terminals")
    _check_guard(g, size_guard)
    reps: dict = {}
    path = [x]
    on_path = {x}

    def extend():
        v = path[-1]
        for w in g.adj[v]:
            if w == y:
                vs = tuple(path) + (y,)
                k = len(vs) - 1
                if k not in reps or vs < reps[k]:
                    reps[k] = vs
                continue
            if w in on_path:
                continue
            path.append(w)
            on_path.add(w)
            extend()
            path.pop()
            on_path.remove(w)

    extend()
    return {k: Path(g, vs) for k, vs in sorted(reps.items())}


def bondy_vince_search(
    g: Graph, size_guard: int = DEFAULT_GUARD
) -> Optional[Union[CyclePairCertificate, NearLengthPair]]:
    """Two cycles with lengths differing by one or two, if any exist.

    Prefers a difference-2 pair with both lengths even (returned as a full
    CyclePairCertificate); otherwise the lexicographically least near pair.
    """
    spec = cycle_spectrum(g, size_guard)
    lengths = sorted(spec.lengths)
    for m in lengths:
        if m % 2 == 0 and m + 2 in spec.lengths:
            return CyclePairCertificate.make(
                spec.representatives[m], spec.representatives[m + 2]
            )
    for m in lengths:
        for d in (1, 2):
            if m + d in spec.lengths:
                return NearLengthPair(
                    spec.representatives[m].canonical(),
                    spec.representatives[m + d].canonical(),
                )
    return None


def cycle_mod_residue(
    g: Graph, r: int, m: int, size_guard: int = DEFAULT_GUARD
) -> Optional[Cycle]:
    """Shortest cycle of length congruent to r modulo m, if any."""
    if not (0 <= r < m):
        raise GraphError(f"residue {r} out of range for modulus {m}")
    spec = cycle_spectrum(g, size_guard)
    for k in sorted(spec.lengths):
        if k % m == r:
            return spec.representatives[k]
    return None


def _cycle_in_host(c: Cycle, g: Graph) -> Optional[str]:
    vs = c.vertices
    if any(not (0 <= v < g.n) for v in vs):
        return "host: cycle vertex outside graph"
    if len(set(vs)) != len(vs):
        return "validity: repeated cycle vertex"
    for a, b in zip(vs, vs[1:] + vs[:1]):
        if not g.has_edge(a, b):
            return f"validity: non-edge ({a}, {b})"
    return None


def validate(cert, g: Graph) -> tuple:
    """(True, 'ok') iff all certificate invariants hold against g."""
    if isinstance(cert, CyclePairCertificate):
        for c in (cert.c1, cert.c2):
            why = _cycle_in_host(c, g)
            if why:
                return False, why
        l1, l2 = cert.c1.length, cert.c2.length
        if l1 % 2 or l2 % 2:
            return False, "parity: cycle length is odd"
        if abs(l2 - l1) != 2:
            return False, "difference: cycle lengths do not differ by two"
        return True, "ok"
    if isinstance(cert, PathPairCertificate):
        for p in (cert.p1, cert.p2):
            vs = p.vertices
            if any(not (0 <= v < g.n) for v in vs):
                return False, "host: path vertex outside graph"
            if len(set(vs)) != len(vs):
                return False, "validity: repeated path vertex"
            for a, b in zip(vs, vs[1:]):
                if not g.has_edge(a, b):
                    return False, f"validity: non-edge ({a}, {b})"
            if {vs[0], vs[-1]} != {cert.x, cert.y}:
                return False, "terminals: path endpoints are not {x, y}"
            for a, b in zip(vs, vs[1:]):
                if {a, b} == {cert.x, cert.y}:
                    return False, "validity: path uses the edge xy"
        if cert.p2.length != cert.p1.length + 2:
            return False, "difference: path lengths do not differ by two"
        return True, "ok"
    return False, f"unknown certificate type {type(cert).__name__}"
