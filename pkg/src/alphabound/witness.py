"""Witness construction and weight-based certification.

``peel_witness`` turns the degree-weighted bound into an explicit
independent set.  It repeatedly picks a minimum-degree vertex whose
closed neighborhood can be bought for weight at most 1 (there is always
a neighbor of strictly larger degree on a shortest path toward the
maximum-degree class), deletes the closed neighborhood, and recurses on
the surviving components with the weight they are owed.  Regular pieces
are finished off directly: cycles by alternation, everything else
through a constructive Brooks coloring.  Complete pieces deliver a
single vertex, which is enough because the weight handed to a clique
that lost an edge to the deleted neighborhood never exceeds 1.

Throughout the recursion the ORIGINAL graph's coefficient sequence is
used; degrees only drop as vertices are deleted, and the coefficients
grow as degrees drop, so every child component's internal target covers
what its parent owes it.  Each step's accounting is an exact rational
identity and is re-checked at runtime; any violation raises
``CertificationError`` rather than returning an uncertified set.

The clique-weighting check (a sufficient condition due to T. Kelly and
L. Postle) is independent of the peeling machinery: a nonnegative
weighting with w(v) <= 2/(2 d(v) + 1) everywhere and total at most 1 on
every maximal clique certifies that the weights sum to at most the
independence number.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .bounds import c_bound
from .coeffs import CoeffSequence, c_sequence, clipped_sequence
from .exact import is_independent
from .graphcore import Graph, components_within, require_in_class


class CertificationError(RuntimeError):
    """An internal soundness check failed while building a witness."""


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise CertificationError(msg)


# ---------------------------------------------------------------------------
# peel vertex selection

def select_peel_vertex(g: Graph, active: Optional[Iterable[int]] = None) -> int:
    """Minimum-degree vertex (within ``active``) chosen so that one of its
    neighbors has strictly larger degree: run a breadth-first search from
    all minimum-degree vertices at once and walk back from the nearest
    maximum-degree vertex.  The source that search lands on is the pick."""
    verts = sorted(range(g.n) if active is None else set(active))
    if not verts:
        raise ValueError("empty vertex set")
    vset = set(verts)
    if len(components_within(g, vset)) != 1:
        raise ValueError("active set must induce a connected graph")
    deg = {v: sum(1 for w in g.adj[v] if w in vset) for v in verts}
    dmin = min(deg.values())
    dmax = max(deg.values())
    if dmin == dmax:
        raise ValueError("no peel vertex in regular graph")
    parent = {}
    q = deque()
    for v in verts:
        if deg[v] == dmin:
            parent[v] = -1
            q.append(v)
    target = None
    while q:
        v = q.popleft()
        if deg[v] == dmax and target is None:
            target = v
            break
        for w in g.adj[v]:
            if w in vset and w not in parent:
                parent[w] = v
                q.append(w)
    _check(target is not None, "search never reached the maximum degree class")
    chain = [target]
    while parent[chain[-1]] != -1:
        chain.append(parent[chain[-1]])
    u = chain[-1]
    # the vertex after u on the path is not a minimum-degree vertex, or it
    # would itself have been a search source at distance zero
    _check(deg[chain[-2]] > dmin, "peel path neighbor fails the degree condition")
    return u


# ---------------------------------------------------------------------------
# trace records

@dataclass(frozen=True)
class PeelStep:
    vertex: int
    degree: int
    neighbors: tuple[int, ...]
    isolated: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    share: Fraction            # weight of the deleted closed neighborhood
    isolated_share: Fraction
    handoff_shares: tuple[Fraction, ...]
    target: Fraction           # weight of the whole piece before the step
    owed: Fraction


@dataclass(frozen=True)
class BaseStep:
    kind: str                  # "complete" | "cycle" | "coloring"
    vertices: tuple[int, ...]
    taken: tuple[int, ...]
    target: Fraction
    owed: Fraction


@dataclass(frozen=True)
class WitnessResult:
    independent_set: tuple[int, ...]
    certified_bound: Fraction
    trace: tuple


# ---------------------------------------------------------------------------
# the peeling recursion

def peel_witness(g: Graph) -> WitnessResult:
    """Independent set at least as large as the degree-weighted bound,
    together with the step-by-step accounting that certifies it."""
    delta = require_in_class(g)
    cs = c_sequence(delta)
    trace: list = []
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * g.n + 100))

    def piece_degrees(piece: Sequence[int]) -> dict[int, int]:
        pset = set(piece)
        return {v: sum(1 for w in g.adj[v] if w in pset) for v in piece}

    def rec(piece: Sequence[int], owed: Fraction) -> set[int]:
        piece = tuple(sorted(piece))
        deg = piece_degrees(piece)
        k = len(piece)
        target = sum((cs[deg[v]] for v in piece), Fraction(0))
        if all(deg[v] == k - 1 for v in piece):
            # complete piece: one vertex, owed at most 1 since some vertex
            # lost an outside neighbor (the recursion never owes a clique
            # its full internal weight)
            _check(owed <= 1, "complete component owed more than one vertex")
            taken = {min(piece)}
            trace.append(BaseStep("complete", tuple(piece), (min(piece),),
                                  target, owed))
            return taken
        _check(owed <= target, "piece owed more than its own weight")
        dmin = min(deg.values())
        dmax = max(deg.values())
        if dmin == dmax:
            if dmin == 2:
                taken = _alternate_cycle(g, piece)
                kind = "cycle"
            else:
                colors = _color_piece(g, piece)
                classes: dict[int, list[int]] = {}
                for v, c in colors.items():
                    classes.setdefault(c, []).append(v)
                taken = set(max(classes.values(), key=lambda vs: (len(vs), -min(vs))))
                kind = "coloring"
            _check(Fraction(len(taken)) >= target,
                   "regular base case fell short of its weight")
            trace.append(BaseStep(kind, tuple(piece), tuple(sorted(taken)),
                                  target, owed))
            return set(taken)
        u = select_peel_vertex(g, piece)
        pset = set(piece)
        nbrs = tuple(w for w in g.adj[u] if w in pset)
        share = cs[deg[u]] + sum((cs[deg[w]] for w in nbrs), Fraction(0))
        _check(share <= 1, "peel share exceeds one")
        remaining = pset - {u} - set(nbrs)
        rem_isolated = sorted(v for v in remaining
                              if not (g.neighbor_set(v) & remaining))
        iso_share = sum((cs[deg[v]] for v in rem_isolated), Fraction(0))
        comps = components_within(g, remaining - set(rem_isolated))
        handoffs = tuple(sum((cs[deg[v]] for v in comp), Fraction(0))
                         for comp in comps)
        _check(target == share + iso_share + sum(handoffs, Fraction(0)),
               "weight accounting mismatch")
        trace.append(PeelStep(u, deg[u], nbrs, tuple(rem_isolated),
                              tuple(tuple(sorted(c)) for c in comps), share,
                              iso_share, handoffs, target, owed))
        chosen = {u, *rem_isolated}
        for comp, h in zip(comps, handoffs):
            chosen |= rec(comp, h)
        return chosen

    bound = c_bound(g)
    chosen = rec(tuple(range(g.n)), bound)
    ind = tuple(sorted(chosen))
    _check(is_independent(g, ind), "witness set is not independent")
    _check(Fraction(len(ind)) >= bound, "witness smaller than the bound")
    return WitnessResult(ind, bound, tuple(trace))


def _alternate_cycle(g: Graph, piece: Sequence[int]) -> set[int]:
    """Every other vertex of a cycle piece, floor(k/2) in all."""
    pset = set(piece)
    start = min(piece)
    order = [start]
    prev = None
    cur = start
    for _ in range(len(piece) - 1):
        nxt = min(w for w in g.adj[cur] if w in pset and w != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    k = len(order)
    return set(order[0:(k if k % 2 == 0 else k - 1):2])


# ---------------------------------------------------------------------------
# constructive Brooks coloring

def _bfs_order(g: Graph, piece: Sequence[int], root: int) -> list[int]:
    pset = set(piece)
    seen = {root}
    order = [root]
    q = deque([root])
    while q:
        v = q.popleft()
        for w in g.adj[v]:
            if w in pset and w not in seen:
                seen.add(w)
                order.append(w)
                q.append(w)
    _check(len(order) == len(pset), "coloring piece is not connected")
    return order


def _first_free(used: set[int], palette: int) -> int:
    for c in range(palette):
        if c not in used:
            return c
    raise CertificationError("greedy coloring ran out of colors")


def _greedy_from_root(g: Graph, piece: Sequence[int], root: int,
                      palette: int) -> dict[int, int]:
    # reverse breadth-first order: every vertex except the root still has
    # its tree parent uncolored when its turn comes, so at most palette-1
    # neighbor colors are in use; the root itself must see < palette
    # distinct neighbor colors for other reasons (fewer neighbors, or two
    # neighbors sharing a color)
    pset = set(piece)
    colors: dict[int, int] = {}
    for v in reversed(_bfs_order(g, piece, root)):
        used = {colors[w] for w in g.adj[v] if w in pset and w in colors}
        colors[v] = _first_free(used, palette)
    return colors


def _find_cut_vertex(g: Graph, piece: Sequence[int]) -> Optional[int]:
    pieces = set(piece)
    for v in sorted(piece):
        if len(components_within(g, pieces - {v})) > 1:
            return v
    return None


def _find_split_triple(g: Graph, piece: Sequence[int]):
    """v adjacent to non-adjacent x and y whose removal keeps the piece
    connected; exists in any two-connected regular non-complete graph of
    degree >= 3."""
    pset = set(piece)
    for v in sorted(piece):
        nbrs = sorted(w for w in g.adj[v] if w in pset)
        for x, y in combinations(nbrs, 2):
            if g.has_edge(x, y):
                continue
            if len(components_within(g, pset - {x, y})) == 1:
                return v, x, y
    raise CertificationError("no split triple in a two-connected regular piece")


def _color_piece(g: Graph, piece: Sequence[int]) -> dict[int, int]:
    """Proper coloring of the induced piece with max-degree many colors."""
    pieces = set(piece)
    deg = {v: sum(1 for w in g.adj[v] if w in pieces) for v in piece}
    dmax = max(deg.values())
    k = len(piece)
    low = [v for v in sorted(piece) if deg[v] < dmax]
    if low:
        return _greedy_from_root(g, piece, low[0], dmax)
    # regular piece
    if all(deg[v] == k - 1 for v in piece):
        raise ValueError("coloring undefined for the complete graph")
    _check(dmax >= 3, "regular coloring base needs degree at least 3")
    pset = pieces
    cut = _find_cut_vertex(g, piece)
    if cut is not None:
        colors: dict[int, int] = {}
        for comp in components_within(g, pset - {cut}):
            sub = list(comp) + [cut]
            part = _greedy_from_root(g, sub, cut, dmax)
            # permute so the cut vertex is color 0 in every part, then glue
            swap = part[cut]
            for v, c in part.items():
                colors[v] = 0 if c == swap else (swap if c == 0 else c)
        return colors
    v, x, y = _find_split_triple(g, piece)
    colors = {x: 0, y: 0}
    rest = pset - {x, y}
    for w in reversed(_bfs_order(g, rest, v)):
        used = {colors[z] for z in g.adj[w] if z in pset and z in colors}
        colors[w] = _first_free(used, dmax)
    return colors


def brooks_coloring(g: Graph) -> dict[int, int]:
    """Proper coloring with max_degree(g) colors (connected, max degree
    at least 3, not complete)."""
    if g.n == 0:
        raise ValueError("empty graph")
    if not g.is_connected():
        raise ValueError("graph not connected")
    dmax = g.max_degree()
    if dmax < 3:
        raise ValueError("coloring requires maximum degree >= 3")
    if g.is_complete():
        raise ValueError("coloring undefined for the complete graph")
    colors = _color_piece(g, range(g.n))
    for u, w in g.edges():
        _check(colors[u] != colors[w], "coloring is not proper")
    _check(max(colors.values()) < dmax, "coloring used too many colors")
    return colors


def brooks_independent_set(g: Graph) -> tuple[int, ...]:
    """Largest color class of a Brooks coloring: at least n/max_degree
    vertices."""
    colors = brooks_coloring(g)
    classes: dict[int, list[int]] = {}
    for v, c in colors.items():
        classes.setdefault(c, []).append(v)
    best = max(classes.values(), key=lambda vs: (len(vs), -min(vs)))
    _check(len(best) * g.max_degree() >= g.n,
           "largest color class smaller than n over max degree")
    return tuple(sorted(best))


# ---------------------------------------------------------------------------
# clique weightings

@dataclass(frozen=True)
class WeightAssignment:
    weights: tuple[Fraction, ...]

    def __getitem__(self, v: int) -> Fraction:
        return self.weights[v]

    def __len__(self) -> int:
        return len(self.weights)

    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))


@dataclass(frozen=True)
class WeightCheck:
    ok: bool
    total: Fraction
    violating_vertex: Optional[int] = None
    violating_clique: Optional[tuple[int, ...]] = None


def c_weights(g: Graph) -> WeightAssignment:
    """Each vertex weighted by the coefficient for its degree."""
    delta = require_in_class(g)
    cs = c_sequence(delta)
    return WeightAssignment(tuple(cs[g.degree(v)] for v in range(g.n)))


def clipped_weights(g: Graph, c_delta: Optional[Fraction] = None) -> WeightAssignment:
    """Like c_weights but from the min-clipped sequence, whose entries obey
    the per-vertex cap 2/(2i+1) by construction."""
    delta = require_in_class(g)
    if c_delta is None:
        c_delta = Fraction(2, 2 * delta + 1)
    cs = clipped_sequence(delta, c_delta)
    return WeightAssignment(tuple(cs[g.degree(v)] for v in range(g.n)))


def check_clique_weighting(g: Graph, weights) -> WeightCheck:
    """Test the two clique-weighting conditions: w(v) <= 2/(2 d(v)+1) at
    every vertex, and total weight at most 1 on every maximal clique.
    For nonnegative weights the maximal cliques suffice, since dropping
    vertices never raises a clique's total."""
    if isinstance(weights, WeightAssignment):
        w = weights.weights
    else:
        w = tuple(Fraction(x) for x in weights)
    if len(w) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(w)}")
    for v, wv in enumerate(w):
        if wv < 0:
            raise ValueError(f"negative weight at vertex {v}")
    total = sum(w, Fraction(0))
    for v in range(g.n):
        if w[v] > Fraction(2, 2 * g.degree(v) + 1):
            return WeightCheck(False, total, violating_vertex=v)
    for clique in enumerate_maximal_cliques(g):
        if sum((w[v] for v in clique), Fraction(0)) > 1:
            return WeightCheck(False, total, violating_clique=clique)
    return WeightCheck(True, total)


def _degeneracy_order(g: Graph) -> list[int]:
    deg = [g.degree(v) for v in range(g.n)]
    alive = set(range(g.n))
    order = []
    while alive:
        v = min(alive, key=lambda t: (deg[t], t))
        order.append(v)
        alive.remove(v)
        for w in g.adj[v]:
            if w in alive:
                deg[w] -= 1
    return order


def enumerate_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques, each exactly once, in a deterministic order.
    Bron-Kerbosch with pivoting over a degeneracy ordering."""
    out: list[tuple[int, ...]] = []

    def bk(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda t: (len(g.neighbor_set(t) & p), -t))
        for v in sorted(p - g.neighbor_set(pivot)):
            bk(r | {v}, p & g.neighbor_set(v), x & g.neighbor_set(v))
            p.remove(v)
            x.add(v)

    order = _degeneracy_order(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = {w for w in g.adj[v] if pos[w] > pos[v]}
        earlier = {w for w in g.adj[v] if pos[w] < pos[v]}
        bk({v}, later, earlier)
    return sorted(out)
