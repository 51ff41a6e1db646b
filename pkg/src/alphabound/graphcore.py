"""Immutable simple graphs, degree classes, and graph file formats.

Vertices are dense integers 0..n-1.  Inputs whose labels are sparse or
1-based are relabeled on ingestion and the original labels ride along on
the graph for output.  Deletion is expressed through ``removed``/``active``
vertex sets so that recursive algorithms never copy a graph.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class ParseError(ValueError):
    """Malformed graph file; the message names the offending line."""


class Graph:
    """Simple undirected graph on vertices 0..n-1.  Treat instances as frozen."""

    __slots__ = ("n", "m", "adj", "_nbr", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Optional[Sequence] = None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        pairs = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            pairs.add((u, v) if u < v else (v, u))
        lists: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(pairs):
            # iterating pairs in sorted order appends each adjacency list in
            # increasing order, so no per-list sort is needed
            lists[u].append(v)
            lists[v].append(u)
        self.n = n
        self.m = len(pairs)
        self.adj = tuple(tuple(a) for a in lists)
        self._nbr = tuple(frozenset(a) for a in lists)
        if labels is None:
            self.labels = None
        else:
            if len(labels) != n:
                raise ValueError("labels must cover every vertex")
            self.labels = tuple(str(x) for x in labels)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def neighbor_set(self, v: int) -> frozenset:
        return self._nbr[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield u, v

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in self.adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n

    def is_complete(self) -> bool:
        return self.n >= 1 and self.m == self.n * (self.n - 1) // 2

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def __eq__(self, other) -> bool:
        # structural equality; labels are presentation only
        return (isinstance(other, Graph)
                and self.n == other.n and self.adj == other.adj)

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeProfile:
    """Vertex sets by degree: classes[i] holds the vertices of degree i."""

    delta_max: int
    delta_min: int
    classes: tuple[frozenset, ...]      # indexed 0..delta_max

    def count(self, i: int) -> int:
        if 0 <= i <= self.delta_max:
            return len(self.classes[i])
        return 0

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


def degree_profile(g: Graph) -> DegreeProfile:
    if g.n == 0:
        raise ValueError("empty graph")
    dmax = g.max_degree()
    buckets: list[set] = [set() for _ in range(dmax + 1)]
    for v in range(g.n):
        buckets[g.degree(v)].add(v)
    return DegreeProfile(dmax, g.min_degree(),
                         tuple(frozenset(b) for b in buckets))


def is_in_class(g: Graph, delta: int) -> bool:
    """True iff g is connected, has maximum degree exactly ``delta``, and is
    not the complete graph on delta+1 vertices."""
    if delta < 3:
        raise ValueError("class defined only for delta >= 3")
    if g.n == 0 or g.max_degree() != delta or not g.is_connected():
        return False
    return not (g.n == delta + 1 and g.m == delta * (delta + 1) // 2)


def require_in_class(g: Graph, delta: Optional[int] = None) -> int:
    """Like :func:`is_in_class` but raising, and inferring delta by default.

    Returns the maximum degree on success.
    """
    if g.n == 0:
        raise ValueError("not in class: empty graph")
    dmax = g.max_degree()
    if delta is None:
        delta = dmax
    if delta < 3:
        raise ValueError(f"not in class: maximum degree {dmax} < 3")
    if dmax != delta:
        raise ValueError(f"not in class: maximum degree is {dmax}, expected {delta}")
    if not g.is_connected():
        raise ValueError("not in class: graph not connected")
    if g.n == delta + 1 and g.m == delta * (delta + 1) // 2:
        raise ValueError(
            f"not in class: graph is the complete graph on {g.n} vertices")
    return delta


def components_within(g: Graph, active: frozenset) -> list[frozenset]:
    """Connected components of the subgraph induced by ``active``,
    ordered by smallest contained vertex."""
    seen: set = set()
    out = []
    for s in sorted(active):
        if s in seen:
            continue
        comp = {s}
        queue = deque([s])
        seen.add(s)
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if w in active and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset]:
    """Components of g minus the ``removed`` vertices (size-1 sets are the
    vertices isolated by the removal)."""
    removed = frozenset(removed)
    for v in removed:
        if not 0 <= v < g.n:
            raise ValueError(f"removed vertex {v} out of range")
    return components_within(g, frozenset(range(g.n)) - removed)


# ---------------------------------------------------------------------------
# file formats

def parse_edge_list(text: str) -> Graph:
    """Whitespace-separated ``u v`` lines; ``#`` starts a comment.

    Vertex labels are nonnegative integers, not necessarily dense; they are
    relabeled to 0..n-1 and the originals kept as ``labels``.
    """
    raw_edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 2:
            raise ParseError(
                f"line {lineno}: expected two vertex tokens, got {len(tokens)}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(
                f"line {lineno}: vertex labels must be integers") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex label")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u}")
        raw_edges.append((u, v))
    ids = sorted({x for e in raw_edges for x in e})
    index = {x: i for i, x in enumerate(ids)}
    edges = [(index[u], index[v]) for u, v in raw_edges]
    labels = None if ids == list(range(len(ids))) else ids
    return Graph(len(ids), edges, labels)


def parse_dimacs(text: str) -> Graph:
    """``p edge n m`` header and ``e u v`` lines, 1-based vertices."""
    n = None
    edges = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if tokens[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: duplicate header")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(f"line {lineno}: expected 'p edge n m'")
            try:
                n = int(tokens[2])
                int(tokens[3])
            except ValueError:
                raise ParseError(f"line {lineno}: bad header counts") from None
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
        elif tokens[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before 'p edge' header")
            if len(tokens) != 3:
                raise ParseError(f"line {lineno}: expected 'e u v'")
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"line {lineno}: vertex labels must be integers") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: vertex out of range 1..{n}")
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at {u}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unrecognized line type {tokens[0]!r}")
    if n is None:
        raise ParseError("missing 'p edge' header")
    # keep the customary 1-based names for output
    return Graph(n, edges, labels=[str(i + 1) for i in range(n)])


def parse_graph(text: str) -> Graph:
    """Sniff the format: DIMACS if the first content line is p/c/e, else edge list."""
    for line in text.splitlines():
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        if body.split()[0] in ("p", "c", "e"):
            return parse_dimacs(text)
        return parse_edge_list(text)
    return parse_edge_list(text)


def load_graph(path) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_graph(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def write_edge_list(g: Graph, header: Optional[str] = None) -> str:
    # isolated vertices are not representable in this format
    lines = []
    if header:
        lines.append(f"# {header}")
    for u, v in g.edges():
        lines.append(f"{g.label_of(u)} {g.label_of(v)}")
    return "\n".join(lines) + ("\n" if lines else "")


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"
