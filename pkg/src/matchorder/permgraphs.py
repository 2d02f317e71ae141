"""Inversion graphs of permutations and small-graph machinery around them.

The graph of a permutation has the values 1..n as vertices and an edge for
every inversion, recorded on values (edge (i, j) means the values i and j
appear out of order).  Such graphs are exactly the graphs whose edge sets
are transitive and satisfy a betweenness condition, the Koh and Ree
characterization, and that characterization is constructive: the
permutation can be read back off a labeled graph that passes it.

Everything in scope is tiny (a couple dozen vertices at most), so the
unlabeled-graph questions are answered by direct search: canonical forms
come from a pruned exhaustive relabeling, recognition scans S_n, and the
subgraph tests are backtracking injections.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .permutations import Permutation, _inversion_pairs

__all__ = [
    "LabeledGraph",
    "UnlabeledGraph",
    "permutation_graph",
    "koh_ree_check",
    "permutation_from_labeled",
    "is_permutation_graph",
    "fork_graph",
    "fork_labeled",
    "fork_permutation",
    "has_cycle",
    "connected_components",
    "is_subgraph",
    "is_induced_subgraph",
    "to_dot",
    "from_dot",
]

SUBGRAPH_VERTEX_CAP = 10
RECOGNITION_DEFAULT_CAP = 8

_DOT_COMMENT_PREFIX = "// edge-list: "


@dataclass(frozen=True)
class LabeledGraph:
    """A simple graph on vertices 1..n with normalized, sorted edges."""

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        normalized = set()
        for edge in self.edges:
            i, j = edge
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if i > j:
                i, j = j, i
            if i < 1 or j > self.n:
                raise ValueError(f"edge {edge} leaves the vertex range 1..{self.n}")
            normalized.add((i, j))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        adjacency: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adjacency[i].add(j)
            adjacency[j].add(i)
        return {v: frozenset(ns) for v, ns in adjacency.items()}

    @property
    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((len(ns) for ns in self.neighbors.values()), reverse=True))

    def relabel(self, mapping: dict[int, int]) -> "LabeledGraph":
        """Rename vertices through a bijection of 1..n."""
        if sorted(mapping) != list(range(1, self.n + 1)) or sorted(
            mapping.values()
        ) != list(range(1, self.n + 1)):
            raise ValueError("relabeling must be a bijection of the vertex set")
        return LabeledGraph(
            self.n, tuple((mapping[i], mapping[j]) for i, j in self.edges)
        )

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def from_text(cls, text: str) -> "LabeledGraph":
        """Parse "n=6; 1-4 2-4 3-4 3-5 3-6"."""
        body = text.strip()
        head, sep, rest = body.partition(";")
        head = head.strip()
        if not sep and " " not in head and head.startswith("n="):
            rest = ""
            sep = ";"
        if not sep or not head.startswith("n="):
            raise ValueError(f"bad graph literal {text!r}, expected n=<count>; edges")
        try:
            n = int(head[2:])
        except ValueError:
            raise ValueError(f"bad vertex count token {head!r}") from None
        edges = []
        for token in rest.split():
            left, dash, right = token.partition("-")
            if not dash or not left or not right:
                raise ValueError(f"bad edge token {token!r}")
            try:
                edges.append((int(left), int(right)))
            except ValueError:
                raise ValueError(f"bad edge token {token!r}") from None
        return cls(n, tuple(edges))

    def to_text(self) -> str:
        listing = " ".join(f"{i}-{j}" for i, j in self.edges)
        return f"n={self.n}; {listing}".rstrip()


class UnlabeledGraph:
    """A graph considered up to isomorphism.

    The canonical form is computed eagerly at construction, so equality
    and hashing are cheap afterwards.  ``representative`` is the canonical
    relabeling of the input, a LabeledGraph other code can work with.
    """

    __slots__ = ("n", "canonical_edges", "representative")

    def __init__(self, source: LabeledGraph):
        order = _canonical_order(source)
        new_label = {v: k + 1 for k, v in enumerate(order)}
        edges = tuple(
            sorted(
                tuple(sorted((new_label[i], new_label[j])))
                for i, j in source.edges
            )
        )
        self.n = source.n
        self.canonical_edges = edges
        self.representative = LabeledGraph(source.n, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UnlabeledGraph):
            return NotImplemented
        return self.n == other.n and self.canonical_edges == other.canonical_edges

    def __hash__(self) -> int:
        return hash((self.n, self.canonical_edges))

    def __repr__(self) -> str:
        return f"UnlabeledGraph({self.representative.to_text()!r})"


def _canonical_order(g: LabeledGraph) -> tuple[int, ...]:
    """A vertex order maximizing the blockwise adjacency encoding.

    Vertices are placed in descending-degree blocks.  At each step only the
    candidates whose adjacency bits against the placed prefix are maximal
    are explored, which keeps the search shallow; candidates that are twins
    (same neighborhood apart from each other) are interchangeable, so one
    representative stands in for the rest.  The encoding determines the
    relabeled edge set, so equal encodings mean isomorphic graphs.
    """
    adjacency = g.neighbors
    by_degree: dict[int, list[int]] = {}
    for v in range(1, g.n + 1):
        by_degree.setdefault(len(adjacency[v]), []).append(v)
    blocks = [sorted(vs) for _, vs in sorted(by_degree.items(), reverse=True)]

    best_bits: tuple[int, ...] | None = None
    best_order: tuple[int, ...] | None = None
    placed: list[int] = []

    def dfs(blocks_left: list[list[int]], bits: tuple[int, ...]) -> None:
        nonlocal best_bits, best_order
        if best_bits is not None and bits < best_bits[: len(bits)]:
            return
        if not blocks_left:
            if best_bits is None or bits > best_bits:
                best_bits = bits
                best_order = tuple(placed)
            return
        cell = blocks_left[0]
        scored = [
            (tuple(1 if u in adjacency[v] else 0 for u in placed), v) for v in cell
        ]
        top = max(chunk for chunk, _ in scored)
        candidates = [v for chunk, v in scored if chunk == top]
        representatives: list[int] = []
        for v in candidates:
            if not any(
                adjacency[v] - {u} == adjacency[u] - {v} for u in representatives
            ):
                representatives.append(v)
        for v in representatives:
            remaining = [u for u in cell if u != v]
            placed.append(v)
            tail = ([remaining] if remaining else []) + blocks_left[1:]
            dfs(tail, bits + top)
            placed.pop()

    dfs(blocks, ())
    assert best_order is not None
    return best_order


def _as_labeled(g: LabeledGraph | UnlabeledGraph) -> LabeledGraph:
    return g.representative if isinstance(g, UnlabeledGraph) else g


def permutation_graph(p: Permutation) -> LabeledGraph:
    """The graph on values 1..n whose edges are the inversions of p."""
    return LabeledGraph(len(p), tuple(_inversion_pairs(p.letters)))


def koh_ree_check(g: LabeledGraph) -> tuple[bool, bool]:
    """(transitivity, betweenness) of the edge set.

    Transitivity: (i,j) and (j,k) edges force (i,k).  Betweenness: an edge
    (i,k) forces, for every i < j < k, at least one of (i,j) and (j,k).
    """
    edges = set(g.edges)
    transitive = True
    for i, j in edges:
        for k in range(j + 1, g.n + 1):
            if (j, k) in edges and (i, k) not in edges:
                transitive = False
                break
        if not transitive:
            break
    between = all(
        (i, j) in edges or (j, k) in edges
        for i, k in edges
        for j in range(i + 1, k)
    )
    return transitive, between


def permutation_from_labeled(g: LabeledGraph) -> Permutation:
    """Recover the unique permutation whose inversion set is g's edge set.

    Value u precedes value w in one-line order exactly when they are in
    order (u < w, no edge) or inverted (u > w, edge).  Counting
    predecessors linearizes the values when the graph passes the
    characterization check; the round trip is verified before returning.
    """
    transitive, between = koh_ree_check(g)
    if not (transitive and between):
        raise ValueError(
            f"graph fails the inversion-set characterization "
            f"(transitive={transitive}, betweenness={between})"
        )
    edges = set(g.edges)
    n = g.n

    def precedes(u: int, w: int) -> bool:
        if u < w:
            return (u, w) not in edges
        return (w, u) in edges

    count = {
        v: sum(1 for u in range(1, n + 1) if u != v and precedes(u, v))
        for v in range(1, n + 1)
    }
    if sorted(count.values()) != list(range(n)):
        raise ValueError("precedence relation does not linearize")
    letters = tuple(v for v, _ in sorted(count.items(), key=lambda item: item[1]))
    result = Permutation(letters)
    if set(_inversion_pairs(letters)) != edges:
        raise ValueError("recovered permutation does not reproduce the edge set")
    return result


def is_permutation_graph(
    g: LabeledGraph | UnlabeledGraph, cap: int = RECOGNITION_DEFAULT_CAP
) -> Permutation | None:
    """Some permutation whose inversion graph is isomorphic to g, if any.

    Scans S_n in lexicographic order (so the returned witness is stable),
    filtering by edge count and degree sequence before paying for a
    canonical form.  Rejects graphs larger than cap vertices.
    """
    labeled = _as_labeled(g)
    if labeled.n > cap:
        raise ValueError(f"recognition is capped at {cap} vertices, got {labeled.n}")
    target = g if isinstance(g, UnlabeledGraph) else UnlabeledGraph(g)
    edge_count = len(labeled.edges)
    degrees = labeled.degree_sequence
    for letters in itertools.permutations(range(1, labeled.n + 1)):
        pairs = _inversion_pairs(letters)
        if len(pairs) != edge_count:
            continue
        candidate = LabeledGraph(labeled.n, tuple(pairs))
        if candidate.degree_sequence != degrees:
            continue
        if UnlabeledGraph(candidate) == target:
            return Permutation(letters)
    return None


def fork_graph(k: int) -> UnlabeledGraph:
    """The path on k vertices with two pendant leaves at each end.

    k + 4 vertices in total; for k = 1 both ends are the same vertex and
    the graph is a star with four leaves.
    """
    if k < 1:
        raise ValueError("the path needs at least one vertex")
    edges = [(i, i + 1) for i in range(1, k)]
    edges += [(1, k + 1), (1, k + 2), (k, k + 3), (k, k + 4)]
    return UnlabeledGraph(LabeledGraph(k + 4, tuple(edges)))


def fork_labeled(n: int) -> LabeledGraph:
    """The value-labeled fork with a 2n-vertex path whose inversion-set
    recovery works out.

    Leaves 1 and 2 hang off path vertex 4; the path then alternates
    4, 3, 6, 5, ..., 2n+2, 2n+1 and the far end 2n+1 carries leaves 2n+3
    and 2n+4.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    edges = [(1, 4), (2, 4)]
    edges += [(2 * k + 1, 2 * k + 2) for k in range(1, n + 1)]
    edges += [(2 * k + 1, 2 * k + 4) for k in range(1, n)]
    edges += [(2 * n + 1, 2 * n + 3), (2 * n + 1, 2 * n + 4)]
    return LabeledGraph(2 * n + 4, tuple(edges))


def fork_permutation(n: int) -> Permutation:
    """The length 2n+4 permutation whose inversion graph is the fork on a
    2n-vertex path."""
    return permutation_from_labeled(fork_labeled(n))


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n + 1))

    def find(self, v: int) -> int:
        while self.parent[v] != v:
            self.parent[v] = self.parent[self.parent[v]]
            v = self.parent[v]
        return v

    def union(self, a: int, b: int) -> bool:
        """Merge; False if a and b were already together."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def _has_cycle_edges(n: int, edges: Iterable[tuple[int, int]]) -> bool:
    uf = _UnionFind(n)
    return any(not uf.union(i, j) for i, j in edges)


def has_cycle(g: LabeledGraph | UnlabeledGraph) -> bool:
    labeled = _as_labeled(g)
    return _has_cycle_edges(labeled.n, labeled.edges)


def _components_edges(n: int, edges: Iterable[tuple[int, int]]) -> list[frozenset[int]]:
    uf = _UnionFind(n)
    for i, j in edges:
        uf.union(i, j)
    groups: dict[int, set[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(uf.find(v), set()).add(v)
    return sorted((frozenset(vs) for vs in groups.values()), key=min)


def connected_components(g: LabeledGraph | UnlabeledGraph) -> list[frozenset[int]]:
    """Vertex classes of the connectivity relation, ordered by least member."""
    labeled = _as_labeled(g)
    return _components_edges(labeled.n, labeled.edges)


def _embeds(h: LabeledGraph, g: LabeledGraph, induced: bool) -> bool:
    if h.n > SUBGRAPH_VERTEX_CAP or g.n > SUBGRAPH_VERTEX_CAP:
        raise ValueError(f"subgraph search is capped at {SUBGRAPH_VERTEX_CAP} vertices")
    if h.n > g.n or len(h.edges) > len(g.edges):
        return False
    order = sorted(range(1, h.n + 1), key=lambda v: -len(h.neighbors[v]))
    image: dict[int, int] = {}
    used: set[int] = set()

    def place(k: int) -> bool:
        if k == len(order):
            return True
        u = order[k]
        for w in range(1, g.n + 1):
            if w in used or len(g.neighbors[w]) < len(h.neighbors[u]):
                continue
            ok = True
            for v, x in image.items():
                edge_h = v in h.neighbors[u]
                edge_g = x in g.neighbors[w]
                if edge_h and not edge_g:
                    ok = False
                    break
                if induced and not edge_h and edge_g:
                    ok = False
                    break
            if ok:
                image[u] = w
                used.add(w)
                if place(k + 1):
                    return True
                del image[u]
                used.remove(w)
        return False

    return place(0)


def is_subgraph(
    h: LabeledGraph | UnlabeledGraph, g: LabeledGraph | UnlabeledGraph
) -> bool:
    """Does g contain a copy of h (extra edges allowed on the image)?"""
    return _embeds(_as_labeled(h), _as_labeled(g), induced=False)


def is_induced_subgraph(
    h: LabeledGraph | UnlabeledGraph, g: LabeledGraph | UnlabeledGraph
) -> bool:
    """Does g contain a copy of h with non-edges preserved as well?"""
    return _embeds(_as_labeled(h), _as_labeled(g), induced=True)


def to_dot(g: LabeledGraph | UnlabeledGraph) -> str:
    """Render as DOT, embedding the edge-list text in a comment so the
    output can be parsed back.  Unlabeled graphs render without labels."""
    labeled = _as_labeled(g)
    lines = ["graph matching_order {"]
    lines.append(f"  {_DOT_COMMENT_PREFIX}{labeled.to_text()}")
    if isinstance(g, UnlabeledGraph):
        lines.append("  node [label=\"\"];")
    for v in range(1, labeled.n + 1):
        lines.append(f"  {v};")
    for i, j in labeled.edges:
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines)


def from_dot(text: str) -> LabeledGraph:
    """Recover the graph from the edge-list comment to_dot embeds."""
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith(_DOT_COMMENT_PREFIX):
            return LabeledGraph.from_text(stripped[len(_DOT_COMMENT_PREFIX) :])
    raise ValueError("no edge-list comment found in DOT input")
