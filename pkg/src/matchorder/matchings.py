"""Matchings on positive integers and the local moves that rewrite them.

Four move kinds act on a matching: type Ia adds an edge between two
unmatched vertices, type Ib slides one endpoint of an edge up to an
adjacent unmatched vertex, and the two type II moves exchange a nested or
crossing pair of edges subject to an interval side condition.  A total
order on matchings (edge count first, then the edge lists compared right
to left) is what the moves strictly increase; the reachability engine
relies on it for canonical successor ordering.

Intertwined perfect matchings, those pairing {1..n} against {n+1..2n},
correspond bijectively to permutations of [n]; the conversion functions
and the coloring sweep that splits an arbitrary perfect matching into
intertwined pieces live here too.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .permutations import Permutation

__all__ = [
    "Matching",
    "MoveKind",
    "edge_leq",
    "lex_key",
    "matching_leq_total",
    "is_intertwined",
    "enumerate_moves",
    "moves_with_params",
    "apply_move",
    "matching_to_word",
    "word_to_matching",
    "decompose_intertwined",
    "all_matchings",
]


class MoveKind(enum.Enum):
    """The four built-in move kinds, named by their short display form."""

    TYPE_IA = "Ia"
    TYPE_IB = "Ib"
    TYPE_IIA = "IIa"
    TYPE_IIB = "IIb"


@dataclass(frozen=True)
class Matching:
    """A finite set of disjoint edges between positive integers.

    Edges are normalized (smaller endpoint first) and stored sorted, so
    equal matchings compare and hash equal regardless of construction
    order.
    """

    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        seen: set[int] = set()
        normalized = []
        for edge in self.edges:
            i, j = edge
            if i == j:
                raise ValueError(f"edge {edge} joins a vertex to itself")
            if i > j:
                i, j = j, i
            if i < 1:
                raise ValueError(f"vertex {i} is not a positive integer")
            if i in seen or j in seen:
                raise ValueError(f"vertex reused by edge {edge}")
            seen.add(i)
            seen.add(j)
            normalized.append((i, j))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @cached_property
    def partner_map(self) -> dict[int, int]:
        partners: dict[int, int] = {}
        for i, j in self.edges:
            partners[i] = j
            partners[j] = i
        return partners

    @cached_property
    def matched(self) -> frozenset[int]:
        return frozenset(self.partner_map)

    @cached_property
    def sorted_matched(self) -> tuple[int, ...]:
        return tuple(sorted(self.partner_map))

    @property
    def max_vertex(self) -> int:
        return max(j for _, j in self.edges) if self.edges else 0

    def partner(self, v: int) -> int | None:
        return self.partner_map.get(v)

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def from_text(cls, text: str) -> "Matching":
        """Parse whitespace-separated edge tokens like "1-5 2-3 4-8 6-7"."""
        edges = []
        for token in text.split():
            left, sep, right = token.partition("-")
            if not sep or not left or not right:
                raise ValueError(f"bad edge token {token!r}")
            try:
                edges.append((int(left), int(right)))
            except ValueError:
                raise ValueError(f"bad edge token {token!r}") from None
        try:
            return cls(tuple(edges))
        except ValueError as exc:
            raise ValueError(f"bad matching {text!r}: {exc}") from None

    def to_text(self) -> str:
        return " ".join(f"{i}-{j}" for i, j in self.edges)


def edge_leq(e1: tuple[int, int], e2: tuple[int, int]) -> bool:
    """Total order on normalized edges: compare larger endpoints, then smaller."""
    (i, j), (k, l) = e1, e2
    return j < l or (j == l and i <= k)


def lex_key(m: Matching) -> tuple:
    """Sort key realizing the total order on matchings.

    Fewer edges come first.  Between equal counts the edge lists, sorted
    by edge_leq, are compared starting from the largest edge, which is the
    same as comparing the reversed (larger, smaller) endpoint pairs
    lexicographically.
    """
    return (
        len(m.edges),
        tuple(sorted(((j, i) for i, j in m.edges), reverse=True)),
    )


def matching_leq_total(a: Matching, b: Matching) -> bool:
    return lex_key(a) <= lex_key(b)


def is_intertwined(m: Matching) -> bool:
    """Is m a perfect matching on {1..2n} pairing each low vertex high?"""
    n = len(m.edges)
    if n == 0:
        return False
    if m.max_vertex != 2 * n:
        return False
    return all(i <= n < j for i, j in m.edges)


def _moves_type_ia(m: Matching, cap: int):
    free = [v for v in range(1, cap + 1) if v not in m.matched]
    out = []
    for a_idx, a in enumerate(free):
        for b in free[a_idx + 1 :]:
            out.append(((a, b), Matching(m.edges + ((a, b),))))
    return out


def _moves_type_ib(m: Matching, cap: int):
    matched = m.matched
    out = []
    for i, j in m.edges:
        rest = tuple(e for e in m.edges if e != (i, j))
        # the slid vertex must land on an unmatched spot; sliding i onto j
        # is already excluded because j is matched
        if i + 1 <= cap and i + 1 not in matched:
            out.append(((i, j, i + 1, j), Matching(rest + ((i + 1, j),))))
        if j + 1 <= cap and j + 1 not in matched:
            out.append(((i, j, i, j + 1), Matching(rest + ((i, j + 1),))))
    return out


def _interval_clear(m: Matching, lo: int, hi: int, bound: int) -> bool:
    """Every vertex strictly between lo and hi is unmatched or paired past bound."""
    partners = m.partner_map
    return all(partners.get(v, bound + 1) > bound for v in range(lo + 1, hi))


def _moves_type_iia(m: Matching, cap: int):
    out = []
    for b, c in m.edges:
        for a, d in m.edges:
            if a < b and c < d and _interval_clear(m, a, b, c):
                rest = tuple(e for e in m.edges if e not in ((a, d), (b, c)))
                out.append(
                    ((a, b, c, d), Matching(rest + ((a, c), (b, d))))
                )
    return out


def _moves_type_iib(m: Matching, cap: int):
    out = []
    for a, c in m.edges:
        for b, d in m.edges:
            if a < b < c < d and _interval_clear(m, b, c, c):
                rest = tuple(e for e in m.edges if e not in ((a, c), (b, d)))
                out.append(
                    ((a, b, c, d), Matching(rest + ((a, b), (c, d))))
                )
    return out


_MOVE_GENERATORS = {
    MoveKind.TYPE_IA: _moves_type_ia,
    MoveKind.TYPE_IB: _moves_type_ib,
    MoveKind.TYPE_IIA: _moves_type_iia,
    MoveKind.TYPE_IIB: _moves_type_iib,
}


@functools.cache
def moves_with_params(
    m: Matching, kind: MoveKind, vertex_cap: int
) -> tuple[tuple[tuple[int, ...], Matching], ...]:
    """Every single move of one kind from m, as (params, result) pairs.

    Results are sorted by the total order (ties broken by params) so that
    searches built on top are deterministic.  vertex_cap bounds every
    vertex a move may touch and must cover m itself.
    """
    if kind not in _MOVE_GENERATORS:
        raise ValueError(f"unknown move kind {kind!r}")
    if vertex_cap < m.max_vertex:
        raise ValueError(
            f"vertex_cap {vertex_cap} is below the matching's max vertex {m.max_vertex}"
        )
    found = _MOVE_GENERATORS[kind](m, vertex_cap)
    found.sort(key=lambda pair: (lex_key(pair[1]), pair[0]))
    return tuple(found)


def enumerate_moves(m: Matching, kind: MoveKind, vertex_cap: int) -> set[Matching]:
    """The set of matchings one move of the given kind away from m."""
    return {result for _, result in moves_with_params(m, kind, vertex_cap)}


def apply_move(
    m: Matching,
    kind: MoveKind,
    params: Sequence[int],
    vertex_cap: int | None = None,
) -> Matching:
    """Apply one move with the given parameters, validating its legality.

    With vertex_cap None the move is unbounded, which is the right setting
    when replaying certificates.  Raises ValueError on any illegal move.
    """

    def within(v: int) -> bool:
        return vertex_cap is None or v <= vertex_cap

    params = tuple(params)
    edges = set(m.edges)
    if kind is MoveKind.TYPE_IA:
        i, j = params
        if i >= j:
            raise ValueError(f"Ia endpoints must satisfy {i} < {j}")
        if i in m.matched or j in m.matched:
            raise ValueError(f"Ia endpoints {i}, {j} must both be unmatched")
        if not within(j):
            raise ValueError(f"Ia vertex {j} exceeds the cap")
        return Matching(m.edges + ((i, j),))
    if kind is MoveKind.TYPE_IB:
        i, j, k, l = params
        if (i, j) not in edges:
            raise ValueError(f"Ib source edge {i}-{j} is not present")
        if (k, l) == (i + 1, j):
            moved = i + 1
        elif (k, l) == (i, j + 1):
            moved = j + 1
        else:
            raise ValueError(f"Ib target {k}-{l} is not a one-step slide of {i}-{j}")
        if moved in m.matched:
            raise ValueError(f"Ib target vertex {moved} is matched")
        if not within(moved):
            raise ValueError(f"Ib vertex {moved} exceeds the cap")
        rest = tuple(e for e in m.edges if e != (i, j))
        return Matching(rest + ((k, l),))
    if kind in (MoveKind.TYPE_IIA, MoveKind.TYPE_IIB):
        a, b, c, d = params
        if not a < b < c < d:
            raise ValueError(f"quadruple {params} is not increasing")
        if kind is MoveKind.TYPE_IIA:
            if (a, d) not in edges or (b, c) not in edges:
                raise ValueError(f"IIa needs edges {a}-{d} and {b}-{c}")
            if not _interval_clear(m, a, b, c):
                raise ValueError(
                    f"a vertex between {a} and {b} is matched at or below {c}"
                )
            rest = tuple(e for e in m.edges if e not in ((a, d), (b, c)))
            return Matching(rest + ((a, c), (b, d)))
        if (a, c) not in edges or (b, d) not in edges:
            raise ValueError(f"IIb needs edges {a}-{c} and {b}-{d}")
        if not _interval_clear(m, b, c, c):
            raise ValueError(
                f"a vertex between {b} and {c} is matched at or below {c}"
            )
        rest = tuple(e for e in m.edges if e not in ((a, c), (b, d)))
        return Matching(rest + ((a, b), (c, d)))
    raise ValueError(f"unknown move kind {kind!r}")


def matching_to_word(m: Matching) -> Permutation:
    """The permutation encoding an intertwined perfect matching.

    Reading the high vertices 2n, 2n-1, ..., n+1 in that order, the word
    lists their low partners.
    """
    if not is_intertwined(m):
        raise ValueError(f"matching {m.to_text()!r} is not intertwined")
    n = len(m.edges)
    partners = m.partner_map
    return Permutation(tuple(partners[2 * n + 1 - j] for j in range(1, n + 1)))


def word_to_matching(w: Permutation | Iterable[int]) -> Matching:
    """Inverse of matching_to_word: letter w_j pairs with vertex 2n+1-j."""
    letters = tuple(w)
    n = len(letters)
    if sorted(letters) != list(range(1, n + 1)):
        raise ValueError(f"word {letters} is not a permutation of 1..{n}")
    return Matching(tuple((letters[j - 1], 2 * n + 1 - j) for j in range(1, n + 1)))


def decompose_intertwined(m: Matching) -> list[Matching]:
    """Split a perfect matching into intertwined pieces by a coloring sweep.

    Scan the vertices left to right.  A vertex opening an edge colors that
    edge with the current color.  The first vertex that closes an edge of
    the current color finishes the piece and starts the next color; later
    closers of finished colors are passed over.  Each returned piece is
    intertwined after its vertices are relabeled order-isomorphically, and
    the pieces partition the edges in color order.
    """
    k = len(m.edges)
    if m.matched != frozenset(range(1, 2 * k + 1)):
        raise ValueError(f"matching {m.to_text()!r} is not perfect on an initial segment")
    color_of: dict[tuple[int, int], int] = {}
    pieces: list[list[tuple[int, int]]] = []
    current: list[tuple[int, int]] = []
    partners = m.partner_map
    for v in range(1, 2 * k + 1):
        u = partners[v]
        if v < u:
            edge = (v, u)
            color_of[edge] = len(pieces)
            current.append(edge)
        elif color_of[(u, v)] == len(pieces):
            pieces.append(current)
            current = []
    return [Matching(tuple(piece)) for piece in pieces]


def all_matchings(max_vertex: int) -> Iterator[Matching]:
    """Yield every matching on vertices 1..max_vertex, the empty one included."""
    if max_vertex < 0:
        raise ValueError("max_vertex must be non-negative")

    def rec(vertices: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
        if not vertices:
            yield ()
            return
        first, rest = vertices[0], vertices[1:]
        yield from rec(rest)
        for idx, other in enumerate(rest):
            for sub in rec(rest[:idx] + rest[idx + 1 :]):
                yield ((first, other),) + sub

    for edges in rec(tuple(range(1, max_vertex + 1))):
        yield Matching(edges)
