"""Reachability deciders with replayable certificates.

Both deciders run a breadth-first search whose universe is finite by
construction: the matching search is capped at the target's largest vertex
and pruned by two quantities every move keeps non-decreasing (edge count
and the sorted matched-vertex list), while the permutation search only
ever visits lengths between the two inputs.  Successors are generated in a
fixed canonical order, so a query always returns the same certificate.

Termination therefore never depends on the order-theoretic facts the test
suites check; those are verified, not trusted.  A state budget turns
runaway queries into an explicit "budget" outcome that is never conflated
with incomparability.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .matchings import Matching, MoveKind, apply_move, moves_with_params
from .permutations import (
    Permutation,
    RewriteRule,
    _insertion_successors,
    _rewrite_successors,
    _swap_successors,
    apply_insertion,
    apply_rewrite,
    apply_swap,
)

__all__ = [
    "BUDGET",
    "DEFAULT_BUDGET",
    "MoveSet",
    "Step",
    "Certificate",
    "SearchResult",
    "VerificationResult",
    "AntichainReport",
    "matching_leq",
    "perm_leq",
    "verify_certificate",
    "antichain_check",
    "result_document",
    "certificate_from_document",
]

DEFAULT_BUDGET = 10**7

# sentinel outcome distinct from True/False
BUDGET = "budget"

_KIND_ORDER = (
    MoveKind.TYPE_IA,
    MoveKind.TYPE_IB,
    MoveKind.TYPE_IIA,
    MoveKind.TYPE_IIB,
)


@dataclass(frozen=True)
class MoveSet:
    """Which single-step moves a reachability query may use.

    kinds drive the matching-side search directly.  On the permutation
    side, swaps are available when TYPE_IIA is enabled and single-letter
    insertions when the insertions flag is set; the flag is switched on by
    the "I" move-set name, which stands for the full type I pair.
    Extended rewrite rules act on permutations only.
    """

    kinds: frozenset[MoveKind] = frozenset()
    rules: tuple[RewriteRule, ...] = ()
    insertions: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "kinds", frozenset(self.kinds))
        object.__setattr__(self, "rules", tuple(self.rules))
        if not self.kinds and not self.rules:
            raise ValueError("move set enables nothing")

    @classmethod
    def from_names(cls, text: str) -> "MoveSet":
        """Parse a comma list of move names.

        "I" enables both type I kinds plus permutation-side insertions,
        "II" both type II kinds; "Ia", "Ib", "IIa", "IIb" enable single
        kinds; "x:231-312" registers an extended rewrite rule.
        """
        kinds: set[MoveKind] = set()
        rules: list[RewriteRule] = []
        inserts = False
        for raw in text.split(","):
            name = raw.strip()
            if name == "I":
                kinds.update((MoveKind.TYPE_IA, MoveKind.TYPE_IB))
                inserts = True
            elif name == "II":
                kinds.update((MoveKind.TYPE_IIA, MoveKind.TYPE_IIB))
            elif name in ("Ia", "Ib", "IIa", "IIb"):
                kinds.add(MoveKind(name))
            elif name.startswith("x:"):
                rules.append(RewriteRule.from_text(name[2:]))
            else:
                raise ValueError(f"unknown move name {name!r}")
        return cls(frozenset(kinds), tuple(rules), inserts)


@dataclass(frozen=True)
class Step:
    """One recorded move.  params are 1-based vertex, value, or position
    numbers; rule steps carry the rule in text form."""

    kind: str
    params: tuple

    def to_text(self) -> str:
        p = self.params
        if self.kind == "Ia":
            return f"Ia {p[0]}-{p[1]}"
        if self.kind == "Ib":
            return f"Ib {p[0]}-{p[1]} -> {p[2]}-{p[3]}"
        if self.kind in ("IIa", "IIb"):
            return f"{self.kind} {p[0]} {p[1]} {p[2]} {p[3]}"
        if self.kind == "swap":
            return f"swap {p[0]} {p[1]}"
        if self.kind == "insert":
            return f"insert {p[0]} @ {p[1]}"
        if self.kind == "rule":
            return f"rule {p[0]} @ {p[1]}"
        raise ValueError(f"unknown step kind {self.kind!r}")

    @classmethod
    def from_text(cls, text: str) -> "Step":
        tokens = text.split()
        if not tokens:
            raise ValueError("empty step")
        kind = tokens[0]
        try:
            if kind == "Ia" and len(tokens) == 2:
                return cls(kind, _edge_params(tokens[1]))
            if kind == "Ib" and len(tokens) == 4 and tokens[2] == "->":
                return cls(kind, _edge_params(tokens[1]) + _edge_params(tokens[3]))
            if kind in ("IIa", "IIb") and len(tokens) == 5:
                return cls(kind, tuple(int(t) for t in tokens[1:]))
            if kind == "swap" and len(tokens) == 3:
                return cls(kind, (int(tokens[1]), int(tokens[2])))
            if kind == "insert" and len(tokens) == 4 and tokens[2] == "@":
                return cls(kind, (int(tokens[1]), int(tokens[3])))
            if kind == "rule" and len(tokens) == 4 and tokens[2] == "@":
                RewriteRule.from_text(tokens[1])
                return cls(kind, (tokens[1], int(tokens[3])))
        except ValueError as exc:
            raise ValueError(f"bad step {text!r}: {exc}") from None
        raise ValueError(f"bad step {text!r}")


def _edge_params(token: str) -> tuple[int, int]:
    left, dash, right = token.partition("-")
    if not dash or not left or not right:
        raise ValueError(f"bad edge token {token!r}")
    return (int(left), int(right))


@dataclass(frozen=True)
class Certificate:
    """A replayable move sequence claiming to take start to end."""

    kind: str
    start: Matching | Permutation
    end: Matching | Permutation
    steps: tuple[Step, ...]

    def __post_init__(self) -> None:
        if self.kind not in ("matching", "perm"):
            raise ValueError(f"unknown certificate kind {self.kind!r}")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one reachability query.

    comparable is True, False, or the BUDGET sentinel; certificate is set
    exactly when comparable is True; states_explored counts every state
    the search added to its visited set, the start included.
    """

    comparable: bool | str
    certificate: Certificate | None
    states_explored: int


@dataclass(frozen=True)
class VerificationResult:
    ok: bool
    failed_step: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class PairOutcome:
    """Result for one ordered pair of an antichain query; indices 0-based."""

    i: int
    j: int
    result: SearchResult


@dataclass(frozen=True)
class AntichainReport:
    pairs: tuple[PairOutcome, ...] = field(default=())

    @property
    def verdict(self) -> str:
        """One of "antichain", "comparable", "budget"."""
        if any(p.result.comparable is True for p in self.pairs):
            return "comparable"
        if any(p.result.comparable == BUDGET for p in self.pairs):
            return BUDGET
        return "antichain"


def _support_dominated(small: Sequence[int], big: Sequence[int]) -> bool:
    """Right-aligned componentwise comparison of sorted vertex lists.

    Moves never decrease the sorted matched-vertex list componentwise (new
    vertices are appended, slides bump one entry up, rearrangements keep
    it fixed), so a state whose list cannot sit below the target's, padded
    from the left, can never reach the target.
    """
    offset = len(big) - len(small)
    if offset < 0:
        return False
    return all(v <= big[k + offset] for k, v in enumerate(small))


def matching_leq(
    a: Matching, b: Matching, moves: MoveSet, budget: int = DEFAULT_BUDGET
) -> SearchResult:
    """Decide whether moves can take a to b, with a certificate when so."""
    if moves.rules:
        raise ValueError("extended rewrite rules apply only to permutation queries")
    if a == b:
        return SearchResult(True, Certificate("matching", a, b, ()), 1)
    cap = b.max_vertex
    target_edges = len(b.edges)
    target_support = b.sorted_matched
    if len(a.edges) > target_edges or not _support_dominated(
        a.sorted_matched, target_support
    ):
        return SearchResult(False, None, 1)
    kinds = tuple(k for k in _KIND_ORDER if k in moves.kinds)
    visited: dict[Matching, tuple[Matching, Step] | None] = {a: None}
    queue: deque[Matching] = deque((a,))
    while queue:
        current = queue.popleft()
        for kind in kinds:
            for params, nxt in moves_with_params(current, kind, cap):
                if nxt in visited:
                    continue
                if len(nxt.edges) > target_edges:
                    continue
                if not _support_dominated(nxt.sorted_matched, target_support):
                    continue
                visited[nxt] = (current, Step(kind.value, params))
                if nxt == b:
                    return SearchResult(
                        True,
                        _backtrack("matching", a, b, visited),
                        len(visited),
                    )
                if len(visited) > budget:
                    return SearchResult(BUDGET, None, len(visited))
                queue.append(nxt)
    return SearchResult(False, None, len(visited))


def perm_leq(
    a: Permutation, b: Permutation, moves: MoveSet, budget: int = DEFAULT_BUDGET
) -> SearchResult:
    """Decide whether moves can take a to b on the permutation side.

    Transitions are value swaps (enabled by TYPE_IIA), single-letter
    insertions while shorter than the target (enabled by the insertions
    flag), and any extended rewrite rules.
    """
    start, target = a.letters, b.letters
    if start == target:
        return SearchResult(True, Certificate("perm", a, b, ()), 1)
    if len(start) > len(target):
        return SearchResult(False, None, 1)
    allow_swaps = MoveKind.TYPE_IIA in moves.kinds
    if len(start) < len(target) and not moves.insertions:
        # nothing grows the length except insertions
        return SearchResult(False, None, 1)
    visited: dict[tuple[int, ...], tuple[tuple[int, ...], Step] | None] = {
        start: None
    }
    queue: deque[tuple[int, ...]] = deque((start,))
    target_len = len(target)
    while queue:
        current = queue.popleft()
        successors: list[tuple[Step, tuple[int, ...]]] = []
        if allow_swaps:
            successors.extend(
                (Step("swap", params), result)
                for params, result in _swap_successors(current)
            )
        if moves.insertions and len(current) < target_len:
            successors.extend(
                (Step("insert", params), result)
                for params, result in _insertion_successors(current)
            )
        if moves.rules:
            successors.extend(
                (Step("rule", (rule.to_text(), start_pos)), result)
                for (rule, start_pos), result in _rewrite_successors(
                    current, moves.rules
                )
            )
        for step, nxt in successors:
            if nxt in visited:
                continue
            visited[nxt] = (current, step)
            if nxt == target:
                return SearchResult(
                    True, _backtrack_letters(a, b, visited), len(visited)
                )
            if len(visited) > budget:
                return SearchResult(BUDGET, None, len(visited))
            queue.append(nxt)
    return SearchResult(False, None, len(visited))


def _backtrack(kind, a, b, visited) -> Certificate:
    steps = []
    cursor = b
    while True:
        entry = visited[cursor]
        if entry is None:
            break
        cursor, step = entry
        steps.append(step)
    steps.reverse()
    return Certificate(kind, a, b, tuple(steps))


def _backtrack_letters(a: Permutation, b: Permutation, visited) -> Certificate:
    steps = []
    cursor = b.letters
    while True:
        entry = visited[cursor]
        if entry is None:
            break
        cursor, step = entry
        steps.append(step)
    steps.reverse()
    return Certificate("perm", a, b, tuple(steps))


_MATCHING_STEP_KINDS = {k.value: k for k in MoveKind}


def _apply_step(kind: str, state, step: Step):
    if kind == "matching":
        move_kind = _MATCHING_STEP_KINDS.get(step.kind)
        if move_kind is None:
            raise ValueError(f"step kind {step.kind!r} is not a matching move")
        return apply_move(state, move_kind, step.params)
    if step.kind == "swap":
        return apply_swap(state, *step.params)
    if step.kind == "insert":
        return apply_insertion(state, *step.params)
    if step.kind == "rule":
        rule_text, start_pos = step.params
        return apply_rewrite(state, RewriteRule.from_text(rule_text), start_pos)
    raise ValueError(f"step kind {step.kind!r} is not a permutation move")


def verify_certificate(certificate: Certificate) -> VerificationResult:
    """Replay a certificate step by step.

    Every step is validated through the owning module's single-step
    semantics; the index of the first illegal step is reported, and a
    clean replay that lands somewhere other than the claimed end fails
    with failed_step None.
    """
    state = certificate.start
    for index, step in enumerate(certificate.steps):
        try:
            state = _apply_step(certificate.kind, state, step)
        except ValueError as exc:
            return VerificationResult(False, index, str(exc))
    if state != certificate.end:
        return VerificationResult(False, None, "end mismatch")
    return VerificationResult(True)


def antichain_check(
    items: Sequence[Matching] | Sequence[Permutation],
    moves: MoveSet,
    budget: int = DEFAULT_BUDGET,
) -> AntichainReport:
    """Test items[i] <= items[j] for every ordered pair i < j.

    The list is an antichain prefix exactly when all those queries come
    back incomparable; a budget outcome on any pair, with no comparable
    pair, makes the overall verdict "budget".
    """
    if all(isinstance(item, Matching) for item in items):
        decide = matching_leq
    elif all(isinstance(item, Permutation) for item in items):
        decide = perm_leq
    else:
        raise ValueError("items must be all matchings or all permutations")
    pairs = []
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            pairs.append(PairOutcome(i, j, decide(items[i], items[j], moves, budget)))
    return AntichainReport(tuple(pairs))


def result_document(kind: str, a, b, result: SearchResult) -> dict:
    """JSON-ready summary of a comparison.

    start and end ride along so the document is self-contained: the verify
    command can replay it without the original query.
    """
    return {
        "kind": kind,
        "start": a.to_text(),
        "end": b.to_text(),
        "comparable": result.comparable,
        "certificate": None
        if result.certificate is None
        else [step.to_text() for step in result.certificate.steps],
        "states_explored": result.states_explored,
    }


def certificate_from_document(doc: dict) -> Certificate:
    """Rebuild a certificate from a result document."""
    try:
        kind = doc["kind"]
        start_text = doc["start"]
        end_text = doc["end"]
        steps_texts = doc["certificate"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"result document is missing {exc}") from None
    if steps_texts is None:
        raise ValueError("result document carries no certificate")
    if kind == "matching":
        start: Matching | Permutation = Matching.from_text(start_text)
        end: Matching | Permutation = Matching.from_text(end_text)
    elif kind == "perm":
        start = Permutation.from_text(start_text)
        end = Permutation.from_text(end_text)
    else:
        raise ValueError(f"unknown certificate kind {kind!r}")
    steps = tuple(Step.from_text(text) for text in steps_texts)
    return Certificate(kind, start, end, steps)
