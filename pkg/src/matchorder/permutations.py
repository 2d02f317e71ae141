"""Permutations in one-line notation and the single-step moves between them.

A permutation of [n] is a tuple holding 1..n in some order, wrapped in
:class:`Permutation` for validation and parsing.  The reachability engine
works on bare letter tuples for speed, so every move generator comes in two
flavors: a private tuple-level function returning ``(params, result)`` pairs
in a fixed canonical order, and a public wrapper producing ``Permutation``
sets.  The ``apply_*`` functions are the single-step validators used when
replaying certificates; they re-check the legality condition instead of
trusting the caller.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "RewriteRule",
    "reduce",
    "contains_pattern",
    "insertions",
    "type2_swaps",
    "inversions",
    "bruhat_closure_leq",
    "extended_rewrites",
    "apply_swap",
    "apply_insertion",
    "apply_rewrite",
    "all_permutations",
]


@dataclass(frozen=True)
class Permutation:
    """A bijection of [n] in one-line notation."""

    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        n = len(letters)
        if n < 1:
            raise ValueError("a permutation needs at least one letter")
        if sorted(letters) != list(range(1, n + 1)):
            raise ValueError(f"letters {letters} are not a permutation of 1..{n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index: int) -> int:
        return self.letters[index]

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        """Parse compact digits ("412563") or a comma list ("4,1,2,6,3,7,8,5").

        The compact form is only unambiguous for single-digit letters, so
        lengths of ten or more must use the comma form.
        """
        token = text.strip()
        if not token:
            raise ValueError("empty permutation literal")
        try:
            if "," in token:
                letters = tuple(int(part) for part in token.split(","))
            else:
                letters = tuple(int(ch) for ch in token)
        except ValueError:
            raise ValueError(f"bad permutation literal {token!r}") from None
        try:
            return cls(letters)
        except ValueError as exc:
            raise ValueError(f"bad permutation literal {token!r}: {exc}") from None

    def to_text(self) -> str:
        if len(self.letters) <= 9:
            return "".join(str(x) for x in self.letters)
        return ",".join(str(x) for x in self.letters)


@dataclass(frozen=True)
class RewriteRule:
    """A window rewrite: letters whose pattern is lhs get rearranged into rhs."""

    lhs: Permutation
    rhs: Permutation

    def __post_init__(self) -> None:
        if len(self.lhs) != len(self.rhs):
            raise ValueError("rewrite rule sides must have the same length")
        if self.lhs == self.rhs:
            raise ValueError("rewrite rule must change its window")

    @classmethod
    def from_text(cls, text: str) -> "RewriteRule":
        """Parse "231-312" (each side in permutation text form)."""
        parts = text.strip().split("-")
        if len(parts) != 2:
            raise ValueError(f"bad rewrite rule {text!r}, expected lhs-rhs")
        return cls(Permutation.from_text(parts[0]), Permutation.from_text(parts[1]))

    def to_text(self) -> str:
        return f"{self.lhs.to_text()}-{self.rhs.to_text()}"


def _ranks(values: Sequence[int]) -> tuple[int, ...]:
    rank = {v: k + 1 for k, v in enumerate(sorted(values))}
    return tuple(rank[v] for v in values)


def _require_distinct(values: Sequence[int], what: str) -> tuple[int, ...]:
    letters = tuple(values)
    if len(set(letters)) != len(letters):
        raise ValueError(f"{what} letters must be distinct: {letters}")
    return letters


def reduce(word: Iterable[int]) -> Permutation:
    """Replace each letter of a distinct-letter word by its rank.

    reduce((3, 6, 4)) == Permutation((1, 3, 2)).
    """
    letters = _require_distinct(tuple(word), "word")
    return Permutation(_ranks(letters))


def contains_pattern(small: Iterable[int], big: Iterable[int]) -> bool:
    """Does big have a subsequence order isomorphic to small, letterwise >= it?

    Both arguments are distinct-letter words.  The subsequence must match
    small in relative order and each chosen letter must be at least the
    letter it matches.  For permutations the letterwise constraint is
    automatic; it only bites for words over a larger alphabet.
    """
    s = _require_distinct(tuple(small), "pattern")
    b = _require_distinct(tuple(big), "word")
    if len(s) > len(b):
        return False
    target = _ranks(s)
    for positions in itertools.combinations(range(len(b)), len(s)):
        vals = tuple(b[p] for p in positions)
        if all(v >= w for v, w in zip(vals, s)) and _ranks(vals) == target:
            return True
    return False


def _insertion_successors(
    letters: tuple[int, ...]
) -> list[tuple[tuple[int, int], tuple[int, ...]]]:
    """All single-letter insertions as ((value, position), result) pairs.

    Position is 1-based.  Existing letters >= value are shifted up by one.
    Ordered value-major, then by position.
    """
    n = len(letters)
    out = []
    for v in range(1, n + 2):
        shifted = tuple(x + 1 if x >= v else x for x in letters)
        for pos in range(1, n + 2):
            out.append(((v, pos), shifted[: pos - 1] + (v,) + shifted[pos - 1 :]))
    return out


def insertions(p: Permutation) -> set[Permutation]:
    """All permutations one letter longer than p that contain p as a pattern."""
    return {Permutation(result) for _, result in _insertion_successors(p.letters)}


def apply_insertion(p: Permutation, value: int, position: int) -> Permutation:
    """Insert value at the 1-based position, shifting letters >= value up."""
    n = len(p)
    if not 1 <= value <= n + 1:
        raise ValueError(f"insertion value {value} out of range 1..{n + 1}")
    if not 1 <= position <= n + 1:
        raise ValueError(f"insertion position {position} out of range 1..{n + 1}")
    shifted = tuple(x + 1 if x >= value else x for x in p.letters)
    return Permutation(shifted[: position - 1] + (value,) + shifted[position - 1 :])


def _swap_successors(
    letters: tuple[int, ...]
) -> list[tuple[tuple[int, int], tuple[int, ...]]]:
    """All legal value swaps as ((i, j), result) pairs, ordered by (i, j).

    Values i < j may swap when i sits before j and every value strictly
    between them sits before j's position.
    """
    n = len(letters)
    pos = {v: k for k, v in enumerate(letters)}
    out = []
    for i in range(1, n):
        pi = pos[i]
        for j in range(i + 1, n + 1):
            pj = pos[j]
            if pi < pj and all(pos[v] < pj for v in range(i + 1, j)):
                swapped = list(letters)
                swapped[pi], swapped[pj] = j, i
                out.append(((i, j), tuple(swapped)))
    return out


def type2_swaps(p: Permutation) -> set[Permutation]:
    """All results of swapping values i < j under the betweenness condition."""
    return {Permutation(result) for _, result in _swap_successors(p.letters)}


def apply_swap(p: Permutation, i: int, j: int) -> Permutation:
    """Swap values i < j, enforcing the betweenness condition."""
    n = len(p)
    if not (1 <= i < j <= n):
        raise ValueError(f"swap values ({i}, {j}) out of range for length {n}")
    pos = {v: k for k, v in enumerate(p.letters)}
    if pos[i] >= pos[j]:
        raise ValueError(f"swap needs {i} positioned before {j}")
    if not all(pos[v] < pos[j] for v in range(i + 1, j)):
        raise ValueError(f"a value between {i} and {j} sits after {j}")
    swapped = list(p.letters)
    swapped[pos[i]], swapped[pos[j]] = j, i
    return Permutation(tuple(swapped))


def _inversion_pairs(letters: tuple[int, ...]) -> list[tuple[int, int]]:
    pos = {v: k for k, v in enumerate(letters)}
    n = len(letters)
    return [
        (i, j)
        for i in range(1, n)
        for j in range(i + 1, n + 1)
        if pos[i] > pos[j]
    ]


def inversions(p: Permutation) -> set[tuple[int, int]]:
    """Value pairs (i, j), i < j, with i appearing after j."""
    return set(_inversion_pairs(p.letters))


def _bruhat_successors(letters: tuple[int, ...]) -> list[tuple[int, ...]]:
    """One-swap covers: swap i < j (i before j) when every value between
    them sits before i or after j."""
    n = len(letters)
    pos = {v: k for k, v in enumerate(letters)}
    out = []
    for i in range(1, n):
        pi = pos[i]
        for j in range(i + 1, n + 1):
            pj = pos[j]
            if pi < pj and all(
                pos[v] < pi or pos[v] > pj for v in range(i + 1, j)
            ):
                swapped = list(letters)
                swapped[pi], swapped[pj] = j, i
                out.append(tuple(swapped))
    return out


def bruhat_closure_leq(a: Permutation, b: Permutation) -> bool:
    """Is b reachable from a by repeated unconstrained-interval swaps?

    The swap rule here is looser than the one in type2_swaps: the values
    between i and j may sit on either side of the pair, as long as none
    sits strictly between the two swapped positions.
    """
    if len(a) != len(b):
        raise ValueError("comparison needs equal lengths")
    start, target = a.letters, b.letters
    if start == target:
        return True
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for current in frontier:
            for successor in _bruhat_successors(current):
                if successor == target:
                    return True
                if successor not in seen:
                    seen.add(successor)
                    nxt.append(successor)
        frontier = nxt
    return False


def _rewrite_successors(
    letters: tuple[int, ...], rules: Sequence[RewriteRule]
) -> list[tuple[tuple[RewriteRule, int], tuple[int, ...]]]:
    """All rule applications as ((rule, start), result), start 1-based.

    A rule fires on every window of len(lhs) consecutive positions whose
    letters reduce to lhs; the window's letters are rearranged so they
    reduce to rhs.  Ordered by rule, then window position.
    """
    out = []
    for rule in rules:
        width = len(rule.lhs)
        lhs, rhs = rule.lhs.letters, rule.rhs.letters
        for start in range(len(letters) - width + 1):
            window = letters[start : start + width]
            if _ranks(window) == lhs:
                ordered = sorted(window)
                replacement = tuple(ordered[r - 1] for r in rhs)
                out.append(
                    (
                        (rule, start + 1),
                        letters[:start] + replacement + letters[start + width :],
                    )
                )
    return out


def extended_rewrites(
    p: Permutation, rules: Iterable[RewriteRule]
) -> set[Permutation]:
    """All permutations obtained from p by one rule application."""
    return {
        Permutation(result)
        for _, result in _rewrite_successors(p.letters, tuple(rules))
    }


def apply_rewrite(p: Permutation, rule: RewriteRule, start: int) -> Permutation:
    """Apply rule at the window beginning at 1-based position start."""
    width = len(rule.lhs)
    if not 1 <= start <= len(p) - width + 1:
        raise ValueError(f"window start {start} out of range for rule {rule.to_text()}")
    window = p.letters[start - 1 : start - 1 + width]
    if _ranks(window) != rule.lhs.letters:
        raise ValueError(
            f"window at {start} does not match the left side of {rule.to_text()}"
        )
    ordered = sorted(window)
    replacement = tuple(ordered[r - 1] for r in rule.rhs.letters)
    return Permutation(p.letters[: start - 1] + replacement + p.letters[start - 1 + width :])


def all_permutations(n: int) -> Iterator[Permutation]:
    """Yield all of S_n in lexicographic order."""
    for letters in itertools.permutations(range(1, n + 1)):
        yield Permutation(letters)
