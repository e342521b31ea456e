"""Pipe dreams, Schubert polynomials and quasi-Yamanouchi pipe dreams.

Coordinates are ``(row, col)`` with row 1 at the bottom, so row ``i``
contributes to the exponent of ``x_i``. A cross at ``(r, c)`` stands for the
simple transposition ``s_{r+c-1}``. Virtual dreams may use rows ``<= 0``.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .core import (
    DomainError,
    Permutation,
    ReducedWord,
    apply_word,
    embed_left,
    lehmer_code,
    reduced_words,
)
from .polynomial import Expansion, Polynomial

Cell = tuple[int, int]


@dataclass(frozen=True)
class PipeDream:
    """A reduced set of crosses in the first quadrant."""

    crosses: frozenset[Cell]

    allow_virtual = False

    def __post_init__(self):
        cells = frozenset((int(r), int(c)) for r, c in self.crosses)
        object.__setattr__(self, "crosses", cells)
        for r, c in cells:
            if c < 1 or (r < 1 and not self.allow_virtual):
                raise DomainError(f"cross outside the quadrant: {(r, c)}")
            if r + c - 1 < 1:
                raise DomainError(f"cross {(r, c)} lies on no antidiagonal")
        word = self.reading_word()
        target = apply_word(word)
        if target.inv() != len(word):
            raise DomainError("crosses do not form a reduced pipe dream")
        object.__setattr__(self, "_shape", target)

    @property
    def shape(self) -> Permutation:
        return self._shape  # type: ignore[attr-defined]

    def reading_order(self) -> list[Cell]:
        """Top row to bottom row, left to right inside a row."""
        return sorted(self.crosses, key=lambda rc: (-rc[0], rc[1]))

    def reading_word(self) -> ReducedWord:
        return tuple(r + c - 1 for r, c in self.reading_order())

    def rows(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for r, c in self.crosses:
            out.setdefault(r, []).append(c)
        for cols in out.values():
            cols.sort()
        return out

    def lowest_row(self) -> int | None:
        return min((r for r, _ in self.crosses), default=None)

    def is_virtual(self) -> bool:
        return any(r < 1 for r, _ in self.crosses)

    def weight(self, n: int | None = None) -> tuple[int, ...]:
        """Cross counts of rows ``1..n``; ``n`` defaults to ``len(shape) - 1``."""
        top = max((r for r, _ in self.crosses), default=0)
        if n is None:
            n = max(len(self.shape.one_line) - 1, top)
        wt = [0] * n
        for r, _ in self.crosses:
            if 1 <= r <= n:
                wt[r - 1] += 1
        return tuple(wt)

    def to_dict(self) -> dict:
        return {"shape": self.shape.comma(), "crosses": [list(rc) for rc in self.reading_order()]}

    @classmethod
    def from_dict(cls, data: dict) -> "PipeDream":
        p = cls(frozenset(tuple(rc) for rc in data["crosses"]))
        if "shape" in data and p.shape != Permutation.parse(data["shape"]):
            raise DomainError("stored shape does not match crosses")
        return p

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def render(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.reading_order()})"


@dataclass(frozen=True, repr=False)
class VirtualPipeDream(PipeDream):
    """A pipe dream that may carry crosses at rows ``<= 0``."""

    allow_virtual = True

    def weight(self, n: int | None = None) -> tuple[int, ...]:
        return PipeDream.weight(self, n)


def make_dream(cells: Iterable[Cell]) -> PipeDream:
    cells = frozenset(cells)
    if any(r < 1 for r, _ in cells):
        return VirtualPipeDream(cells)
    return PipeDream(cells)


def render(p: PipeDream) -> str:
    """ASCII picture: '+' for a cross and '.' for an elbow, top row first."""
    n = len(p.shape.one_line)
    rows = p.rows()
    low = min(1, p.lowest_row() or 1)
    high = max([n - 1] + list(rows))
    lines = []
    for r in range(high, low - 1, -1):
        width = max([n - r] + rows.get(r, []))
        cells = ["+" if c in rows.get(r, ()) else "." for c in range(1, width + 1)]
        lines.append(f"{r:>3} " + " ".join(cells))
    return "\n".join(lines)


def weight(p: PipeDream, n: int | None = None) -> tuple[int, ...]:
    return p.weight(n)


def standardize_pd(p: PipeDream) -> ReducedWord:
    return p.reading_word()


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _compatible_rows(a: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Row sequences ``r_1 <= ... <= r_l`` with ``1 <= r_j <= a_j``, strict where ``a`` ascends."""
    ell = len(a)

    def rec(j: int, prev: int, acc: list[int]):
        if j == ell:
            yield tuple(acc)
            return
        lo = prev
        if j > 0 and a[j - 1] < a[j]:
            lo = prev + 1
        for r in range(max(lo, 1), a[j] + 1):
            acc.append(r)
            yield from rec(j + 1, r, acc)
            acc.pop()

    yield from rec(0, 1, [])


@lru_cache(maxsize=None)
def _pipe_dreams(w: Permutation) -> frozenset[PipeDream]:
    out = set()
    for word in reduced_words(w):
        a = tuple(reversed(word))  # bottom-to-top, right-to-left reading
        for rows in _compatible_rows(a):
            out.add(PipeDream(frozenset((r, x - r + 1) for r, x in zip(rows, a))))
    return frozenset(out)


def enumerate_pipe_dreams(w: Permutation) -> frozenset[PipeDream]:
    """All reduced pipe dreams of shape ``w``."""
    return _pipe_dreams(w)


def bottom_pipe_dream(w: Permutation) -> PipeDream:
    """Crosses flush left, ``L(w)_i`` of them in row ``i``."""
    code = lehmer_code(w)
    return PipeDream(frozenset((i, c) for i, k in enumerate(code, 1) for c in range(1, k + 1)))


def ladder_moves(p: PipeDream) -> Iterator[PipeDream]:
    cells = p.crosses
    for r, c in cells:
        if (r, c + 1) in cells:
            continue
        # climb down through full rungs until an empty 1x2 block or a blocker
        for lo in range(r - 1, 0, -1):
            left, right = (lo, c) in cells, (lo, c + 1) in cells
            if left and right:
                continue
            if not left and not right:
                yield PipeDream((cells - {(r, c)}) | {(lo, c + 1)})
            break


def enumerate_pipe_dreams_ladder(w: Permutation) -> frozenset[PipeDream]:
    """Independent enumeration: closure of the bottom dream under ladder moves."""
    start = bottom_pipe_dream(w)
    seen = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for q in ladder_moves(p):
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return frozenset(seen)


def schubert_polynomial(w: Permutation, nvars: int | None = None) -> Polynomial:
    """Sum of ``x^wt(P)`` over all pipe dreams of ``w``."""
    n = max(w.last_descent(), 1) if nvars is None else nvars
    if w.last_descent() > n:
        raise DomainError(f"{w} has a descent beyond {n} variables")
    terms: dict[tuple[int, ...], int] = {}
    for p in enumerate_pipe_dreams(w):
        e = p.weight(n)
        terms[e] = terms.get(e, 0) + 1
    return Polynomial(terms, n)


# ---------------------------------------------------------------------------
# quasi-Yamanouchi pipe dreams
# ---------------------------------------------------------------------------

def is_quasi_yamanouchi_pd(p: PipeDream) -> bool:
    """Each row's westernmost cross is in column 1 or weakly west of a cross one row up."""
    rows = p.rows()
    for r, cols in rows.items():
        west = cols[0]
        if west == 1:
            continue
        above = rows.get(r + 1)
        if not above or west > above[-1]:
            return False
    return True


def destandardize_pd(p: PipeDream) -> PipeDream:
    """Slide whole rows northwest until the dream is quasi-Yamanouchi."""
    cells = set(p.crosses)
    while True:
        rows: dict[int, list[int]] = {}
        for r, c in cells:
            rows.setdefault(r, []).append(c)
        move = None
        for r in sorted(rows):
            cols = rows[r]
            if r < 1 or min(cols) == 1:
                continue
            above = rows.get(r + 1)
            if not above or min(cols) > max(above):
                move = r
                break
        if move is None:
            return make_dream(cells)
        shifted = {(move + 1, c - 1) for r, c in cells if r == move}
        cells = {rc for rc in cells if rc[0] != move} | shifted


def sit(sigma: Sequence[int]) -> PipeDream:
    """Place crosses for ``i_1, i_2, ...`` as high and as far west as allowed.

    The first cross goes to column 1 of row ``i_1``. An ascent stays in the
    row of the previous cross; a descent drops to the highest row strictly
    below it that still reaches antidiagonal ``i_j``. Rows may go below 1.
    """
    sigma = tuple(sigma)
    if sigma and apply_word(sigma).inv() != len(sigma):
        raise DomainError(f"{sigma} is not a reduced word")
    cells = []
    row = None
    prev = None
    for i in sigma:
        if row is None:
            row = i
        elif i < prev:
            row = min(row - 1, i)
        cells.append((row, i - row + 1))
        prev = i
    return make_dream(cells)


def _sit_lowest(sigma: Sequence[int]) -> int | None:
    row = prev = None
    low = None
    for i in sigma:
        if row is None:
            row = i
        elif i < prev:
            row = min(row - 1, i)
        prev = i
        low = row if low is None else min(low, row)
    return low


@lru_cache(maxsize=None)
def _qpd(w: Permutation) -> frozenset[PipeDream]:
    out = set()
    for sigma in reduced_words(w):
        p = sit(sigma)
        if not p.is_virtual():
            out.add(p)
    return frozenset(out)


def enumerate_qpd(w: Permutation) -> frozenset[PipeDream]:
    """Quasi-Yamanouchi pipe dreams of ``w``, built as non-virtual images of sit."""
    return _qpd(w)


def enumerate_qpd_filtered(w: Permutation) -> frozenset[PipeDream]:
    """Same set, filtered out of the full pipe dream enumeration."""
    return frozenset(p for p in enumerate_pipe_dreams(w) if is_quasi_yamanouchi_pd(p))


def schubert_to_fundamental_slide(w: Permutation) -> Expansion:
    n = len(w.one_line) - 1
    terms: dict[tuple[int, ...], int] = {}
    for q in enumerate_qpd(w):
        e = q.weight(n)
        terms[e] = terms.get(e, 0) + 1
    return Expansion(terms, "fundamental-slide")


# ---------------------------------------------------------------------------
# virtual dreams and the eta statistic
# ---------------------------------------------------------------------------

def eta(w: Permutation) -> int:
    if w.is_identity():
        raise DomainError("eta is undefined on the identity")
    code = lehmer_code(w)
    first = w.descents()[0]
    top = max(code)
    late = any(v == top for v in code[first:])  # positions strictly after first
    delta = 0 if late else 1
    return w.inv() - top + delta - first


def virtual_pipe_dreams(w: Permutation) -> frozenset[PipeDream]:
    """Images of sit over all reduced words, virtual ones included."""
    return frozenset(sit(s) for s in reduced_words(w))


def qpd_count_profile(w: Permutation, m_max: int) -> tuple[int, ...]:
    """``#QPD(1^m x w)`` for ``m = 0..m_max``.

    Shifting a reduced word by ``m`` shifts every row of its sit image up by
    ``m``, so one pass over ``R(w)`` gives the whole profile.
    """
    if w.is_identity():
        return (1,) * (m_max + 1)
    lows = [_sit_lowest(s) for s in reduced_words(w)]
    return tuple(sum(1 for low in lows if low + m >= 1) for m in range(m_max + 1))


def qpd_count_profile_direct(w: Permutation, m_max: int) -> tuple[int, ...]:
    return tuple(len(enumerate_qpd_filtered(embed_left(w, m))) for m in range(m_max + 1))
