"""Young tableaux in French notation and three ways to build Schur polynomials."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .core import DomainError, flatten, is_partition
from .polynomial import Expansion, Polynomial, expand_fundamental_qsym, sum_polynomials


@dataclass(frozen=True, order=True)
class Tableau:
    """Rows are listed bottom row first; row 1 is the longest."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if r)
        object.__setattr__(self, "rows", rows)
        if not is_partition(self.shape):
            raise DomainError(f"rows do not form a partition shape: {self.shape}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def size(self) -> int:
        return sum(self.shape)

    def cells(self) -> Iterator[tuple[int, int, int]]:
        """Yield ``(row, column, entry)``, 1-based, bottom row first."""
        for r, row in enumerate(self.rows, 1):
            for c, v in enumerate(row, 1):
                yield r, c, v

    def entries(self) -> list[int]:
        return [v for _, _, v in self.cells()]

    def is_semistandard(self) -> bool:
        if any(v < 1 for v in self.entries()):
            return False
        for row in self.rows:
            if any(x > y for x, y in zip(row, row[1:])):
                return False
        for lower, upper in zip(self.rows, self.rows[1:]):
            if any(u <= l for l, u in zip(lower, upper)):
                return False
        return True

    def is_standard(self) -> bool:
        return self.is_semistandard() and sorted(self.entries()) == list(range(1, self.size() + 1))

    def weight(self, n: int | None = None) -> tuple[int, ...]:
        vals = self.entries()
        n = max(vals, default=0) if n is None else n
        wt = [0] * n
        for v in vals:
            wt[v - 1] += 1
        return tuple(wt)

    def columns_of(self, value: int) -> list[int]:
        return [c for _, c, v in self.cells() if v == value]

    def to_dict(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_dict(cls, data: dict) -> "Tableau":
        t = cls(tuple(tuple(r) for r in data["rows"]))
        if list(t.shape) != list(data["shape"]):
            raise DomainError("shape does not match rows")
        return t

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        width = max((len(str(v)) for v in self.entries()), default=1)
        return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in reversed(self.rows))


def _check_shape(lam) -> tuple[int, ...]:
    lam = tuple(lam)
    if lam and not is_partition(lam):
        raise DomainError(f"not a partition: {lam}")
    return lam


def enumerate_ssyt(lam, n: int) -> set[Tableau]:
    """Semistandard tableaux of shape ``lam`` with entries in ``1..n``."""
    lam = _check_shape(lam)
    out: set[Tableau] = set()

    def rows_over(below: tuple[int, ...] | None, length: int) -> Iterator[tuple[int, ...]]:
        def rec(prefix: list[int]):
            c = len(prefix)
            if c == length:
                yield tuple(prefix)
                return
            lo = prefix[-1] if prefix else 1
            if below is not None:
                lo = max(lo, below[c] + 1)
            for v in range(lo, n + 1):
                prefix.append(v)
                yield from rec(prefix)
                prefix.pop()

        yield from rec([])

    def build(done: list[tuple[int, ...]]):
        k = len(done)
        if k == len(lam):
            out.add(Tableau(tuple(done)))
            return
        below = done[-1] if done else None
        for row in rows_over(below, lam[k]):
            done.append(row)
            build(done)
            done.pop()

    build([])
    return out


def enumerate_syt(lam) -> set[Tableau]:
    lam = _check_shape(lam)
    size = sum(lam)
    return {t for t in enumerate_ssyt(lam, size) if t.is_standard()}


def syt_descent_composition(t: Tableau) -> tuple[int, ...]:
    """New run whenever ``i+1`` sits in a column weakly left of ``i``."""
    if not t.is_standard():
        raise DomainError("descent composition needs a standard tableau")
    col = {v: c for _, c, v in t.cells()}
    n = t.size()
    if n == 0:
        return ()
    runs = [1]
    for i in range(1, n):
        if col[i + 1] <= col[i]:
            runs.append(1)
        else:
            runs[-1] += 1
    return tuple(runs)


def is_quasi_yamanouchi(t: Tableau) -> bool:
    """For each ``i > 1`` present, the leftmost ``i`` is weakly left of some ``i-1``."""
    for i in set(t.entries()):
        if i == 1:
            continue
        below = t.columns_of(i - 1)
        if not below or min(t.columns_of(i)) > max(below):
            return False
    return True


def enumerate_qyt(lam, n: int) -> set[Tableau]:
    return {t for t in enumerate_ssyt(lam, n) if is_quasi_yamanouchi(t)}


def destandardize_tableau(t: Tableau) -> Tableau:
    """Decrement every ``i`` while its leftmost copy is strictly right of every ``i-1``."""
    rows = [list(r) for r in t.rows]
    while True:
        cur = Tableau(tuple(tuple(r) for r in rows))
        vals = set(cur.entries())
        step = None
        for i in sorted(vals):
            if i == 1:
                continue
            below = cur.columns_of(i - 1)
            if not below or min(cur.columns_of(i)) > max(below):
                step = i
                break
        if step is None:
            return cur
        rows = [[v - 1 if v == step else v for v in r] for r in rows]


def schur_via_ssyt(lam, n: int) -> Polynomial:
    lam = _check_shape(lam)
    terms: dict[tuple[int, ...], int] = {}
    for t in enumerate_ssyt(lam, n):
        w = t.weight(n)
        terms[w] = terms.get(w, 0) + 1
    return Polynomial(terms, n)


def schur_via_syt(lam, n: int) -> Polynomial:
    lam = _check_shape(lam)
    return sum_polynomials(
        (expand_fundamental_qsym(syt_descent_composition(t), n) for t in enumerate_syt(lam)), n
    )


def schur_via_qyt(lam, n: int) -> tuple[Polynomial, Expansion]:
    """Schur polynomial together with its fundamental expansion over QYT weights."""
    lam = _check_shape(lam)
    terms: dict[tuple[int, ...], int] = {}
    for t in enumerate_qyt(lam, n):
        alpha = flatten(t.weight(n))
        terms[alpha] = terms.get(alpha, 0) + 1
    exp = Expansion(terms, "fundamental-qsym")
    return exp.to_polynomial(n), exp


def schur_polynomial(lam, n: int) -> Polynomial:
    return schur_via_ssyt(lam, n)


def partitions_of(k: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    max_part = k if max_part is None else max_part
    if k == 0:
        yield ()
        return
    for first in range(min(k, max_part), 0, -1):
        for rest in partitions_of(k - first, first):
            yield (first,) + rest
