"""Compositions, permutations, Lehmer codes and word statistics.

Weak and strong compositions are plain tuples of ints. Permutations are
stored in one-line notation with trailing fixed points trimmed, so that
``S_n`` sits inside ``S_{n+1}`` for free.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate, combinations, permutations
from typing import Iterable, Iterator, Sequence

WeakComposition = tuple[int, ...]
StrongComposition = tuple[int, ...]
ReducedWord = tuple[int, ...]


class DomainError(ValueError):
    """Input is well formed but outside the domain of an operation."""


# ---------------------------------------------------------------------------
# compositions
# ---------------------------------------------------------------------------

def weak(parts: Iterable[int]) -> WeakComposition:
    a = tuple(int(p) for p in parts)
    if any(p < 0 for p in a):
        raise DomainError(f"weak composition has a negative entry: {a}")
    return a


def strong(parts: Iterable[int]) -> StrongComposition:
    a = tuple(int(p) for p in parts)
    if any(p <= 0 for p in a):
        raise DomainError(f"strong composition has a nonpositive entry: {a}")
    return a


def flatten(a: Sequence[int]) -> StrongComposition:
    """Drop the zero entries of a weak composition."""
    return tuple(p for p in a if p)


def pad(a: Sequence[int], n: int) -> WeakComposition:
    """Append zeros to ``a`` until it has length ``n`` (never truncates)."""
    a = tuple(a)
    return a + (0,) * (n - len(a)) if len(a) < n else a


def trim(a: Sequence[int]) -> WeakComposition:
    """Remove trailing zeros."""
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return tuple(a)


def is_quasi_flat(a: Sequence[int]) -> bool:
    nz = [i for i, p in enumerate(a) if p]
    return not nz or nz[-1] - nz[0] + 1 == len(nz)


def dominates(b: Sequence[int], a: Sequence[int]) -> bool:
    """Prefix-sum dominance ``b >= a``; the shorter argument is zero padded."""
    n = max(len(a), len(b))
    return all(x >= y for x, y in zip(accumulate(pad(b, n)), accumulate(pad(a, n))))


def placements(parts: Sequence[int], n: int) -> Iterator[WeakComposition]:
    """All length-``n`` weak compositions whose flattening is ``parts``."""
    parts = tuple(parts)
    for pos in combinations(range(n), len(parts)):
        c = [0] * n
        for p, v in zip(pos, parts):
            c[p] = v
        yield tuple(c)


def minimal_placement(columns: Sequence[Sequence[int]], lower: Sequence[Sequence[int]],
                      n: int) -> tuple[int, ...] | None:
    """Rightmost feasible positions for a sequence of columns.

    Each column is a tuple of nonnegative integers, one coordinate per
    constraint row; ``lower[k]`` is the weak composition (length ``<= n``)
    that the k-th coordinate, once placed, has to dominate. Columns keep
    their order. Returns the 0-based positions, or None if no placement is
    feasible.

    Position ``i`` only sees a prefix of the columns, so every prefix-sum
    constraint turns into a deadline: column ``j`` must sit at or before
    the first position whose target needs more than ``j`` columns. Placing
    each column at its deadline, right to left, gives the componentwise
    largest positions, hence the dominance-minimal composition for every
    coordinate at once.
    """
    ell = len(columns)
    if ell > n:
        return None
    k = len(lower)
    sums = [list(accumulate((col[r] for col in columns), initial=0)) for r in range(k)]
    targets = [list(accumulate(pad(low, n))) for low in lower]
    deadline = [n - 1] * ell
    need = covered = 0
    for i in range(n):
        for r in range(k):
            while need <= ell and sums[r][need] < targets[r][i]:
                need += 1
        if need > ell:
            return None
        # columns 0..need-1 must already sit at positions <= i
        while covered < need:
            deadline[covered] = i
            covered += 1
    pos = [0] * ell
    nxt = n
    for j in range(ell - 1, -1, -1):
        pos[j] = min(deadline[j], nxt - 1)
        nxt = pos[j]
    if ell and pos[0] < 0:
        return None
    return tuple(pos)


def minimal_dominating_placement(parts: Sequence[int], a: Sequence[int],
                                 n: int | None = None) -> WeakComposition | None:
    """Dominance-minimal ``c`` with ``flat(c) = parts`` and ``c >= a``."""
    n = len(a) if n is None else n
    pos = minimal_placement([(p,) for p in parts], [a], n)
    if pos is None:
        return None
    c = [0] * n
    for p, v in zip(pos, parts):
        c[p] = v
    return tuple(c)


def strongly_dominates(b: Sequence[int], a: Sequence[int]) -> bool:
    n = max(len(a), len(b))
    b = pad(b, n)
    if not dominates(b, a):
        return False
    return minimal_dominating_placement(flatten(b), a, n) == b


def refines(beta: Sequence[int], alpha: Sequence[int]) -> bool:
    """True iff consecutive blocks of ``beta`` sum to the parts of ``alpha``."""
    if sum(beta) != sum(alpha):
        return False
    cuts = set(accumulate(alpha))
    return cuts <= set(accumulate(beta))


def compositions_of(k: int) -> Iterator[StrongComposition]:
    """All strong compositions of ``k``."""
    if k == 0:
        yield ()
        return
    for first in range(1, k + 1):
        for rest in compositions_of(k - first):
            yield (first,) + rest


def refinements(alpha: Sequence[int], max_len: int | None = None) -> Iterator[StrongComposition]:
    """Strong compositions refining ``alpha``, optionally capped in length."""
    alpha = tuple(alpha)
    if not alpha:
        yield ()
        return
    for head in compositions_of(alpha[0]):
        if max_len is not None and len(head) > max_len:
            continue
        rest_cap = None if max_len is None else max_len - len(head)
        for tail in refinements(alpha[1:], rest_cap):
            yield head + tail


def weak_compositions(n: int, size: int) -> Iterator[WeakComposition]:
    """All weak compositions of length ``n`` and the given size."""
    if n == 0:
        if size == 0:
            yield ()
        return
    for first in range(size, -1, -1):
        for rest in weak_compositions(n - 1, size - first):
            yield (first,) + rest


def is_partition(lam: Sequence[int]) -> bool:
    return all(p > 0 for p in lam) and all(x >= y for x, y in zip(lam, lam[1:]))


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of S_infinity in canonical one-line notation."""

    one_line: tuple[int, ...]

    def __post_init__(self):
        w = list(self.one_line)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise DomainError(f"not a permutation: {tuple(w)}")
        while len(w) > 1 and w[-1] == len(w):
            w.pop()
        if not w:
            w = [1]
        object.__setattr__(self, "one_line", tuple(w))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Read ``"2,4,1,5,3"`` or the digit shorthand ``"24153"``."""
        text = text.strip()
        if "," in text:
            values = [int(t) for t in text.split(",") if t.strip()]
        elif text.isdigit():
            values = [int(ch) for ch in text]
        else:
            raise ValueError(f"cannot read permutation {text!r}")
        return cls(tuple(values))

    @classmethod
    def identity(cls) -> "Permutation":
        return cls((1,))

    def __len__(self) -> int:
        return len(self.one_line)

    def __getitem__(self, i: int) -> int:
        """1-based value ``w_i``; fixed beyond the stored range."""
        return self.one_line[i - 1] if i <= len(self.one_line) else i

    def __str__(self) -> str:
        if len(self.one_line) <= 9:
            return "".join(map(str, self.one_line))
        return ",".join(map(str, self.one_line))

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def comma(self) -> str:
        return ",".join(map(str, self.one_line))

    def is_identity(self) -> bool:
        return self.one_line == (1,)

    def inv(self) -> int:
        return sum(lehmer_code(self))

    def descents(self) -> list[int]:
        w = self.one_line
        return [i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]]

    def last_descent(self) -> int:
        d = self.descents()
        return d[-1] if d else 0

    def inverse(self) -> "Permutation":
        w = self.one_line
        out = [0] * len(w)
        for i, v in enumerate(w):
            out[v - 1] = i + 1
        return Permutation(tuple(out))

    def swap(self, i: int) -> "Permutation":
        """Right multiplication by ``s_i``: swap positions ``i`` and ``i+1``."""
        w = list(self.one_line) + list(range(len(self.one_line) + 1, i + 2))
        w[i - 1], w[i] = w[i], w[i - 1]
        return Permutation(tuple(w))


def lehmer_code(w: Permutation) -> WeakComposition:
    v = w.one_line
    return tuple(sum(1 for y in v[i + 1:] if y < x) for i, x in enumerate(v))


def code_to_permutation(a: Sequence[int]) -> Permutation:
    """Inverse of the Lehmer code; every weak composition is a code."""
    a = trim(weak(a))
    n = len(a) + (max(a) if a else 0) + 1
    avail = list(range(1, n + 1))
    w = []
    for c in a:
        w.append(avail.pop(c))
    w.extend(avail)
    return Permutation(tuple(w))


def grassmannian(lam: Sequence[int], n: int) -> Permutation:
    """The Grassmannian permutation with unique descent at ``n`` for ``lam``."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise DomainError(f"not a partition: {lam}")
    if n < 1 or len(lam) > n:
        raise DomainError(f"partition {lam} has more than n={n} parts")
    lam_p = pad(lam, n)
    head = [i + lam_p[n - i] for i in range(1, n + 1)]
    total = n + (lam[0] if lam else 0)
    rest = sorted(set(range(1, total + 1)) - set(head))
    return Permutation(tuple(head + rest))


def embed_left(w: Permutation, m: int) -> Permutation:
    """``1^m x w``: fix 1..m and shift every value of ``w`` up by ``m``."""
    return Permutation(tuple(range(1, m + 1)) + tuple(x + m for x in w.one_line))


def embed_right(w: Permutation, m: int) -> Permutation:
    """``w x 1^m``, which is ``w`` itself in canonical form."""
    n = len(w.one_line)
    return Permutation(w.one_line + tuple(range(n + 1, n + m + 1)))


def all_permutations(n: int) -> list[Permutation]:
    """Every permutation of S_n, identity first."""
    return [Permutation(p) for p in permutations(range(1, n + 1))]


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------

def descent_composition(word: Sequence[int]) -> StrongComposition:
    """Lengths of the weakly increasing runs of ``word``.

    A new run starts exactly when the next letter is strictly smaller.
    """
    if not word:
        return ()
    runs = [1]
    for x, y in zip(word, word[1:]):
        if y < x:
            runs.append(1)
        else:
            runs[-1] += 1
    return tuple(runs)


def apply_word(word: Sequence[int]) -> Permutation:
    """The permutation ``s_{i_l} ... s_{i_1}`` for ``word = (i_1, ..., i_l)``."""
    w = Permutation.identity()
    for i in reversed(word):
        w = w.swap(i)
    return w


@lru_cache(maxsize=None)
def _reduced_words(w: Permutation) -> frozenset[ReducedWord]:
    if w.is_identity():
        return frozenset({()})
    out = set()
    for d in w.descents():
        for rest in _reduced_words(w.swap(d)):
            out.add((d,) + rest)
    return frozenset(out)


def reduced_words(w: Permutation) -> frozenset[ReducedWord]:
    """All index sequences ``(i_1, ..., i_l)`` with ``w = s_{i_l} ... s_{i_1}``.

    ``i_1`` is always a descent of ``w``; the rest is a reduced word of
    ``w s_{i_1}``.
    """
    return _reduced_words(w)


def is_reduced_word(word: Sequence[int], w: Permutation | None = None) -> bool:
    target = apply_word(word)
    if w is not None and target != w:
        return False
    return target.inv() == len(word)


def parse_composition(text: str) -> WeakComposition:
    """Read ``"[0,2,0,3]"``, ``"0,2,0,3"`` or ``"()"`` / ``"[]"``."""
    t = text.strip().strip("[]()").strip()
    if not t:
        return ()
    return weak(int(x) for x in t.split(","))
