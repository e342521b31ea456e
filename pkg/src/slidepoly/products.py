"""Product rules for slide polynomials, quasisymmetric functions and Schubert polynomials."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from itertools import accumulate, combinations
from typing import Iterable, Iterator, Sequence

from .core import (
    DomainError,
    Permutation,
    WeakComposition,
    code_to_permutation,
    descent_composition,
    dominates,
    flatten,
    pad,
    weak,
)
from .pipedreams import enumerate_qpd, schubert_to_fundamental_slide
from .polynomial import Expansion, term_key


class FormalSum(Counter):
    """Multiset of compositions with positive multiplicities."""

    def as_expansion(self, basis: str) -> Expansion:
        return Expansion(dict(self), basis)

    def to_dict(self, basis: str) -> dict:
        return self.as_expansion(basis).to_dict()


def _common(a, b) -> tuple[WeakComposition, WeakComposition, int]:
    a, b = weak(a), weak(b)
    n = max(len(a), len(b))
    return pad(a, n), pad(b, n), n


# ---------------------------------------------------------------------------
# quasi-shuffles
# ---------------------------------------------------------------------------

def quasi_shuffle(alpha: Sequence[int], beta: Sequence[int]) -> FormalSum:
    """Reference recursion: head of alpha, head of beta, or their sum first."""
    return FormalSum(dict(_quasi_shuffle(tuple(alpha), tuple(beta))))


@lru_cache(maxsize=None)
def _quasi_shuffle(alpha: tuple[int, ...], beta: tuple[int, ...]) -> tuple:
    if not alpha:
        return ((beta, 1),)
    if not beta:
        return ((alpha, 1),)
    acc: Counter = Counter()
    for g, c in _quasi_shuffle(alpha[1:], beta):
        acc[(alpha[0],) + g] += c
    for g, c in _quasi_shuffle(alpha, beta[1:]):
        acc[(beta[0],) + g] += c
    for g, c in _quasi_shuffle(alpha[1:], beta[1:]):
        acc[(alpha[0] + beta[0],) + g] += c
    return tuple(acc.items())


def quasi_shuffle_iterative(alpha: Sequence[int], beta: Sequence[int]) -> FormalSum:
    """Bottom-up table over suffix pairs; same output as ``quasi_shuffle``."""
    alpha, beta = tuple(alpha), tuple(beta)
    p, q = len(alpha), len(beta)
    table: list[list[Counter]] = [[Counter() for _ in range(q + 1)] for _ in range(p + 1)]
    for i in range(p, -1, -1):
        for j in range(q, -1, -1):
            if i == p or j == q:
                table[i][j][alpha[i:] + beta[j:]] = 1
                continue
            cell = table[i][j]
            for g, c in table[i + 1][j].items():
                cell[(alpha[i],) + g] += c
            for g, c in table[i][j + 1].items():
                cell[(beta[j],) + g] += c
            for g, c in table[i + 1][j + 1].items():
                cell[(alpha[i] + beta[j],) + g] += c
    return FormalSum(table[0][0])


def monomial_qsym_product(alpha, beta) -> FormalSum:
    return quasi_shuffle_iterative(alpha, beta)


def _column_merges(alpha: tuple[int, ...], beta: tuple[int, ...], limit: int) -> Iterator[tuple]:
    """Column sequences ``((x_1, y_1), ...)`` merging alpha and beta, at most ``limit`` long."""
    def rec(i: int, j: int, acc: list):
        if len(acc) > limit:
            return
        if i == len(alpha) and j == len(beta):
            yield tuple(acc)
            return
        if i < len(alpha):
            acc.append((alpha[i], 0))
            yield from rec(i + 1, j, acc)
            acc.pop()
        if j < len(beta):
            acc.append((0, beta[j]))
            yield from rec(i, j + 1, acc)
            acc.pop()
        if i < len(alpha) and j < len(beta):
            acc.append((alpha[i], beta[j]))
            yield from rec(i + 1, j + 1, acc)
            acc.pop()

    yield from rec(0, 0, [])


def quasi_shuffle_set(a, b) -> set[tuple[WeakComposition, WeakComposition]]:
    a, b, n = _common(a, b)
    out = set()
    for cols in _column_merges(flatten(a), flatten(b), n):
        ga = tuple(x for x, _ in cols)
        gb = tuple(y for _, y in cols)
        if dominates(ga, a) and dominates(gb, b):
            out.add((ga, gb))
    return out


def _place(columns: Sequence[tuple[int, int]], a, b, n: int) -> WeakComposition | None:
    return _placer(a, b, n)(columns)


def _placer(a, b, n: int):
    """Specialised two-row ``minimal_placement`` with the targets precomputed.

    Returns a function mapping a column sequence to its bump, or None when
    no zero insertion dominates ``a`` and ``b`` (the left-justified insertion
    is the most dominant one, so None also means "not admissible").
    """
    ta = list(accumulate(pad(a, n)))
    tb = list(accumulate(pad(b, n)))

    def place(columns):
        ell = len(columns)
        if ell > n:
            return None
        sa = [0]
        sb = [0]
        for x, y in columns:
            sa.append(sa[-1] + x)
            sb.append(sb[-1] + y)
        deadline = [n - 1] * ell
        need = covered = 0
        for i in range(n):
            while need <= ell and (sa[need] < ta[i] or sb[need] < tb[i]):
                need += 1
            if need > ell:
                return None
            while covered < need:
                deadline[covered] = i
                covered += 1
        c = [0] * n
        nxt = n
        for j in range(ell - 1, -1, -1):
            p = min(deadline[j], nxt - 1)
            if p < 0:
                return None
            c[p] = columns[j][0] + columns[j][1]
            nxt = p
        return tuple(c)

    return place


def _place_exhaustive(columns: Sequence[tuple[int, int]], a, b, n: int) -> WeakComposition | None:
    """Oracle: scan every zero insertion and return the unique dominance-minimum."""
    valid = []
    for pos in combinations(range(n), len(columns)):
        ca, cb, c = [0] * n, [0] * n, [0] * n
        for p, (x, y) in zip(pos, columns):
            ca[p], cb[p], c[p] = x, y, x + y
        if dominates(ca, a) and dominates(cb, b):
            valid.append(tuple(c))
    if not valid:
        return None
    minima = {c for c in valid if all(dominates(d, c) for d in valid)}
    if len(minima) != 1:
        raise AssertionError(f"no unique minimal placement among {valid}")
    return minima.pop()


def bump_quasi(a, b, gamma_a, gamma_b, exhaustive: bool = False) -> WeakComposition:
    a, b, n = _common(a, b)
    if len(gamma_a) != len(gamma_b):
        raise DomainError("gamma_a and gamma_b must have equal length")
    cols = list(zip(gamma_a, gamma_b))
    c = (_place_exhaustive if exhaustive else _place)(cols, a, b, n)
    if c is None:
        raise DomainError(f"no valid bump for {gamma_a}+{gamma_b} over {a}, {b}")
    return c


def quasi_slide_product(a, b) -> FormalSum:
    """Monomial slide structure constants for ``M_a M_b``."""
    a, b, n = _common(a, b)
    out = FormalSum()
    for ga, gb in quasi_shuffle_set(a, b):
        out[bump_quasi(a, b, ga, gb)] += 1
    return out


# ---------------------------------------------------------------------------
# shuffles
# ---------------------------------------------------------------------------

def shuffle_words(A: Sequence[int], B: Sequence[int]) -> set[tuple[int, ...]]:
    """Distinct interleavings of two words."""
    A, B = tuple(A), tuple(B)
    out = set()
    total = len(A) + len(B)
    for slots in combinations(range(total), len(B)):
        word, ia, ib = [], 0, 0
        slot_set = set(slots)
        for k in range(total):
            if k in slot_set:
                word.append(B[ib])
                ib += 1
            else:
                word.append(A[ia])
                ia += 1
        out.add(tuple(word))
    return out


def encode_words(a, b) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Odd letters for ``a`` and even letters for ``b``, largest for index 1."""
    a, b, n = _common(a, b)
    A = tuple(x for i, k in enumerate(a, 1) for x in [2 * (n - i) + 1] * k)
    B = tuple(x for i, k in enumerate(b, 1) for x in [2 * (n - i) + 2] * k)
    return A, B


def run_columns(word: Sequence[int]) -> list[tuple[int, int]]:
    """Per run of ``word``: (odd-letter count, even-letter count)."""
    cols = []
    i = 0
    for length in descent_composition(word):
        run = word[i:i + length]
        i += length
        odd = sum(1 for x in run if x % 2)
        cols.append((odd, length - odd))
    return cols


def shuffle_set(a, b) -> set[tuple[int, ...]]:
    a, b, n = _common(a, b)
    A, B = encode_words(a, b)
    out = set()
    for C in shuffle_words(A, B):
        cols = run_columns(C)
        if len(cols) > n:
            continue
        da = tuple(x for x, _ in cols)
        db = tuple(y for _, y in cols)
        if dominates(da, a) and dominates(db, b):
            out.add(C)
    return out


def bump_slide(a, b, C: Sequence[int], exhaustive: bool = False) -> WeakComposition:
    a, b, n = _common(a, b)
    cols = run_columns(C)
    c = (_place_exhaustive if exhaustive else _place)(cols, a, b, n)
    if c is None:
        raise DomainError(f"no valid bump for word {tuple(C)} over {a}, {b}")
    return c


def run_profiles(A: Sequence[int], B: Sequence[int]) -> dict[tuple, int]:
    """Count interleavings of ``A`` and ``B`` by their run columns.

    Membership in the shuffle set and the bump both depend on a shuffle
    only through its sequence of (A-count, B-count) per run.
    """
    return dict(_run_profiles(tuple(A), tuple(B), 0))


@lru_cache(maxsize=65536)
def _run_profiles(A: tuple[int, ...], B: tuple[int, ...], prev: int) -> tuple:
    # first column of every profile is the tail of the run that holds ``prev``;
    # with prev = 0 that is simply the first run
    if not A and not B:
        return ((((0, 0),), 1),)
    acc: Counter = Counter()
    for letter, rest_a, rest_b, unit in (
        (A[0] if A else None, A[1:], B, (1, 0)),
        (B[0] if B else None, A, B[1:], (0, 1)),
    ):
        if letter is None:
            continue
        for cols, k in _run_profiles(rest_a, rest_b, letter):
            head = (cols[0][0] + unit[0], cols[0][1] + unit[1])
            if letter >= prev:
                acc[(head,) + cols[1:]] += k
            else:
                acc[((0, 0), head) + cols[1:]] += k
    return tuple(acc.items())


def _bumped_profiles(a, b, n) -> Iterator[tuple[WeakComposition, int]]:
    """``(bump, multiplicity)`` over the run profiles of admissible shuffles."""
    A, B = encode_words(a, b)
    place = _placer(a, b, n)
    for cols, k in _run_profiles(A, B, 0):
        if cols == ((0, 0),):
            cols = ()  # both words empty
        c = place(cols)
        if c is not None:
            yield c, k


def shuffle_set_size(a, b) -> int:
    a, b, n = _common(a, b)
    return sum(k for _, k in _bumped_profiles(a, b, n))


def slide_product(a, b) -> FormalSum:
    """Fundamental slide structure constants for ``F_a F_b``."""
    a, b, n = _common(a, b)
    return FormalSum(dict(_slide_product(a, b, n)))


@lru_cache(maxsize=65536)
def _slide_product(a, b, n) -> tuple:
    out: Counter = Counter()
    for c, k in _bumped_profiles(a, b, n):
        out[c] += k
    return tuple(out.items())


def slide_product_by_words(a, b) -> FormalSum:
    """Reference version that walks the shuffle set word by word."""
    a, b, n = _common(a, b)
    out = FormalSum()
    for C in shuffle_set(a, b):
        out[bump_slide(a, b, C)] += 1
    return out


def qsym_words(alpha: Sequence[int], beta: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Words on disjoint alphabets with descent compositions alpha and beta."""
    k, m = len(alpha), len(beta)
    A = tuple(x for j, p in enumerate(alpha) for x in [2 * (k - j) + 1] * p)
    B = tuple(x for j, p in enumerate(beta) for x in [2 * (m - j) + 2] * p)
    return A, B


def fundamental_qsym_product(alpha, beta) -> FormalSum:
    A, B = qsym_words(tuple(alpha), tuple(beta))
    return FormalSum(descent_composition(C) for C in shuffle_words(A, B))


# ---------------------------------------------------------------------------
# Schubert products
# ---------------------------------------------------------------------------

def schubert_product_slide(u: Permutation, v: Permutation, threads: int = 1) -> Expansion:
    """``S_u S_v`` in the fundamental slide basis, summed over pairs of QPD weights."""
    n = max(len(u.one_line), len(v.one_line)) - 1
    left = [q.weight(n) for q in enumerate_qpd(u)]
    right = [q.weight(n) for q in enumerate_qpd(v)]
    pairs = [(p, q) for p in left for q in right]

    def one(pair):
        return slide_product(*pair)

    total = FormalSum()
    if threads > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(one, pairs):
                total.update(part)
    else:
        for pair in pairs:
            total.update(one(pair))
    return Expansion(dict(total), "fundamental-slide")


def slide_expansion_to_schubert(e: Expansion, positive: bool = False) -> Expansion:
    """Peel Schubert polynomials off a fundamental slide expansion.

    The term-order minimal index ``a`` must be the leading term of
    ``S_w`` with ``L(w) = a``.
    """
    if e.basis != "fundamental-slide":
        raise DomainError("expected a fundamental-slide expansion")
    n = max((len(i) for i in e.terms), default=0)
    rest = e.padded(n)
    out: dict = {}
    guard = 0
    while rest.terms:
        guard += 1
        if guard > 100_000:
            raise RuntimeError("Schubert peel did not terminate")
        lead, c = min(rest.terms.items(), key=lambda t: term_key(t[0]))
        if positive and c < 0:
            raise DomainError(f"negative Schubert coefficient at {lead}")
        w = code_to_permutation(lead)
        out[w] = out.get(w, 0) + c
        sub = schubert_to_fundamental_slide(w)
        m = max(n, max((len(i) for i in sub.terms), default=0))
        if m > n:
            n = m
            rest = rest.padded(n)
        rest = rest - sub.padded(n) * c
        rest = Expansion({pad(i, n): k for i, k in rest.terms.items()}, rest.basis)
    return Expansion(out, "schubert")


def schubert_product(u: Permutation, v: Permutation, threads: int = 1) -> Expansion:
    return slide_expansion_to_schubert(schubert_product_slide(u, v, threads), positive=True)


def sum_over(pairs: Iterable[tuple], rule) -> FormalSum:
    total = FormalSum()
    for a, b in pairs:
        total.update(rule(a, b))
    return total
