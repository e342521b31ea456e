"""Stanley symmetric functions and the statistics that control stabilization.

Each closed-form statistic is paired with a brute-force oracle that finds
the stabilization level by direct comparison of expansions.
"""

from __future__ import annotations

from collections import Counter
from math import comb
from typing import Sequence

from .core import (
    Permutation,
    descent_composition,
    embed_left,
    flatten,
    pad,
    reduced_words,
    weak,
)
from .pipedreams import enumerate_qpd, eta, schubert_to_fundamental_slide
from .polynomial import Expansion
from .products import (
    encode_words,
    fundamental_qsym_product,
    schubert_product_slide,
    shuffle_set,
    shuffle_words,
)


def _flat_expansion(e: Expansion) -> Expansion:
    acc: Counter = Counter()
    for idx, c in e.terms.items():
        acc[flatten(idx)] += c
    return Expansion(dict(acc), "fundamental-qsym")


def stable_level(w: Permutation) -> int:
    """``max(eta(w), 0)``, with the identity already stable."""
    return 0 if w.is_identity() else max(eta(w), 0)


# ---------------------------------------------------------------------------
# Stanley symmetric functions
# ---------------------------------------------------------------------------

def stanley_via_reduced_words(w: Permutation) -> Expansion:
    return Expansion(Counter(descent_composition(s) for s in reduced_words(w)), "fundamental-qsym")


def stanley_via_stable_slide(w: Permutation) -> Expansion:
    return _flat_expansion(schubert_to_fundamental_slide(embed_left(w, stable_level(w))))


def slide_expansion_stabilization(w: Permutation, m_max: int = 10) -> int | None:
    """Smallest ``m`` whose slide expansion of ``S_{1^m x w}`` is reproduced one level up."""
    prev = schubert_to_fundamental_slide(w)
    for m in range(m_max + 1):
        nxt = schubert_to_fundamental_slide(embed_left(w, m + 1))
        if _shifted_equal(prev, nxt):
            return m
        prev = nxt
    return None


# ---------------------------------------------------------------------------
# zeta on compositions
# ---------------------------------------------------------------------------

def zeta_strong(alpha: Sequence[int], beta: Sequence[int]) -> int:
    alpha, beta = tuple(alpha), tuple(beta)
    return min(sum(alpha) + len(beta), len(alpha) + sum(beta))


def max_shuffle_runs(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """Oracle for ``zeta_strong``: most runs over shuffles of representative words."""
    A = tuple(x for j, p in enumerate(alpha) for x in [2 * (len(alpha) - j) + 1] * p)
    B = tuple(x for j, p in enumerate(beta) for x in [2 * (len(beta) - j) + 2] * p)
    return max(len(descent_composition(C)) for C in shuffle_words(A, B))


def _run_of_last(C: Sequence[int], letters: set[int]) -> int:
    run, last = 1, 0
    for t, ch in enumerate(C):
        if t and ch < C[t - 1]:
            run += 1
        if ch in letters:
            last = run
    return last


def _epsilon(X: Sequence[int], Y: Sequence[int]) -> int:
    """1 unless some shuffle with the most runs ends its last run with a letter of X."""
    letters = set(X)
    words = list(shuffle_words(X, Y))
    top = max(len(descent_composition(C)) for C in words)
    for C in words:
        if len(descent_composition(C)) == top and _run_of_last(C, letters) == top:
            return 0
    return 1


def _sides(a, b):
    a, b = weak(a), weak(b)
    n = max(len(a), len(b))
    a, b = pad(a, n), pad(b, n)
    A, B = encode_words(a, b)
    # (composition, its encoded word, the other composition, the other word)
    return n, ((a, A, b, B), (b, B, a, A))


def _prefix_word(x, word, i) -> tuple[int, ...]:
    return word[: sum(x[:i])]


def zeta_weak(a, b) -> int:
    """Number of zeros to prepend before the slide product of ``a`` and ``b`` is stable.

    For every nonzero part ``x_i`` of either argument, the last letter coming
    from ``x_i`` can land in run ``zeta_strong(flat(x_1..x_i), flat(y)) - eps``
    at the latest, and it has to sit in run ``i`` or earlier.
    """
    n, sides = _sides(a, b)
    best = 0
    for x, X, y, Y in sides:
        for i in range(1, n + 1):
            if x[i - 1] == 0:
                continue
            prefix = _prefix_word(x, X, i)
            reach = zeta_strong(flatten(x[:i]), flatten(y)) - _epsilon(prefix, Y)
            best = max(best, reach - i)
    return best


def zeta_weak_by_runs(a, b) -> int:
    """Same quantity, maximizing the run of each last letter over all shuffles."""
    n, sides = _sides(a, b)
    best = 0
    for x, X, y, Y in sides:
        for i in range(1, n + 1):
            if x[i - 1] == 0:
                continue
            prefix = _prefix_word(x, X, i)
            letters = set(prefix)
            reach = max(_run_of_last(C, letters) for C in shuffle_words(prefix, Y))
            best = max(best, reach - i)
    return best


def slide_product_stabilization_profile(a, b, m_max: int) -> tuple[int, ...]:
    """``#SS(0^m x a, 0^m x b)`` for ``m = 0..m_max``."""
    a, b = weak(a), weak(b)
    n = max(len(a), len(b))
    a, b = pad(a, n), pad(b, n)
    return tuple(len(shuffle_set((0,) * m + a, (0,) * m + b)) for m in range(m_max + 1))


def slide_product_stabilization_oracle(a, b, m_max: int = 20) -> int | None:
    """Smallest ``m`` with every shuffle admitted, or None."""
    a, b = weak(a), weak(b)
    total = comb(sum(a) + sum(b), sum(a))
    n = max(len(a), len(b))
    a, b = pad(a, n), pad(b, n)
    for m in range(m_max + 1):
        if len(shuffle_set((0,) * m + a, (0,) * m + b)) == total:
            return m
    return None


# ---------------------------------------------------------------------------
# zeta on permutations
# ---------------------------------------------------------------------------

def zeta_perm(u: Permutation, v: Permutation) -> int:
    """``max(inv(u) + eta(v), inv(v) + eta(u))``; 0 when either factor is 1.

    This is an upper bound for the stabilization level. It may be negative
    when both factors are already stable.
    """
    if u.is_identity() or v.is_identity():
        return 0
    return max(u.inv() + eta(v), v.inv() + eta(u))


def zeta_perm_exact(u: Permutation, v: Permutation) -> int:
    """Stabilization level assembled from QPD weights at the stable level.

    Lift both factors to ``1^e x -`` with ``e`` the larger stable level, then
    add the worst ``zeta_weak`` over pairs of QPD weights.
    """
    if u.is_identity() or v.is_identity():
        # multiplying by 1 leaves only the other factor's own stabilization
        return stable_level(v if u.is_identity() else u)
    e = max(stable_level(u), stable_level(v))
    uu, vv = embed_left(u, e), embed_left(v, e)
    n = max(len(uu.one_line), len(vv.one_line)) - 1
    left = {q.weight(n) for q in enumerate_qpd(uu)}
    right = {q.weight(n) for q in enumerate_qpd(vv)}
    worst = max(zeta_weak(p, q) for p in left for q in right)
    if worst == 0:
        # already stable at level e; look for the first stable level below it
        for m in range(e):
            if _product_step_stable(u, v, m):
                return m
    return e + worst


def _product_level(u: Permutation, v: Permutation, m: int, threads: int = 1) -> Expansion:
    return schubert_product_slide(embed_left(u, m), embed_left(v, m), threads)


def _shifted_equal(lo: Expansion, hi: Expansion) -> bool:
    shifted = Expansion({(0,) + i: c for i, c in lo.terms.items()}, lo.basis)
    n = max((len(i) for i in list(hi.terms) + list(shifted.terms)), default=0)
    return hi.padded(n) == shifted.padded(n)


def _product_step_stable(u, v, m, threads: int = 1) -> bool:
    return _shifted_equal(_product_level(u, v, m, threads), _product_level(u, v, m + 1, threads))


def schubert_product_stabilization_oracle(u: Permutation, v: Permutation, m_max: int,
                                          threads: int = 1) -> int | None:
    """Smallest ``m <= m_max`` whose product expansion is reproduced one level up."""
    lo = _product_level(u, v, 0, threads)
    for m in range(m_max + 1):
        hi = _product_level(u, v, m + 1, threads)
        if _shifted_equal(lo, hi):
            return m
        lo = hi
    return None


def stanley_product(u: Permutation, v: Permutation, threads: int = 1) -> Expansion:
    """``S_u S_v`` in the fundamental quasisymmetric basis via a stabilized slide product."""
    level = max(zeta_perm(u, v), stable_level(u), stable_level(v))
    return _flat_expansion(_product_level(u, v, level, threads))


def stanley_product_via_shuffles(u: Permutation, v: Permutation) -> Expansion:
    acc: Counter = Counter()
    for alpha, c1 in stanley_via_reduced_words(u).terms.items():
        for beta, c2 in stanley_via_reduced_words(v).terms.items():
            for gamma, c3 in fundamental_qsym_product(alpha, beta).items():
                acc[gamma] += c1 * c2 * c3
    return Expansion(dict(acc), "fundamental-qsym")
