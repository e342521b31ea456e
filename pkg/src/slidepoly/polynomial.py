"""Sparse integer polynomials and the slide/quasisymmetric bases.

``Polynomial`` is the exact oracle every combinatorial rule is checked
against. ``Expansion`` is a formal integer combination of basis elements
tagged with the basis it lives in.
"""

from __future__ import annotations

import json
from collections import defaultdict
from itertools import permutations
from typing import Callable, Iterable, Mapping

from .core import (
    DomainError,
    Permutation,
    WeakComposition,
    dominates,
    flatten,
    pad,
    placements,
    refinements,
    strongly_dominates,
    trim,
    weak,
)

BASES = (
    "monomial",
    "monomial-slide",
    "fundamental-slide",
    "schubert",
    "monomial-qsym",
    "fundamental-qsym",
    "schur",
)


def term_key(a: WeakComposition) -> tuple:
    """Sort key for the canonical term order.

    Graded first; within a degree ``a > b`` iff the last nonzero entry of
    ``a - b`` is negative. Dominance refines this order, so the minimal
    monomial of a slide polynomial is its index.
    """
    return (sum(a), tuple(-x for x in reversed(a)))


class Polynomial:
    """An element of Z[x_1, ..., x_n] stored as ``{exponent: coefficient}``."""

    __slots__ = ("nvars", "terms")

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None, nvars: int | None = None):
        clean: dict[tuple[int, ...], int] = {}
        width = 0
        for exp, c in (terms or {}).items():
            exp = weak(exp)
            width = max(width, len(exp))
            if c:
                clean[exp] = clean.get(exp, 0) + int(c)
        n = width if nvars is None else nvars
        if n < width:
            # allow trailing zeros beyond nvars, nothing else
            for exp in clean:
                if any(exp[n:]):
                    raise DomainError(f"exponent {exp} needs more than {n} variables")
        self.nvars = n
        self.terms = {}
        for exp, c in clean.items():
            if c:
                e = pad(exp[:n], n)
                self.terms[e] = self.terms.get(e, 0) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int = 0) -> "Polynomial":
        return cls({}, nvars)

    @classmethod
    def one(cls, nvars: int = 0) -> "Polynomial":
        return cls({(0,) * nvars: 1}, nvars)

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1) -> "Polynomial":
        exp = tuple(exp)
        return cls({exp: coeff}, len(exp))

    @classmethod
    def variable(cls, i: int, nvars: int | None = None) -> "Polynomial":
        n = i if nvars is None else nvars
        e = [0] * n
        e[i - 1] = 1
        return cls({tuple(e): 1}, n)

    # arithmetic -------------------------------------------------------

    def padded(self, n: int) -> "Polynomial":
        if n <= self.nvars:
            return self
        return Polynomial({pad(e, n): c for e, c in self.terms.items()}, n)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial({(0,) * self.nvars: other}, self.nvars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(self.nvars, other.nvars)
        acc = dict(self.padded(n).terms)
        for e, c in other.padded(n).terms.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(acc, n)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial({e: c * other for e, c in self.terms.items()}, self.nvars)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Polynomial.one(self.nvars)
        for _ in range(k):
            out = out * self
        return out

    # comparison -------------------------------------------------------

    def _trimmed(self) -> frozenset:
        return frozenset((trim(e), c) for e, c in self.terms.items())

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial({(): other}, 0)
        if not isinstance(other, Polynomial):
            return NotImplemented
        n = max(self.nvars, other.nvars)
        return self.padded(n).terms == other.padded(n).terms

    def __hash__(self):
        return hash(self._trimmed())

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # inspection -------------------------------------------------------

    def coefficient(self, exp: Iterable[int]) -> int:
        return self.terms.get(pad(tuple(exp), self.nvars), 0)

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple[WeakComposition, int]]:
        return sorted(self.terms.items(), key=lambda t: term_key(t[0]))

    def evaluate(self, point: Iterable[int]) -> int:
        point = pad(tuple(point), self.nvars)
        total = 0
        for e, c in self.terms.items():
            m = c
            for x, k in zip(point, e):
                m *= x ** k
            total += m
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial({self}, nvars={self.nvars})"

    def to_dict(self) -> dict:
        return {
            "nvars": self.nvars,
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Polynomial":
        return cls({tuple(t["exp"]): int(t["coeff"]) for t in data["terms"]}, data["nvars"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    """Exact product; the operand with fewer variables is zero padded."""
    n = max(f.nvars, g.nvars)
    f, g = f.padded(n), g.padded(n)
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    for e1, c1 in f.terms.items():
        for e2, c2 in g.terms.items():
            acc[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    return Polynomial(acc, n)


def sum_polynomials(polys: Iterable[Polynomial], nvars: int = 0) -> Polynomial:
    acc: dict[tuple[int, ...], int] = defaultdict(int)
    polys = list(polys)
    n = max([nvars] + [p.nvars for p in polys])
    for p in polys:
        for e, c in p.padded(n).terms.items():
            acc[e] += c
    return Polynomial(acc, n)


# ---------------------------------------------------------------------------
# quasisymmetric and slide polynomials
# ---------------------------------------------------------------------------

def expand_monomial_qsym(alpha, n: int) -> Polynomial:
    alpha = tuple(alpha)
    return Polynomial({b: 1 for b in placements(alpha, n)}, n)


def expand_fundamental_qsym(alpha, n: int) -> Polynomial:
    terms = {}
    for beta in refinements(tuple(alpha), n):
        for b in placements(beta, n):
            terms[b] = 1
    return Polynomial(terms, n)


def expand_monomial_slide(a) -> Polynomial:
    """``x^b`` summed over ``b >= a`` with ``flat(b) = flat(a)``."""
    a = weak(a)
    n = len(a)
    return Polynomial({b: 1 for b in placements(flatten(a), n) if dominates(b, a)}, n)


def expand_fundamental_slide(a) -> Polynomial:
    """``x^b`` summed over ``b >= a`` with ``flat(b)`` refining ``flat(a)``."""
    a = weak(a)
    n = len(a)
    terms = {}
    for beta in refinements(flatten(a), n):
        for b in placements(beta, n):
            if dominates(b, a):
                terms[b] = 1
    return Polynomial(terms, n)


def fundamental_slide_to_monomial_slide(a) -> "Expansion":
    """Expand a fundamental slide polynomial over the monomial slides."""
    a = weak(a)
    n = len(a)
    terms = {}
    for beta in refinements(flatten(a), n):
        for b in placements(beta, n):
            if strongly_dominates(b, a):
                terms[b] = 1
    return Expansion(terms, "monomial-slide")


def is_symmetric(f: Polynomial) -> bool:
    for e, c in f.terms.items():
        for p in set(permutations(e)):
            if f.coefficient(p) != c:
                return False
    return True


def is_quasisymmetric(f: Polynomial) -> bool:
    n = f.nvars
    for e, c in f.terms.items():
        alpha = flatten(e)
        for b in placements(alpha, n):
            if f.coefficient(b) != c:
                return False
    return True


def quasisymmetric_in(f: Polynomial, k: int) -> bool:
    """Quasisymmetry in x_1..x_k for a polynomial supported on those variables."""
    if any(any(e[k:]) for e in f.terms):
        return False
    return is_quasisymmetric(Polynomial({e[:k]: c for e, c in f.terms.items()}, k))


# ---------------------------------------------------------------------------
# expansions
# ---------------------------------------------------------------------------

class Expansion:
    """A formal integer combination of basis elements.

    Indices are tuples of ints (weak or strong compositions, partitions) or
    ``Permutation`` objects for the Schubert basis.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, terms: Mapping | None = None, basis: str = "fundamental-slide"):
        if basis not in BASES:
            raise DomainError(f"unknown basis {basis!r}")
        self.basis = basis
        acc: dict = {}
        for idx, c in (terms or {}).items():
            if not isinstance(idx, Permutation):
                idx = tuple(idx)
            acc[idx] = acc.get(idx, 0) + int(c)
        self.terms = {k: c for k, c in acc.items() if c}

    def _check(self, other: "Expansion"):
        if not isinstance(other, Expansion):
            return NotImplemented
        if other.basis != self.basis:
            raise DomainError(f"cannot combine {self.basis} with {other.basis}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc.get(k, 0) + c
        return Expansion(acc, self.basis)

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Expansion({i: c * k for i, c in self.terms.items()}, self.basis)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Expansion):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __getitem__(self, idx):
        if not isinstance(idx, Permutation):
            idx = tuple(idx)
        return self.terms.get(idx, 0)

    def padded(self, n: int) -> "Expansion":
        """Zero-pad composition indices to length ``n``."""
        if self.basis in ("schubert", "monomial-qsym", "fundamental-qsym", "schur"):
            return self
        return Expansion({pad(i, n): c for i, c in self.terms.items()}, self.basis)

    def sorted_terms(self) -> list:
        if self.basis == "schubert":
            key = lambda t: (t[0].inv(), t[0].one_line)
        else:
            key = lambda t: term_key(t[0])
        return sorted(self.terms.items(), key=key)

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def total(self) -> int:
        return sum(self.terms.values())

    def to_polynomial(self, nvars: int | None = None) -> Polynomial:
        """Expand every basis element into monomials and sum.

        The quasisymmetric and Schur bases need ``nvars``; the slide bases
        use the index length, and the Schubert basis uses the smallest
        number of variables that holds every term.
        """
        parts = [basis_polynomial(self.basis, idx, nvars) * c for idx, c in self.terms.items()]
        return sum_polynomials(parts, nvars or 0)

    def __str__(self) -> str:
        sym = {
            "monomial": "x^",
            "monomial-slide": "M",
            "fundamental-slide": "F",
            "schubert": "S_",
            "monomial-qsym": "M_",
            "fundamental-qsym": "F_",
            "schur": "s_",
        }[self.basis]
        if not self.terms:
            return "0"
        out = []
        for idx, c in self.sorted_terms():
            name = f"{sym}{idx}" if self.basis == "schubert" else f"{sym}{tuple(idx)}"
            name = name.replace(" ", "")
            out.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(out).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Expansion[{self.basis}]({self})"

    def to_dict(self) -> dict:
        terms = []
        for idx, c in self.sorted_terms():
            index = idx.comma() if isinstance(idx, Permutation) else list(idx)
            terms.append({"index": index, "coeff": str(c)})
        return {"basis": self.basis, "terms": terms}

    @classmethod
    def from_dict(cls, data: dict) -> "Expansion":
        basis = data["basis"]
        terms = {}
        for t in data["terms"]:
            idx = Permutation.parse(t["index"]) if basis == "schubert" else tuple(t["index"])
            terms[idx] = int(t["coeff"])
        return cls(terms, basis)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def basis_polynomial(basis: str, idx, nvars: int | None = None) -> Polynomial:
    """Monomial expansion of a single basis element."""
    if basis == "monomial":
        return Polynomial.monomial(idx)
    if basis == "monomial-slide":
        return expand_monomial_slide(idx)
    if basis == "fundamental-slide":
        return expand_fundamental_slide(idx)
    if basis == "schubert":
        from .pipedreams import schubert_polynomial

        return schubert_polynomial(idx, nvars)
    if nvars is None:
        raise DomainError(f"basis {basis} needs an explicit number of variables")
    if basis == "monomial-qsym":
        return expand_monomial_qsym(idx, nvars)
    if basis == "fundamental-qsym":
        return expand_fundamental_qsym(idx, nvars)
    if basis == "schur":
        from .tableaux import schur_polynomial

        return schur_polynomial(idx, nvars)
    raise DomainError(f"unknown basis {basis!r}")


def _peel(f: Polynomial, element: Callable[[WeakComposition], Polynomial], basis: str) -> Expansion:
    rest = f
    out: dict = {}
    budget = max(1, len(f.terms)) * 10_000
    while rest.terms:
        budget -= 1
        if budget < 0:
            raise RuntimeError("basis peel did not terminate")
        lead, c = min(rest.terms.items(), key=lambda t: term_key(t[0]))
        out[lead] = out.get(lead, 0) + c
        rest = rest - element(lead) * c
    return Expansion(out, basis)


def to_monomial_slide_basis(f: Polynomial) -> Expansion:
    return _peel(f, expand_monomial_slide, "monomial-slide")


def to_fundamental_slide_basis(f: Polynomial) -> Expansion:
    return _peel(f, expand_fundamental_slide, "fundamental-slide")


def to_fundamental_qsym_basis(f: Polynomial) -> Expansion:
    """Expand a quasisymmetric polynomial in the fundamental basis F_alpha."""
    n = f.nvars
    if not is_quasisymmetric(f):
        raise DomainError("polynomial is not quasisymmetric")
    rest = f
    out: dict = {}
    while rest.terms:
        # the left-justified exponent with the largest revlex key is the leading M
        lead = max((e for e in rest.terms if e == pad(flatten(e), n)),
                   key=lambda e: (sum(e), _coarse_first(flatten(e))))
        alpha = flatten(lead)
        c = rest.terms[lead]
        out[alpha] = out.get(alpha, 0) + c
        rest = rest - expand_fundamental_qsym(alpha, n) * c
    return Expansion(out, "fundamental-qsym")


def _coarse_first(alpha: tuple[int, ...]) -> tuple:
    # F_alpha contains M_beta only for refinements beta, which are longer;
    # peel the coarsest compositions first
    return (-len(alpha), alpha)
