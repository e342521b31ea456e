"""Named self-check suites for the command line ``verify`` subcommand.

Each suite returns a list of ``(label, passed, detail)`` triples. The
checks use small ranges so the whole run stays interactive; the test
suite covers the larger ranges.
"""

from __future__ import annotations

from itertools import product
from typing import Callable

from .core import (
    Permutation,
    all_permutations,
    descent_composition,
    flatten,
    grassmannian,
    reduced_words,
    weak_compositions,
)
from .pipedreams import (
    destandardize_pd,
    enumerate_pipe_dreams,
    enumerate_qpd,
    eta,
    qpd_count_profile,
    schubert_polynomial,
    schubert_to_fundamental_slide,
    sit,
    standardize_pd,
)
from .polynomial import (
    Expansion,
    Polynomial,
    expand_fundamental_qsym,
    expand_fundamental_slide,
    expand_monomial_slide,
    fundamental_slide_to_monomial_slide,
    to_fundamental_slide_basis,
    to_monomial_slide_basis,
)
from .products import (
    quasi_shuffle,
    quasi_slide_product,
    schubert_product_slide,
    slide_expansion_to_schubert,
    slide_product,
)
from .stability import (
    slide_product_stabilization_profile,
    stanley_via_reduced_words,
    stanley_via_stable_slide,
    zeta_perm,
    zeta_strong,
    zeta_weak,
)
from .tableaux import (
    destandardize_tableau,
    enumerate_qyt,
    enumerate_ssyt,
    enumerate_syt,
    partitions_of,
    schur_via_qyt,
    schur_via_ssyt,
)

P = Permutation.parse
Check = tuple[str, bool, str]


def _fs(*pairs) -> Expansion:
    return Expansion(dict(pairs), "fundamental-slide")


def counts() -> list[Check]:
    cases = [
        ("SSYT_3(3,2)", len(enumerate_ssyt((3, 2), 3)), 15),
        ("SSYT_4(3,2)", len(enumerate_ssyt((3, 2), 4)), 60),
        ("SYT(3,2)", len(enumerate_syt((3, 2))), 5),
        ("QYT_3(3,2)", len(enumerate_qyt((3, 2), 3)), 5),
        ("PD(146235)", len(enumerate_pipe_dreams(P("146235"))), 15),
        ("QPD(146235)", len(enumerate_qpd(P("146235"))), 5),
        ("PD(135264)", len(enumerate_pipe_dreams(P("135264"))), 25),
        ("QPD(135264)", len(enumerate_qpd(P("135264"))), 5),
        ("QPD(24153)", len(enumerate_qpd(P("24153"))), 3),
        ("R(24153)", len(reduced_words(P("24153"))), 5),
    ]
    return [(name, got == want, f"{got} (want {want})") for name, got, want in cases]


def expansions() -> list[Check]:
    out = []
    got = schubert_to_fundamental_slide(P("146235"))
    want = _fs(((2, 2, 1, 0, 0), 1), ((1, 3, 1, 0, 0), 1), ((1, 2, 2, 0, 0), 1),
               ((0, 3, 2, 0, 0), 1), ((0, 2, 3, 0, 0), 1))
    out.append(("S_146235 in fundamental slides", got == want, str(got)))
    got = schubert_to_fundamental_slide(P("135264"))
    want = _fs(((1, 1, 2, 0, 0), 1), ((1, 2, 1, 0, 0), 1), ((0, 2, 2, 0, 0), 1),
               ((0, 2, 1, 0, 1), 1), ((0, 1, 2, 0, 1), 1))
    out.append(("S_135264 in fundamental slides", got == want, str(got)))
    got = fundamental_slide_to_monomial_slide((0, 2, 0, 3))
    idx = {(0, 2, 0, 3), (0, 2, 1, 2), (0, 2, 2, 1), (1, 1, 0, 3), (1, 1, 1, 2), (1, 1, 2, 1), (2, 1, 1, 1)}
    ok = set(got.terms) == idx and got.is_nonnegative() and got.total() == 7
    out.append(("F_(0,2,0,3) in monomial slides", ok, str(got)))
    n_mon = len(expand_fundamental_slide((0, 2, 0, 3)))
    out.append(("F_(0,2,0,3) monomials", n_mon == 18, str(n_mon)))
    poly, exp = schur_via_qyt((3, 2), 2)
    ok = exp == Expansion({(3, 2): 1, (2, 3): 1}, "fundamental-qsym") and poly == schur_via_ssyt((3, 2), 2)
    out.append(("s_(3,2)(x1,x2)", ok, str(exp)))
    got = schubert_to_fundamental_slide(P("24153"))
    want = _fs(((1, 2, 0, 1), 1), ((2, 1, 0, 1), 1), ((2, 2, 0, 0), 1))
    out.append(("S_24153 in fundamental slides", got == want, str(got)))
    return out


def products() -> list[Check]:
    out = []
    got = quasi_shuffle((2, 3), (1, 1))
    want = {(2, 3, 1, 1), (2, 1, 3, 1), (2, 1, 1, 3), (2, 1, 4), (2, 4, 1), (1, 2, 3, 1), (1, 2, 1, 3),
            (1, 2, 4), (1, 1, 2, 3), (3, 3, 1), (3, 1, 3), (3, 4)}
    # the product also contains 133 = 1.[2+1].3
    out.append(("23 quasi-shuffle 11", set(got) == want | {(1, 3, 3)} and set(got.values()) == {1},
                 str(len(got))))
    got = quasi_slide_product((0, 2, 0, 3), (1, 0, 0, 1))
    want = {(1, 2, 0, 4), (1, 2, 1, 3), (1, 3, 0, 3), (3, 0, 0, 4), (3, 0, 1, 3), (1, 2, 3, 1), (3, 0, 3, 1)}
    out.append(("quasi-slide product", set(got) == want and sum(got.values()) == 7, str(len(got))))
    got = slide_product((0, 2, 0, 3), (1, 0, 0, 1))
    want = {(3, 0, 0, 4), (2, 1, 0, 4), (1, 2, 0, 4), (3, 0, 3, 1), (2, 1, 3, 1), (1, 2, 3, 1), (3, 0, 2, 2),
            (2, 1, 2, 2), (1, 2, 2, 2), (3, 0, 1, 3), (2, 1, 1, 3), (1, 2, 1, 3), (2, 2, 0, 3), (1, 3, 0, 3)}
    out.append(("slide product", set(got) == want and sum(got.values()) == 14, str(len(got))))
    e = schubert_product_slide(P("24153"), P("2431"))
    want_s = Expansion({P(w): 1 for w in ("362415", "45231", "45312", "364125", "462135")}, "schubert")
    got_s = slide_expansion_to_schubert(e, positive=True)
    out.append(("S_24153 * S_2431", got_s == want_s, str(got_s)))
    return out


def stability() -> list[Check]:
    out = [
        ("eta(354162)", eta(P("354162")) == 4, str(eta(P("354162")))),
        ("eta(12576384)", eta(P("12576384")) == 2, str(eta(P("12576384")))),
        ("zeta((2,3),(1,1))", zeta_strong((2, 3), (1, 1)) == 4, str(zeta_strong((2, 3), (1, 1)))),
        ("zeta((0,2,0,3),(1,0,0,1))", zeta_weak((0, 2, 0, 3), (1, 0, 0, 1)) == 1,
         str(zeta_weak((0, 2, 0, 3), (1, 0, 0, 1)))),
        ("zeta(24153,21534)", zeta_perm(P("24153"), P("21534")) == 4,
         str(zeta_perm(P("24153"), P("21534")))),
    ]
    want = Expansion({(2, 2): 1, (2, 1, 1): 1, (1, 2, 1): 2, (1, 1, 2): 1}, "fundamental-qsym")
    a, b = stanley_via_reduced_words(P("24153")), stanley_via_stable_slide(P("24153"))
    out.append(("Stanley S_24153 both routes", a == want and b == want, f"{a} | {b}"))
    return out


def oracles() -> list[Check]:
    out = []
    bad = [w for w in all_permutations(4)
           if schubert_polynomial(w) != schubert_to_fundamental_slide(w).to_polynomial()]
    out.append(("PD = QPD slides on S_4", not bad, f"{len(bad)} failures"))
    bad = []
    for n in range(1, 4):
        for a in product(range(3), repeat=n):
            for b in product(range(3), repeat=n):
                if sum(a) + sum(b) > 4:
                    continue
                lhs = expand_monomial_slide(a) * expand_monomial_slide(b)
                rhs = Expansion(dict(quasi_slide_product(a, b)), "monomial-slide").to_polynomial()
                lhs2 = expand_fundamental_slide(a) * expand_fundamental_slide(b)
                rhs2 = Expansion(dict(slide_product(a, b)), "fundamental-slide").to_polynomial()
                if lhs != rhs or lhs2 != rhs2:
                    bad.append((a, b))
    out.append(("product rules vs multiplication", not bad, f"{len(bad)} failures"))
    perms = all_permutations(3)
    bad = [(u, v) for u in perms for v in perms
           if schubert_product_slide(u, v).to_polynomial() != schubert_polynomial(u) * schubert_polynomial(v)]
    out.append(("Schubert products on S_3", not bad, f"{len(bad)} failures"))
    bad = []
    for n in range(1, 4):
        for size in range(0, 4):
            for a in weak_compositions(n, size):
                if to_monomial_slide_basis(expand_monomial_slide(a)) != Expansion({a: 1}, "monomial-slide"):
                    bad.append(a)
                if to_fundamental_slide_basis(expand_fundamental_slide(a)) != Expansion({a: 1}, "fundamental-slide"):
                    bad.append(a)
    out.append(("basis round trips", not bad, f"{len(bad)} failures"))
    bad = [(lam, n) for k in range(0, 4) for lam in partitions_of(k) for n in range(max(len(lam), 1), 4)
           if schubert_polynomial(grassmannian(lam, n)) != schur_via_ssyt(lam, n)]
    out.append(("Grassmannian Schubert = Schur", not bad, f"{len(bad)} failures"))
    return out


def profiles() -> list[Check]:
    out = []
    got = qpd_count_profile(P("24153"), 3)
    out.append(("QPD profile of 24153", got == (3, 5, 5, 5), str(got)))
    got = slide_product_stabilization_profile((0, 2, 0, 3), (1, 0, 0, 1), 2)
    out.append(("shuffle-set profile", got == (14, 21, 21), str(got)))
    bad = []
    for w in all_permutations(4):
        if w.is_identity():
            continue
        t = max(eta(w), 0)
        prof = qpd_count_profile(w, t + 2)
        r = len(reduced_words(w))
        ok = all(x < y for x, y in zip(prof[:t], prof[1:t + 1])) and all(x == r for x in prof[t:])
        if not ok:
            bad.append(w)
    out.append(("S_4 profiles", not bad, f"{len(bad)} failures"))
    return out


def maps() -> list[Check]:
    out = []
    bad = 0
    order_bad = 0
    for w in all_permutations(4):
        for s in reduced_words(w):
            if standardize_pd(sit(s)) != s:
                bad += 1
        for q in enumerate_qpd(w):
            if sit(standardize_pd(q)) != q:
                bad += 1
            if flatten(q.weight()) != tuple(reversed(descent_composition(standardize_pd(q)))):
                order_bad += 1
    out.append(("std and sit inverse on S_4", bad == 0, f"{bad} failures"))
    out.append(("flat(wt) = reversed Des(std) on QPD(S_4)", order_bad == 0, f"{order_bad} mismatches"))
    ok = True
    for w in all_permutations(4):
        fibres: dict = {}
        for p in enumerate_pipe_dreams(w):
            fibres.setdefault(destandardize_pd(p), []).append(p)
        if set(fibres) != set(enumerate_qpd(w)):
            ok = False
        for q, ps in fibres.items():
            gen = Polynomial({p.weight(): 1 for p in ps})
            if gen != expand_fundamental_slide(q.weight()):
                ok = False
    out.append(("pipe dream destandardization fibres", ok, ""))
    ok = True
    for lam, n in (((3, 2), 3), ((2, 1), 3), ((2, 2), 3)):
        fibres = {}
        for t in enumerate_ssyt(lam, n):
            fibres.setdefault(destandardize_tableau(t), []).append(t)
        if set(fibres) != set(enumerate_qyt(lam, n)):
            ok = False
        for q, ts in fibres.items():
            gen = Polynomial({}, n)
            for t in ts:
                gen = gen + Polynomial.monomial(t.weight(n))
            if gen != expand_fundamental_qsym(flatten(q.weight(n)), n):
                ok = False
    out.append(("tableau destandardization fibres", ok, ""))
    return out


SUITES: dict[str, Callable[[], list[Check]]] = {
    "counts": counts,
    "expansions": expansions,
    "products": products,
    "stability": stability,
    "oracles": oracles,
    "profiles": profiles,
    "maps": maps,
}


def run_suite(name: str) -> list[Check]:
    if name == "all":
        return [c for fn in SUITES.values() for c in fn()]
    return SUITES[name]()
