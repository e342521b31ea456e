import json
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slidepoly.core import compositions_of, dominates, flatten, pad, refines, weak_compositions
from slidepoly.polynomial import (
    Expansion,
    Polynomial,
    expand_fundamental_qsym,
    expand_fundamental_slide,
    expand_monomial_qsym,
    expand_monomial_slide,
    fundamental_slide_to_monomial_slide,
    is_quasisymmetric,
    is_symmetric,
    multiply,
    quasisymmetric_in,
    sum_polynomials,
    term_key,
    to_fundamental_qsym_basis,
    to_fundamental_slide_basis,
    to_monomial_slide_basis,
)

X = Polynomial.monomial

small_weak = st.integers(1, 4).flatmap(lambda n: st.tuples(*[st.integers(0, 2)] * n))


def brute_slide(a, refine):
    """Sum of x^b over all b of length len(a) by direct filtering."""
    n = len(a)
    terms = {}
    for b in product(range(sum(a) + 1), repeat=n):
        if sum(b) != sum(a) or not dominates(b, a):
            continue
        ok = refines(flatten(b), flatten(a)) if refine else flatten(b) == flatten(a)
        if ok:
            terms[b] = 1
    return Polynomial(terms, n)


def poly_from_strings(n, *exps):
    return Polynomial({e: 1 for e in exps}, n)


# arithmetic

def test_arithmetic_basics():
    x1, x2 = Polynomial.variable(1, 2), Polynomial.variable(2, 2)
    assert x1 * x2 == X((1, 1))
    assert x1 * 1 == x1
    assert (x1 + x2) ** 2 == X((2, 0)) + X((1, 1)) * 2 + X((0, 2))
    assert x1 - x1 == Polynomial.zero(2)
    assert multiply(x1 + x2, x1 - x2) == X((2, 0)) - X((0, 2))
    assert 3 - x1 == -x1 + 3


def test_zero_coefficients_are_dropped():
    p = Polynomial({(1, 0): 0, (0, 1): 2}, 2)
    assert p.terms == {(0, 1): 2}
    assert (p - p).terms == {}


def test_equality_ignores_trailing_variables():
    assert X((1, 2)) == X((1, 2, 0, 0))
    assert hash(X((1, 2))) == hash(X((1, 2, 0)))


def test_evaluate_and_degree():
    f = X((2, 1)) * 3 + X((0, 1))
    assert f.evaluate((2, 5)) == 3 * 4 * 5 + 5
    assert f.degree() == 3


def test_polynomial_json_round_trip():
    f = expand_fundamental_slide((0, 2, 0, 3)) * 7 - X((5, 0, 0, 0))
    data = json.loads(f.to_json())
    assert data["nvars"] == 4
    assert all(isinstance(t["coeff"], str) for t in data["terms"])
    keys = [term_key(tuple(t["exp"])) for t in data["terms"]]
    assert keys == sorted(keys)
    assert Polynomial.from_dict(data) == f


def test_term_order_refined_by_dominance():
    for n in range(1, 6):
        comps = list(weak_compositions(n, 3))
        for a, b in product(comps, repeat=2):
            if a != b and dominates(b, a):
                # the index of a slide polynomial is its term-order minimum
                assert term_key(b) > term_key(a)


# quasisymmetric bases

def test_monomial_qsym_examples():
    assert expand_monomial_qsym((2, 3), 3) == poly_from_strings(3, (2, 3, 0), (2, 0, 3), (0, 2, 3))
    assert expand_monomial_qsym((), 3) == Polynomial.one(3)
    assert expand_monomial_qsym((1, 1, 1), 2) == Polynomial.zero(2)


def test_fundamental_qsym_examples():
    want = sum_polynomials(expand_monomial_qsym(b, 3) for b in [(2, 3), (2, 2, 1), (2, 1, 2), (1, 1, 3)])
    assert expand_fundamental_qsym((2, 3), 3) == want
    assert expand_fundamental_qsym((4,), 1) == X((4,))
    assert expand_fundamental_qsym((1, 1), 3) == poly_from_strings(3, (1, 1, 0), (1, 0, 1), (0, 1, 1))


def test_qsym_predicates():
    m = expand_monomial_qsym((2, 3), 3)
    assert is_quasisymmetric(m)
    assert not is_symmetric(m)
    assert m.coefficient((3, 2, 0)) == 0 and m.coefficient((2, 3, 0)) == 1
    assert not is_quasisymmetric(expand_monomial_slide((0, 2, 0, 3)))
    one = Polynomial.one(3)
    assert is_symmetric(one) and is_quasisymmetric(one)


def test_fundamental_qsym_peel_round_trip():
    for k in range(1, 5):
        for alpha in compositions_of(k):
            for n in range(len(alpha), 5):
                e = to_fundamental_qsym_basis(expand_fundamental_qsym(alpha, n))
                assert e == Expansion({alpha: 1}, "fundamental-qsym")


# slide polynomials

def test_monomial_slide_examples():
    want = poly_from_strings(4, (2, 3, 0, 0), (2, 0, 3, 0), (2, 0, 0, 3), (0, 2, 3, 0), (0, 2, 0, 3))
    assert expand_monomial_slide((0, 2, 0, 3)) == want
    assert len(want) == 5
    assert expand_monomial_slide((0, 0, 2, 3)) == expand_monomial_qsym((2, 3), 4)
    assert len(expand_monomial_slide((0, 0, 2, 3))) == 6
    assert expand_monomial_slide((0, 0, 0)) == Polynomial.one(3)


def test_fundamental_slide_examples():
    f = expand_fundamental_slide((0, 2, 0, 3))
    assert len(f) == 18 and set(f.terms.values()) == {1}
    assert expand_fundamental_slide((5,)) == X((5,))
    assert expand_fundamental_slide((0, 1, 1)) == poly_from_strings(3, (0, 1, 1), (1, 0, 1), (1, 1, 0))


def test_fundamental_slide_18_monomials_listed():
    want = {
        (2, 3, 0, 0), (2, 0, 3, 0), (2, 0, 0, 3), (0, 2, 3, 0), (0, 2, 0, 3),
        (2, 2, 1, 0), (2, 2, 0, 1), (2, 0, 2, 1), (0, 2, 2, 1),
        (2, 1, 2, 0), (2, 1, 0, 2), (2, 0, 1, 2), (0, 2, 1, 2),
        (1, 1, 3, 0), (1, 1, 0, 3),
        (2, 1, 1, 1), (1, 1, 2, 1), (1, 1, 1, 2),
    }
    assert set(expand_fundamental_slide((0, 2, 0, 3)).terms) == want


@pytest.mark.parametrize("size", range(0, 5))
def test_slides_match_brute_force(size):
    for n in range(1, 5):
        for a in weak_compositions(n, size):
            assert expand_monomial_slide(a) == brute_slide(a, refine=False)
            assert expand_fundamental_slide(a) == brute_slide(a, refine=True)


def test_fundamental_to_monomial_slide_example():
    want = {(0, 2, 0, 3), (0, 2, 1, 2), (0, 2, 2, 1), (1, 1, 0, 3), (1, 1, 1, 2), (1, 1, 2, 1), (2, 1, 1, 1)}
    e = fundamental_slide_to_monomial_slide((0, 2, 0, 3))
    assert e == Expansion({b: 1 for b in want}, "monomial-slide")
    assert fundamental_slide_to_monomial_slide((4,)) == Expansion({(4,): 1}, "monomial-slide")


def test_fundamental_to_monomial_slide_right_justified_is_qsym_refinements():
    e = fundamental_slide_to_monomial_slide((0, 2, 3))
    assert set(e.terms) == {(0, 2, 3), (2, 2, 1), (2, 1, 2), (1, 1, 3)}
    assert e.to_polynomial() == expand_fundamental_slide((0, 2, 3)) == expand_fundamental_qsym((2, 3), 3)


def test_fundamental_to_monomial_slide_re_expands():
    for n in range(1, 6):
        for size in range(0, 7 - n if n > 1 else 7):
            for a in weak_compositions(n, size):
                e = fundamental_slide_to_monomial_slide(a)
                assert e.is_nonnegative()
                assert e.to_polynomial() == expand_fundamental_slide(a)


def test_basis_round_trips():
    for n in range(1, 6):
        for size in range(0, 7):
            if n ** size > 20000:
                continue
            for a in weak_compositions(n, size):
                assert to_monomial_slide_basis(expand_monomial_slide(a)) == Expansion({a: 1}, "monomial-slide")
                assert to_fundamental_slide_basis(expand_fundamental_slide(a)) == Expansion({a: 1}, "fundamental-slide")


def test_monomial_slide_peel_of_listed_monomials():
    f = poly_from_strings(4, (2, 3, 0, 0), (2, 0, 3, 0), (2, 0, 0, 3), (0, 2, 3, 0), (0, 2, 0, 3))
    assert to_monomial_slide_basis(f) == Expansion({(0, 2, 0, 3): 1}, "monomial-slide")


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(small_weak, st.integers(-3, 3)), max_size=4))
def test_peel_reconstructs_arbitrary_polynomials(pairs):
    n = max((len(a) for a, _ in pairs), default=1)
    f = Polynomial({}, n)
    for a, c in pairs:
        f = f + X(pad(a, n)) * c
    for peel, expand in ((to_monomial_slide_basis, expand_monomial_slide),
                         (to_fundamental_slide_basis, expand_fundamental_slide)):
        e = peel(f)
        back = Polynomial({}, n)
        for idx, c in e.terms.items():
            back = back + expand(idx) * c
        assert back == f


def test_lift_lemmas():
    for n in range(1, 5):
        for size in range(1, 5):
            for a in weak_compositions(n, size):
                k = max(i + 1 for i, p in enumerate(a) if p)
                quasi_flat = all(a[i] for i in range(k) if i >= k - len(flatten(a)))
                m, f = expand_monomial_slide(a), expand_fundamental_slide(a)
                assert quasisymmetric_in(m, k) == quasi_flat
                assert quasisymmetric_in(f, k) == quasi_flat
                if quasi_flat:
                    assert m == expand_monomial_qsym(flatten(a), k)
                    assert f == expand_fundamental_qsym(flatten(a), k)


def test_slides_stable_under_trailing_zeros():
    for a in [(0, 2, 0, 3), (1, 0, 2), (0, 1, 1)]:
        for m in range(4):
            longer = a + (0,) * m
            assert expand_monomial_slide(longer) == expand_monomial_slide(a).padded(len(longer))
            assert expand_fundamental_slide(longer) == expand_fundamental_slide(a).padded(len(longer))


# expansions

def test_expansion_arithmetic_and_str():
    e = Expansion({(0, 2): 1, (1, 1): 2}, "fundamental-slide")
    assert str(e) == "F(0,2) + 2*F(1,1)" or str(e) == "2*F(1,1) + F(0,2)"
    assert (e - e).terms == {}
    assert (e * 3)[(1, 1)] == 6
    with pytest.raises(ValueError):
        e + Expansion({(1,): 1}, "monomial-slide")


def test_expansion_json_round_trip():
    e = fundamental_slide_to_monomial_slide((0, 2, 0, 3))
    data = json.loads(e.to_json())
    assert data["basis"] == "monomial-slide"
    assert Expansion.from_dict(data) == e


def test_expansion_requires_nvars_for_qsym():
    e = Expansion({(1, 1): 1}, "fundamental-qsym")
    with pytest.raises(ValueError):
        e.to_polynomial()
    assert e.to_polynomial(3) == expand_fundamental_qsym((1, 1), 3)
