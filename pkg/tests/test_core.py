from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from slidepoly.core import (
    DomainError,
    Permutation,
    all_permutations,
    apply_word,
    code_to_permutation,
    compositions_of,
    descent_composition,
    dominates,
    embed_left,
    embed_right,
    flatten,
    grassmannian,
    is_reduced_word,
    lehmer_code,
    minimal_dominating_placement,
    pad,
    parse_composition,
    placements,
    reduced_words,
    refinements,
    refines,
    strongly_dominates,
    weak,
    weak_compositions,
)

P = Permutation.parse

weak_comps = st.lists(st.integers(0, 3), min_size=0, max_size=5).map(tuple)


def brute_inversions(w):
    v = w.one_line
    return tuple(sum(1 for j in range(i + 1, len(v)) if v[i] > v[j]) for i in range(len(v)))


def brute_strongly_dominates(b, a):
    n = max(len(a), len(b))
    b, a = pad(b, n), pad(a, n)
    if not dominates(b, a):
        return False
    return all(dominates(c, b) for c in placements(flatten(b), n) if dominates(c, a))


# compositions

def test_flatten():
    assert flatten((0, 2, 0, 3)) == (2, 3)
    assert flatten((0, 0, 0)) == ()
    assert flatten((1, 2, 3)) == (1, 2, 3)


def test_weak_rejects_negative():
    with pytest.raises(DomainError):
        weak((1, -1))


def test_dominates_examples():
    assert dominates((1, 2, 4, 0), (1, 2, 0, 4))
    assert dominates((0, 2, 0, 3), (0, 2, 0, 3))
    assert not dominates((0, 1), (1, 0))


def test_dominates_pads_shorter():
    assert dominates((1,), (0, 1))
    assert not dominates((0, 1), (1,))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 4).flatmap(lambda n: st.tuples(*[st.tuples(*[st.integers(0, 3)] * n)] * 3)))
def test_dominance_is_partial_order(triple):
    a, b, c = triple
    assert dominates(a, a)
    if dominates(a, b) and dominates(b, a) and sum(a) == sum(b):
        assert a == b
    if dominates(a, b) and dominates(b, c):
        assert dominates(a, c)


def test_strongly_dominates_examples():
    assert strongly_dominates((1, 1, 0, 3), (0, 2, 0, 3))
    assert strongly_dominates((0, 2, 0, 3), (0, 2, 0, 3))
    assert not strongly_dominates((1, 1, 3, 0), (0, 2, 0, 3))


def test_strongly_dominates_matches_exhaustive_search():
    for n in range(1, 5):
        for size in range(0, 4):
            comps = list(weak_compositions(n, size))
            for a in comps:
                for b in comps:
                    assert strongly_dominates(b, a) == brute_strongly_dominates(b, a), (b, a)


def test_minimal_dominating_placement_is_dominance_minimum():
    for n in range(1, 6):
        for a in weak_compositions(n, 3):
            for parts in compositions_of(3):
                c = minimal_dominating_placement(parts, a, n)
                cands = [x for x in placements(parts, n) if dominates(x, a)]
                if c is None:
                    assert not cands
                else:
                    assert c in cands
                    assert all(dominates(x, c) for x in cands)


def test_refines_examples():
    assert refines((1, 2, 2), (3, 2))
    assert not refines((1, 2, 2), (2, 3))
    assert refines((2, 3), (2, 3))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=4).map(tuple), st.lists(st.integers(1, 3), max_size=5).map(tuple))
def test_refines_implies_size_and_length(alpha, beta):
    if refines(beta, alpha):
        assert sum(beta) == sum(alpha)
        assert len(beta) >= len(alpha)


def test_refinements_enumerates_exactly_the_refiners():
    alpha = (2, 1, 2)
    got = set(refinements(alpha))
    want = {b for b in compositions_of(5) if refines(b, alpha)}
    assert got == want
    assert len(got) == 4
    assert set(refinements(alpha, 4)) == {b for b in want if len(b) <= 4}


def test_parse_composition():
    assert parse_composition("[0,2,0,3]") == (0, 2, 0, 3)
    assert parse_composition("0,2,0,3") == (0, 2, 0, 3)
    assert parse_composition("[]") == ()
    with pytest.raises(ValueError):
        parse_composition("1,x")


# permutations

def test_permutation_canonical_form():
    assert P("24153") == P("2,4,1,5,3") == P("241536")
    assert P("123") == Permutation.identity()
    assert str(P("2,4,1,5,3")) == "24153"
    with pytest.raises(DomainError):
        Permutation((1, 1, 2))


def test_permutation_digit_and_comma_forms_for_large_values():
    w = Permutation.parse("1,2,10,3,4,5,6,7,8,9")
    assert w.comma() == "1,2,10,3,4,5,6,7,8,9"
    assert str(w) == w.comma()


def test_lehmer_code_examples():
    assert pad(lehmer_code(P("146235")), 6) == (0, 2, 3, 0, 0, 0)
    assert set(lehmer_code(Permutation.identity())) == {0}
    assert lehmer_code(P("24153")) == brute_inversions(P("24153")) == (1, 2, 0, 1, 0)


def test_code_to_permutation_examples():
    assert code_to_permutation((0, 2, 3, 0)) == P("146235")
    assert code_to_permutation(()) == Permutation.identity()
    brute = [w for w in all_permutations(4) if pad(lehmer_code(w), 4) == (3, 0, 0, 0)]
    assert brute == [P("4123")]
    assert code_to_permutation((3, 0, 0, 0)) == P("4123")


def test_lehmer_round_trip_s6():
    for w in all_permutations(6):
        assert code_to_permutation(lehmer_code(w)) == w


@given(weak_comps)
def test_code_round_trip_from_codes(a):
    w = code_to_permutation(a)
    assert pad(lehmer_code(w), len(a))[: len(a)] == a
    assert w.inv() == sum(a)


def test_lehmer_code_of_left_embedding():
    for w in all_permutations(4):
        for m in range(3):
            assert pad(lehmer_code(embed_left(w, m)), m + 4) == (0,) * m + pad(lehmer_code(w), 4)


def test_grassmannian_examples():
    assert grassmannian((3, 2), 3) == P("146235")
    assert grassmannian((), 3) == Permutation.identity()
    assert grassmannian((1,), 1) == P("21")
    with pytest.raises(DomainError):
        grassmannian((2, 3), 3)
    with pytest.raises(DomainError):
        grassmannian((1, 1, 1), 2)


def test_grassmannian_has_single_descent():
    for lam in [(1,), (2, 1), (3, 1, 1), (2, 2)]:
        for n in range(len(lam), 5):
            assert grassmannian(lam, n).descents() == [n]


def test_embeddings():
    assert embed_left(P("24153"), 1) == P("135264")
    assert embed_left(P("24153"), 0) == P("24153")
    assert embed_right(P("24153"), 2) == P("24153")


# words

def test_descent_composition_examples():
    assert descent_composition((4, 2, 3, 1)) == (1, 2, 1)
    assert descent_composition((5, 5, 1, 1, 1)) == (2, 3)
    assert descent_composition((1, 2, 3)) == (3,)
    assert descent_composition(()) == ()


def test_reduced_words_examples():
    assert len(reduced_words(P("24153"))) == 5
    assert reduced_words(Permutation.identity()) == {()}
    brute = {w for w in product((1, 2), repeat=3) if apply_word(w) == P("321")}
    assert reduced_words(P("321")) == brute == {(1, 2, 1), (2, 1, 2)}


def test_reduced_words_reproduce_w_s5():
    for w in all_permutations(5):
        words = reduced_words(w)
        assert words
        for s in words:
            assert len(s) == w.inv()
            assert apply_word(s) == w
            assert is_reduced_word(s, w)


def test_reduced_words_match_brute_force_s4():
    for w in all_permutations(4):
        brute = {s for s in product(range(1, 4), repeat=w.inv()) if apply_word(s) == w}
        assert reduced_words(w) == brute


def test_first_letter_is_a_descent():
    for w in all_permutations(4):
        for s in reduced_words(w):
            if s:
                assert s[0] in w.descents()


def test_inverse_and_swap():
    for p in permutations(range(1, 5)):
        w = Permutation(p)
        assert w.inverse().inverse() == w
        for i in range(1, 4):
            assert w.swap(i).swap(i) == w
