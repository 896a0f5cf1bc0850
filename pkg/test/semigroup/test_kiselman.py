import pickle
from itertools import product
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from kiselman.element import Element, check_word, format_word, word_to_csv
from kiselman.errors import DomainError, GuardExceededError
from kiselman.rewrite import complete, make_presentation
from kiselman.semigroup import KiselmanSemigroup, get_semigroup, idempotent_word
from kiselman.subset import dominates, subset_from_indices

words3 = st.lists(st.integers(min_value=1, max_value=3), max_size=8).map(tuple)


@pytest.mark.parametrize("n, size", [(1, 2), (2, 5), (3, 18), (4, 115)])
def test_cardinality(n, size):
    assert len(get_semigroup(n).enumerate_elements()) == size


def test_k2_elements(k2):
    assert [x.nf for x in k2.enumerate_elements()] == [(), (1,), (2,), (1, 2), (2, 1)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_idempotent_census(n):
    sg = get_semigroup(n)
    idempotents = [x for x in sg.enumerate_elements() if sg.is_idempotent(x)]
    assert len(idempotents) == 1 << n
    assert set(idempotents) == set(sg.idempotents())


def test_idempotents_of_k2(k2):
    assert [format_word(x.nf) for x in k2.idempotents()] == ["ε", "a1", "a2", "a2a1"]


def test_idempotent_word():
    assert idempotent_word(0) == ()
    assert idempotent_word(subset_from_indices([1, 3])) == (3, 1)


def test_requires_completed_system():
    with pytest.raises(DomainError):
        KiselmanSemigroup(make_presentation(2))


def test_element_guard(k3):
    with pytest.raises(GuardExceededError):
        k3.enumerate_elements(cap=10)


def test_multiply_rejects_mixed_n(k2, k3):
    with pytest.raises(DomainError):
        k3.multiply(k2.generator(1), k3.generator(1))


def test_content_is_onto(k2, k3):
    assert k2.content_is_onto()
    assert k3.content_is_onto()


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_tfae_exhaustive(n):
    sg = get_semigroup(n)
    for x, y in product(range(1 << n), repeat=2):
        assert len(set(sg.tfae_check(x, y))) == 1, (x, y)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_braid_exhaustive(n):
    sg = get_semigroup(n)
    for x, y in product(range(1 << n), repeat=2):
        assert len(set(sg.braid_check(x, y))) == 1, (x, y)


def test_tfae_examples(k3):
    a2a1 = subset_from_indices([1, 2])
    a3 = subset_from_indices([3])
    assert k3.tfae_check(a3, a2a1) == (True, True, True)
    assert k3.tfae_check(subset_from_indices([1]), subset_from_indices([2])) == (False, False, False)
    assert dominates(subset_from_indices([2]), subset_from_indices([1]))


@pytest.mark.parametrize("n", [2, 3])
def test_content_epimorphism(n):
    sg = get_semigroup(n)
    elements = sg.enumerate_elements()
    for a, b in product(elements, repeat=2):
        assert sg.multiply(a, b).content == a.content | b.content


@settings(max_examples=200, deadline=None)
@given(words3, words3, words3)
def test_associativity(u, v, w):
    sg = get_semigroup(3)
    a, b, c = sg.reduce(u), sg.reduce(v), sg.reduce(w)
    assert sg.multiply(sg.multiply(a, b), c) == sg.multiply(a, sg.multiply(b, c))


@settings(max_examples=200, deadline=None)
@given(words3, words3)
def test_reduce_is_a_congruence(u, v):
    sg = get_semigroup(3)
    assert sg.reduce(u + v) == sg.multiply(sg.reduce(u), sg.reduce(v))
    assert sg.reduce(u).content == sg.content(u)


def test_text_forms():
    assert format_word(()) == "ε"
    assert format_word((3, 1)) == "a3a1"
    assert word_to_csv((3, 1)) == "3.1"


@pytest.mark.parametrize("word", [(True,), (1.0,), ("1",), (0,), (4,)])
def test_check_word_rejects(word):
    with pytest.raises(DomainError):
        check_word(word, 3)


def test_check_word_accepts_integral_letters():
    word = check_word(np.array([3, 1], dtype=np.int64), 3)
    assert word == (3, 1)
    assert all(type(letter) is int for letter in word)
    assert get_semigroup(3).reduce(np.array([1, 2, 1])).nf == (2, 1)


def test_element_value_type():
    x = Element(3, (3, 1))
    assert pickle.loads(pickle.dumps(x)) == x
    assert Element.decode(x.encode()) == x
    with pytest.raises(AttributeError):
        x.nf = ()
    assert Element(3, (2,)) < Element(3, (1, 2))
