from itertools import product
import pytest
from hypothesis import given, settings, strategies as st
from kiselman.endomorphism import CandidateMap, Endomorphism, identity_endomorphism
from kiselman.errors import DomainError, GuardExceededError
from kiselman.matrix import BoolMatrix, bool_mul, enumerate_dn, identity_matrix
from kiselman.morphism import (
    apply, brute_force_enumerate_end, compose, compose_by_substitution, endo_from_sequence, endomorphism_to_matrix,
    is_endomorphism, matrix_to_endomorphism, monotone_enumerate_end, phi, psi, psi_inv
)
from kiselman.morphism.search import candidate_images
from kiselman.sequence import SetSequence, enumerate_mn, star, unit_sequence

END3 = monotone_enumerate_end(3)


def endo(*images):
    n = len(images)
    return Endomorphism.from_dict({"n": n, "images": [list(x) for x in images]})


def seq(*parts):
    return SetSequence.from_indices([list(p) for p in parts])


def test_phi_examples():
    assert phi(identity_endomorphism(3)) == unit_sequence(3)
    assert phi(endo([], [])) == seq([], [])
    assert phi(endo([1, 2], [2])) == seq([1, 2], [2])


def test_endo_from_sequence():
    assert endo_from_sequence(unit_sequence(3)) == identity_endomorphism(3)
    assert endo_from_sequence(seq([2], [2])).images == (0b10, 0b10)
    with pytest.raises(DomainError):
        endo_from_sequence(seq([2], [1]))
    with pytest.raises(DomainError):
        endo([2], [1])


def test_apply(k2):
    assert apply(identity_endomorphism(2), (2, 1), sg=k2).nf == (2, 1)
    assert apply(endo([2], [2]), (2, 1), sg=k2).nf == (2,)
    assert apply(endo([1, 2], [2]), (), sg=k2).nf == ()


def test_is_endomorphism(k2):
    assert is_endomorphism(CandidateMap(2, (0b01, 0b10)), sg=k2)
    assert not is_endomorphism(CandidateMap(2, (0b10, 0b01)), sg=k2)
    assert is_endomorphism(CandidateMap(2, (0, 0)), sg=k2)


def test_compose_examples():
    f = endo([1, 2], [2])
    g = endo([2], [2])
    identity = identity_endomorphism(2)
    assert compose(identity, f) == f
    assert compose(f, identity) == f
    assert compose(g, f) == g
    assert compose(g, f, verify=True) == g
    with pytest.raises(DomainError):
        compose(identity_endomorphism(2), identity_endomorphism(3))


@pytest.mark.parametrize("n, size", [(1, 2), (2, 15), (3, 330), (4, 16927)])
def test_census(n, size):
    brute = brute_force_enumerate_end(n)
    assert len(brute) == size
    assert brute == monotone_enumerate_end(n)
    assert set(brute) == {endo_from_sequence(s) for s in enumerate_mn(n)}
    assert len(enumerate_mn(n)) == len(enumerate_dn(n)) == size


def test_brute_force_rejects_only_the_swap():
    brute = brute_force_enumerate_end(2)
    assert [c for c in (candidate_images(2, i) for i in range(16)) if Endomorphism(2, c, validate=False) not in brute] == [(0b10, 0b01)]


def test_brute_force_is_independent_of_workers():
    assert brute_force_enumerate_end(2, n_workers=2) == brute_force_enumerate_end(2, n_workers=1)


def test_brute_force_guard():
    with pytest.raises(GuardExceededError):
        brute_force_enumerate_end(5)


def test_candidate_order():
    assert candidate_images(2, 0b0110) == (0b01, 0b10)


def test_psi_examples():
    assert psi(unit_sequence(3)) == identity_matrix(3)
    assert psi(seq([1, 2], [2])) == BoolMatrix.from_rows([[1, 0], [1, 1]])
    assert psi(seq([], [])) == BoolMatrix(2, 2, [0, 0])
    assert psi_inv(identity_matrix(2)) == unit_sequence(2)
    assert psi_inv(BoolMatrix.from_rows([[1, 0], [1, 1]])) == seq([1, 2], [2])
    assert psi_inv(BoolMatrix(2, 2, [0, 0])) == seq([], [])
    with pytest.raises(DomainError):
        psi_inv(BoolMatrix.from_rows([[0, 1], [1, 0]]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_round_trips(n):
    for f in monotone_enumerate_end(n):
        assert psi_inv(psi(phi(f))) == phi(f)
        assert matrix_to_endomorphism(endomorphism_to_matrix(f)) == f
    for m in enumerate_dn(n):
        assert psi(psi_inv(m)) == m


def test_phi_homomorphism_exhaustive():
    for g, f in product(END3, repeat=2):
        assert phi(compose(g, f)) == star(phi(g), phi(f))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_psi_homomorphism_exhaustive(n):
    sequences = [phi(f) for f in monotone_enumerate_end(n)]
    for s, t in product(sequences, repeat=2):
        assert psi(star(s, t)) == bool_mul(psi(s), psi(t))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(END3), st.sampled_from(END3))
def test_compose_matches_substitution(g, f):
    assert compose(g, f) == compose_by_substitution(g, f)


@settings(max_examples=200, deadline=None)
@given(
    st.sampled_from(END3),
    st.lists(st.integers(min_value=1, max_value=3), max_size=6),
    st.lists(st.integers(min_value=1, max_value=3), max_size=6),
)
def test_apply_is_a_homomorphism(k3, f, u, v):
    assert apply(f, u + v, sg=k3) == k3.multiply(apply(f, u, sg=k3), apply(f, v, sg=k3))


def test_value_type():
    f = endo([1, 2], [2])
    assert Endomorphism.decode(f.encode()) == f
    assert f.to_dict() == {"n": 2, "images": [[1, 2], [2]]}
    assert CandidateMap(2, f.images) != f
