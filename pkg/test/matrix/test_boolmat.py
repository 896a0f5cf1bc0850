import pickle
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from kiselman.errors import DomainError, GuardExceededError
from kiselman.matrix import (
    BoolMatrix, avoids_pattern, avoids_pattern_batch, bool_mul, check_dn, enumerate_dn, find_units,
    find_units_exhaustive, from_flat, identity_matrix, in_dn, is_permutation_matrix, permutation_matrix,
    rows_compatible, to_csv_bits, to_flat, transpose
)

PATTERN = BoolMatrix.from_rows([[0, 1], [1, 0]])
D3 = enumerate_dn(3)


def test_pattern_examples():
    assert not avoids_pattern(PATTERN)
    assert avoids_pattern(identity_matrix(2))
    assert avoids_pattern(BoolMatrix.from_rows([[1] * 4] * 3))
    assert avoids_pattern(identity_matrix(3))


def test_pattern_in_larger_matrix():
    m = BoolMatrix.from_rows([[0, 0, 1], [1, 1, 1], [1, 0, 0]])
    assert not avoids_pattern(m)
    assert not rows_compatible(m.data[0], m.data[2])
    assert rows_compatible(m.data[0], m.data[1])


def test_bool_mul():
    a = BoolMatrix.from_rows([[0, 1], [1, 1]])
    b = BoolMatrix.from_rows([[1, 0], [1, 1]])
    assert bool_mul(a, b) == BoolMatrix.from_rows([[1, 1], [1, 1]])
    assert bool_mul(identity_matrix(2), a) == a
    assert bool_mul(BoolMatrix(2, 2, [0, 0]), a) == BoolMatrix(2, 2, [0, 0])
    with pytest.raises(DomainError):
        bool_mul(a, identity_matrix(3))


def test_identity():
    assert identity_matrix(1).to_rows() == [[1]]
    assert identity_matrix(2).to_rows() == [[1, 0], [0, 1]]


@pytest.mark.parametrize("n, size", [(1, 2), (2, 15), (3, 330), (4, 16927)])
def test_dn_cardinality(n, size):
    members = enumerate_dn(n)
    assert len(members) == size
    assert [to_flat(m) for m in members] == sorted(to_flat(m) for m in members)


def test_dn_guard():
    with pytest.raises(GuardExceededError):
        enumerate_dn(6)


def test_dn_matches_scalar_filter():
    expected = [from_flat(v, 3, 3) for v in range(1 << 9) if avoids_pattern(from_flat(v, 3, 3))]
    assert D3 == expected


def test_permutation_matrices():
    assert is_permutation_matrix(identity_matrix(3))
    assert is_permutation_matrix(PATTERN)
    assert not in_dn(PATTERN)
    assert not is_permutation_matrix(BoolMatrix.from_rows([[1, 1], [0, 1]]))
    assert permutation_matrix((2, 1)) == PATTERN


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_units(n):
    assert find_units(n) == [identity_matrix(n)]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_units_exhaustive(n):
    assert find_units_exhaustive(n) == [identity_matrix(n)]


def test_check_dn():
    with pytest.raises(DomainError):
        check_dn(PATTERN)
    with pytest.raises(DomainError):
        check_dn(BoolMatrix(2, 3, [0, 0]))


@pytest.mark.parametrize("m, n", [(1, 5), (2, 2), (2, 4), (3, 3), (4, 2)])
def test_batch_matches_scalar(m, n):
    flat = np.arange(1 << (m * n), dtype=np.uint64)
    batch = avoids_pattern_batch(flat, m, n)
    assert [bool(v) for v in batch] == [avoids_pattern(from_flat(v, m, n)) for v in range(1 << (m * n))]


def test_flat_layout():
    m = BoolMatrix.from_rows([[1, 0, 0], [0, 1, 1]])
    assert to_flat(m) == 0b110001
    assert from_flat(0b110001, 2, 3) == m
    assert transpose(m).to_rows() == [[1, 0], [0, 1], [0, 1]]
    assert to_csv_bits(m) == "100|011"


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=(1 << 12) - 1), st.sampled_from([(3, 4), (4, 3), (2, 6), (6, 2)]))
def test_transpose_symmetry(value, shape):
    m = from_flat(value, *shape)
    assert avoids_pattern(m) == avoids_pattern(transpose(m))


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(D3), st.sampled_from(D3))
def test_closure(a, b):
    assert in_dn(bool_mul(a, b))


def test_value_type():
    m = BoolMatrix.from_rows([[1, 0], [1, 1]])
    assert BoolMatrix.decode(m.encode()) == m
    assert pickle.loads(pickle.dumps(m)) == m
    assert m.entry(2, 1) == 1 and m.entry(1, 2) == 0
    with pytest.raises(DomainError):
        BoolMatrix.from_rows([[1, 2]])
    with pytest.raises(DomainError):
        BoolMatrix.from_rows([[1, 0], [1]])
